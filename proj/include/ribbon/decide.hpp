#pragma once

// Signed-tileability decisions by ideal membership, plus the rectangle
// shortcuts (remainder sequences and the divisibility criterion).

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ribbon/groebner.hpp"
#include "ribbon/io.hpp"
#include "ribbon/tiles.hpp"

namespace ribbon {

// Raised when Groebner completion hits its resource limits.
class InconclusiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Verdict { yes, no, no_up_to_bound };
std::string to_string(Verdict v);

// The ideal generated by a tile set, with a verified Groebner basis whose
// elements carry their expressions in the tile polynomials.
class TileIdeal {
 public:
  static TileIdeal build(const TileSet& ts, const CompletionLimits& limits = {});

  const TileSet& tileset() const { return tileset_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  const std::vector<Polynomial>& basis() const { return basis_; }
  const std::vector<std::vector<Polynomial>>& cofactors() const { return cofactors_; }
  bool contains_xy_minus_1() const { return contains_xy_minus_1_; }

  // Given f == sum quotients[j] * basis[j], returns h with f == sum h[i] * generators[i].
  std::vector<Polynomial> to_generators(const std::vector<Polynomial>& quotients) const;

 private:
  TileSet tileset_;
  std::vector<Polynomial> generators_;
  std::vector<Polynomial> basis_;
  std::vector<std::vector<Polynomial>> cofactors_;
  bool contains_xy_minus_1_ = false;
};

// Process-wide cache keyed by tile set name; built on first use.
const TileIdeal& cached_tile_ideal(const TileSet& ts);

struct Decision {
  Verdict verdict = Verdict::no;
  std::optional<ReductionCertificate> reduction;  // of (xy)^shift * f_R
  std::optional<SignedTiling> tiling;             // for Yes
  std::optional<Polynomial> witness;              // nonzero normal form for No
  Cell offset;                                    // translation used by region_to_poly
  std::size_t shift = 0;                          // N of the test monomial (xy)^N
  bool conclusive_at_zero = false;                // xy - 1 lies in the ideal
};

// Reduces (xy)^N f_R for N = 0..max_shift. When xy - 1 is in the ideal only
// N = 0 is tried and a nonzero residue is a definite No.
Decision signed_tileable(const Region& r, const TileIdeal& ideal, std::size_t max_shift = 4);
Decision signed_tileable(const Region& r, const TileSet& ts, std::size_t max_shift = 4);

// Turns h (coefficients on the tile polynomials) into weighted placements.
SignedTiling tiling_from_combination(const TileSet& ts, const std::vector<Polynomial>& h,
                                     std::int64_t dx, std::int64_t dy);

struct RemainderAnalysis {
  std::int64_t p = 0, q = 0;  // q >= p
  int n = 0;
  std::int64_t m = 0, r = 0;  // p + q - 1 = n m + r
  std::int64_t s = 0, t = 0;  // p = n s + t
  Polynomial ppq;             // polynomial in x
  Polynomial modulus;         // 1 + x + ... + x^(n-1)
  Polynomial remainder;
  bool divisible = false;
};

// The x-polynomial obtained from f_R of a p x q rectangle after y -> x^-1 folding.
Polynomial rectangle_fold(std::int64_t p, std::int64_t q);
// Long division by a monic polynomial in x alone.
Polynomial remainder_in_x(const Polynomial& f, const Polynomial& monic);

RemainderAnalysis rect_remainder(std::int64_t p, std::int64_t q, int n);
bool rect_side_divisible(std::int64_t p, std::int64_t q, int n);

Decision inflated_l_decision(int n, int k);

Json decision_to_json(const Decision& d);
Json remainder_to_json(const RemainderAnalysis& a);

}  // namespace ribbon
