#pragma once

// Exact evaluation on the variety of the tile ideal, done in Z[t]/(1+t+...+t^(n-1)).
// The points are (x, y) = (e^-1, e) for every root e of that modulus, so the
// substitution x -> t^(n-1), y -> t evaluates at all of them at once.

#include <vector>

#include "ribbon/io.hpp"
#include "ribbon/poly.hpp"
#include "ribbon/tiles.hpp"

namespace ribbon {

class CyclotomicElement {
 public:
  explicit CyclotomicElement(int n);
  // Reduces sum coeffs[i] t^i, any length.
  CyclotomicElement(int n, std::vector<Integer> coeffs);
  static CyclotomicElement power(int n, std::uint64_t e);

  int n() const { return n_; }
  // Canonical residue: n - 1 coefficients of 1, t, ..., t^(n-2).
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  CyclotomicElement& operator+=(const CyclotomicElement& o);
  CyclotomicElement& operator-=(const CyclotomicElement& o);
  friend CyclotomicElement operator+(CyclotomicElement a, const CyclotomicElement& b) { return a += b; }
  friend CyclotomicElement operator-(CyclotomicElement a, const CyclotomicElement& b) { return a -= b; }
  friend CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b);
  friend bool operator==(const CyclotomicElement&, const CyclotomicElement&) = default;

 private:
  void check_same(const CyclotomicElement& o) const;
  int n_;
  std::vector<Integer> coeffs_;
};

// x -> t^(n-1), y -> t, reduced.
CyclotomicElement eval_variety(const Polynomial& f, int n);
CyclotomicElement eval_variety(const Region& r, int n);

// max |f(e^-1, e)| over the primitive-or-not roots e = exp(2 pi i j / n), j = 1..n-1.
double eval_numeric_max_abs(const Polynomial& f, int n);

struct BarnesReport {
  int n = 0;
  bool generators_vanish = false;
  bool basis_vanish = false;
  bool factorization_identity = false;
  bool f1_witness = false;  // x G3 - B3 == 1 + x + ... + x^(2k)
  bool f2_witness = false;  // y G1 - B3 == 1 + y + ... + y^(2k)
  double numeric_max_abs = 0.0;
  bool ok() const {
    return generators_vanish && basis_vanish && factorization_identity && f1_witness && f2_witness &&
           numeric_max_abs < 1e-9;
  }
};

BarnesReport variety_and_radical_checks(int n);

Json cyclotomic_to_json(const CyclotomicElement& e);
Json barnes_report_to_json(const BarnesReport& r);

}  // namespace ribbon
