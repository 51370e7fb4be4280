#pragma once

// Reduction, critical pairs and Buchberger completion over the integers.
//
// D-reduction: a term a*t of f is reducible by g when HC(g) | a and HT(g) | t.
// E-reduction: a term a*t is reducible by g when HT(g) | t and the quotient of a
// by HC(g), with remainder taken in [0, |HC(g)|), is nonzero.
// Both strategies are deterministic: the highest reducible term is reduced first,
// by the first basis element (in the given order) that applies.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ribbon/poly.hpp"

namespace ribbon {

struct ReductionCertificate {
  Polynomial input;
  std::vector<Polynomial> basis;
  std::vector<Polynomial> quotients;  // quotients[i] multiplies basis[i]
  Polynomial normal_form;
};

ReductionCertificate d_reduce(const Polynomial& f, std::span<const Polynomial> basis);
ReductionCertificate e_reduce(const Polynomial& f, std::span<const Polynomial> basis);

// input == sum quotients[i] * basis[i] + normal_form, checked exactly.
bool verify_certificate(const ReductionCertificate& c);

// True when HM(p) is D-divisible by HM(g) for some g in basis.
bool top_d_reducible(const Polynomial& p, std::span<const Polynomial> basis);

struct CriticalPair {
  std::size_t i = 0;
  std::size_t j = 0;
  Polynomial s_poly;
  Polynomial g_poly;
};

// Bezout coefficients for gcd(a, b) = c1*a + c2*b with gcd >= 0 and c1 reduced
// to the representative of least absolute value (ties toward the positive one).
struct Bezout {
  Integer gcd;
  Integer c1;
  Integer c2;
};
Bezout bezout(const Integer& a, const Integer& b);

CriticalPair s_and_g_polynomials(const Polynomial& g1, const Polynomial& g2);
CriticalPair critical_pair(std::span<const Polynomial> basis, std::size_t i, std::size_t j);

struct PairFailure {
  enum class Kind { s_poly_not_reducing, g_poly_not_top_reducible };
  std::size_t i = 0;
  std::size_t j = 0;
  Kind kind = Kind::s_poly_not_reducing;
  Polynomial residue;  // nonzero normal form of S, or the offending G-polynomial
};

struct GroebnerReport {
  bool is_groebner = true;
  std::size_t pairs_checked = 0;
  std::vector<PairFailure> failures;
};

GroebnerReport is_groebner(std::span<const Polynomial> basis);

struct CompletionLimits {
  std::size_t max_pairs = 200000;
  std::size_t max_basis = 400;
  std::size_t max_terms = 50000;
  bool track_cofactors = true;
};

enum class CompletionStatus { complete, incomplete };

struct Completion {
  CompletionStatus status = CompletionStatus::complete;
  std::vector<Polynomial> basis;
  // cofactors[j][i]: basis[j] == sum_i cofactors[j][i] * inputs[i]. Empty when not tracked.
  std::vector<std::vector<Polynomial>> cofactors;
  std::size_t pairs_processed = 0;
  std::string detail;
};

// Buchberger completion to a D-Groebner basis. Zero and duplicate inputs are
// dropped; elements added during completion are normalized to a positive head
// coefficient. Exhausting a limit returns status incomplete, never a wrong basis.
Completion complete(std::span<const Polynomial> inputs, const CompletionLimits& limits = {});

// output == sum cofactors[i] * inputs[i]
bool verify_combination(std::span<const Polynomial> inputs, const Polynomial& output,
                        std::span<const Polynomial> cofactors);

}  // namespace ribbon
