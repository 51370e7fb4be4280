#include "ribbon/barnes.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace ribbon {

CyclotomicElement::CyclotomicElement(int n) : n_(n), coeffs_(static_cast<std::size_t>(n > 1 ? n - 1 : 0)) {
  if (n < 2) throw std::invalid_argument("cyclotomic modulus needs n >= 2");
}

CyclotomicElement::CyclotomicElement(int n, std::vector<Integer> coeffs) : CyclotomicElement(n) {
  // Fold with t^n = 1, then remove t^(n-1) = -(1 + ... + t^(n-2)).
  std::vector<Integer> full(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < coeffs.size(); ++i) full[i % full.size()] += coeffs[i];
  for (std::size_t i = 0; i + 1 < full.size(); ++i) coeffs_[i] = full[i] - full.back();
}

CyclotomicElement CyclotomicElement::power(int n, std::uint64_t e) {
  std::vector<Integer> c(static_cast<std::size_t>(n));
  c[e % static_cast<std::uint64_t>(n)] = 1;
  return CyclotomicElement(n, std::move(c));
}

bool CyclotomicElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c == 0; });
}

void CyclotomicElement::check_same(const CyclotomicElement& o) const {
  if (o.n_ != n_) throw std::invalid_argument("cyclotomic elements have different n");
}

CyclotomicElement& CyclotomicElement::operator+=(const CyclotomicElement& o) {
  check_same(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CyclotomicElement& CyclotomicElement::operator-=(const CyclotomicElement& o) {
  check_same(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b) {
  a.check_same(b);
  std::vector<Integer> prod(static_cast<std::size_t>(a.n_));
  const std::size_t n = prod.size();
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      mpz_addmul(prod[(i + j) % n].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
  }
  return CyclotomicElement(a.n_, std::move(prod));
}

CyclotomicElement eval_variety(const Polynomial& f, int n) {
  if (n < 2) throw std::invalid_argument("cyclotomic modulus needs n >= 2");
  const auto un = static_cast<std::uint64_t>(n);
  std::vector<Integer> c(un);
  for (const auto& t : f.terms()) {
    // x^a y^b -> t^(b - a) = t^(b + a (n - 1))
    std::uint64_t e = (t.mono.ey % un + (t.mono.ex % un) * (un - 1)) % un;
    c[e] += t.coeff;
  }
  return CyclotomicElement(n, std::move(c));
}

CyclotomicElement eval_variety(const Region& r, int n) { return eval_variety(region_to_poly(r).poly, n); }

double eval_numeric_max_abs(const Polynomial& f, int n) {
  double worst = 0.0;
  for (int j = 1; j < n; ++j) {
    std::complex<double> sum = 0.0;
    for (const auto& t : f.terms()) {
      std::int64_t e = (static_cast<std::int64_t>(t.mono.ey) - static_cast<std::int64_t>(t.mono.ex)) % n;
      sum += t.coeff.get_d() * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j * e) / n);
    }
    worst = std::max(worst, std::abs(sum));
  }
  return worst;
}

BarnesReport variety_and_radical_checks(int n) {
  require_odd_n(n);
  const auto k = static_cast<std::uint32_t>((n - 1) / 2);
  BarnesReport rep;
  rep.n = n;
  auto g = tn_generators(n);
  auto b = tn_basis(n);
  rep.generators_vanish = std::all_of(g.begin(), g.end(), [&](const Polynomial& p) { return eval_variety(p, n).is_zero(); });
  rep.basis_vanish = std::all_of(b.begin(), b.end(), [&](const Polynomial& p) { return eval_variety(p, n).is_zero(); });
  for (const auto& p : g) rep.numeric_max_abs = std::max(rep.numeric_max_abs, eval_numeric_max_abs(p, n));

  Polynomial y = Polynomial::y();
  Polynomial ym1 = y - Polynomial(1);
  Polynomial lhs = Polynomial::y(2 * k - 1) * ym1 * ym1;
  Polynomial sq = Polynomial::y(2 * k) - Polynomial(1);
  lhs -= sq * sq;
  Polynomial rhs = -(geometric(Var::y, 2 * k + 1) * geometric(Var::y, 2 * k - 1) * ym1 * ym1);
  rep.factorization_identity = lhs == rhs;

  rep.f1_witness = Polynomial::x() * g[2] - b[2] == geometric(Var::x, 2 * k + 1);
  rep.f2_witness = y * g[0] - b[2] == geometric(Var::y, 2 * k + 1);
  return rep;
}

Json cyclotomic_to_json(const CyclotomicElement& e) {
  Json coeffs = Json::array();
  for (const auto& c : e.coeffs()) coeffs.push_back(integer_to_json(c));
  return {{"n", e.n()}, {"value", coeffs}, {"zero", e.is_zero()}};
}

Json barnes_report_to_json(const BarnesReport& r) {
  return {{"n", r.n},
          {"generators_vanish", r.generators_vanish},
          {"basis_vanish", r.basis_vanish},
          {"factorization_identity", r.factorization_identity},
          {"f1_witness", r.f1_witness},
          {"f2_witness", r.f2_witness},
          {"numeric_max_abs", r.numeric_max_abs},
          {"ok", r.ok()}};
}

}  // namespace ribbon
