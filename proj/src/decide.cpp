#include "ribbon/decide.hpp"

#include <map>
#include <mutex>

#include "ribbon/oracle.hpp"

namespace ribbon {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "Yes";
    case Verdict::no:
      return "No";
    case Verdict::no_up_to_bound:
      return "NoUpToBound";
  }
  return "?";
}

TileIdeal TileIdeal::build(const TileSet& ts, const CompletionLimits& limits) {
  TileIdeal ideal;
  ideal.tileset_ = ts;
  ideal.generators_ = ts.generators();
  CompletionLimits lim = limits;
  lim.track_cofactors = true;
  Completion c = complete(ideal.generators_, lim);
  if (c.status != CompletionStatus::complete)
    throw InconclusiveError("Groebner completion for " + ts.name + " stopped: " + c.detail);
  for (std::size_t j = 0; j < c.basis.size(); ++j)
    if (!verify_combination(ideal.generators_, c.basis[j], c.cofactors[j]))
      throw std::logic_error("completion produced an unverifiable basis element");
  ideal.basis_ = std::move(c.basis);
  ideal.cofactors_ = std::move(c.cofactors);
  Polynomial b3 = Polynomial::x() * Polynomial::y() - Polynomial(1);
  ideal.contains_xy_minus_1_ = e_reduce(b3, ideal.basis_).normal_form.is_zero();
  return ideal;
}

std::vector<Polynomial> TileIdeal::to_generators(const std::vector<Polynomial>& quotients) const {
  std::vector<Polynomial> h(generators_.size());
  for (std::size_t j = 0; j < quotients.size(); ++j) {
    if (quotients[j].is_zero()) continue;
    for (std::size_t i = 0; i < generators_.size(); ++i)
      if (!cofactors_[j][i].is_zero()) h[i] += quotients[j] * cofactors_[j][i];
  }
  return h;
}

const TileIdeal& cached_tile_ideal(const TileSet& ts) {
  static std::mutex mu;
  static std::map<std::string, TileIdeal> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(ts.name);
  if (it == cache.end()) it = cache.emplace(ts.name, TileIdeal::build(ts)).first;
  return it->second;
}

SignedTiling tiling_from_combination(const TileSet& ts, const std::vector<Polynomial>& h,
                                     std::int64_t dx, std::int64_t dy) {
  SignedTiling t;
  t.tileset = ts.name;
  t.catalog = ts.tiles;
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (const auto& term : h[i].terms()) {
      t.placements.push_back({ts.tiles[i].id, static_cast<std::int64_t>(term.mono.ex) + dx,
                              static_cast<std::int64_t>(term.mono.ey) + dy, term.coeff});
    }
  }
  return t;
}

Decision signed_tileable(const Region& r, const TileIdeal& ideal, std::size_t max_shift) {
  Decision d;
  d.conclusive_at_zero = ideal.contains_xy_minus_1();
  if (r.empty()) {
    d.verdict = Verdict::yes;
    d.tiling = SignedTiling{ideal.tileset().name, ideal.tileset().tiles, {}};
    return d;
  }
  EncodedRegion enc = region_to_poly(r);
  d.offset = enc.offset;
  std::size_t last = d.conclusive_at_zero ? 0 : max_shift;
  for (std::size_t shift = 0; shift <= last; ++shift) {
    auto s = static_cast<std::uint32_t>(shift);
    ReductionCertificate cert = e_reduce(enc.poly.shifted({s, s}), ideal.basis());
    if (!cert.normal_form.is_zero()) {
      if (shift == 0) {
        d.witness = cert.normal_form;
        d.reduction = std::move(cert);
      }
      continue;
    }
    auto h = ideal.to_generators(cert.quotients);
    auto ds = static_cast<std::int64_t>(shift);
    SignedTiling t = tiling_from_combination(ideal.tileset(), h, enc.offset.x - ds, enc.offset.y - ds);
    if (!verify_signed(t, r)) throw std::logic_error("membership certificate failed to replay");
    d.verdict = Verdict::yes;
    d.shift = shift;
    d.witness.reset();
    d.reduction = std::move(cert);
    d.tiling = std::move(t);
    return d;
  }
  d.verdict = d.conclusive_at_zero ? Verdict::no : Verdict::no_up_to_bound;
  d.shift = last;
  return d;
}

Decision signed_tileable(const Region& r, const TileSet& ts, std::size_t max_shift) {
  return signed_tileable(r, cached_tile_ideal(ts), max_shift);
}

Polynomial rectangle_fold(std::int64_t p, std::int64_t q) {
  if (p < 1 || q < 1) throw std::invalid_argument("rectangle sides must be positive");
  if (q < p) std::swap(p, q);
  // Row i runs over x^i .. x^(p+q-2-i); the rows nest symmetrically.
  std::vector<Term> terms;
  for (std::int64_t i = 0; i < p; ++i)
    for (std::int64_t e = i; e <= p + q - 2 - i; ++e) terms.push_back({{static_cast<std::uint32_t>(e), 0}, 1});
  return Polynomial::from_terms(std::move(terms));
}

Polynomial remainder_in_x(const Polynomial& f, const Polynomial& monic) {
  const Monomial lead = monic.head_term();
  if (lead.ey != 0 || monic.head_coeff() != 1) throw std::invalid_argument("divisor must be monic in x");
  Polynomial rem = f;
  while (!rem.is_zero() && divides(lead, rem.head_term())) {
    const Term& h = rem.head();
    if (h.mono.ey != 0) throw std::invalid_argument("dividend must be a polynomial in x");
    Integer c = h.coeff;
    rem.sub_scaled(c, quotient(h.mono, lead), monic);
  }
  return rem;
}

RemainderAnalysis rect_remainder(std::int64_t p, std::int64_t q, int n) {
  require_odd_n(n);
  if (p < 1 || q < 1) throw std::invalid_argument("rectangle sides must be positive");
  if (q < p) std::swap(p, q);
  RemainderAnalysis a;
  a.p = p;
  a.q = q;
  a.n = n;
  a.m = (p + q - 1) / n;
  a.r = (p + q - 1) % n;
  a.s = p / n;
  a.t = p % n;
  a.ppq = rectangle_fold(p, q);
  a.modulus = geometric(Var::x, static_cast<std::uint32_t>(n));
  a.remainder = remainder_in_x(a.ppq, a.modulus);
  a.divisible = a.remainder.is_zero();
  return a;
}

bool rect_side_divisible(std::int64_t p, std::int64_t q, int n) {
  require_odd_n(n);
  if (p < 1 || q < 1) throw std::invalid_argument("rectangle sides must be positive");
  return p % n == 0 || q % n == 0;
}

Decision inflated_l_decision(int n, int k) {
  return signed_tileable(inflated_l(n, k), make_tn(n));
}

Json decision_to_json(const Decision& d) {
  Json j{{"verdict", to_string(d.verdict)},
         {"offset", {d.offset.x, d.offset.y}},
         {"shift", d.shift},
         {"conclusive_at_zero", d.conclusive_at_zero}};
  if (d.witness) j["witness"] = d.witness->to_string();
  if (d.reduction) j["reduction"] = certificate_to_json(*d.reduction);
  if (d.tiling) j["tiling"] = tiling_to_json(*d.tiling);
  return j;
}

Json remainder_to_json(const RemainderAnalysis& a) {
  return {{"p", a.p},
          {"q", a.q},
          {"n", a.n},
          {"m", a.m},
          {"r", a.r},
          {"s", a.s},
          {"t", a.t},
          {"P", a.ppq.to_string()},
          {"Q", a.modulus.to_string()},
          {"R", a.remainder.to_string()},
          {"divisible", a.divisible}};
}

}  // namespace ribbon
