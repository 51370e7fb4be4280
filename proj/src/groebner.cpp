#include "ribbon/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace ribbon {

namespace {

enum class Mode { d, e };

// Quotient of a by c with remainder in [0, |c|).
Integer euclid_quotient(const Integer& a, const Integer& c) {
  Integer mag = abs(c);
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), mag.get_mpz_t());
  if (c < 0) q = -q;
  return q;
}

// Finds the reduction step for the head term h; returns false when h is irreducible.
bool find_step(const Term& h, std::span<const Polynomial> basis, Mode mode, std::size_t& index,
               Integer& factor) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Term& g = basis[i].head();
    if (!divides(g.mono, h.mono)) continue;
    if (mode == Mode::d) {
      if (mpz_divisible_p(h.coeff.get_mpz_t(), g.coeff.get_mpz_t()) == 0) continue;
      factor = h.coeff / g.coeff;
    } else {
      factor = euclid_quotient(h.coeff, g.coeff);
      if (factor == 0) continue;
    }
    index = i;
    return true;
  }
  return false;
}

ReductionCertificate reduce(const Polynomial& f, std::span<const Polynomial> basis, Mode mode) {
  for (const auto& g : basis)
    if (g.is_zero()) throw std::invalid_argument("basis contains the zero polynomial");

  ReductionCertificate cert;
  cert.input = f;
  cert.basis.assign(basis.begin(), basis.end());
  std::vector<std::vector<Term>> qterms(basis.size());
  std::vector<Term> remainder;

  // Working copy keyed in descending order; each step touches only |g| entries.
  std::map<Monomial, Integer, std::greater<>> work;
  for (const auto& t : f.terms()) work.emplace(t.mono, t.coeff);
  std::size_t index = 0;
  Integer factor;
  Term h;
  while (!work.empty()) {
    auto top = work.begin();
    h.mono = top->first;
    h.coeff = top->second;
    if (!find_step(h, basis, mode, index, factor)) {
      remainder.push_back(h);
      work.erase(top);
      continue;
    }
    Monomial s = quotient(h.mono, basis[index].head_term());
    for (const auto& t : basis[index].terms()) {
      Monomial m = t.mono * s;
      auto [it, inserted] = work.try_emplace(m);
      mpz_submul(it->second.get_mpz_t(), factor.get_mpz_t(), t.coeff.get_mpz_t());
      if (it->second == 0) work.erase(it);
    }
    qterms[index].push_back({s, factor});
  }

  cert.quotients.reserve(basis.size());
  for (auto& q : qterms) cert.quotients.push_back(Polynomial::from_terms(std::move(q)));
  cert.normal_form = Polynomial::from_terms(std::move(remainder));
  return cert;
}

}  // namespace

ReductionCertificate d_reduce(const Polynomial& f, std::span<const Polynomial> basis) {
  return reduce(f, basis, Mode::d);
}

ReductionCertificate e_reduce(const Polynomial& f, std::span<const Polynomial> basis) {
  return reduce(f, basis, Mode::e);
}

bool verify_certificate(const ReductionCertificate& c) {
  if (c.quotients.size() != c.basis.size()) return false;
  Polynomial sum = c.normal_form;
  for (std::size_t i = 0; i < c.basis.size(); ++i) sum += c.quotients[i] * c.basis[i];
  return sum == c.input;
}

bool top_d_reducible(const Polynomial& p, std::span<const Polynomial> basis) {
  if (p.is_zero()) return true;
  const Term& h = p.head();
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    const Term& gh = g.head();
    if (divides(gh.mono, h.mono) && mpz_divisible_p(h.coeff.get_mpz_t(), gh.coeff.get_mpz_t()) != 0)
      return true;
  }
  return false;
}

Bezout bezout(const Integer& a, const Integer& b) {
  Bezout out;
  mpz_gcdext(out.gcd.get_mpz_t(), out.c1.get_mpz_t(), out.c2.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  if (b == 0 || out.gcd == 0) return out;
  Integer m = abs(b) / out.gcd;
  Integer s;
  mpz_fdiv_r(s.get_mpz_t(), out.c1.get_mpz_t(), m.get_mpz_t());
  if (2 * s > m) s -= m;
  out.c1 = s;
  out.c2 = (out.gcd - s * a) / b;
  return out;
}

namespace {

struct PairData {
  Integer b1, b2;  // S = b1*s1*g1 - b2*s2*g2
  Integer c1, c2;  // G = c1*s1*g1 + c2*s2*g2
  Monomial s1, s2;
  bool equal_heads = false;
};

PairData pair_data(const Polynomial& g1, const Polynomial& g2) {
  PairData d;
  const Term& h1 = g1.head();
  const Term& h2 = g2.head();
  Integer a;
  mpz_lcm(a.get_mpz_t(), h1.coeff.get_mpz_t(), h2.coeff.get_mpz_t());
  d.b1 = a / h1.coeff;
  d.b2 = a / h2.coeff;
  Monomial t = lcm(h1.mono, h2.mono);
  d.s1 = quotient(t, h1.mono);
  d.s2 = quotient(t, h2.mono);
  Bezout bz = bezout(h1.coeff, h2.coeff);
  d.c1 = bz.c1;
  d.c2 = bz.c2;
  d.equal_heads = h1.coeff == h2.coeff;
  return d;
}

}  // namespace

CriticalPair s_and_g_polynomials(const Polynomial& g1, const Polynomial& g2) {
  if (g1.is_zero() || g2.is_zero()) throw std::invalid_argument("critical pair of zero polynomial");
  PairData d = pair_data(g1, g2);
  CriticalPair cp;
  cp.s_poly = g1.shifted(d.s1).scaled(d.b1);
  cp.s_poly.sub_scaled(d.b2, d.s2, g2);
  if (d.equal_heads) {
    cp.g_poly = g1;
  } else {
    cp.g_poly = g1.shifted(d.s1).scaled(d.c1);
    cp.g_poly.add_scaled(d.c2, d.s2, g2);
  }
  return cp;
}

CriticalPair critical_pair(std::span<const Polynomial> basis, std::size_t i, std::size_t j) {
  CriticalPair cp = s_and_g_polynomials(basis[i], basis[j]);
  cp.i = i;
  cp.j = j;
  return cp;
}

GroebnerReport is_groebner(std::span<const Polynomial> basis) {
  GroebnerReport report;
  for (const auto& g : basis)
    if (g.is_zero()) throw std::invalid_argument("basis contains the zero polynomial");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      ++report.pairs_checked;
      CriticalPair cp = critical_pair(basis, i, j);
      ReductionCertificate r = d_reduce(cp.s_poly, basis);
      if (!r.normal_form.is_zero()) {
        report.failures.push_back({i, j, PairFailure::Kind::s_poly_not_reducing, r.normal_form});
      }
      if (!top_d_reducible(cp.g_poly, basis)) {
        report.failures.push_back({i, j, PairFailure::Kind::g_poly_not_top_reducible, cp.g_poly});
      }
    }
  }
  report.is_groebner = report.failures.empty();
  return report;
}

namespace {

struct Element {
  Polynomial poly;
  std::vector<Polynomial> cof;
};

std::vector<Polynomial> combine(const std::vector<Polynomial>& a, const Integer& ca, Monomial sa,
                                const std::vector<Polynomial>& b, const Integer& cb, Monomial sb) {
  std::vector<Polynomial> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i].add_scaled(ca, sa, a[i]);
    out[i].add_scaled(cb, sb, b[i]);
  }
  return out;
}

bool is_unit(const Polynomial& p) {
  return p.is_constant() && !p.is_zero() && (p.head_coeff() == 1 || p.head_coeff() == -1);
}

class Completer {
 public:
  Completer(std::span<const Polynomial> inputs, const CompletionLimits& limits)
      : inputs_(inputs), limits_(limits) {}

  Completion run() {
    Completion out;
    for (std::size_t i = 0; i < inputs_.size(); ++i) {
      const Polynomial& p = inputs_[i];
      if (p.is_zero()) continue;
      if (std::any_of(elems_.begin(), elems_.end(), [&](const Element& e) { return e.poly == p; }))
        continue;
      Element e{p, {}};
      if (limits_.track_cofactors) {
        e.cof.assign(inputs_.size(), Polynomial{});
        e.cof[i] = Polynomial(1);
      }
      add(std::move(e));
    }

    while (!pairs_.empty() && !has_unit_) {
      if (out.pairs_processed >= limits_.max_pairs) {
        out.status = CompletionStatus::incomplete;
        out.detail = "pair limit reached";
        break;
      }
      auto [lcm_term, i, j] = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      ++out.pairs_processed;
      if (!process(i, j, out)) break;
    }

    for (auto& e : elems_) {
      out.basis.push_back(std::move(e.poly));
      if (limits_.track_cofactors) out.cofactors.push_back(std::move(e.cof));
    }
    return out;
  }

 private:
  struct PairKey {
    Monomial lcm;
    std::size_t i;
    std::size_t j;
    bool operator<(const PairKey& o) const {
      if (lcm != o.lcm) return lcm < o.lcm;
      return std::tie(i, j) < std::tie(o.i, o.j);
    }
  };

  std::vector<Polynomial> polys() const {
    std::vector<Polynomial> out;
    out.reserve(elems_.size());
    for (const auto& e : elems_) out.push_back(e.poly);
    return out;
  }

  void add(Element e) {
    std::size_t idx = elems_.size();
    if (is_unit(e.poly)) has_unit_ = true;
    elems_.push_back(std::move(e));
    for (std::size_t i = 0; i < idx; ++i)
      pairs_.insert({lcm(elems_[i].poly.head_term(), elems_[idx].poly.head_term()), i, idx});
  }

  void add_new(Polynomial p, std::vector<Polynomial> cof) {
    if (p.head_coeff() < 0) {
      p = -p;
      for (auto& c : cof) c = -c;
    }
    add({std::move(p), std::move(cof)});
  }

  bool check_limits(const Polynomial& p, Completion& out) {
    if (elems_.size() >= limits_.max_basis) {
      out.status = CompletionStatus::incomplete;
      out.detail = "basis size limit reached";
      return false;
    }
    if (p.size() > limits_.max_terms) {
      out.status = CompletionStatus::incomplete;
      out.detail = "polynomial size limit reached";
      return false;
    }
    return true;
  }

  bool process(std::size_t i, std::size_t j, Completion& out) {
    const Polynomial& g1 = elems_[i].poly;
    const Polynomial& g2 = elems_[j].poly;
    PairData d = pair_data(g1, g2);
    bool track = limits_.track_cofactors;

    Polynomial s = g1.shifted(d.s1).scaled(d.b1);
    s.sub_scaled(d.b2, d.s2, g2);
    std::vector<Polynomial> s_cof;
    if (track) s_cof = combine(elems_[i].cof, d.b1, d.s1, elems_[j].cof, -d.b2, d.s2);

    // G-polynomial first: only needed when neither head coefficient divides the other.
    const Integer& a1 = g1.head_coeff();
    const Integer& a2 = g2.head_coeff();
    bool g_needed = mpz_divisible_p(a1.get_mpz_t(), a2.get_mpz_t()) == 0 &&
                    mpz_divisible_p(a2.get_mpz_t(), a1.get_mpz_t()) == 0;
    Polynomial gp;
    std::vector<Polynomial> g_cof;
    if (g_needed) {
      gp = g1.shifted(d.s1).scaled(d.c1);
      gp.add_scaled(d.c2, d.s2, g2);
      if (track) g_cof = combine(elems_[i].cof, d.c1, d.s1, elems_[j].cof, d.c2, d.s2);
    }

    std::vector<Polynomial> current = polys();
    ReductionCertificate r = d_reduce(s, current);
    if (!r.normal_form.is_zero()) {
      if (!check_limits(r.normal_form, out)) return false;
      std::vector<Polynomial> cof;
      if (track) {
        cof = std::move(s_cof);
        for (std::size_t l = 0; l < current.size(); ++l) {
          if (r.quotients[l].is_zero()) continue;
          for (std::size_t m = 0; m < cof.size(); ++m) cof[m] -= r.quotients[l] * elems_[l].cof[m];
        }
      }
      add_new(std::move(r.normal_form), std::move(cof));
      current = polys();
    }

    if (g_needed && !gp.is_zero() && !top_d_reducible(gp, current)) {
      if (!check_limits(gp, out)) return false;
      add_new(std::move(gp), std::move(g_cof));
    }
    return true;
  }

  std::span<const Polynomial> inputs_;
  CompletionLimits limits_;
  std::vector<Element> elems_;
  std::set<PairKey> pairs_;
  bool has_unit_ = false;
};

}  // namespace

Completion complete(std::span<const Polynomial> inputs, const CompletionLimits& limits) {
  return Completer(inputs, limits).run();
}

bool verify_combination(std::span<const Polynomial> inputs, const Polynomial& output,
                        std::span<const Polynomial> cofactors) {
  if (inputs.size() != cofactors.size()) return false;
  Polynomial sum;
  for (std::size_t i = 0; i < inputs.size(); ++i) sum += cofactors[i] * inputs[i];
  return sum == output;
}

}  // namespace ribbon
