#include <doctest.h>

#include <algorithm>
#include <random>

#include "ribbon/groebner.hpp"
#include "ribbon/tiles.hpp"
#include "test_support.hpp"

using namespace ribbon;

namespace {

Polynomial P(const char* s) { return Polynomial::parse(s); }

std::vector<Polynomial> basis_vec(int n) {
  auto b = tn_basis(n);
  return {b.begin(), b.end()};
}

// 1 + y^2 + ... + y^(2(len-1))
Polynomial even_geometric_y(std::uint32_t len) {
  Polynomial out;
  for (std::uint32_t i = 0; i < len; ++i) out += Polynomial::y(2 * i);
  return out;
}

}  // namespace

TEST_CASE("d_reduce examples") {
  auto b = basis_vec(5);
  auto g = tn_generators(5);
  ReductionCertificate c = d_reduce(g[0], b);
  CHECK(c.normal_form.is_zero());
  CHECK(c.quotients[0] == Polynomial(1));
  CHECK(verify_certificate(c));

  ReductionCertificate d = d_reduce(P("x^2*y^2"), std::vector<Polynomial>{P("x*y-1")});
  CHECK(d.normal_form == Polynomial(1));
  CHECK(d.quotients[0] == P("x*y+1"));
  CHECK(verify_certificate(d));

  ReductionCertificate e = d_reduce(P("2*x*y"), std::vector<Polynomial>{P("3*x*y-3")});
  CHECK(e.normal_form == P("2*x*y"));
  CHECK(d_reduce(Polynomial(), b).normal_form.is_zero());
}

TEST_CASE("e_reduce examples") {
  ReductionCertificate a = e_reduce(P("3*x*y"), std::vector<Polynomial>{P("x*y-1")});
  CHECK(a.normal_form == Polynomial(3));
  ReductionCertificate b = e_reduce(P("5*x*y"), std::vector<Polynomial>{P("2*x*y-2")});
  CHECK(b.normal_form == P("x*y+4"));
  CHECK(b.quotients[0] == Polynomial(2));
  CHECK(verify_certificate(b));
  ReductionCertificate neg = e_reduce(P("-5*x*y"), std::vector<Polynomial>{P("2*x*y-2")});
  CHECK(neg.normal_form == P("x*y-6"));  // -5 = 2 * (-3) + 1
  CHECK(verify_certificate(neg));
}

TEST_CASE("random ideal members e-reduce to zero") {
  std::mt19937_64 rng(21);
  for (int n : {5, 7, 9}) {
    auto b = basis_vec(n);
    for (int i = 0; i < 20; ++i) {
      Polynomial f;
      for (const auto& g : b) f += test_support::random_poly(rng, 4, 5, 9) * g;
      CHECK(e_reduce(f, b).normal_form.is_zero());
    }
  }
}

TEST_CASE("certificates replay and detect tampering") {
  std::mt19937_64 rng(5);
  auto b = basis_vec(7);
  for (int i = 0; i < 50; ++i) {
    Polynomial f = test_support::random_poly(rng, 10, 9, 20);
    for (bool e_mode : {false, true}) {
      ReductionCertificate c = e_mode ? e_reduce(f, b) : d_reduce(f, b);
      CHECK(verify_certificate(c));
      for (std::size_t j = 0; j < b.size(); ++j)
        if (!c.quotients[j].is_zero() && !f.is_zero())
          CHECK(monomial_compare((c.quotients[j] * b[j]).head_term(), f.head_term()) <= 0);
      ReductionCertificate bad = c;
      bad.quotients[i % 3] += Polynomial(1);
      CHECK_FALSE(verify_certificate(bad));
    }
  }
}

TEST_CASE("normal forms do not depend on basis order for a Groebner basis") {
  std::mt19937_64 rng(8);
  auto b = basis_vec(9);
  for (int i = 0; i < 30; ++i) {
    Polynomial f = test_support::random_poly(rng, 8, 10, 30);
    Polynomial reference = e_reduce(f, b).normal_form;
    std::vector<std::size_t> idx{0, 1, 2};
    do {
      std::vector<Polynomial> perm{b[idx[0]], b[idx[1]], b[idx[2]]};
      CHECK(e_reduce(f, perm).normal_form == reference);
    } while (std::next_permutation(idx.begin(), idx.end()));
  }
}

TEST_CASE("bezout convention") {
  Bezout b = bezout(4, 6);
  CHECK(b.gcd == 2);
  CHECK(b.c1 * 4 + b.c2 * 6 == 2);
  CHECK(abs(b.c1) <= 1);
  Bezout c = bezout(-9, 6);
  CHECK(c.gcd == 3);
  CHECK(c.c1 * -9 + c.c2 * 6 == 3);
}

TEST_CASE("S-polynomials of the explicit basis") {
  for (int k = 2; k <= 12; ++k) {
    auto b = basis_vec(2 * k + 1);
    const auto uk = static_cast<std::uint32_t>(k);
    CHECK(b[0].head_term() == Monomial{0, uk + 1});
    CHECK(b[1].head_term() == Monomial{uk, 0});
    CHECK(b[2].head_term() == Monomial{1, 1});

    Polynomial s12 = Polynomial::x(uk) * b[0] - Polynomial::y(uk + 1) * b[1];
    CHECK(s_and_g_polynomials(b[0], b[1]).s_poly == s12);
    CHECK(s12 == -(Polynomial::y(uk) * b[0]) + Polynomial::x(uk - 1) * b[1] +
                      (Polynomial::x(uk - 1) * geometric(Var::y, uk) -
                       Polynomial::y(uk) * geometric(Var::x, uk - 1)) * b[2]);

    Polynomial s13 = Polynomial::x() * b[0] - Polynomial::y(uk) * b[2];
    CHECK(s_and_g_polynomials(b[0], b[2]).s_poly == s13);
    CHECK(s13 == b[1] + geometric(Var::y, uk) * b[2]);

    Polynomial s23 = Polynomial::y() * b[1] - Polynomial::x(uk - 1) * b[2];
    CHECK(s_and_g_polynomials(b[1], b[2]).s_poly == s23);
    CHECK(s23 == b[0] + geometric(Var::x, uk - 1) * b[2]);
  }
  Polynomial g = P("2*x^2+y");
  CHECK(s_and_g_polynomials(g, g).s_poly.is_zero());
  CHECK(s_and_g_polynomials(g, g).g_poly == g);
}

TEST_CASE("G-polynomial combines head coefficients by their gcd") {
  Polynomial a = P("4*x^2+y");
  Polynomial b = P("6*x*y+1");
  CriticalPair cp = s_and_g_polynomials(a, b);
  CHECK(cp.g_poly.head_term() == Monomial{2, 1});
  CHECK(abs(cp.g_poly.head_coeff()) == 2);
  CHECK(cp.s_poly == P("3*y^2-2*x"));
  CHECK(cp.g_poly == P("2*x^2*y+x-y^2"));
}

TEST_CASE("Groebner criterion") {
  for (int k = 2; k <= 12; ++k) {
    auto b = basis_vec(2 * k + 1);
    GroebnerReport rep = is_groebner(b);
    CHECK(rep.is_groebner);
    CHECK(rep.pairs_checked == 3);
  }
  CHECK(is_groebner(std::vector<Polynomial>{P("x*y-1")}).is_groebner);

  std::vector<Polynomial> bad{P("x^2+y"), P("x*y+1")};
  GroebnerReport rep = is_groebner(bad);
  CHECK_FALSE(rep.is_groebner);
  REQUIRE(rep.failures.size() == 1);
  CHECK(rep.failures[0].kind == PairFailure::Kind::s_poly_not_reducing);
  CHECK(d_reduce(s_and_g_polynomials(bad[0], bad[1]).s_poly, bad).normal_form == rep.failures[0].residue);
  CHECK_FALSE(rep.failures[0].residue.is_zero());

  // Head coefficients 2 and 3: the G-polynomial has head coefficient 1 and is not top-reducible.
  std::vector<Polynomial> coprime{P("2*x"), P("3*y")};
  GroebnerReport rep2 = is_groebner(coprime);
  CHECK_FALSE(rep2.is_groebner);
}

TEST_CASE("explicit combination expresses xy - 1 through the tiles") {
  for (int k = 2; k <= 12; ++k) {
    auto g = tn_generators(2 * k + 1);
    const auto uk = static_cast<std::uint32_t>(k);
    Polynomial xy = Polynomial::x() * Polynomial::y();
    Polynomial c3 = -(xy * geometric(Var::y, 2 * uk - 2)) + Polynomial::y() * even_geometric_y(uk - 1);
    Polynomial c4 = xy * even_geometric_y(uk - 1);
    Polynomial combo = -g[0] + g[1] + c3 * g[2] + c4 * g[3];
    CHECK(combo == xy - Polynomial(1));

    ReductionCertificate cert{xy - Polynomial(1), {g.begin(), g.end()}, {Polynomial(-1), Polynomial(1), c3, c4}, {}};
    CHECK(verify_certificate(cert));
  }
}

TEST_CASE("completion") {
  std::vector<Polynomial> single{P("x*y-1")};
  Completion c = complete(single);
  CHECK(c.status == CompletionStatus::complete);
  REQUIRE(c.basis.size() == 1);
  CHECK(c.basis[0] == P("x*y-1"));

  for (int n : {5, 7, 9}) {
    auto g = tn_generators(n);
    std::vector<Polynomial> gens(g.begin(), g.end());
    Completion done = complete(gens);
    REQUIRE(done.status == CompletionStatus::complete);
    CHECK(is_groebner(done.basis).is_groebner);
    for (std::size_t j = 0; j < done.basis.size(); ++j)
      CHECK(verify_combination(gens, done.basis[j], done.cofactors[j]));
    auto b = basis_vec(n);
    for (const auto& p : b) CHECK(e_reduce(p, done.basis).normal_form.is_zero());
    for (const auto& p : done.basis) CHECK(e_reduce(p, b).normal_form.is_zero());
    for (const auto& p : gens) CHECK(e_reduce(p, done.basis).normal_form.is_zero());
  }

  std::vector<Polynomial> coprime{P("2*x"), P("3*y")};
  Completion cp = complete(coprime);
  CHECK(cp.status == CompletionStatus::complete);
  CHECK(is_groebner(cp.basis).is_groebner);
}

TEST_CASE("completion limits give an explicit incomplete status") {
  auto g = tn_generators(9);
  std::vector<Polynomial> gens(g.begin(), g.end());
  CompletionLimits lim;
  lim.max_pairs = 2;
  Completion c = complete(gens, lim);
  CHECK(c.status == CompletionStatus::incomplete);
  CHECK_FALSE(c.detail.empty());
}

TEST_CASE("the square tile makes the ideal the whole ring") {
  for (int n : {5, 7, 9}) {
    TileSet ts = make_tilde_tn(n);
    auto gens = ts.generators();
    Completion c = complete(gens);
    REQUIRE(c.status == CompletionStatus::complete);
    CHECK(std::find(c.basis.begin(), c.basis.end(), Polynomial(1)) != c.basis.end());
    CHECK(e_reduce(Polynomial(1), c.basis).normal_form.is_zero());
  }
}
