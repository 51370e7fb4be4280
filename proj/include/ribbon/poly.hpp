#pragma once

// Sparse bivariate polynomials over the integers.
//
// Terms are kept in descending order under the degree-lexicographic order
// with x > y:  1 < y < x < y^2 < xy < x^2 < y^3 < ...
// No stored coefficient is ever zero, so equality is plain term-list equality.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ribbon {

using Integer = mpz_class;

struct Monomial {
  std::uint32_t ex = 0;
  std::uint32_t ey = 0;

  constexpr std::uint64_t degree() const { return std::uint64_t{ex} + ey; }
  constexpr bool is_one() const { return ex == 0 && ey == 0; }

  friend constexpr bool operator==(Monomial, Monomial) = default;
};

constexpr std::strong_ordering monomial_compare(Monomial a, Monomial b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return a.ex <=> b.ex;
}

constexpr std::strong_ordering operator<=>(Monomial a, Monomial b) {
  return monomial_compare(a, b);
}

constexpr bool divides(Monomial a, Monomial b) { return a.ex <= b.ex && a.ey <= b.ey; }

constexpr Monomial operator*(Monomial a, Monomial b) { return {a.ex + b.ex, a.ey + b.ey}; }

// b / a; requires divides(a, b).
constexpr Monomial quotient(Monomial b, Monomial a) { return {b.ex - a.ex, b.ey - a.ey}; }

constexpr Monomial lcm(Monomial a, Monomial b) {
  return {a.ex > b.ex ? a.ex : b.ex, a.ey > b.ey ? a.ey : b.ey};
}

struct Term {
  Monomial mono;
  Integer coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long c);  // NOLINT: integer literals read naturally in identities
  Polynomial(const Integer& c);  // NOLINT

  // Sorts, merges equal monomials and drops zero coefficients.
  static Polynomial from_terms(std::vector<Term> terms);
  static Polynomial monomial(const Integer& c, Monomial m);
  static Polynomial x(std::uint32_t power = 1) { return monomial(1, {power, 0}); }
  static Polynomial y(std::uint32_t power = 1) { return monomial(1, {0, power}); }

  // Text form: sum of `c*x^a*y^b` terms, e.g. "y^3+y^2+y+x+1" or "x*y-1".
  static Polynomial parse(std::string_view text);
  std::string to_string() const;

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }

  // Head (leading) term data; throws std::domain_error on the zero polynomial.
  const Term& head() const;
  Monomial head_term() const { return head().mono; }
  const Integer& head_coeff() const { return head().coeff; }

  Integer coefficient(Monomial m) const;
  std::uint64_t total_degree() const;
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  // True when every coefficient equals 1 (the encoding of a cell set).
  bool all_ones() const;

  // Removes and returns the head term; requires a nonzero polynomial.
  Term pop_head();

  Polynomial shifted(Monomial m) const;
  Polynomial scaled(const Integer& c) const { return Polynomial(*this) *= c; }
  Polynomial operator-() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Integer& c);

  // *this -= c * m * g, merged in place.
  void sub_scaled(const Integer& c, Monomial m, const Polynomial& g);
  // *this += c * m * g.
  void add_scaled(const Integer& c, Monomial m, const Polynomial& g);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  explicit Polynomial(std::vector<Term> canonical) : terms_(std::move(canonical)) {}

  std::vector<Term> terms_;  // descending, nonzero coefficients
};

struct Leading {
  Monomial term;     // HT
  Term monomial;     // HM: coefficient times term
  Integer coeff;     // HC
};

Leading leading(const Polynomial& p);

enum class Var { x, y };

// 1 + v + ... + v^(len-1); zero when len == 0.
Polynomial geometric(Var v, std::uint32_t len);

}  // namespace ribbon
