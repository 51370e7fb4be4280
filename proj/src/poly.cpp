#include "ribbon/poly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace ribbon {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error(what + " at line " + std::to_string(line) + ", column " +
                         std::to_string(column)),
      line_(line),
      column_(column) {}

Polynomial::Polynomial(long c) {
  if (c != 0) terms_.push_back({{0, 0}, Integer(c)});
}

Polynomial::Polynomial(const Integer& c) {
  if (c != 0) terms_.push_back({{0, 0}, c});
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return b.mono < a.mono; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return Polynomial(std::move(out));
}

Polynomial Polynomial::monomial(const Integer& c, Monomial m) {
  if (c == 0) return {};
  return Polynomial(std::vector<Term>{{m, c}});
}

const Term& Polynomial::head() const {
  if (terms_.empty()) throw std::domain_error("no leading term");
  return terms_.front();
}

Term Polynomial::pop_head() {
  if (terms_.empty()) throw std::domain_error("no leading term");
  Term t = std::move(terms_.front());
  terms_.erase(terms_.begin());
  return t;
}

Integer Polynomial::coefficient(Monomial m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, Monomial v) { return v < t.mono; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::all_ones() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff == 1; });
}

Polynomial Polynomial::shifted(Monomial m) const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.mono = t.mono * m;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = -t.coeff;
  return Polynomial(std::move(out));
}

namespace {

// Merge two descending term lists: a + sign * c * m * b.
std::vector<Term> merge_scaled(std::vector<Term>&& a, const std::vector<Term>& b, const Integer& c,
                               Monomial m) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  Integer tmp;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(std::move(a[i++]));
      continue;
    }
    Monomial mb = b[j].mono * m;
    if (i == a.size() || a[i].mono < mb) {
      tmp = b[j].coeff * c;
      out.push_back({mb, tmp});
      ++j;
    } else if (mb < a[i].mono) {
      out.push_back(std::move(a[i++]));
    } else {
      tmp = b[j].coeff * c;
      tmp += a[i].coeff;
      if (tmp != 0) out.push_back({mb, tmp});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

void Polynomial::add_scaled(const Integer& c, Monomial m, const Polynomial& g) {
  if (c == 0 || g.is_zero()) return;
  terms_ = merge_scaled(std::move(terms_), g.terms_, c, m);
}

void Polynomial::sub_scaled(const Integer& c, Monomial m, const Polynomial& g) {
  if (c == 0 || g.is_zero()) return;
  Integer neg = -c;
  terms_ = merge_scaled(std::move(terms_), g.terms_, neg, m);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  add_scaled(1, {}, other);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  sub_scaled(1, {}, other);
  return *this;
}

Polynomial& Polynomial::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const Polynomial& small = a.size() <= b.size() ? a : b;
  const Polynomial& large = a.size() <= b.size() ? b : a;
  std::vector<Term> all;
  all.reserve(a.size() * b.size());
  for (const auto& s : small.terms_)
    for (const auto& l : large.terms_) all.push_back({s.mono * l.mono, s.coeff * l.coeff});
  return Polynomial::from_terms(std::move(all));
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = t.coeff < 0;
    if (negative) {
      out += '-';
    } else if (!first) {
      out += '+';
    }
    first = false;
    Integer mag = abs(t.coeff);
    bool wrote = false;
    if (mag != 1 || t.mono.is_one()) {
      out += mag.get_str();
      wrote = true;
    }
    if (t.mono.ex > 0) {
      if (wrote) out += '*';
      out += 'x';
      if (t.mono.ex > 1) out += '^' + std::to_string(t.mono.ex);
      wrote = true;
    }
    if (t.mono.ey > 0) {
      if (wrote) out += '*';
      out += 'y';
      if (t.mono.ey > 1) out += '^' + std::to_string(t.mono.ey);
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Term t = parse_term();
      if (sign < 0) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      skip_ws();
    }
    return Polynomial::from_terms(std::move(terms));
  }

 private:
  Term parse_term() {
    Term t{{0, 0}, 1};
    parse_factor(t);
    skip_ws();
    while (!at_end() && peek() == '*') {
      ++pos_;
      skip_ws();
      parse_factor(t);
      skip_ws();
    }
    return t;
  }

  void parse_factor(Term& t) {
    if (at_end()) fail("unexpected end of input");
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.coeff *= Integer(parse_digits());
    } else if (c == 'x' || c == 'y') {
      ++pos_;
      std::uint64_t e = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
        std::string digits = parse_digits();
        if (digits.size() > 9) fail("exponent too large");
        e = std::stoull(digits);
      }
      auto& slot = c == 'x' ? t.mono.ex : t.mono.ey;
      if (slot + e > std::numeric_limits<std::uint32_t>::max()) fail("exponent too large");
      slot += static_cast<std::uint32_t>(e);
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
  }

  std::string parse_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 1, pos_ + 1); }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) { return PolyParser(text).parse(); }

Leading leading(const Polynomial& p) {
  const Term& h = p.head();
  return {h.mono, h, h.coeff};
}

Polynomial geometric(Var v, std::uint32_t len) {
  std::vector<Term> terms;
  terms.reserve(len);
  for (std::uint32_t i = len; i-- > 0;) {
    Monomial m = v == Var::x ? Monomial{i, 0} : Monomial{0, i};
    terms.push_back({m, 1});
  }
  return Polynomial::from_terms(std::move(terms));
}

}  // namespace ribbon
