#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tasep {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational parse_rational(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty rational");
  if (s.front() == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0 || s.find('/') == 0 || s.back() == '/') {
    throw std::invalid_argument("bad rational: " + std::string(text));
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  q.canonicalize();
  return q;
}

// Exponent vector over x_1..x_n followed by y_1..y_n.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars) : exps_(2 * static_cast<std::size_t>(nvars), 0) {}

  static Monomial from_x(std::span<const int> xexp, int nvars) {
    if (static_cast<int>(xexp.size()) > nvars) throw std::invalid_argument("exponent vector longer than nvars");
    Monomial m(nvars);
    for (std::size_t i = 0; i < xexp.size(); ++i) m.set_x(static_cast<int>(i) + 1, xexp[i]);
    return m;
  }

  int nvars() const { return static_cast<int>(exps_.size() / 2); }
  int x(int i) const { return exps_[i - 1]; }
  int y(int i) const { return exps_[nvars() + i - 1]; }
  void set_x(int i, int e) { exps_[i - 1] = checked(e); }
  void set_y(int i, int e) { exps_[nvars() + i - 1] = checked(e); }
  std::span<const std::uint16_t> exponents() const { return exps_; }

  std::vector<int> xexp() const { return {exps_.begin(), exps_.begin() + nvars()}; }
  std::vector<int> yexp() const { return {exps_.begin() + nvars(), exps_.end()}; }

  int degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }
  bool is_one() const { return degree() == 0; }
  bool has_y() const {
    return std::any_of(exps_.begin() + nvars(), exps_.end(), [](auto e) { return e != 0; });
  }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m(a);
    for (std::size_t i = 0; i < m.exps_.size(); ++i) m.exps_[i] = checked(a.exps_[i] + b.exps_[i]);
    return m;
  }

  // Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    if (!b.divides(a)) throw std::domain_error("monomial division is not exact");
    Monomial m(a);
    for (std::size_t i = 0; i < m.exps_.size(); ++i) m.exps_[i] = a.exps_[i] - b.exps_[i];
    return m;
  }

  static Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial m(a);
    for (std::size_t i = 0; i < m.exps_.size(); ++i) m.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    return m;
  }

  Monomial embed(int nvars) const {
    Monomial m(nvars);
    for (int i = 1; i <= this->nvars(); ++i) {
      m.set_x(i, x(i));
      m.set_y(i, y(i));
    }
    return m;
  }

  std::string to_string() const {
    std::string s;
    auto emit = [&](char var, int i, int e) {
      if (e == 0) return;
      if (!s.empty()) s += '*';
      s += var + std::to_string(i);
      if (e > 1) s += '^' + std::to_string(e);
    };
    for (int i = 1; i <= nvars(); ++i) emit('x', i, x(i));
    for (int i = 1; i <= nvars(); ++i) emit('y', i, y(i));
    return s.empty() ? "1" : s;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  // Graded lexicographic on the concatenated exponent vector.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return a.exps_ <=> b.exps_;
  }

 private:
  static std::uint16_t checked(int e) {
    if (e < 0 || e > 0xffff) throw std::domain_error("monomial exponent out of range");
    return static_cast<std::uint16_t>(e);
  }

  std::vector<std::uint16_t> exps_;
};

// Sparse polynomial in Z[x_1..x_n, y_1..y_n]; terms are kept in descending
// graded-lex order with no zero coefficients.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Integer, std::greater<>>;

  explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const Integer& c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_.emplace(Monomial(nvars), c);
    return p;
  }
  static Polynomial one(int nvars) { return constant(nvars, 1); }

  static Polynomial term(const Monomial& m, const Integer& c = 1) {
    Polynomial p(m.nvars());
    if (c != 0) p.terms_.emplace(m, c);
    return p;
  }

  static Polynomial x(int nvars, int i) {
    Monomial m(nvars);
    m.set_x(i, 1);
    return term(m);
  }
  static Polynomial y(int nvars, int i) {
    Monomial m(nvars);
    m.set_y(i, 1);
    return term(m);
  }

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  const Monomial& leading_monomial() const {
    if (is_zero()) throw std::domain_error("zero polynomial has no leading term");
    return terms_.begin()->first;
  }
  const Integer& leading_coefficient() const {
    if (is_zero()) throw std::domain_error("zero polynomial has no leading term");
    return terms_.begin()->second;
  }

  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  Integer coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add_term(const Monomial& m, const Integer& c) {
    if (m.nvars() != nvars_) throw std::invalid_argument("nvars mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& q) {
    require_same(q);
    for (const auto& [m, c] : q.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& q) {
    require_same(q);
    for (const auto& [m, c] : q.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }
  Polynomial& operator*=(const Integer& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [m, c] : terms_) c *= s;
    }
    return *this;
  }

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator-(Polynomial p) { return p *= Integer(-1); }
  friend Polynomial operator*(Polynomial p, const Integer& s) { return p *= s; }

  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    p.require_same(q);
    Polynomial r(p.nvars_);
    for (const auto& [mp, cp] : p.terms_)
      for (const auto& [mq, cq] : q.terms_) r.add_term(mp * mq, cp * cq);
    return r;
  }

  friend Polynomial operator*(const Polynomial& p, const Monomial& m) {
    if (m.nvars() != p.nvars_) throw std::invalid_argument("nvars mismatch");
    Polynomial r(p.nvars_);
    for (const auto& [mp, cp] : p.terms_) r.terms_.emplace_hint(r.terms_.end(), mp * m, cp);
    return r;
  }

  friend bool operator==(const Polynomial& p, const Polynomial& q) {
    return p.nvars_ == q.nvars_ && p.terms_ == q.terms_;
  }

  Polynomial pow(int e) const {
    Polynomial r = one(nvars_);
    for (int i = 0; i < e; ++i) r *= *this;
    return r;
  }

  // Same polynomial in a ring with more variables.
  Polynomial embed(int nvars) const {
    if (nvars < nvars_) throw std::invalid_argument("cannot embed into a smaller ring");
    Polynomial r(nvars);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m.embed(nvars), c);
    return r;
  }

  Polynomial set_y_zero() const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_)
      if (!m.has_y()) r.terms_.emplace_hint(r.terms_.end(), m, c);
    return r;
  }

  // Exchanges x_i and x_{i+1}.
  Polynomial swap_x(int i) const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) {
      Monomial s = m;
      s.set_x(i, m.x(i + 1));
      s.set_x(i + 1, m.x(i));
      r.terms_.emplace(s, c);
    }
    return r;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      Integer a = abs(c);
      if (first) {
        if (c < 0) s += '-';
      } else {
        s += c < 0 ? " - " : " + ";
      }
      first = false;
      if (m.is_one()) {
        s += a.get_str();
      } else {
        if (a != 1) s += a.get_str() + '*';
        s += m.to_string();
      }
    }
    return s;
  }

 private:
  void require_same(const Polynomial& q) const {
    if (q.nvars_ != nvars_) throw std::invalid_argument("nvars mismatch in polynomial arithmetic");
  }

  int nvars_ = 0;
  Terms terms_;
};

// Parses the canonical text form ("3*x1^2*x2 - y1*y2 + 1"); term order in
// the input is irrelevant.
inline Polynomial parse_polynomial(std::string_view text, int nvars) {
  Polynomial p(nvars);
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty polynomial text");
  std::size_t pos = 0;
  auto fail = [&] { throw std::invalid_argument("bad polynomial text: " + std::string(text)); };
  auto read_int = [&] {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail();
    return s.substr(start, pos - start);
  };
  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      fail();
    }
    first = false;
    Integer coef = sign;
    Monomial m(nvars);
    bool any = false;
    while (true) {
      if (pos >= s.size()) fail();
      if (s[pos] == 'x' || s[pos] == 'y') {
        char var = s[pos++];
        int idx = std::stoi(read_int());
        int e = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          e = std::stoi(read_int());
        }
        if (idx < 1 || idx > nvars) fail();
        if (var == 'x') {
          m.set_x(idx, m.x(idx) + e);
        } else {
          m.set_y(idx, m.y(idx) + e);
        }
      } else {
        coef *= Integer(read_int());
      }
      any = true;
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!any) fail();
    p.add_term(m, coef);
  }
  return p;
}

// (P - s_i P) / (x_i - x_{i+1}), computed termwise:
// (x_i^a x_{i+1}^b - x_i^b x_{i+1}^a) / (x_i - x_{i+1})
//   = (x_i x_{i+1})^b * sum_{k=0}^{a-b-1} x_i^{a-b-1-k} x_{i+1}^k   for a > b.
inline Polynomial divided_difference(const Polynomial& p, int i) {
  if (i < 1 || i >= p.nvars()) throw std::invalid_argument("divided difference index out of range");
  Polynomial r(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    const int a = m.x(i), b = m.x(i + 1);
    if (a == b) continue;
    const int lo = std::min(a, b), span = std::abs(a - b);
    const Integer coef = a > b ? c : Integer(-c);
    Monomial t = m;
    for (int k = 0; k < span; ++k) {
      t.set_x(i, lo + span - 1 - k);
      t.set_x(i + 1, lo + k);
      r.add_term(t, coef);
    }
  }
  return r;
}

inline Rational evaluate(const Polynomial& p, std::span<const Rational> xvals, std::span<const Rational> yvals) {
  const int n = p.nvars();
  if (static_cast<int>(xvals.size()) != n || static_cast<int>(yvals.size()) != n) {
    throw std::invalid_argument("evaluation point has wrong length");
  }
  // Power tables indexed [var][exponent].
  std::vector<std::vector<Rational>> powers(2 * n, std::vector<Rational>{Rational(1)});
  auto power = [&](int var, int e) -> const Rational& {
    auto& table = powers[var];
    const Rational& base = var < n ? xvals[var] : yvals[var - n];
    while (static_cast<int>(table.size()) <= e) table.push_back(table.back() * base);
    return table[e];
  };
  Rational total = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational t = c;
    auto e = m.exponents();
    for (int v = 0; v < 2 * n; ++v)
      if (e[v]) t *= power(v, e[v]);
    total += t;
  }
  return total;
}

// (m, q) with p = m * q and m the componentwise-minimum exponent vector.
inline std::pair<Monomial, Polynomial> monomial_content(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("monomial content of the zero polynomial");
  Monomial g = p.terms().begin()->first;
  for (const auto& [m, c] : p.terms()) g = Monomial::gcd(g, m);
  Polynomial q(p.nvars());
  for (const auto& [m, c] : p.terms()) q.add_term(m / g, c);
  return {g, q};
}

inline std::optional<int> is_homogeneous(const Polynomial& p) {
  if (p.is_zero()) return std::nullopt;
  const int d = p.terms().begin()->first.degree();
  for (const auto& [m, c] : p.terms())
    if (m.degree() != d) return std::nullopt;
  return d;
}

// Quotient p / d when d divides p exactly in Z[x, y]; throws otherwise.
inline Polynomial exact_divide(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (p.nvars() != d.nvars()) throw std::invalid_argument("nvars mismatch");
  const Monomial& lm = d.leading_monomial();
  const Integer& lc = d.leading_coefficient();
  Polynomial rem = p, quot(p.nvars());
  while (!rem.is_zero()) {
    const Monomial& rm = rem.leading_monomial();
    const Integer& rc = rem.leading_coefficient();
    if (!lm.divides(rm) || !mpz_divisible_p(rc.get_mpz_t(), lc.get_mpz_t())) {
      throw std::domain_error("polynomial division is not exact");
    }
    Polynomial t = Polynomial::term(rm / lm, rc / lc);
    rem -= t * d;
    quot += t;
  }
  return quot;
}

}  // namespace tasep
