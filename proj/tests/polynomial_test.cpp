#include <gtest/gtest.h>

#include <random>

#include "tasep/polynomial.hpp"

using namespace tasep;

namespace {

Polynomial poly(std::string_view s, int n) { return parse_polynomial(s, n); }

Polynomial random_poly(std::mt19937_64& rng, int n, int terms, int maxdeg, bool with_y) {
  std::uniform_int_distribution<int> coef(-5, 5), exp(0, maxdeg);
  Polynomial p(n);
  for (int t = 0; t < terms; ++t) {
    Monomial m(n);
    for (int i = 1; i <= n; ++i) {
      m.set_x(i, exp(rng));
      if (with_y) m.set_y(i, exp(rng) / 2);
    }
    p.add_term(m, coef(rng));
  }
  return p;
}

std::vector<Rational> random_point(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> d(-50, 50), q(1, 9);
  std::vector<Rational> v;
  for (int i = 0; i < n; ++i) {
    Rational r(d(rng), q(rng));
    r.canonicalize();
    v.push_back(r);
  }
  return v;
}

// (P - s_i P) / (x_i - x_{i+1}) computed by long division.
Polynomial divided_difference_by_division(const Polynomial& p, int i) {
  const int n = p.nvars();
  return exact_divide(p - p.swap_x(i), Polynomial::x(n, i) - Polynomial::x(n, i + 1));
}

}  // namespace

TEST(Polynomial, Arithmetic) {
  EXPECT_TRUE((poly("x1", 2) + poly("-x1", 2)).is_zero());
  EXPECT_EQ(poly("x1 - y1", 2) * poly("x1 + y1", 2), poly("x1^2 - y1^2", 2));
  EXPECT_EQ(poly("x1 + x2", 2) * poly("x1 + x2", 2), poly("x1^2 + 2*x1*x2 + x2^2", 2));
  EXPECT_EQ(poly("x1 - y2", 2).pow(3), poly("x1 - y2", 2) * poly("x1 - y2", 2) * poly("x1 - y2", 2));
}

TEST(Polynomial, TextRoundTrip) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const Polynomial p = random_poly(rng, 4, 6, 3, true);
    EXPECT_EQ(parse_polynomial(p.to_string(), 4), p) << p.to_string();
  }
  EXPECT_EQ(Polynomial(3).to_string(), "0");
  EXPECT_EQ(poly("3*x1^2*x2 - y1*y2 + 1", 2).to_string(), "3*x1^2*x2 - y1*y2 + 1");
  EXPECT_THROW(poly("x5", 2), std::invalid_argument);
  EXPECT_THROW(poly("x1 +", 2), std::invalid_argument);
}

TEST(Polynomial, DegreeOrderLeadingTerm) {
  const Polynomial p = poly("x2^3 + x1*x2*x3 + 7*x1^2", 3);
  EXPECT_EQ(p.degree(), 3);
  EXPECT_EQ(p.leading_coefficient(), 1);
  EXPECT_EQ(is_homogeneous(poly("x1^2*x2 + x1*y1*y2", 2)), std::optional<int>(3));
  EXPECT_EQ(is_homogeneous(poly("x1 + x1*x2", 2)), std::nullopt);
  EXPECT_EQ(is_homogeneous(Polynomial::constant(2, 5)), std::optional<int>(0));
}

TEST(DividedDifference, Examples) {
  EXPECT_EQ(divided_difference(poly("x1", 2), 1), Polynomial::one(2));
  EXPECT_TRUE(divided_difference(poly("x1*x2", 2), 1).is_zero());
  EXPECT_EQ(divided_difference(poly("x1^2", 2), 1), poly("x1 + x2", 2));
}

TEST(DividedDifference, AgreesWithLongDivision) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 60; ++t) {
    const int n = 2 + t % 4;
    const Polynomial p = random_poly(rng, n, 5, 4, true);
    for (int i = 1; i < n; ++i) EXPECT_EQ(divided_difference(p, i), divided_difference_by_division(p, i)) << p.to_string();
  }
}

TEST(DividedDifference, NilCoxeterRelations) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 30; ++t) {
    const int n = 3 + t % 3;  // 3..5
    const Polynomial p = random_poly(rng, n, 6, 4, true);
    for (int i = 1; i < n; ++i) {
      EXPECT_TRUE(divided_difference(divided_difference(p, i), i).is_zero());
      if (i + 1 < n) {
        const auto a = divided_difference(divided_difference(divided_difference(p, i), i + 1), i);
        const auto b = divided_difference(divided_difference(divided_difference(p, i + 1), i), i + 1);
        EXPECT_EQ(a, b);
      }
      for (int j = i + 2; j < n; ++j)
        EXPECT_EQ(divided_difference(divided_difference(p, i), j), divided_difference(divided_difference(p, j), i));
    }
  }
}

TEST(DividedDifference, TwistedLeibniz) {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 20; ++t) {
    const Polynomial p = random_poly(rng, 4, 4, 3, true), q = random_poly(rng, 4, 4, 3, true);
    for (int i = 1; i < 4; ++i) {
      EXPECT_EQ(divided_difference(p * q, i),
                divided_difference(p, i) * q + p.swap_x(i) * divided_difference(q, i));
    }
  }
}

TEST(Evaluate, Examples) {
  const std::vector<Rational> x{3, 0}, y{1, 0};
  EXPECT_EQ(evaluate(poly("x1 - y1", 2), x, y), 2);
  const std::vector<Rational> x2{2, 3}, y2{0, 0};
  EXPECT_EQ(evaluate(poly("x1^2*x2", 2), x2, y2), 12);
  EXPECT_EQ(evaluate(Polynomial(2), x2, y2), 0);
}

TEST(Evaluate, RingHomomorphism) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 40; ++t) {
    const Polynomial p = random_poly(rng, 3, 5, 3, true), q = random_poly(rng, 3, 5, 3, true);
    const auto x = random_point(rng, 3), y = random_point(rng, 3);
    EXPECT_EQ(evaluate(p + q, x, y), evaluate(p, x, y) + evaluate(q, x, y));
    EXPECT_EQ(evaluate(p * q, x, y), evaluate(p, x, y) * evaluate(q, x, y));
  }
}

TEST(MonomialContent, Examples) {
  const auto [m1, r1] = monomial_content(poly("x1^2*x2 + x1*x2^2", 2));
  EXPECT_EQ(Polynomial::term(m1), poly("x1*x2", 2));
  EXPECT_EQ(r1, poly("x1 + x2", 2));
  const auto [m2, r2] = monomial_content(poly("x1 + x2", 2));
  EXPECT_TRUE(m2.is_one());
  EXPECT_EQ(r2, poly("x1 + x2", 2));
  const Polynomial s1432 = poly("x1^2*x2 + x1^2*x3 + x1*x2^2 + x1*x2*x3 + x2^2*x3", 4);
  const auto [m3, r3] = monomial_content(s1432);
  EXPECT_TRUE(m3.is_one());
  EXPECT_EQ(r3, s1432);
}

TEST(MonomialContent, ProductProperty) {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 40; ++t) {
    const Polynomial p = random_poly(rng, 3, 4, 3, false);
    if (p.is_zero()) continue;
    const auto [m, r] = monomial_content(p);
    EXPECT_EQ(Polynomial::term(m) * r, p);
    EXPECT_TRUE(monomial_content(r).first.is_one());
  }
}

TEST(ExactDivide, RoundTripAndRejection) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 30; ++t) {
    const Polynomial a = random_poly(rng, 3, 4, 3, true), b = random_poly(rng, 3, 3, 2, true);
    if (b.is_zero()) continue;
    EXPECT_EQ(exact_divide(a * b, b), a);
  }
  EXPECT_THROW(exact_divide(poly("x1 + 1", 2), poly("x2", 2)), std::domain_error);
}

TEST(Polynomial, EmbedAndSpecialize) {
  const Polynomial p = poly("x1*y2 - x2", 2);
  EXPECT_EQ(p.embed(4), poly("x1*y2 - x2", 4));
  EXPECT_EQ(p.set_y_zero(), poly("-x2", 2));
}
