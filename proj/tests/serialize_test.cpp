#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "tasep/serialize.hpp"

using namespace tasep;

TEST(Json, PermutationRoundTrip) {
  const Permutation w = Permutation::parse("15432");
  EXPECT_EQ(to_json(w).dump(), "[1,5,4,3,2]");
  EXPECT_EQ(permutation_from_json(to_json(w)), w);
  EXPECT_THROW(permutation_from_json(json::parse("[1,1]")), std::invalid_argument);
}

TEST(Json, PolynomialRoundTrip) {
  const Polynomial p = parse_polynomial("3*x1^2*y2 - 12345678901234567890*x2 + 1", 2);
  const json j = to_json(p);
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[0]["coef"], "3");
  EXPECT_EQ(j[0]["xexp"], json::parse("[2,0]"));
  EXPECT_EQ(j[0]["yexp"], json::parse("[0,1]"));
  EXPECT_EQ(polynomial_from_json(j, 2), p);
  EXPECT_EQ(polynomial_from_json(json::parse(j.dump()), 2), p);
  EXPECT_THROW(polynomial_from_json(j, 3), std::invalid_argument);
}

TEST(Json, NumericCoefficientsAccepted) {
  const json j = json::parse(R"([{"coef": -2, "xexp": [1, 0], "yexp": [0, 0]}])");
  EXPECT_EQ(polynomial_from_json(j, 2), parse_polynomial("-2*x1", 2));
}

TEST(Params, ParseFileFormat) {
  std::istringstream in("# x block\n2\n1/3\n\n-1/2  # comment\n# y block\n0\n1/7\n5\n");
  const RateParams p = parse_params(in, 3);
  EXPECT_EQ(p.x, (std::vector<Rational>{2, Rational(1, 3), Rational(-1, 2)}));
  EXPECT_EQ(p.y, (std::vector<Rational>{0, Rational(1, 7), 5}));
  std::istringstream again(format_params(p));
  const RateParams q = parse_params(again, 3);
  EXPECT_EQ(q.x, p.x);
  EXPECT_EQ(q.y, p.y);
}

TEST(Params, Errors) {
  std::istringstream short_in("1\n2\n3\n");
  EXPECT_THROW(parse_params(short_in, 2), std::invalid_argument);
  std::istringstream bad("1\nfoo\n");
  EXPECT_THROW(parse_params(bad, 1), std::invalid_argument);
  EXPECT_THROW(read_params_file("/nonexistent/params.txt", 2), std::invalid_argument);
}
