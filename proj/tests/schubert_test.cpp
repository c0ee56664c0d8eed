#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tasep/schubert.hpp"

using namespace tasep;

namespace {

Permutation P(std::string_view s) { return Permutation::parse(s); }
Polynomial poly(std::string_view s, int n) { return parse_polynomial(s, n); }

const char* const kS1432 = "x1^2*x2 + x1^2*x3 + x1*x2^2 + x1*x2*x3 + x2^2*x3";

}  // namespace

TEST(Delta, SmallCases) {
  EXPECT_EQ(delta(1), Polynomial::one(1));
  EXPECT_EQ(delta(2), poly("x1 - y1", 2));
  EXPECT_EQ(delta(3), poly("x1 - y1", 3) * poly("x1 - y2", 3) * poly("x2 - y1", 3));
}

TEST(ReducedWord, LengthAndProduct) {
  for (int n = 1; n <= 5; ++n) {
    for_each_permutation(n, [&](const Permutation& v) {
      for (auto choice : {WordChoice::kLastDescent, WordChoice::kFirstDescent}) {
        const auto word = reduced_word(v, choice);
        EXPECT_EQ(static_cast<int>(word.size()), inversions(v));
        std::vector<int> e(n);
        for (int i = 0; i < n; ++i) e[i] = i + 1;
        for (int k : word) std::swap(e[k - 1], e[k]);
        EXPECT_EQ(Permutation(e), v);
      }
    });
  }
}

TEST(DoubleSchubert, Examples) {
  EXPECT_EQ(double_schubert(Permutation::longest(4)), delta(4));
  EXPECT_EQ(double_schubert(Permutation::identity(2)), Polynomial::one(2));
  EXPECT_EQ(double_schubert(P("1432")).set_y_zero(), poly(kS1432, 4));
  EXPECT_EQ(single_schubert(P("12354")), poly("x1 + x2 + x3 + x4", 5));
  EXPECT_EQ(single_schubert(Permutation::identity(4)), Polynomial::one(4));
}

TEST(DoubleSchubert, AgreesWithPipeDreams) {
  for (int n = 1; n <= 5; ++n) {
    for_each_permutation(n, [&](const Permutation& w) {
      EXPECT_EQ(double_schubert(w), oracle::pipe_dream_schubert(w, false)) << w.compact();
      EXPECT_EQ(single_schubert(w), oracle::pipe_dream_schubert(w, true)) << w.compact();
    });
  }
}

TEST(DoubleSchubert, IndependentOfReducedWord) {
  for_each_permutation(5, [](const Permutation& w) {
    EXPECT_EQ(double_schubert_along(w, WordChoice::kLastDescent), double_schubert_along(w, WordChoice::kFirstDescent));
  });
}

TEST(DoubleSchubert, StableUnderEmbedding) {
  for_each_permutation(4, [](const Permutation& w) {
    EXPECT_EQ(double_schubert(w).embed(5), double_schubert(w.embed(5))) << w.compact();
    EXPECT_EQ(single_schubert(w).embed(6), single_schubert(w.embed(6))) << w.compact();
  });
}

TEST(SingleSchubert, NonnegativeAndHomogeneous) {
  for_each_permutation(5, [](const Permutation& w) {
    const Polynomial s = single_schubert(w);
    for (const auto& [m, c] : s.terms()) EXPECT_GT(c, 0);
    EXPECT_EQ(is_homogeneous(s), std::optional<int>(inversions(w)));
  });
}

TEST(SingleSchubert, ProductAtYZero) {
  const Polynomial prod = single_schubert(P("1342")) * single_schubert(P("1423"));
  EXPECT_EQ(prod, (double_schubert(P("1342")) * double_schubert(P("1423"))).set_y_zero());
}

TEST(Vexillary, Examples) {
  EXPECT_FALSE(is_vexillary(P("2143")));
  EXPECT_TRUE(is_vexillary(P("1432")));
  EXPECT_TRUE(is_vexillary(Permutation::identity(5)));
  for_each_permutation(5, [](const Permutation& w) {
    EXPECT_EQ(is_vexillary(w), !oracle::contains_pattern(w, P("2143")));
  });
}

TEST(Flag, Examples) {
  EXPECT_EQ(flag(P("1432")), (std::vector<int>{2, 3}));
  EXPECT_EQ(flag(P("321")), (std::vector<int>{1, 2}));
  EXPECT_EQ(shape(P("13542")), Partition({2, 1, 1}));
  EXPECT_THROW(flag(P("2143")), std::invalid_argument);
}

TEST(Tableaux, Counts) {
  const std::vector<int> b21{2, 3};
  EXPECT_EQ(ssyt_enumerate(Partition{2, 1}, b21).size(), 5u);
  for (int k = 1; k <= 5; ++k) {
    const std::vector<int> b{k};
    EXPECT_EQ(ssyt_enumerate(Partition{1}, b).size(), static_cast<std::size_t>(k));
  }
  const std::vector<int> b11{1, 1};
  EXPECT_TRUE(ssyt_enumerate(Partition{2, 2}, b11).empty());
}

TEST(Tableaux, AgreeWithUnprunedEnumeration) {
  const std::vector<std::pair<std::vector<int>, std::vector<int>>> cases{
      {{2, 1}, {2, 3}}, {{2, 2, 1}, {2, 3, 4}}, {{3, 1}, {3, 3}}, {{2, 2}, {3, 4}}, {{1, 1, 1}, {3, 4, 4}}, {{3}, {4}}};
  for (const auto& [sh, b] : cases) {
    const auto ours = ssyt_enumerate(Partition(sh), b);
    const auto ref = oracle::all_flagged_tableaux(sh, b);
    EXPECT_EQ(ours.size(), ref.size());
    std::vector<std::vector<std::vector<int>>> rows;
    for (const auto& t : ours) rows.push_back(t.rows);
    std::sort(rows.begin(), rows.end());
    auto sorted_ref = ref;
    std::sort(sorted_ref.begin(), sorted_ref.end());
    EXPECT_EQ(rows, sorted_ref);
  }
}

TEST(FlaggedSchur, Examples) {
  const std::vector<int> b{2, 3};
  EXPECT_EQ(flagged_schur(Partition{2, 1}, b, 4), poly(kS1432, 4));
  const std::vector<int> ones{1};
  EXPECT_EQ(flagged_schur(Partition{4}, ones, 3), poly("x1^4", 3));
  EXPECT_EQ(flagged_schur(Partition{}, std::vector<int>{}, 3), Polynomial::one(3));
}

TEST(FlaggedSchur, ShapeTwoTwoOne) {
  // Shape (2,2,1) with bounds (2,3,4) is the Schubert polynomial of 14532,
  // whose code is (0,2,2,1,0).
  const std::vector<int> b{2, 3, 4};
  const Polynomial fs = flagged_schur(Partition{2, 2, 1}, b, 5);
  EXPECT_EQ(fs, oracle::flagged_schur({2, 2, 1}, b, 5));
  EXPECT_EQ(code_to_perm(LehmerCode({0, 2, 2, 1, 0})), P("14532"));
  EXPECT_EQ(fs, single_schubert(P("14532")));
  // The shape of the code (0,1,2,1,0) is (2,1,1), not (2,2,1).
  const std::vector<int> b2 = flag(P("13542"));
  EXPECT_EQ(flagged_schur(Partition{2, 1, 1}, b2, 5), single_schubert(P("13542")));
}

TEST(FlaggedFactorization, Examples) {
  EXPECT_TRUE(verify_flagged_factorization(P("1432")));
  EXPECT_TRUE(verify_flagged_factorization(P("13542")));
  EXPECT_TRUE(verify_flagged_factorization(Permutation::identity(4)));
}

TEST(FlaggedFactorization, EveryVexillaryAgainstOracle) {
  for (int n = 2; n <= 5; ++n) {
    for_each_permutation(n, [&](const Permutation& w) {
      if (!is_vexillary(w)) return;
      const Partition sh = shape(w);
      std::vector<int> parts(sh.parts().begin(), sh.parts().end());
      EXPECT_EQ(oracle::flagged_schur(parts, flag(w), n), oracle::pipe_dream_schubert(w, true)) << w.compact();
      EXPECT_TRUE(verify_flagged_factorization(w));
    });
  }
}

TEST(Partition, Validation) {
  EXPECT_EQ(Partition({2, 1, 0, 0}).length(), 2);
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({2, -1}), std::invalid_argument);
  EXPECT_EQ(Partition({3, 1}).to_string(), "(3,1)");
}
