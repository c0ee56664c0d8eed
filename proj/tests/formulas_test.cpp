#include <gtest/gtest.h>

#include "reference_tables.hpp"
#include "tasep/chain.hpp"
#include "tasep/formulas.hpp"
#include "tasep/mlq.hpp"

using namespace tasep;

namespace {

Permutation P(std::string_view s) { return Permutation::parse(s); }
Polynomial poly(std::string_view s, int n) { return parse_polynomial(s, n); }

std::vector<std::vector<int>> as_vectors(const PartitionSequence& seq) {
  std::vector<std::vector<int>> out;
  for (const auto& lam : seq) out.emplace_back(lam.parts().begin(), lam.parts().end());
  return out;
}

}  // namespace

TEST(PsiPartitions, Examples) {
  EXPECT_EQ(as_vectors(psi_partitions(P("12354"))), (std::vector<std::vector<int>>{{1, 1, 1}}));
  EXPECT_EQ(as_vectors(psi_partitions(P("15432"))), (std::vector<std::vector<int>>{{3}, {2, 2}, {1, 1, 1}}));
  EXPECT_TRUE(psi_partitions(Permutation::identity(5)).empty());
  EXPECT_THROW(psi_partitions(P("14325")), FormulaNotApplicable);
  EXPECT_THROW(psi_partitions(P("21345")), FormulaNotApplicable);
}

TEST(PsiPartitions, SpecialStates) {
  for (const auto& row : reference::special_state_table()) {
    const Permutation w = P(row.state);
    EXPECT_EQ(inv_descent_count(w), row.k) << row.state;
    EXPECT_EQ(as_vectors(psi_partitions(w)), row.partitions) << row.state;
  }
}

TEST(PsiPartitions, LengthEqualsK) {
  for (int n = 2; n <= 7; ++n)
    for (const auto& w : enumerate_states(n)) EXPECT_EQ(static_cast<int>(psi_partitions(w).size()), inv_descent_count(w));
}

TEST(GVector, Examples) {
  EXPECT_EQ(g_vector(5, Partition{2, 1, 1}), LehmerCode({0, 1, 2, 1, 0}));
  EXPECT_EQ(g_vector(6, Partition{3, 2, 2, 1}), LehmerCode({0, 2, 3, 2, 1, 0}));
  EXPECT_EQ(g_vector(6, Partition{3, 1, 1}), LehmerCode({0, 0, 3, 1, 1, 0}));
  EXPECT_EQ(g_vector(4, Partition{}), LehmerCode({0, 0, 0, 0}));
  EXPECT_THROW(g_vector(4, Partition{1, 1, 1}), std::invalid_argument);
}

TEST(CyclicOrder, Examples) {
  const Permutation w = P("1423");
  EXPECT_TRUE(cyclic_order(1, 2, 3, w));
  EXPECT_TRUE(cyclic_order(2, 3, 4, w));
  EXPECT_FALSE(cyclic_order(3, 2, 1, w));
  EXPECT_FALSE(cyclic_order(4, 3, 2, w));
  EXPECT_THROW(cyclic_order(2, 3, 3, w), std::invalid_argument);
}

TEST(CyclicOrder, RotationInvariant) {
  for_each_permutation(5, [](const Permutation& w) {
    const Permutation r = w.rotate_left(2);
    for (int a = 1; a <= 5; ++a)
      for (int b = 1; b <= 5; ++b)
        for (int c = 1; c <= 5; ++c)
          if (a != b && b != c && a != c) {
            EXPECT_EQ(cyclic_order(a, b, c, w), cyclic_order(a, b, c, r));
          }
  });
}

TEST(XyFact, Examples) {
  EXPECT_EQ(xy_fact(P("1324")), poly("x1 - y1", 4));
  EXPECT_EQ(xy_fact(P("1432")), Polynomial::one(4));
  for (int n = 2; n <= 6; ++n) EXPECT_EQ(xy_fact(Permutation::identity(n)), normalization_polynomial(n)) << n;
}

TEST(MainFormula, Examples) {
  EXPECT_EQ(main_formula(P("1324")), poly("x1 - y1", 4) * double_schubert(P("1432")));
  EXPECT_EQ(main_formula(P("1432")), double_schubert(P("1423")) * double_schubert(P("1342")));
  EXPECT_EQ(main_formula(P("15432")).set_y_zero(),
            single_schubert(P("15234")) * single_schubert(P("14523")) * single_schubert(P("13452")));
  EXPECT_THROW(main_formula(P("14325")), FormulaNotApplicable);
}

TEST(MainFormula, FourSites) {
  for (const auto& row : reference::four_site_table()) EXPECT_EQ(main_formula(P(row.state)), reference::expand(row)) << row.state;
}

TEST(MainFormula, MatchesSymbolicSolve) {
  for (int n = 3; n <= 4; ++n) {
    const auto psi = symbolic_stationary(n);
    for (const auto& w : enumerate_states(n)) EXPECT_EQ(main_formula(w), psi.at(w)) << w.compact();
  }
}

TEST(MainFormula, HomogeneousOfDegreeBinomial) {
  for (int n = 3; n <= 5; ++n) {
    const int deg = n * (n - 1) * (n - 2) / 6;
    for (const auto& w : enumerate_states(n)) EXPECT_EQ(is_homogeneous(main_formula(w)), std::optional<int>(deg)) << w.compact();
  }
}

TEST(MainFormulaY0, Examples) {
  const auto a = main_formula_y0(P("12354"));
  EXPECT_EQ(a.prefactor, Monomial::from_x(std::vector<int>{5, 2, 0, 0, 0}, 5));
  EXPECT_EQ(a.labels, std::vector<Permutation>{P("13452")});
  const auto b = main_formula_y0(P("12345"));
  EXPECT_EQ(b.prefactor, Monomial::from_x(std::vector<int>{6, 3, 1, 0, 0}, 5));
  EXPECT_TRUE(b.labels.empty());
  const auto c = main_formula_y0(P("12543"));
  EXPECT_EQ(c.prefactor, Monomial::from_x(std::vector<int>{3, 0, 0, 0, 0}, 5));
  EXPECT_EQ(c.labels, (std::vector<Permutation>{P("14523"), P("13452")}));
}

TEST(MainFormulaY0, SpecialStates) {
  for (const auto& row : reference::special_state_table()) {
    const auto f = main_formula_y0(P(row.state));
    std::vector<int> mu(row.mu);
    mu.resize(5, 0);
    EXPECT_EQ(f.prefactor, Monomial::from_x(mu, 5)) << row.state;
    std::vector<Permutation> labels;
    for (const char* l : row.labels) labels.push_back(P(l));
    EXPECT_EQ(f.labels, labels) << row.state;
  }
}

TEST(MainFormulaY0, SpecializesGeneralFormula) {
  for (int n = 3; n <= 5; ++n)
    for (const auto& w : enumerate_states(n)) EXPECT_EQ(main_formula_y0(w).expand(), main_formula(w).set_y_zero()) << w.compact();
}

TEST(Eta, Examples) {
  EXPECT_EQ(eta(P("123")), Monomial::from_x(std::vector<int>{1, 0, 0}, 3));
  EXPECT_EQ(eta(P("1324")), Monomial::from_x(std::vector<int>{1, 0, 0, 0}, 4));
  EXPECT_EQ(eta(P("12354")), Monomial::from_x(std::vector<int>{5, 2, 0, 0, 0}, 5));
}

TEST(Eta, RotationInvariantAndMatchesContent) {
  const auto psi = symbolic_stationary(4);
  for (const auto& [w, p] : psi) {
    EXPECT_EQ(eta(w), eta(w.rotate_left()));
    EXPECT_EQ(eta(w), monomial_content(p.set_y_zero()).first) << w.compact();
  }
}
