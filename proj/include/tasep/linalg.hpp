#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tasep/polynomial.hpp"

namespace tasep {

// Row-sparse matrix over Q; rows[i] maps column -> nonzero value.
using SparseRows = std::vector<std::map<int, Rational>>;

// Solves A x = b exactly by Gaussian elimination with back substitution.
// Pivot rows are chosen among the candidates with the fewest nonzeros to
// limit fill-in. Returns nullopt if A is singular.
inline std::optional<std::vector<Rational>> solve_sparse(SparseRows rows, std::vector<Rational> rhs) {
  const int m = static_cast<int>(rows.size());
  if (static_cast<int>(rhs.size()) != m) throw std::invalid_argument("rhs length mismatch");
  std::vector<int> pivot_row_of_col(m, -1);
  std::vector<bool> used(m, false);
  // col -> rows that may have a nonzero there (stale entries are skipped)
  std::vector<std::vector<int>> col_rows(m);
  for (int i = 0; i < m; ++i)
    for (const auto& [j, v] : rows[i]) col_rows[j].push_back(i);

  for (int col = 0; col < m; ++col) {
    int best = -1;
    for (int i : col_rows[col]) {
      if (used[i] || !rows[i].contains(col)) continue;
      if (best < 0 || rows[i].size() < rows[best].size()) best = i;
    }
    if (best < 0) return std::nullopt;
    used[best] = true;
    pivot_row_of_col[col] = best;
    const Rational pivot = rows[best].at(col);
    for (int i : col_rows[col]) {
      if (used[i]) continue;
      auto it = rows[i].find(col);
      if (it == rows[i].end()) continue;
      const Rational factor = it->second / pivot;
      rows[i].erase(it);
      for (const auto& [j, v] : rows[best]) {
        if (j == col) continue;
        auto [slot, inserted] = rows[i].try_emplace(j, 0);
        if (inserted) col_rows[j].push_back(i);
        slot->second -= factor * v;
        if (slot->second == 0) rows[i].erase(slot);
      }
      rhs[i] -= factor * rhs[best];
    }
  }
  // Row pivot_row_of_col[c] only involves columns >= c.
  std::vector<Rational> x(m);
  for (int col = m - 1; col >= 0; --col) {
    const auto& row = rows[pivot_row_of_col[col]];
    Rational acc = rhs[pivot_row_of_col[col]];
    for (const auto& [j, v] : row)
      if (j != col) acc -= v * x[j];
    x[col] = acc / row.at(col);
  }
  return x;
}

struct FractionFreeSolution {
  Polynomial determinant;             // det(A), up to the sign of the row permutation
  std::vector<Polynomial> numerators;  // determinant * x
};

// Bareiss elimination over Z[x, y] for a square nonsingular A. Every
// division in both the forward sweep and the back substitution is exact.
inline std::optional<FractionFreeSolution> bareiss_solve(std::vector<std::vector<Polynomial>> a,
                                                         std::vector<Polynomial> b) {
  const int m = static_cast<int>(a.size());
  if (m == 0) throw std::invalid_argument("empty system");
  const int nvars = b.front().nvars();
  for (int i = 0; i < m; ++i) a[i].push_back(b[i]);
  Polynomial prev = Polynomial::one(nvars);
  for (int k = 0; k < m; ++k) {
    int p = k;
    while (p < m && a[p][k].is_zero()) ++p;
    if (p == m) return std::nullopt;
    std::swap(a[p], a[k]);
    for (int i = k + 1; i < m; ++i) {
      for (int j = k + 1; j <= m; ++j) {
        a[i][j] = exact_divide(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
      }
      a[i][k] = Polynomial(nvars);
    }
    prev = a[k][k];
  }
  FractionFreeSolution sol{prev, std::vector<Polynomial>(m, Polynomial(nvars))};
  for (int i = m - 1; i >= 0; --i) {
    Polynomial acc = sol.determinant * a[i][m];
    for (int j = i + 1; j < m; ++j) acc -= a[i][j] * sol.numerators[j];
    sol.numerators[i] = exact_divide(acc, a[i][i]);
  }
  return sol;
}

}  // namespace tasep
