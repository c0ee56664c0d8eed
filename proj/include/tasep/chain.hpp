#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "tasep/linalg.hpp"
#include "tasep/permutation.hpp"
#include "tasep/polynomial.hpp"

namespace tasep {

// Spectral parameters x_1..x_n and y_1..y_n.
struct RateParams {
  std::vector<Rational> x;
  std::vector<Rational> y;

  int n() const { return static_cast<int>(x.size()); }

  static RateParams y_zero(std::vector<Rational> xs) {
    RateParams p{std::move(xs), {}};
    p.y.assign(p.x.size(), Rational(0));
    return p;
  }

  void validate(int n) const {
    if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n) {
      throw std::invalid_argument("rate parameters must have " + std::to_string(n) + " x and y values");
    }
  }

  // x_i - y_{n+1-j} > 0 for every i < j.
  bool rates_positive() const {
    const int m = n();
    for (int i = 1; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j)
        if (x[i - 1] - y[m - j] <= 0) return false;
    return true;
  }
};

// r_{i,j} = x_i - y_{n+1-j} if i < j, else 0.
inline Rational transition_rate(int i, int j, int n, const RateParams& params) {
  if (i < 1 || j < 1 || i > n || j > n || i == j) throw std::invalid_argument("bad particle weights");
  if (i > j) return 0;
  return params.x[i - 1] - params.y[n - j];
}

inline Polynomial rate_polynomial(int i, int j, int n) {
  if (i > j) return Polynomial(n);
  return Polynomial::x(n, i) - Polynomial::y(n, n + 1 - j);
}

// Target value of psi at the identity: prod_{i<j} (x_i - y_{n+1-j})^{j-i-1}.
inline Polynomial normalization_polynomial(int n) {
  Polynomial p = Polynomial::one(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j) p *= rate_polynomial(i, j, n).pow(j - i - 1);
  return p;
}

inline Rational normalization_value(int n, const RateParams& params) {
  Rational v = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j) {
      const Rational r = transition_rate(i, j, n, params);
      for (int e = 0; e < j - i - 1; ++e) v *= r;
    }
  return v;
}

struct Transition {
  int to;      // state index
  int left;    // weight of the particle moving right
  int right;   // weight of the particle moving left
  Rational rate;
};

struct ChainInstance {
  int n = 0;
  std::vector<Permutation> states;             // lexicographic
  std::vector<std::vector<Transition>> out;     // outgoing transitions per state

  int index_of(const Permutation& w) const {
    auto it = std::lower_bound(states.begin(), states.end(), w);
    if (it == states.end() || *it != w) throw std::out_of_range("state not in chain: " + w.to_string());
    return static_cast<int>(it - states.begin());
  }

  std::size_t transition_count() const {
    std::size_t c = 0;
    for (const auto& o : out) c += o.size();
    return c;
  }

  Rational exit_rate(int s) const {
    Rational r = 0;
    for (const auto& t : out[s]) r += t.rate;
    return r;
  }
};

// Calls fn(position, next_position) for each ring-adjacent pair, including (n, 1).
template <typename Fn>
void for_each_ring_pair(int n, Fn&& fn) {
  for (int p = 1; p <= n; ++p) fn(p, p % n + 1);
}

// Swaps at ring-adjacent positions where the left weight is smaller.
inline std::vector<std::pair<Permutation, std::pair<int, int>>> ring_moves(const Permutation& w) {
  std::vector<std::pair<Permutation, std::pair<int, int>>> moves;
  const int n = w.size();
  if (n < 2) return moves;
  for_each_ring_pair(n, [&](int p, int q) {
    const int a = w(p), b = w(q);
    if (a >= b) return;
    std::vector<int> e(w.entries().begin(), w.entries().end());
    std::swap(e[p - 1], e[q - 1]);
    moves.emplace_back(Permutation(std::move(e)), std::make_pair(a, b));
  });
  return moves;
}

inline ChainInstance build_chain(int n, const RateParams& params) {
  params.validate(n);
  ChainInstance chain;
  chain.n = n;
  chain.states = all_permutations(n);
  chain.out.resize(chain.states.size());
  for (std::size_t s = 0; s < chain.states.size(); ++s) {
    for (auto& [target, weights] : ring_moves(chain.states[s])) {
      chain.out[s].push_back(Transition{chain.index_of(target), weights.first, weights.second,
                                        transition_rate(weights.first, weights.second, n, params)});
    }
  }
  return chain;
}

// Unique stationary vector (sum 1) from pi Q = 0; one balance equation is
// redundant and is replaced by pinning the first state.
inline std::vector<Rational> stationary(const ChainInstance& chain) {
  const int m = static_cast<int>(chain.states.size());
  if (m == 1) return {Rational(1)};
  // Unknowns pi_1..pi_{m-1} with pi_0 = 1; equations are columns 1..m-1 of Q.
  SparseRows rows(m - 1);
  std::vector<Rational> rhs(m - 1, Rational(0));
  for (int u = 0; u < m; ++u) {
    for (const auto& t : chain.out[u]) {
      if (t.to == u || t.rate == 0) continue;
      // Q[u][t.to] = rate, Q[u][u] -= rate
      if (t.to != 0) {
        if (u == 0) {
          rhs[t.to - 1] -= t.rate;
        } else {
          rows[t.to - 1][u - 1] += t.rate;
        }
      }
      if (u != 0) rows[u - 1][u - 1] -= t.rate;
    }
  }
  for (auto& r : rows)
    std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
  auto sol = solve_sparse(std::move(rows), std::move(rhs));
  if (!sol) throw std::domain_error("chain is reducible: stationary vector is not unique");
  std::vector<Rational> pi(m);
  pi[0] = 1;
  Rational total = 1;
  for (int i = 1; i < m; ++i) {
    pi[i] = (*sol)[i - 1];
    total += pi[i];
  }
  for (auto& v : pi) v /= total;
  return pi;
}

// Rescales so the identity entry equals normalization_value.
inline std::vector<Rational> renormalize(std::vector<Rational> pi, int n, const RateParams& params) {
  const Rational id = pi.at(0);
  if (id == 0) throw std::domain_error("identity state has zero stationary weight");
  const Rational scale = normalization_value(n, params) / id;
  for (auto& v : pi) v *= scale;
  return pi;
}

// Renormalized psi_w at a rational point, indexed like all_permutations(n).
inline std::vector<Rational> psi_at_point(int n, const RateParams& params) {
  return renormalize(stationary(build_chain(n, params)), n, params);
}

// Exact psi_w over Z[x, y] for n <= 4. psi is constant on rotation classes,
// so the balance equations are solved on one unknown per class (w_1 = 1)
// by fraction-free elimination, then rescaled to the identity normalization.
inline std::map<Permutation, Polynomial> symbolic_stationary(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (n > 4) throw std::invalid_argument("symbolic stationary solve is limited to n <= 4");
  std::map<Permutation, Polynomial> psi;
  const Polynomial norm = normalization_polynomial(n);
  if (n <= 2) {
    for (const auto& w : all_permutations(n)) psi.emplace(w, norm);
    return psi;
  }
  std::vector<Permutation> reps;
  for (const auto& w : all_permutations(n))
    if (w(1) == 1) reps.push_back(w);
  const int m = static_cast<int>(reps.size());
  auto rep_index = [&](const Permutation& w) {
    return static_cast<int>(std::lower_bound(reps.begin(), reps.end(), w.canonical_rotation()) - reps.begin());
  };
  // Balance at each representative v: sum_{u -> v} psi_[u] r(u->v) - psi_v r_out(v) = 0.
  std::vector<std::vector<Polynomial>> a(m, std::vector<Polynomial>(m, Polynomial(n)));
  for (const auto& u : all_permutations(n)) {
    for (const auto& [v, weights] : ring_moves(u)) {
      if (v(1) != 1) continue;
      a[rep_index(v)][rep_index(u)] += rate_polynomial(weights.first, weights.second, n);
    }
  }
  for (int v = 0; v < m; ++v)
    for (const auto& [target, weights] : ring_moves(reps[v])) a[v][v] -= rate_polynomial(weights.first, weights.second, n);

  // reps[0] is the identity; pin it to 1 and drop its (redundant) equation.
  std::vector<std::vector<Polynomial>> reduced(m - 1);
  std::vector<Polynomial> rhs(m - 1, Polynomial(n));
  for (int i = 1; i < m; ++i) {
    reduced[i - 1].assign(a[i].begin() + 1, a[i].end());
    rhs[i - 1] = -a[i][0];
  }
  auto sol = bareiss_solve(std::move(reduced), std::move(rhs));
  if (!sol) throw std::domain_error("symbolic balance system is singular");
  std::vector<Polynomial> rep_psi(m, norm);
  for (int i = 1; i < m; ++i) rep_psi[i] = exact_divide(norm * sol->numerators[i - 1], sol->determinant);
  for (const auto& w : all_permutations(n)) psi.emplace(w, rep_psi[rep_index(w)]);
  return psi;
}

// Positive-rate random point: x_i = p/q, y_j = -p'/q' with p, q, p', q' drawn
// uniformly from [1, 1e6] (p' from [0, 1e6]).
inline RateParams random_params(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> num(1, 1000000), num0(0, 1000000), den(1, 1000000);
  RateParams p;
  for (int i = 0; i < n; ++i) {
    Rational v(Integer(std::to_string(num(rng))), Integer(std::to_string(den(rng))));
    v.canonicalize();
    p.x.push_back(v);
  }
  for (int i = 0; i < n; ++i) {
    Rational v(-Integer(std::to_string(num0(rng))), Integer(std::to_string(den(rng))));
    v.canonicalize();
    p.y.push_back(v);
  }
  return p;
}

// Canonical comparison after embedding into a common ring.
inline bool identity_check(const Polynomial& lhs, const Polynomial& rhs) {
  const int m = std::max(lhs.nvars(), rhs.nvars());
  return lhs.embed(m) == rhs.embed(m);
}

using PointRoute = std::function<std::vector<Rational>(const RateParams&)>;

struct IdentityReport {
  bool equal = true;
  int trials_run = 0;
  std::optional<std::size_t> mismatch_index;  // component of the first disagreement
  std::optional<RateParams> witness;
};

// Randomized identity test: both routes are evaluated at `trials` random
// points and must agree componentwise. Stops at the first disagreement.
inline IdentityReport identity_check(const PointRoute& lhs, const PointRoute& rhs, int n, int trials,
                                     std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  std::mt19937_64 rng(seed);
  IdentityReport report;
  for (int t = 0; t < trials; ++t) {
    const RateParams point = random_params(n, rng);
    const auto a = lhs(point);
    const auto b = rhs(point);
    ++report.trials_run;
    if (a.size() != b.size()) throw std::invalid_argument("routes returned different lengths");
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) {
        report.equal = false;
        report.mismatch_index = i;
        report.witness = point;
        return report;
      }
    }
  }
  return report;
}

// Scalar convenience: compares two polynomials through evaluation only.
inline IdentityReport identity_check(const Polynomial& lhs, const Polynomial& rhs, int trials, std::uint64_t seed) {
  const int m = std::max(lhs.nvars(), rhs.nvars());
  const Polynomial l = lhs.embed(m), r = rhs.embed(m);
  auto at = [](const Polynomial& p) {
    return [&p](const RateParams& pt) { return std::vector<Rational>{evaluate(p, pt.x, pt.y)}; };
  };
  return identity_check(at(l), at(r), m, trials, seed);
}

}  // namespace tasep
