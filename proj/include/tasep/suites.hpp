#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "tasep/chain.hpp"
#include "tasep/formulas.hpp"
#include "tasep/mlq.hpp"
#include "tasep/permutation.hpp"
#include "tasep/polynomial.hpp"
#include "tasep/schubert.hpp"

namespace tasep {

struct CaseResult {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string actual;
};

struct RunReport {
  std::string suite;
  int n = 0;
  std::uint64_t seed = 0;
  std::vector<CaseResult> cases;
  double seconds = 0;

  bool passed() const {
    for (const auto& c : cases)
      if (!c.pass) return false;
    return !cases.empty();
  }
  std::size_t pass_count() const {
    std::size_t k = 0;
    for (const auto& c : cases) k += c.pass ? 1 : 0;
    return k;
  }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"main", "eta", "mlq", "flags", "counts"};
  return names;
}

namespace detail {

inline CaseResult compare_case(std::string name, const Polynomial& expected, const Polynomial& actual) {
  const bool ok = identity_check(expected, actual);
  return {std::move(name), ok, ok ? "" : expected.to_string(), ok ? "" : actual.to_string()};
}

inline CaseResult compare_case(std::string name, const Rational& expected, const Rational& actual) {
  const bool ok = expected == actual;
  return {std::move(name), ok, ok ? "" : expected.get_str(), ok ? "" : actual.get_str()};
}

// psi_w at y = 0 from the symbolic solve (n <= 4) or the queue sweep.
inline std::map<Permutation, Polynomial> reference_psi_y0(int n) {
  std::map<Permutation, Polynomial> out;
  if (n <= 4) {
    for (auto& [w, p] : symbolic_stationary(n)) out.emplace(w, p.set_y_zero());
  } else {
    for (const auto& w : all_permutations(n)) out.emplace(w, psi_via_mlq(w));
  }
  return out;
}

inline void suite_main(RunReport& rep, int trials) {
  const int n = rep.n;
  const auto states = enumerate_states(n);
  if (n <= 4) {
    const auto psi = symbolic_stationary(n);
    for (const auto& w : states) rep.cases.push_back(compare_case("main/" + w.to_string(), main_formula(w), psi.at(w)));
    return;
  }
  // Randomized: every special state against the exact solver at seeded points.
  std::vector<Polynomial> formulas;
  for (const auto& w : states) formulas.push_back(main_formula(w));
  std::vector<bool> ok(states.size(), true);
  std::vector<std::string> witness(states.size());
  std::mt19937_64 rng(rep.seed);
  const auto all = all_permutations(n);
  for (int t = 0; t < trials; ++t) {
    const RateParams point = random_params(n, rng);
    const auto psi = psi_at_point(n, point);
    for (std::size_t s = 0; s < states.size(); ++s) {
      const auto idx = std::lower_bound(all.begin(), all.end(), states[s]) - all.begin();
      const Rational lhs = evaluate(formulas[s], point.x, point.y);
      if (ok[s] && lhs != psi[idx]) {
        ok[s] = false;
        witness[s] = "trial " + std::to_string(t) + ": formula " + lhs.get_str() + " vs solver " + psi[idx].get_str();
      }
    }
  }
  for (std::size_t s = 0; s < states.size(); ++s) {
    rep.cases.push_back({"main/" + states[s].to_string(), ok[s], ok[s] ? "" : "agreement at " + std::to_string(trials) + " points",
                         witness[s]});
  }
}

inline void suite_eta(RunReport& rep) {
  for (const auto& [w, p] : reference_psi_y0(rep.n)) {
    const Monomial content = monomial_content(p).first;
    const Monomial expect = eta(w);
    const bool ok = content == expect;
    rep.cases.push_back({"eta/" + w.to_string(), ok, ok ? "" : expect.to_string(), ok ? "" : content.to_string()});
  }
}

inline void suite_mlq(RunReport& rep, int trials) {
  const int n = rep.n;
  if (n <= 4) {
    const auto psi = symbolic_stationary(n);
    for (const auto& [w, p] : psi) rep.cases.push_back(compare_case("mlq/" + w.to_string(), p.set_y_zero(), psi_via_mlq(w)));
    return;
  }
  const auto all = all_permutations(n);
  std::vector<bool> ok(all.size(), true);
  std::vector<std::string> witness(all.size());
  std::mt19937_64 rng(rep.seed);
  for (int t = 0; t < trials; ++t) {
    RateParams point = random_params(n, rng);
    for (auto& v : point.y) v = 0;
    const auto psi = psi_at_point(n, point);
    for (std::size_t s = 0; s < all.size(); ++s) {
      const Rational q = evaluate(psi_via_mlq(all[s]), point.x, point.y);
      if (ok[s] && q != psi[s]) {
        ok[s] = false;
        witness[s] = "trial " + std::to_string(t) + ": queues " + q.get_str() + " vs solver " + psi[s].get_str();
      }
    }
  }
  for (std::size_t s = 0; s < all.size(); ++s)
    rep.cases.push_back({"mlq/" + all[s].to_string(), ok[s], ok[s] ? "" : "agreement", witness[s]});
}

// Partitions inside the staircase (n-1, n-2, ..., 1) with length <= n-2,
// including the empty one.
inline std::vector<Partition> staircase_partitions(int n) {
  std::vector<Partition> out;
  const int rows = std::max(n - 2, 0);
  std::vector<int> parts;
  std::function<void(int)> grow = [&](int maxpart) {
    out.emplace_back(parts);
    const int j = static_cast<int>(parts.size());  // next row, 0-based
    if (j == rows) return;
    for (int v = 1; v <= std::min(maxpart, n - 1 - j); ++v) {
      parts.push_back(v);
      grow(v);
      parts.pop_back();
    }
  };
  grow(n - 1);
  std::sort(out.begin(), out.end());
  return out;
}

// g_n(lambda) is a code of a vexillary permutation whose Schubert polynomial
// is the flagged Schur function with row bounds n - lambda_j.
inline CaseResult g_vector_case(int n, const Partition& lam) {
  const std::string name = "g/" + std::to_string(n) + "/" + lam.to_string();
  try {
    const Permutation w = code_to_perm(g_vector(n, lam));
    if (!is_vexillary(w)) return {name, false, "vexillary", w.to_string()};
    std::vector<int> bounds;
    for (int j = 0; j < lam.length(); ++j) bounds.push_back(n - lam[j]);
    return compare_case(name, flagged_schur(lam, bounds, n), single_schubert(w));
  } catch (const std::exception& e) {
    return {name, false, "valid code", e.what()};
  }
}

inline void suite_flags(RunReport& rep) {
  const int n = rep.n;
  for_each_permutation(n, [&](const Permutation& w) {
    if (!is_vexillary(w)) return;
    const bool ok = verify_flagged_factorization(w);
    rep.cases.push_back({"flag/" + w.to_string(), ok, ok ? "" : "S_w = flagged Schur", ok ? "" : "mismatch"});
  });
  for (const auto& lam : staircase_partitions(n)) rep.cases.push_back(g_vector_case(n, lam));
}

inline void suite_counts(RunReport& rep) {
  for (int m = 1; m <= rep.n; ++m) {
    const auto direct = count_evil_avoiding(m);
    const auto rec = evil_avoiding_recurrence(m);
    const auto closed = evil_avoiding_closed_form(m);
    const bool ok = direct == rec && rec == closed;
    rep.cases.push_back({"count/" + std::to_string(m), ok, std::to_string(rec),
                         std::to_string(direct) + " (closed form " + std::to_string(closed) + ")"});
  }
  for (int m = 2; m <= rep.n; ++m) {
    const auto states = static_cast<std::int64_t>(enumerate_states(m).size());
    const auto expect = count_evil_avoiding(m - 1);
    rep.cases.push_back({"states/" + std::to_string(m), states == expect, std::to_string(expect), std::to_string(states)});
  }
}

}  // namespace detail

// Runs one acceptance suite at size n. `trials` is the number of random
// points for the randomized checks (n >= 5).
inline RunReport run_suite(std::string_view suite, int n, std::uint64_t seed, int trials = 5) {
  if (n < 2) throw std::invalid_argument("suites need n >= 2");
  RunReport rep{std::string(suite), n, seed, {}, 0};
  const auto t0 = std::chrono::steady_clock::now();
  if (suite == "main") {
    if (n < 3) throw std::invalid_argument("main suite needs n >= 3");
    detail::suite_main(rep, trials);
  } else if (suite == "eta") {
    detail::suite_eta(rep);
  } else if (suite == "mlq") {
    detail::suite_mlq(rep, trials);
  } else if (suite == "flags") {
    detail::suite_flags(rep);
  } else if (suite == "counts") {
    detail::suite_counts(rep);
  } else {
    throw std::invalid_argument("unknown suite: " + std::string(suite));
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace tasep
