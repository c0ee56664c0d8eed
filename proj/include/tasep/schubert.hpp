#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tasep/permutation.hpp"
#include "tasep/polynomial.hpp"

namespace tasep {

// Weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;

  // Trailing zeros are dropped; anything else non-positive or increasing is rejected.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
        throw std::invalid_argument("not a partition: " + to_string());
      }
    }
  }
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](int i) const { return parts_[i]; }  // 0-based
  std::span<const int> parts() const { return parts_; }
  int size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
    return s + ")";
  }

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// Rows are weakly increasing, columns strictly increasing.
struct Tableau {
  std::vector<std::vector<int>> rows;

  // type(T): multiplicity of each value 1..nvars.
  std::vector<int> content(int nvars) const {
    std::vector<int> c(nvars, 0);
    for (const auto& row : rows)
      for (int v : row) ++c[v - 1];
    return c;
  }
};

// Delta(x, y) = prod_{i + j <= n} (x_i - y_j).
inline Polynomial delta(int n) {
  Polynomial p = Polynomial::one(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; i + j <= n; ++j) p *= Polynomial::x(n, i) - Polynomial::y(n, j);
  return p;
}

enum class WordChoice { kLastDescent, kFirstDescent };

// Reduced word (i_1, ..., i_m) with v = s_{i_1} ... s_{i_m}. The rightmost
// letter is peeled off repeatedly at a descent of v; kLastDescent moves the
// largest misplaced value first.
inline std::vector<int> reduced_word(const Permutation& v, WordChoice choice = WordChoice::kLastDescent) {
  std::vector<int> e(v.entries().begin(), v.entries().end());
  std::vector<int> word;
  const int n = static_cast<int>(e.size());
  while (true) {
    int pick = -1;
    for (int i = 0; i + 1 < n; ++i) {
      if (e[i] > e[i + 1]) {
        pick = i;
        if (choice == WordChoice::kFirstDescent) break;
      }
    }
    if (pick < 0) break;
    std::swap(e[pick], e[pick + 1]);
    word.push_back(pick + 1);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

// partial_{i_1} ... partial_{i_m} applied to p (rightmost operator first).
inline Polynomial apply_divided_differences(Polynomial p, const std::vector<int>& word) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) p = divided_difference(p, *it);
  return p;
}

inline Polynomial double_schubert_along(const Permutation& w, WordChoice choice) {
  const int n = w.size();
  return apply_divided_differences(delta(n), reduced_word(w.inverse() * Permutation::longest(n), choice));
}

namespace detail {

// Memoized Schubert polynomials keyed by (w, y-specialized).
class SchubertCache {
 public:
  template <typename Compute>
  Polynomial get(const Permutation& w, bool y_zero, Compute&& compute) {
    {
      std::lock_guard lock(mutex_);
      auto it = cache_.find({w, y_zero});
      if (it != cache_.end()) return it->second;
    }
    Polynomial p = compute();
    std::lock_guard lock(mutex_);
    return cache_.try_emplace({w, y_zero}, std::move(p)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<Permutation, bool>, Polynomial> cache_;
};

inline SchubertCache& schubert_cache() {
  static SchubertCache cache;
  return cache;
}

}  // namespace detail

// S_w(x, y) = partial_{w^{-1} w_0} Delta(x, y), in the ring with n = |w| variables.
inline Polynomial double_schubert(const Permutation& w) {
  return detail::schubert_cache().get(w, false, [&] { return double_schubert_along(w, WordChoice::kLastDescent); });
}

// S_w(x, 0). Starts from Delta(x, 0) = x^(n-1, ..., 1, 0); the divided
// differences never touch y so the specialization commutes with them.
inline Polynomial single_schubert(const Permutation& w) {
  return detail::schubert_cache().get(w, true, [&] {
    const int n = w.size();
    Monomial staircase(n);
    for (int i = 1; i <= n; ++i) staircase.set_x(i, n - i);
    return apply_divided_differences(Polynomial::term(staircase),
                                     reduced_word(w.inverse() * Permutation::longest(n)));
  });
}

inline bool is_vexillary(const Permutation& w) { return !contains_pattern(w, Permutation{2, 1, 4, 3}); }

// Sorted Lehmer code.
inline Partition shape(const Permutation& w) {
  const LehmerCode code = lehmer_code(w);
  std::vector<int> parts(code.values().begin(), code.values().end());
  std::sort(parts.rbegin(), parts.rend());
  return Partition(std::move(parts));
}

// e_i = max { j >= i : c_j >= c_i } for every i with c_i != 0, sorted.
inline std::vector<int> flag(const Permutation& w) {
  if (!is_vexillary(w)) throw std::invalid_argument("flag requires a vexillary permutation: " + w.to_string());
  const LehmerCode c = lehmer_code(w);
  const int n = c.size();
  std::vector<int> e;
  for (int i = 1; i <= n; ++i) {
    if (c(i) == 0) continue;
    int best = i;
    for (int j = i; j <= n; ++j)
      if (c(j) >= c(i)) best = j;
    e.push_back(best);
  }
  std::sort(e.begin(), e.end());
  return e;
}

namespace detail {

template <typename Fn>
void fill_tableau(const Partition& shape, std::span<const int> bounds, std::vector<std::vector<int>>& rows,
                  int row, int col, Fn& fn) {
  if (row == shape.length()) {
    fn(Tableau{rows});
    return;
  }
  if (col == shape[row]) {
    fill_tableau(shape, bounds, rows, row + 1, 0, fn);
    return;
  }
  int lo = 1;
  if (col > 0) lo = std::max(lo, rows[row][col - 1]);
  if (row > 0) lo = std::max(lo, rows[row - 1][col] + 1);
  for (int v = lo; v <= bounds[row]; ++v) {
    rows[row][col] = v;
    fill_tableau(shape, bounds, rows, row, col + 1, fn);
  }
}

}  // namespace detail

template <typename Fn>
void for_each_ssyt(const Partition& shape, std::span<const int> bounds, Fn&& fn) {
  if (static_cast<int>(bounds.size()) < shape.length()) {
    throw std::invalid_argument("flag bounds shorter than the partition");
  }
  std::vector<std::vector<int>> rows(shape.length());
  for (int r = 0; r < shape.length(); ++r) rows[r].assign(shape[r], 0);
  detail::fill_tableau(shape, bounds, rows, 0, 0, fn);
}

// All SSYT of the shape with row-i entries at most bounds[i].
inline std::vector<Tableau> ssyt_enumerate(const Partition& shape, std::span<const int> bounds) {
  std::vector<Tableau> out;
  for_each_ssyt(shape, bounds, [&](const Tableau& t) { out.push_back(t); });
  return out;
}

// sum_T x^type(T). nvars defaults to the largest bound.
inline Polynomial flagged_schur(const Partition& shape, std::span<const int> bounds, int nvars = 0) {
  if (nvars == 0)
    for (int i = 0; i < shape.length(); ++i) nvars = std::max(nvars, bounds[i]);
  nvars = std::max(nvars, 1);
  Polynomial p(nvars);
  for_each_ssyt(shape, bounds, [&](const Tableau& t) { p.add_term(Monomial::from_x(t.content(nvars), nvars), 1); });
  return p;
}

// Checks S_w(x, 0) = s_{shape(w)}(X_{f_1}, ..., X_{f_m}) with (f_i) = flag(w).
inline bool verify_flagged_factorization(const Permutation& w) {
  if (!is_vexillary(w)) throw std::invalid_argument("flagged factorization requires a vexillary permutation");
  const auto f = flag(w);
  return single_schubert(w) == flagged_schur(shape(w), f, w.size());
}

}  // namespace tasep
