#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tasep/permutation.hpp"
#include "tasep/polynomial.hpp"
#include "tasep/schubert.hpp"

namespace tasep {

// L x n ball/vacancy grid. Storage is a plain left-to-right grid: index 0 is
// the leftmost site. Queue columns are numbered right to left, so column c
// lives at index n - c; only column_index() and the text form know this.
class MultilineQueue {
 public:
  MultilineQueue(int rows, int cols) : rows_(rows), cols_(cols), cells_(static_cast<std::size_t>(rows) * cols, false) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("multiline queue needs at least one row and column");
  }

  // L lines over {'.', 'o'}; the leftmost character is column n.
  static MultilineQueue parse(std::string_view text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
      if (ch == '\n' || ch == '/') {
        if (!cur.empty()) lines.push_back(cur);
        cur.clear();
      } else if (ch == '.' || ch == 'o') {
        cur += ch;
      } else if (ch != ' ' && ch != '\r') {
        throw std::invalid_argument(std::string("bad multiline queue character '") + ch + "'");
      }
    }
    if (!cur.empty()) lines.push_back(cur);
    if (lines.empty()) throw std::invalid_argument("empty multiline queue");
    MultilineQueue q(static_cast<int>(lines.size()), static_cast<int>(lines.front().size()));
    for (int r = 0; r < q.rows_; ++r) {
      if (static_cast<int>(lines[r].size()) != q.cols_) throw std::invalid_argument("ragged multiline queue");
      for (int i = 0; i < q.cols_; ++i) q.cells_[r * q.cols_ + i] = lines[r][i] == 'o';
    }
    return q;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  // Row r in 1..L, storage index i in 0..n-1.
  bool ball(int r, int i) const { return cells_[(r - 1) * cols_ + i]; }
  void set_ball(int r, int i, bool b) { cells_[(r - 1) * cols_ + i] = b; }

  int column_index(int column) const { return cols_ - column; }
  bool ball_at_column(int r, int column) const { return ball(r, column_index(column)); }

  int balls_in_row(int r) const {
    int c = 0;
    for (int i = 0; i < cols_; ++i) c += ball(r, i) ? 1 : 0;
    return c;
  }

  // Row r holds exactly r balls and L = n - 1.
  bool has_permutation_content() const {
    if (rows_ != cols_ - 1) return false;
    for (int r = 1; r <= rows_; ++r)
      if (balls_in_row(r) != r) return false;
    return true;
  }

  std::string to_string() const {
    std::string s;
    for (int r = 1; r <= rows_; ++r) {
      for (int i = 0; i < cols_; ++i) s += ball(r, i) ? 'o' : '.';
      s += '\n';
    }
    return s;
  }

  friend bool operator==(const MultilineQueue&, const MultilineQueue&) = default;

 private:
  int rows_;
  int cols_;
  std::vector<bool> cells_;
};

struct BullyPath {
  int row;    // start row; the path ends in row + 1
  int from;   // storage index in the start row
  int to;     // storage index in the next row
  int label;  // class carried along the path
};

struct ProjectedQueue {
  MultilineQueue queue;
  std::vector<std::vector<int>> classes;  // [row-1][index], 0 for vacancies
  std::vector<std::vector<int>> covered;  // [row-1][index], smallest covering class, 0 if none
  std::vector<BullyPath> paths;
};

// Tie-break among equal-class balls of a row. Receives storage indices in
// ascending index order and may permute them.
using TieOrder = std::function<void(std::vector<int>&)>;

// Bully path projection. Balls of a row are processed in increasing class
// order; each looks straight down, then moves right (increasing storage
// index, wrapping) to the first unmatched ball. Every vacancy the path
// passes over in the lower row is recorded with the smallest class covering it.
inline ProjectedQueue bully_project(const MultilineQueue& q, const TieOrder& tie_order = {}) {
  const int rows = q.rows(), n = q.cols();
  ProjectedQueue pq{q, std::vector<std::vector<int>>(rows, std::vector<int>(n, 0)),
                    std::vector<std::vector<int>>(rows, std::vector<int>(n, 0)), {}};
  for (int i = 0; i < n; ++i)
    if (q.ball(1, i)) pq.classes[0][i] = 1;
  for (int r = 1; r < rows; ++r) {
    if (q.balls_in_row(r + 1) < q.balls_in_row(r)) {
      throw std::invalid_argument("row " + std::to_string(r + 1) + " has fewer balls than the row above");
    }
    std::map<int, std::vector<int>> by_class;
    for (int i = 0; i < n; ++i)
      if (q.ball(r, i)) by_class[pq.classes[r - 1][i]].push_back(i);
    std::vector<bool> taken(n, false);
    for (auto& [label, balls] : by_class) {
      // Storage indices increase leftward in column terms; start from the
      // rightmost (lowest column) ball unless told otherwise.
      std::reverse(balls.begin(), balls.end());
      if (tie_order) tie_order(balls);
      for (int start : balls) {
        int pos = start;
        while (!(q.ball(r + 1, pos) && !taken[pos])) {
          if (!q.ball(r + 1, pos)) {
            int& cov = pq.covered[r][pos];
            if (cov == 0 || label < cov) cov = label;
          }
          pos = (pos + 1) % n;
        }
        taken[pos] = true;
        pq.classes[r][pos] = label;
        pq.paths.push_back(BullyPath{r, start, pos, label});
      }
    }
    for (int i = 0; i < n; ++i)
      if (q.ball(r + 1, i) && !taken[i]) pq.classes[r][i] = r + 1;
  }
  return pq;
}

// Labels of row r read from column 1 to column n, vacancies labelled r + 1.
inline std::vector<int> row_type(const ProjectedQueue& pq, int r) {
  const int n = pq.queue.cols();
  std::vector<int> t(n);
  for (int c = 1; c <= n; ++c) {
    const int label = pq.classes[r - 1][pq.queue.column_index(c)];
    t[c - 1] = label == 0 ? r + 1 : label;
  }
  return t;
}

inline Permutation queue_type(const ProjectedQueue& pq) { return Permutation(row_type(pq, pq.queue.rows())); }

// wt(Q) = prod_{i<L} x_i^{V_i} * prod_{i<r} (x_r / x_i)^{z_{r,i}}, where V_i
// counts vacancies strictly below row i and z_{r,i} the i-covered vacancies
// of row r.
inline Monomial queue_weight(const ProjectedQueue& pq) {
  const int rows = pq.queue.rows(), n = pq.queue.cols();
  const int nvars = std::max(n, rows);
  std::vector<int> e(nvars, 0);
  std::vector<int> vacancies(rows + 1, 0);
  for (int r = 1; r <= rows; ++r) vacancies[r] = n - pq.queue.balls_in_row(r);
  for (int i = 1; i < rows; ++i)
    for (int j = i + 1; j <= rows; ++j) e[i - 1] += vacancies[j];
  for (int r = 1; r <= rows; ++r)
    for (int idx = 0; idx < n; ++idx) {
      const int i = pq.covered[r - 1][idx];
      if (i == 0) continue;
      ++e[r - 1];
      --e[i - 1];
    }
  for (int v : e)
    if (v < 0) throw std::logic_error("negative exponent in queue weight");
  return Monomial::from_x(e, nvars);
}

// Every (n-1) x n queue with i balls in row i.
template <typename Fn>
void for_each_permutation_queue(int n, Fn&& fn) {
  if (n < 2 || n > 16) throw std::invalid_argument("queue size out of range");
  const int rows = n - 1;
  std::vector<std::vector<std::uint32_t>> masks(rows + 1);
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    const int c = std::popcount(m);
    if (c >= 1 && c <= rows) masks[c].push_back(m);
  }
  MultilineQueue q(rows, n);
  std::function<void(int)> fill = [&](int r) {
    if (r > rows) {
      fn(static_cast<const MultilineQueue&>(q));
      return;
    }
    for (std::uint32_t m : masks[r]) {
      for (int i = 0; i < n; ++i) q.set_ball(r, i, (m >> i) & 1u);
      fill(r + 1);
    }
  };
  fill(1);
}

struct MlqSweep {
  std::map<Permutation, Polynomial> psi;     // sum of weights per type
  std::map<Permutation, std::size_t> count;  // number of queues per type
  std::size_t total = 0;
};

inline MlqSweep mlq_sweep(int n) {
  MlqSweep s;
  for_each_permutation_queue(n, [&](const MultilineQueue& q) {
    const ProjectedQueue pq = bully_project(q);
    const Permutation w = queue_type(pq);
    auto [it, inserted] = s.psi.try_emplace(w, Polynomial(n));
    it->second.add_term(queue_weight(pq), 1);
    ++s.count[w];
    ++s.total;
  });
  return s;
}

// Shared, lazily built sweep per n.
inline const MlqSweep& cached_mlq_sweep(int n) {
  static std::mutex mutex;
  static std::map<int, MlqSweep> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, mlq_sweep(n)).first;
  return it->second;
}

// psi_w at y = 0 as the weight generating function of MLQ(w).
inline Polynomial psi_via_mlq(const Permutation& w) {
  const int n = w.size();
  if (n == 1) return Polynomial::one(1);
  const auto& sweep = cached_mlq_sweep(n);
  auto it = sweep.psi.find(w);
  return it == sweep.psi.end() ? Polynomial(n) : it->second;
}

inline std::vector<MultilineQueue> queues_of_type(const Permutation& w) {
  std::vector<MultilineQueue> out;
  for_each_permutation_queue(w.size(), [&](const MultilineQueue& q) {
    if (queue_type(bully_project(q)) == w) out.push_back(q);
  });
  return out;
}

struct LatticeWord {
  Permutation w;
  std::vector<int> d;  // labels of the first horizontal step after each vertical block
};

// Walks the southeast border of lambda (padded with zeros to n - lambda_1
// rows) from top right to bottom left; vertical steps are labelled 1..R top
// to bottom, horizontal steps R+1, R+2, ... in the order they are met.
inline LatticeWord w_of_partition(const Partition& lam, int n) {
  const int width = lam.empty() ? 0 : lam[0];
  const int rows = n - width;
  if (rows < lam.length() || rows < 0) {
    throw std::invalid_argument("partition " + lam.to_string() + " does not fit a lattice path of length " + std::to_string(n));
  }
  std::vector<int> p(rows + 1, 0);
  for (int i = 0; i < lam.length(); ++i) p[i] = lam[i];
  LatticeWord out;
  std::vector<int> word;
  int vertical = 0, horizontal = rows;
  for (int t = 0; t < rows; ++t) {
    word.push_back(++vertical);
    const int steps = p[t] - p[t + 1];
    for (int h = 0; h < steps; ++h) {
      word.push_back(++horizontal);
      if (h == 0) out.d.push_back(horizontal);
    }
  }
  out.w = Permutation(std::move(word));
  return out;
}

// d' = (d_1 - b_1, ..., d_1 - 1, ..., d_k - b_k, ..., d_k - 1) where b_j is the
// multiplicity of the j-th distinct part.
inline std::vector<int> d_prime(const Partition& lam, const std::vector<int>& d) {
  std::vector<int> out;
  std::size_t block = 0;
  int i = 0;
  while (i < lam.length()) {
    int b = 0;
    const int mu = lam[i];
    while (i < lam.length() && lam[i] == mu) ++i, ++b;
    if (block >= d.size()) throw std::invalid_argument("d is shorter than the number of distinct parts");
    for (int s = b; s >= 1; --s) out.push_back(d[block] - s);
    ++block;
  }
  if (block != d.size()) throw std::invalid_argument("d is longer than the number of distinct parts");
  return out;
}

// Partitions whose lattice word is a one-descent state of size n, plus the
// empty partition (identity).
inline std::vector<Partition> grassmannian_partitions(int n) {
  std::vector<Partition> out{Partition{}};
  std::function<void(std::vector<int>&, int)> grow = [&](std::vector<int>& parts, int maxpart) {
    if (!parts.empty()) {
      Partition lam(parts);
      if (lam[0] + lam.length() <= n && inv_descent_count(w_of_partition(lam, n).w) == 1) out.push_back(lam);
    }
    for (int v = 1; v <= maxpart; ++v) {
      parts.push_back(v);
      if (parts.front() + static_cast<int>(parts.size()) <= n) grow(parts, v);
      parts.pop_back();
    }
  };
  std::vector<int> parts;
  grow(parts, n);
  std::sort(out.begin(), out.end());
  return out;
}

struct BijectionReport {
  bool ok = false;
  Permutation w;
  std::vector<int> d;
  std::vector<int> flags;  // d'
  Monomial k;              // wt(Q) / x^type(f(Q))
  std::size_t mlq_count = 0;
  std::size_t ssyt_count = 0;
  Polynomial mlq_weights;  // multiset of queue weights as a polynomial
  Polynomial schur;        // s_lambda(X_{d'_1}, ...)
};

// The multiset of queue weights over MLQ(w(lambda)) equals K times the
// multiset of x^type(T) over SSYT(lambda, d') for a single monomial K.
inline BijectionReport verify_grassmannian_bijection(const Partition& lam, int n) {
  BijectionReport rep;
  const LatticeWord lw = w_of_partition(lam, n);
  rep.w = lw.w;
  rep.d = lw.d;
  rep.flags = d_prime(lam, lw.d);
  const auto& sweep = cached_mlq_sweep(n);
  auto it = sweep.psi.find(rep.w);
  rep.mlq_weights = it == sweep.psi.end() ? Polynomial(n) : it->second;
  rep.mlq_count = it == sweep.psi.end() ? 0 : sweep.count.at(rep.w);
  rep.schur = Polynomial(n);
  for_each_ssyt(lam, rep.flags, [&](const Tableau& t) {
    rep.schur.add_term(Monomial::from_x(t.content(n), n), 1);
    ++rep.ssyt_count;
  });
  if (rep.mlq_count != rep.ssyt_count || rep.mlq_weights.is_zero()) return rep;
  const Monomial& top = rep.mlq_weights.leading_monomial();
  const Monomial& base = rep.schur.leading_monomial();
  if (!base.divides(top)) return rep;
  rep.k = top / base;
  rep.ok = rep.schur * rep.k == rep.mlq_weights;
  return rep;
}

}  // namespace tasep
