#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tasep {

// A permutation of {1..n} in one-line notation. Positions and values are
// 1-indexed everywhere in the public interface.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
    std::vector<bool> seen(entries_.size() + 1, false);
    for (int v : entries_) {
      if (v < 1 || v > static_cast<int>(entries_.size()) || seen[v]) {
        throw std::invalid_argument("not a permutation: " + to_string());
      }
      seen[v] = true;
    }
  }

  Permutation(std::initializer_list<int> entries)
      : Permutation(std::vector<int>(entries)) {}

  static Permutation identity(int n) {
    std::vector<int> e(n);
    for (int i = 0; i < n; ++i) e[i] = i + 1;
    return Permutation(std::move(e));
  }

  static Permutation longest(int n) {
    std::vector<int> e(n);
    for (int i = 0; i < n; ++i) e[i] = n - i;
    return Permutation(std::move(e));
  }

  // Accepts "1,4,5,2,3" and, when every entry is a single digit, "14523".
  static Permutation parse(std::string_view text) {
    std::vector<int> e;
    if (text.find(',') == std::string_view::npos) {
      for (char ch : text) {
        if (ch == ' ') continue;
        if (ch < '1' || ch > '9') {
          throw std::invalid_argument("bad permutation text: " + std::string(text));
        }
        e.push_back(ch - '0');
      }
    } else {
      std::string buf(text);
      std::istringstream in(buf);
      std::string tok;
      while (std::getline(in, tok, ',')) {
        try {
          std::size_t used = 0;
          e.push_back(std::stoi(tok, &used));
          if (tok.find_first_not_of(' ', used) != std::string::npos) throw std::invalid_argument(tok);
        } catch (const std::logic_error&) {
          throw std::invalid_argument("bad permutation text: " + std::string(text));
        }
      }
    }
    if (e.empty()) throw std::invalid_argument("empty permutation");
    return Permutation(std::move(e));
  }

  int size() const { return static_cast<int>(entries_.size()); }
  int operator()(int i) const { return entries_[i - 1]; }
  std::span<const int> entries() const { return entries_; }

  // Position of value v.
  int position(int v) const {
    auto it = std::find(entries_.begin(), entries_.end(), v);
    return static_cast<int>(it - entries_.begin()) + 1;
  }

  Permutation inverse() const {
    std::vector<int> inv(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) inv[entries_[i] - 1] = static_cast<int>(i) + 1;
    return Permutation(std::move(inv));
  }

  // (u * v)(i) = u(v(i)).
  friend Permutation operator*(const Permutation& u, const Permutation& v) {
    if (u.size() != v.size()) throw std::invalid_argument("permutation size mismatch");
    std::vector<int> e(v.entries_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = u.entries_[v.entries_[i] - 1];
    return Permutation(std::move(e));
  }

  // (w_2, ..., w_n, w_1)
  Permutation rotate_left(int steps = 1) const {
    std::vector<int> e(entries_);
    if (!e.empty()) {
      std::rotate(e.begin(), e.begin() + (steps % size() + size()) % size(), e.end());
    }
    return Permutation(std::move(e));
  }

  // Representative of the cyclic class with w_1 = 1.
  Permutation canonical_rotation() const { return rotate_left(position(1) - 1); }

  // Embeds into S_m by fixing m..n+1.
  Permutation embed(int m) const {
    std::vector<int> e(entries_);
    for (int v = size() + 1; v <= m; ++v) e.push_back(v);
    return Permutation(std::move(e));
  }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (entries_[i] != i + 1) return false;
    return true;
  }

  std::string to_string(char sep = ',') const {
    std::string s;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i && sep) s += sep;
      s += std::to_string(entries_[i]);
    }
    return s;
  }

  // Concatenated digits ("15432"); only meaningful for n <= 9.
  std::string compact() const { return to_string('\0'); }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> entries_;
};

// Lehmer code: c_i = #{ j > i : w(j) < w(i) }.
class LehmerCode {
 public:
  LehmerCode() = default;
  explicit LehmerCode(std::vector<int> values) : values_(std::move(values)) {
    const int n = size();
    for (int i = 0; i < n; ++i) {
      if (values_[i] < 0 || values_[i] > n - 1 - i) {
        throw std::invalid_argument("invalid Lehmer code entry at position " + std::to_string(i + 1));
      }
    }
  }
  LehmerCode(std::initializer_list<int> v) : LehmerCode(std::vector<int>(v)) {}

  int size() const { return static_cast<int>(values_.size()); }
  int operator()(int i) const { return values_[i - 1]; }
  std::span<const int> values() const { return values_; }
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < values_.size(); ++i) s += (i ? "," : "") + std::to_string(values_[i]);
    return s;
  }

  friend bool operator==(const LehmerCode&, const LehmerCode&) = default;

 private:
  std::vector<int> values_;
};

inline LehmerCode lehmer_code(const Permutation& w) {
  const int n = w.size();
  std::vector<int> c(n, 0);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (w(j) < w(i)) ++c[i - 1];
  return LehmerCode(std::move(c));
}

// w_i is the (c_i + 1)-th smallest value not yet used.
inline Permutation code_to_perm(const LehmerCode& c) {
  const int n = c.size();
  std::vector<int> unused(n);
  for (int i = 0; i < n; ++i) unused[i] = i + 1;
  std::vector<int> w;
  w.reserve(n);
  for (int i = 1; i <= n; ++i) {
    w.push_back(unused[c(i)]);
    unused.erase(unused.begin() + c(i));
  }
  return Permutation(std::move(w));
}

inline int inversions(const Permutation& w) {
  const LehmerCode c = lehmer_code(w);
  int total = 0;
  for (int v : c.values()) total += v;
  return total;
}

namespace detail {

// Extends a partial embedding of pattern[0..depth) into w at increasing
// positions; rejects early when the relative order already disagrees.
inline bool embed_pattern(std::span<const int> w, std::span<const int> pattern, std::vector<int>& chosen,
                          std::size_t start) {
  const std::size_t depth = chosen.size();
  if (depth == pattern.size()) return true;
  if (w.size() - start < pattern.size() - depth) return false;
  for (std::size_t pos = start; pos < w.size(); ++pos) {
    bool ok = true;
    for (std::size_t k = 0; k < depth && ok; ++k) {
      ok = (pattern[k] < pattern[depth]) == (w[chosen[k]] < w[pos]);
    }
    if (!ok) continue;
    chosen.push_back(static_cast<int>(pos));
    if (embed_pattern(w, pattern, chosen, pos + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace detail

inline bool contains_pattern(const Permutation& w, const Permutation& p) {
  if (p.size() > w.size()) return false;
  std::vector<int> chosen;
  chosen.reserve(p.size());
  return detail::embed_pattern(w.entries(), p.entries(), chosen, 0);
}

inline const std::vector<Permutation>& evil_patterns() {
  static const std::vector<Permutation> patterns = {
      Permutation{2, 4, 1, 3}, Permutation{3, 2, 1, 4}, Permutation{4, 1, 3, 2}, Permutation{4, 2, 1, 3}};
  return patterns;
}

inline bool is_evil_avoiding(const Permutation& w) {
  for (const auto& p : evil_patterns())
    if (contains_pattern(w, p)) return false;
  return true;
}

// Number of letters a such that a+1 sits to the left of a.
inline int inv_descent_count(const Permutation& w) {
  const int n = w.size();
  std::vector<int> pos(n + 1);
  for (int i = 1; i <= n; ++i) pos[w(i)] = i;
  int k = 0;
  for (int a = 1; a < n; ++a)
    if (pos[a + 1] < pos[a]) ++k;
  return k;
}

// Calls fn on every permutation of S_n in lexicographic order.
template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
  std::vector<int> e(n);
  for (int i = 0; i < n; ++i) e[i] = i + 1;
  do {
    fn(Permutation(e));
  } while (std::next_permutation(e.begin(), e.end()));
}

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& w) { out.push_back(w); });
  return out;
}

// St(n, k): w_1 = 1, evil-avoiding and, if given, exactly k inverse descents.
inline std::vector<Permutation> enumerate_states(int n, std::optional<int> k = std::nullopt) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<Permutation> out;
  std::vector<int> tail(n - 1);
  for (int i = 0; i < n - 1; ++i) tail[i] = i + 2;
  do {
    std::vector<int> e{1};
    e.insert(e.end(), tail.begin(), tail.end());
    Permutation w(std::move(e));
    if (k && inv_descent_count(w) != *k) continue;
    if (is_evil_avoiding(w)) out.push_back(std::move(w));
  } while (std::next_permutation(tail.begin(), tail.end()));
  return out;
}

inline std::int64_t count_evil_avoiding(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::int64_t count = 0;
  for_each_permutation(n, [&](const Permutation& w) { count += is_evil_avoiding(w) ? 1 : 0; });
  return count;
}

// e(1) = 1, e(2) = 2, e(n) = 4 e(n-1) - 2 e(n-2).
inline std::int64_t evil_avoiding_recurrence(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::int64_t prev = 1, cur = 2;
  if (n == 1) return prev;
  for (int m = 3; m <= n; ++m) {
    std::int64_t next = 4 * cur - 2 * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

inline std::int64_t evil_avoiding_closed_form(int n) {
  const double r = std::sqrt(2.0);
  return std::llround((std::pow(2.0 + r, n - 1) + std::pow(2.0 - r, n - 1)) / 2.0);
}

}  // namespace tasep
