#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "tasep/chain.hpp"
#include "tasep/permutation.hpp"
#include "tasep/polynomial.hpp"
#include "tasep/schubert.hpp"

namespace tasep {

// Raised when a product formula is requested for a state outside St(n, k).
class FormulaNotApplicable : public std::invalid_argument {
 public:
  explicit FormulaNotApplicable(const Permutation& w)
      : std::invalid_argument("formula does not apply: " + w.to_string() + " is not an evil-avoiding state with w_1 = 1") {}
};

using PartitionSequence = std::vector<Partition>;

inline bool is_special_state(const Permutation& w) { return w.size() >= 1 && w(1) == 1 && is_evil_avoiding(w); }

// Psi(w) = (lambda^1, ..., lambda^k). With c = code(w^{-1}) and a_1 < ... < a_k
// the descents of c (c_i > c_{i+1}), lambda^i = (n - a_i)^{a_i} minus the
// vector (0^{a_{i-1}}, c_{a_{i-1}+1}, ..., c_{a_i}).
inline PartitionSequence psi_partitions(const Permutation& w) {
  if (!is_special_state(w)) throw FormulaNotApplicable(w);
  const int n = w.size();
  const LehmerCode c = lehmer_code(w.inverse());
  std::vector<int> descents{0};
  for (int i = 1; i < n; ++i)
    if (c(i) > c(i + 1)) descents.push_back(i);
  PartitionSequence out;
  for (std::size_t t = 1; t < descents.size(); ++t) {
    const int a = descents[t], prev = descents[t - 1];
    std::vector<int> parts(a, n - a);
    for (int j = prev + 1; j <= a; ++j) parts[j - 1] -= c(j);
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (parts[j] < 0 || (j > 0 && parts[j] > parts[j - 1])) {
        throw std::logic_error("Psi produced a non-partition for " + w.to_string());
      }
    }
    out.emplace_back(std::move(parts));
  }
  return out;
}

// g_n(lambda): for each distinct part mu (multiplicity k, largest first) set
// v_{n-mu} = mu, then give mu to the first k-1 unassigned slots to its left.
inline LehmerCode g_vector(int n, const Partition& lam) {
  if (lam.length() > n - 2) throw std::invalid_argument("partition " + lam.to_string() + " is too long for n = " + std::to_string(n));
  std::vector<int> v(n, 0);
  std::vector<bool> assigned(n + 1, false);
  int i = 0;
  while (i < lam.length()) {
    const int mu = lam[i];
    int k = 0;
    while (i < lam.length() && lam[i] == mu) ++i, ++k;
    int pos = n - mu;
    if (pos < 1 || assigned[pos]) throw std::invalid_argument("partition " + lam.to_string() + " does not fit g_" + std::to_string(n));
    v[pos - 1] = mu;
    assigned[pos] = true;
    for (int left = k - 1; left > 0; --left) {
      while (pos >= 1 && assigned[pos]) --pos;
      if (pos < 1) throw std::invalid_argument("partition " + lam.to_string() + " does not fit g_" + std::to_string(n));
      v[pos - 1] = mu;
      assigned[pos] = true;
    }
  }
  return LehmerCode(std::move(v));
}

// Reading w cyclically from a, b is met before c.
inline bool cyclic_order(int a, int b, int c, const Permutation& w) {
  if (a == b || b == c || a == c) throw std::invalid_argument("cyclic_order needs three distinct letters");
  const int n = w.size();
  const int pa = w.position(a);
  auto dist = [&](int letter) { return (w.position(letter) - pa + n) % n; };
  return dist(b) < dist(c);
}

// prod_{i=1}^{n-2} prod_{k > i+1, i -> i+1 -> k} (x_1 - y_{n+1-k}) ... (x_i - y_{n+1-k})
inline Polynomial xy_fact(const Permutation& w) {
  const int n = w.size();
  Polynomial p = Polynomial::one(n);
  for (int i = 1; i <= n - 2; ++i)
    for (int k = i + 2; k <= n; ++k) {
      if (!cyclic_order(i, i + 1, k, w)) continue;
      for (int m = 1; m <= i; ++m) p *= Polynomial::x(n, m) - Polynomial::y(n, n + 1 - k);
    }
  return p;
}

// Permutations whose Schubert polynomials appear as factors for w.
inline std::vector<Permutation> factor_labels(const Permutation& w) {
  std::vector<Permutation> labels;
  for (const auto& lam : psi_partitions(w)) labels.push_back(code_to_perm(g_vector(w.size(), lam)));
  return labels;
}

// psi_w = xyFact(w) * prod_i S_{g_n(lambda^i)}(x, y).
inline Polynomial main_formula(const Permutation& w) {
  Polynomial p = xy_fact(w);
  for (const auto& label : factor_labels(w)) p *= double_schubert(label);
  return p;
}

struct Y0Formula {
  PartitionSequence partitions;
  Monomial prefactor;  // x^mu
  std::vector<Permutation> labels;
  std::vector<Polynomial> factors;  // S_label(x, 0)

  Polynomial expand() const {
    Polynomial p = Polynomial::term(prefactor);
    for (const auto& f : factors) p *= f;
    return p;
  }
};

// psi_w at y = 0 as x^mu * prod_i S_{g_n(lambda^i)}(x), with
// mu = (C(n-1,2), C(n-2,2), ..., C(2,2)) - sum_i lambda^i.
inline Y0Formula main_formula_y0(const Permutation& w) {
  const int n = w.size();
  Y0Formula f;
  f.partitions = psi_partitions(w);
  std::vector<int> mu(std::max(n - 2, 0));
  for (int i = 0; i < n - 2; ++i) {
    const int m = n - 1 - i;
    mu[i] = m * (m - 1) / 2;
  }
  for (const auto& lam : f.partitions)
    for (int i = 0; i < lam.length(); ++i) mu[i] -= lam[i];
  for (int i = 0; i < static_cast<int>(mu.size()); ++i) {
    if (mu[i] < 0) throw std::logic_error("negative monomial exponent for " + w.to_string());
  }
  f.prefactor = Monomial::from_x(mu, n);
  for (const auto& lam : f.partitions) {
    f.labels.push_back(code_to_perm(g_vector(n, lam)));
    f.factors.push_back(single_schubert(f.labels.back()));
  }
  return f;
}

// a_i(w): letters greater than i+1 strictly between i+1 and i, reading
// rightward around the ring from i+1.
inline std::vector<int> eta_counts(const Permutation& w) {
  const int n = w.size();
  std::vector<int> a;
  for (int i = 1; i <= n - 2; ++i) {
    int count = 0;
    for (int p = w.position(i + 1) % n + 1; w(p) != i; p = p % n + 1)
      if (w(p) > i + 1) ++count;
    a.push_back(count);
  }
  return a;
}

// eta(w) = prod_{i=1}^{n-2} x_i^{a_i + ... + a_{n-2}}.
inline Monomial eta(const Permutation& w) {
  const int n = w.size();
  const auto a = eta_counts(w);
  std::vector<int> e(a.size(), 0);
  int suffix = 0;
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    suffix += a[i];
    e[i] = suffix;
  }
  return Monomial::from_x(e, n);
}

}  // namespace tasep
