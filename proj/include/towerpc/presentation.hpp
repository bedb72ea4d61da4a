#pragma once

#include <string>
#include <vector>

#include "towerpc/errors.hpp"
#include "towerpc/int_types.hpp"

namespace towerpc {

// Presentation data for the fundamental group of an iterated S^1-bundle of
// height n: generators s_1..s_n, and for every pair i < j one conjugation
// relation
//
//   s_i s_j s_i^-1 = s_n^{a^n_{i,j}} ... s_{j+1}^{a^{j+1}_{i,j}} s_j^{eps(i,j)}
//
// with eps(i,j) in {+1,-1}. The tail product on the right is descending in
// the generator index; tails are stored ascending by k (k = j+1..n), so
// tail(i,j)[0] is a^{j+1}_{i,j}. A missing tail entry means zero; an eps
// value of 0 means "unset" and is rejected by validate().
struct TowerPresentation {
  int n = 0;
  std::vector<int> eps_;                 // indexed by pair_index(i,j)
  std::vector<std::vector<Int>> tails_;  // indexed by pair_index(i,j)

  TowerPresentation() = default;

  explicit TowerPresentation(int height) : n(height) {
    if (n < 1) throw StructuralError("height must be at least 1, got " + std::to_string(height));
    eps_.assign(pair_count(), 0);
    tails_.resize(pair_count());
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j) tails_[pair_index(i, j)].assign(n - j, Int(0));
  }

  // Z^n: every bundle trivial.
  static TowerPresentation trivial(int height) {
    TowerPresentation p(height);
    for (auto& e : p.eps_) e = 1;
    return p;
  }

  std::size_t pair_count() const {
    return static_cast<std::size_t>(n) * (n - 1) / 2;
  }

  std::size_t pair_index(int i, int j) const {
    check_pair(i, j);
    return static_cast<std::size_t>(i - 1) * (2 * n - i) / 2 + (j - i - 1);
  }

  int eps(int i, int j) const { return eps_[pair_index(i, j)]; }

  void set_eps(int i, int j, int sign) {
    if (sign != 1 && sign != -1)
      throw StructuralError("eps(" + std::to_string(i) + "," + std::to_string(j) +
                            ") must be 1 or -1");
    eps_[pair_index(i, j)] = sign;
  }

  const std::vector<Int>& tail(int i, int j) const { return tails_[pair_index(i, j)]; }

  // a^k_{i,j} for j < k <= n.
  const Int& tail_entry(int i, int j, int k) const {
    check_tail_index(i, j, k);
    return tails_[pair_index(i, j)][k - j - 1];
  }

  void set_tail_entry(int i, int j, int k, Int v) {
    check_tail_index(i, j, k);
    tails_[pair_index(i, j)][k - j - 1] = std::move(v);
  }

  bool operator==(const TowerPresentation&) const = default;

 private:
  void check_pair(int i, int j) const {
    if (i < 1 || j <= i || j > n)
      throw IndexError("generator pair (" + std::to_string(i) + "," + std::to_string(j) +
                       ") out of range for height " + std::to_string(n));
  }

  void check_tail_index(int i, int j, int k) const {
    check_pair(i, j);
    if (k <= j || k > n)
      throw IndexError("tail index k=" + std::to_string(k) + " out of range for pair (" +
                       std::to_string(i) + "," + std::to_string(j) + ")");
    if (static_cast<int>(tails_[pair_index(i, j)].size()) != n - j)
      throw StructuralError("tail(" + std::to_string(i) + "," + std::to_string(j) +
                            ") has wrong length");
  }
};

// Confirms the type invariants: height positive, every eps set to +-1, every
// tail of length exactly n-j. Throws StructuralError naming the first
// violated field.
inline void validate(const TowerPresentation& p) {
  if (p.n < 1) throw StructuralError("height must be at least 1");
  if (p.eps_.size() != p.pair_count() || p.tails_.size() != p.pair_count())
    throw StructuralError("pair storage has wrong size for height " + std::to_string(p.n));
  for (int i = 1; i < p.n; ++i) {
    for (int j = i + 1; j <= p.n; ++j) {
      const auto idx = static_cast<std::size_t>(i - 1) * (2 * p.n - i) / 2 + (j - i - 1);
      const int e = p.eps_[idx];
      if (e == 0)
        throw StructuralError("eps(" + std::to_string(i) + "," + std::to_string(j) +
                              ") missing");
      if (e != 1 && e != -1)
        throw StructuralError("eps(" + std::to_string(i) + "," + std::to_string(j) +
                              ") must be 1 or -1");
      if (static_cast<int>(p.tails_[idx].size()) != p.n - j)
        throw StructuralError("tail(" + std::to_string(i) + "," + std::to_string(j) +
                              ") must have length " + std::to_string(p.n - j) + ", got " +
                              std::to_string(p.tails_[idx].size()));
    }
  }
}

// Quotient by the normal subgroup <s_{m+1},...,s_n>: delete the top
// generators and truncate every tail.
inline TowerPresentation quotient_below(const TowerPresentation& p, int m) {
  if (m < 1 || m > p.n)
    throw IndexError("quotient height " + std::to_string(m) + " out of range 1.." +
                     std::to_string(p.n));
  TowerPresentation q(m);
  for (int i = 1; i < m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      q.set_eps(i, j, p.eps(i, j));
      for (int k = j + 1; k <= m; ++k) q.set_tail_entry(i, j, k, p.tail_entry(i, j, k));
    }
  }
  return q;
}

// The height-3 group Pi(a, e, e1, e2):
//   s1 s2 s1^-1 = s3^a s2^e,  s1 s3 s1^-1 = s3^e1,  s2 s3 s2^-1 = s3^e2.
inline TowerPresentation make_pi3(const Int& a, int e, int e1, int e2) {
  TowerPresentation p(3);
  p.set_eps(1, 2, e);
  p.set_eps(1, 3, e1);
  p.set_eps(2, 3, e2);
  p.set_tail_entry(1, 2, 3, a);
  return p;
}

}  // namespace towerpc
