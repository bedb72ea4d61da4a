#pragma once

#include "towerpc/collect.hpp"
#include "towerpc/consistency.hpp"
#include "towerpc/presentation.hpp"
#include "towerpc/smith.hpp"

namespace towerpc {

// The total space is an iterated RP^1-bundle iff every tail exponent is even
// (equivalently b1 mod 2 equals n; the equivalence is asserted in tests).
inline bool is_rp1_tower(const TowerPresentation& p) {
  validate(p);
  for (int i = 1; i < p.n; ++i)
    for (int j = i + 1; j <= p.n; ++j)
      for (const Int& a : p.tail(i, j))
        if (!is_even(a)) return false;
  return true;
}

// The level-j bundle is orientable (equivalently principal) iff eps(i,j) = 1
// for all i < j.
inline bool is_orientable_level(const TowerPresentation& p, int j) {
  validate(p);
  if (j < 2 || j > p.n)
    throw IndexError("level " + std::to_string(j) + " out of range 2.." + std::to_string(p.n));
  for (int i = 1; i < j; ++i)
    if (p.eps(i, j) != 1) return false;
  return true;
}

// Torus iff every bundle is trivial: all eps = +1 and all tails zero. Agrees
// with abelianization == Z^n.
inline bool is_torus(const TowerPresentation& p) {
  validate(p);
  for (int i = 1; i < p.n; ++i)
    for (int j = i + 1; j <= p.n; ++j) {
      if (p.eps(i, j) != 1) return false;
      for (const Int& a : p.tail(i, j))
        if (a != 0) return false;
    }
  return true;
}

// Flat iff the squares of the generators commute pairwise: the subgroup they
// generate is torsion-free nilpotent of rank n, hence Z^n exactly when
// abelian. Collection-based; assumes a consistent presentation.
inline bool is_flat(const Collector& c) {
  const int n = c.height();
  std::vector<NormalForm> sq;
  for (int i = 1; i <= n; ++i) sq.push_back(c.generator(i, Int(2)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!c.commutator(sq[i], sq[j]).is_identity()) return false;
  return true;
}

inline bool is_flat(const TowerPresentation& p) {
  require_consistent(p);
  return is_flat(Collector(p));
}

// Closed-form flatness for height 3.
inline bool is_flat_3_formula(const Int& a, int e, int e1, int e2) {
  if ((e != 1 && e != -1) || (e1 != 1 && e1 != -1) || (e2 != 1 && e2 != -1))
    throw PreconditionError("signs must be +-1");
  return Int(e + e1) * Int(e2 + 1) * a == 0;
}

// Tail support only on s_n: the shape
//   s_i s_j s_i^-1 = s_n^{a_ij} s_j^{eps_ij}  (i < j < n),
//   s_i s_n s_i^-1 = s_n^{eps_i}.
inline bool is_top_tail_form(const TowerPresentation& p) {
  validate(p);
  for (int i = 1; i < p.n; ++i)
    for (int j = i + 1; j < p.n; ++j)
      for (int k = j + 1; k < p.n; ++k)
        if (p.tail_entry(i, j, k) != 0) return false;
  return true;
}

// Closed-form commuting-squares test for a top-tail pair i < j < n, with
// eps_i = eps(i,n), eps_j = eps(j,n) and a_ij the s_n-exponent of tail(i,j).
// Must equal the collection-based check commutator(s_i^2, s_j^2) = 1.
inline bool flat_pair_formula(const TowerPresentation& p, int i, int j) {
  validate(p);
  if (!is_top_tail_form(p))
    throw FormError("presentation has tail support below the top generator");
  if (i < 1 || j <= i || j >= p.n)
    throw IndexError("flat_pair_formula needs i < j < n");
  const Int& a = p.tail_entry(i, j, p.n);
  return Int(p.eps(i, p.n) + p.eps(i, j)) * Int(p.eps(j, p.n) + 1) * a == 0;
}

}  // namespace towerpc
