#pragma once

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "towerpc/collect.hpp"
#include "towerpc/consistency.hpp"
#include "towerpc/invariants.hpp"
#include "towerpc/presentation.hpp"
#include "towerpc/witness.hpp"

namespace towerpc {

// Strictly upper-triangular 0/1 matrix: entry (i,j) = 1 records an inverted
// conjugation s_i s_j s_i^-1 = s_j^-1 in a zero-tail presentation.
struct BottMatrix {
  int n = 0;
  std::vector<std::vector<int>> entry;  // full n x n, zeros on and below the diagonal

  explicit BottMatrix(int height = 0) : n(height), entry(height, std::vector<int>(height, 0)) {}

  bool operator==(const BottMatrix&) const = default;

  std::string row_str(int i) const {
    std::ostringstream out;
    for (int j = 0; j < n; ++j) {
      if (j) out << ' ';
      out << entry[i - 1][j];
    }
    return out.str();
  }
};

inline BottMatrix to_bott_matrix(const TowerPresentation& p) {
  validate(p);
  for (int i = 1; i < p.n; ++i)
    for (int j = i + 1; j <= p.n; ++j)
      for (const Int& a : p.tail(i, j))
        if (a != 0)
          throw FormError("presentation has a nonzero tail at (" + std::to_string(i) + "," +
                          std::to_string(j) + ")");
  BottMatrix m(p.n);
  for (int i = 1; i < p.n; ++i)
    for (int j = i + 1; j <= p.n; ++j) m.entry[i - 1][j - 1] = p.eps(i, j) == -1 ? 1 : 0;
  return m;
}

inline TowerPresentation from_bott_matrix(const BottMatrix& m) {
  TowerPresentation p = TowerPresentation::trivial(m.n);
  for (int i = 1; i < m.n; ++i)
    for (int j = i + 1; j <= m.n; ++j)
      if (m.entry[i - 1][j - 1]) p.set_eps(i, j, -1);
  return p;
}

struct BottNormalization {
  TowerPresentation presentation;  // all tails zero
  BottMatrix matrix;
  IsomorphismWitness witness;  // input -> output, verified
  std::vector<GeneratorSubstitution> substitutions;
};

namespace bott_detail {

inline std::string at(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

inline void check_top_tail(const TowerPresentation& p) {
  detail::internal_check(is_top_tail_form(p),
                         "normalization lost the top-tail form");
}

// The two identities that hold in any consistent top-tail state with rows
// above k already cleared; violation means the input was inconsistent.
inline void check_row_identities(const TowerPresentation& p, int k) {
  const int n = p.n;
  for (int i = k + 1; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Int& aki = p.tail_entry(k, i, n);
      const Int& akj = p.tail_entry(k, j, n);
      const Int ei(p.eps(i, n)), ej(p.eps(j, n));
      const Int lhs = (ej - 1) * aki;
      const Int rhs = p.eps(i, j) == 1 ? Int((ei - 1) * akj) : Int((ei + ej) * akj);
      detail::internal_check(lhs == rhs, "row identity fails at " + at(i, j) +
                                             " below row " + std::to_string(k));
    }
  }
}

// Appends sub to subs and applies it to cur. The witness is assembled once
// at the end by replaying the whole list.
inline void apply_sub(TowerPresentation& cur, std::vector<GeneratorSubstitution>& subs,
                      GeneratorSubstitution sub) {
  cur = change_detail::change_one(Collector(cur), sub).presentation;
  subs.push_back(std::move(sub));
}

inline Int exact_half(const Int& a) {
  if (!is_even(a)) throw PreconditionError("odd tail exponent slipped through");
  return a / 2;
}

// Clears every tail of cur (assumed consistent, flat, all tails even),
// recording the substitutions. Recursion: normalize the height-(n-1)
// quotient and lift its substitutions, which confines all tails to the top
// generator; clear the (n-2, n-1) tail by a change of lifts; then walk rows
// k = n-3 .. 1, using for each offender (k,p) either the shared b-shift of
// s_k (when eps_p = -1) or a c-shift of s_p (when eps_p = +1).
inline void normalize_into(const TowerPresentation& p, TowerPresentation& cur,
                           std::vector<GeneratorSubstitution>& subs) {
  const int n = p.n;
  cur = p;
  if (n <= 2) return;

  TowerPresentation quotient = quotient_below(p, n - 1);
  TowerPresentation qnorm(n - 1);
  std::vector<GeneratorSubstitution> qsubs;
  normalize_into(quotient, qnorm, qsubs);
  for (const auto& qsub : qsubs) {
    GeneratorSubstitution lifted;
    lifted.target = qsub.target;
    lifted.prefix = NormalForm::identity(n);
    for (int k = qsub.target + 1; k <= n - 1; ++k) lifted.prefix.set(k, qsub.prefix.exp(k));
    apply_sub(cur, subs, std::move(lifted));
  }
  check_top_tail(cur);

  // top pair (n-2, n-1): the height-3 change of lifts
  {
    const int i = n - 2, j = n - 1;
    const Int a = cur.tail_entry(i, j, n);
    if (a != 0) {
      const int e = cur.eps(i, j);
      const int e1 = cur.eps(i, n);
      const int e2 = cur.eps(j, n);
      GeneratorSubstitution sub;
      sub.prefix = NormalForm::identity(n);
      if (e2 == -1) {
        // t_i = s_n^-b s_i with b = a/2: a' = a + (e2-1) b = 0
        sub.target = i;
        sub.prefix.set(n, -exact_half(a));
      } else if (e1 == -e) {
        // eps2 = +1 and flatness force e1 = -e; shift the lift of s_j
        sub.target = j;
        sub.prefix.set(n, e == 1 ? exact_half(a) : -exact_half(a));
      } else {
        throw InternalError("flat even top pair " + at(i, j) +
                            " admits no integral change of lifts");
      }
      apply_sub(cur, subs, std::move(sub));
      check_top_tail(cur);
      detail::internal_check(cur.tail_entry(i, j, n) == 0,
                             "change of lifts failed to clear the top pair");
    }
  }

  for (int k = n - 3; k >= 1; --k) {
    check_row_identities(cur, k);

    // all offenders with eps_p = -1 share one b by the row identities
    Int shared_b(0);
    bool has_neg = false;
    for (int q = k + 1; q < n; ++q) {
      if (cur.eps(q, n) != -1 || cur.tail_entry(k, q, n) == 0) continue;
      const Int b = -exact_half(cur.tail_entry(k, q, n));
      if (!has_neg) {
        shared_b = b;
        has_neg = true;
      } else {
        detail::internal_check(b == shared_b,
                               "sign -1 columns of row " + std::to_string(k) +
                                   " disagree on the shared shift");
      }
    }
    if (has_neg) {
      GeneratorSubstitution sub;
      sub.target = k;
      sub.prefix = NormalForm::identity(n);
      sub.prefix.set(n, shared_b);
      apply_sub(cur, subs, std::move(sub));
      check_top_tail(cur);
    }

    for (int q = k + 1; q < n; ++q) {
      if (cur.eps(q, n) != 1) continue;
      const Int a = cur.tail_entry(k, q, n);
      if (a == 0) continue;
      // side conditions guaranteeing the shift of s_q leaves rows above k
      // untouched
      for (int j = q + 1; j < n; ++j)
        detail::internal_check(cur.eps(j, n) == 1, "sign side condition fails at column " +
                                                       std::to_string(j) + " for row " +
                                                       std::to_string(k));
      for (int l = k + 1; l < q; ++l)
        detail::internal_check(cur.eps(l, q) == cur.eps(l, n),
                               "conjugation side condition fails at " + at(l, q));
      const int ek = cur.eps(k, n);
      const int ekq = cur.eps(k, q);
      detail::internal_check(ek == -ekq, "commuting squares force opposite signs at " + at(k, q));
      // a' = a + (ek - ekq) c = 0
      GeneratorSubstitution sub;
      sub.target = q;
      sub.prefix = NormalForm::identity(n);
      sub.prefix.set(n, -exact_half(a) * (ek == 1 ? 1 : -1));
      apply_sub(cur, subs, std::move(sub));
      check_top_tail(cur);
      detail::internal_check(cur.tail_entry(k, q, n) == 0,
                             "shift failed to clear " + at(k, q));
    }

    for (int i = k; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        detail::internal_check(cur.tail_entry(i, j, n) == 0,
                               "row sweep left a nonzero tail at " + at(i, j));
  }
}

}  // namespace bott_detail

// Rewrites a flat RP^1-tower presentation in a generating set with all tails
// zero (real Bott form), returning the Bott matrix and a verified witness.
inline BottNormalization bott_normalize(const TowerPresentation& p) {
  require_consistent(p);
  if (!is_rp1_tower(p))
    throw PreconditionError("normalization needs all tail exponents even");
  if (!is_flat(Collector(p)))
    throw PreconditionError("normalization needs pairwise commuting generator squares");

  BottNormalization out;
  bott_detail::normalize_into(p, out.presentation, out.substitutions);
  for (int i = 1; i < out.presentation.n; ++i)
    for (int j = i + 1; j <= out.presentation.n; ++j)
      for (const Int& a : out.presentation.tail(i, j))
        detail::internal_check(a == 0, "normalization finished with a nonzero tail");
  out.matrix = to_bott_matrix(out.presentation);

  auto replay = change_of_generators(p, out.substitutions);
  detail::internal_check(replay.presentation == out.presentation,
                         "substitution replay diverged from the normalization");
  out.witness = std::move(replay.witness);
  return out;
}

}  // namespace towerpc
