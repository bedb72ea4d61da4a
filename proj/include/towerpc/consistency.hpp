#pragma once

#include <optional>

#include "towerpc/collect.hpp"
#include "towerpc/presentation.hpp"

namespace towerpc {

struct ConsistencyWitness {
  int i = 0, j = 0, k = 0;  // the failing triple
  NormalForm lhs, rhs;      // the two differing normal forms
};

struct ConsistencyResult {
  bool consistent = false;
  std::optional<ConsistencyWitness> witness;
};

// Overlap check: arbitrary exponent data need not define a group with the
// expected normal series. The presentation is consistent iff for every
// triple i < j < k, conjugation by s_i (as the map defined by the relations)
// preserves the relation s_j s_k s_j^-1 = tail * s_k^{eps(j,k)}, both sides
// collected inside <s_{i+1},...,s_n>.
//
// Levels are scanned deepest-first, so each check runs inside a subgroup
// whose own overlaps have already been verified; the reported witness is the
// first genuine failure.
inline ConsistencyResult consistency_check(const TowerPresentation& p) {
  validate(p);
  Collector c(p);
  for (int i = p.n - 2; i >= 1; --i) {
    const auto& phi = c.conjugation(i, 1);
    for (int j = i + 1; j < p.n; ++j) {
      for (int k = j + 1; k <= p.n; ++k) {
        const NormalForm& fj = phi.image(j);
        const NormalForm& fk = phi.image(k);
        NormalForm lhs = c.multiply(c.multiply(fj, fk), c.invert(fj));
        NormalForm rhs = c.apply(phi, c.conjugate_generator(j, 1, k));
        if (!(lhs == rhs))
          return {false, ConsistencyWitness{i, j, k, std::move(lhs), std::move(rhs)}};
      }
    }
  }
  return {true, std::nullopt};
}

// Convenience for operations whose precondition is a consistent presentation.
inline void require_consistent(const TowerPresentation& p) {
  auto r = consistency_check(p);
  if (!r.consistent)
    throw InconsistencyError("presentation is inconsistent at triple (" +
                             std::to_string(r.witness->i) + "," + std::to_string(r.witness->j) +
                             "," + std::to_string(r.witness->k) + ")");
}

}  // namespace towerpc
