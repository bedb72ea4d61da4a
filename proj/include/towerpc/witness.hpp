#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "towerpc/collect.hpp"
#include "towerpc/consistency.hpp"
#include "towerpc/normal_form.hpp"
#include "towerpc/presentation.hpp"

namespace towerpc {

// A change of one generator: t_target = prefix * s_target, with the prefix
// supported strictly above target. Triangularity guarantees the substitution
// is a change of generating set.
struct GeneratorSubstitution {
  int target = 0;
  NormalForm prefix;
};

// Generator images in both directions between two presentations; verifiable
// by collection. The forward words map domain generators into the codomain.
struct IsomorphismWitness {
  std::vector<GroupWord> forward;
  std::vector<GroupWord> backward;
};

inline IsomorphismWitness identity_witness(int n) {
  IsomorphismWitness w;
  for (int i = 1; i <= n; ++i) {
    w.forward.push_back(GroupWord::of(i));
    w.backward.push_back(GroupWord::of(i));
  }
  return w;
}

struct WitnessVerdict {
  bool valid = false;
  std::string reason;  // empty when valid
};

// Checks the three witness invariants by collection:
//  - forward images satisfy every defining relation of the domain,
//  - backward images satisfy every defining relation of the codomain,
//  - both compositions fix every generator.
inline WitnessVerdict verify_isomorphism(const TowerPresentation& p, const TowerPresentation& q,
                                         const IsomorphismWitness& w) {
  validate(p);
  validate(q);
  if (static_cast<int>(w.forward.size()) != p.n || static_cast<int>(w.backward.size()) != q.n)
    return {false, "witness has wrong number of generator images"};
  Collector cp(p), cq(q);

  std::vector<NormalForm> fwd, bwd;
  for (const auto& word : w.forward) {
    if (word.max_generator() > q.n) return {false, "forward image uses out-of-range generator"};
    fwd.push_back(cq.evaluate(word));
  }
  for (const auto& word : w.backward) {
    if (word.max_generator() > p.n) return {false, "backward image uses out-of-range generator"};
    bwd.push_back(cp.evaluate(word));
  }

  auto relation_holds = [](const Collector& c, const TowerPresentation& src,
                           const std::vector<NormalForm>& img, int i, int j) {
    NormalForm lhs = c.multiply(c.multiply(img[i - 1], img[j - 1]), c.invert(img[i - 1]));
    NormalForm rhs = c.identity();
    for (int k = src.n; k >= j + 1; --k) {
      const Int& a = src.tail_entry(i, j, k);
      if (a != 0) rhs = c.multiply(rhs, c.power(img[k - 1], a));
    }
    rhs = c.multiply(rhs, c.power(img[j - 1], Int(src.eps(i, j))));
    return lhs == rhs;
  };

  for (int i = 1; i < p.n; ++i)
    for (int j = i + 1; j <= p.n; ++j)
      if (!relation_holds(cq, p, fwd, i, j))
        return {false, "forward images break relation (" + std::to_string(i) + "," +
                           std::to_string(j) + ")"};
  for (int i = 1; i < q.n; ++i)
    for (int j = i + 1; j <= q.n; ++j)
      if (!relation_holds(cp, q, bwd, i, j))
        return {false, "backward images break relation (" + std::to_string(i) + "," +
                           std::to_string(j) + ")"};

  // backward o forward fixes the domain generators
  for (int i = 1; i <= p.n; ++i) {
    NormalForm img = cp.identity();
    for (const auto& s : w.forward[i - 1].syllables)
      img = cp.multiply(img, cp.power(bwd[s.gen - 1], s.exp));
    if (!(img == cp.generator(i)))
      return {false, "backward o forward does not fix s" + std::to_string(i)};
  }
  // forward o backward fixes the codomain generators
  for (int j = 1; j <= q.n; ++j) {
    NormalForm img = cq.identity();
    for (const auto& s : w.backward[j - 1].syllables)
      img = cq.multiply(img, cq.power(fwd[s.gen - 1], s.exp));
    if (!(img == cq.generator(j)))
      return {false, "forward o backward does not fix s" + std::to_string(j)};
  }
  return {true, ""};
}

// Composition through the middle presentation: the composite images are
// evaluated by collection in the endpoints and re-emitted as normal-form
// words, so the result stays compact.
inline IsomorphismWitness compose_witnesses(const Collector& cp, const Collector& cr,
                                            const IsomorphismWitness& w_pq,
                                            const IsomorphismWitness& w_qr) {
  IsomorphismWitness out;
  std::vector<NormalForm> qr_fwd;
  for (const auto& word : w_qr.forward) qr_fwd.push_back(cr.evaluate(word));
  for (const auto& word : w_pq.forward) {
    NormalForm img = cr.identity();
    for (const auto& s : word.syllables) img = cr.multiply(img, cr.power(qr_fwd[s.gen - 1], s.exp));
    out.forward.push_back(GroupWord::from_normal_form(img));
  }
  std::vector<NormalForm> pq_bwd;
  for (const auto& word : w_pq.backward) pq_bwd.push_back(cp.evaluate(word));
  for (const auto& word : w_qr.backward) {
    NormalForm img = cp.identity();
    for (const auto& s : word.syllables) img = cp.multiply(img, cp.power(pq_bwd[s.gen - 1], s.exp));
    out.backward.push_back(GroupWord::from_normal_form(img));
  }
  return out;
}

struct ChangeOfGenerators {
  TowerPresentation presentation;
  IsomorphismWitness witness;  // between the input and the output
};

namespace change_detail {

// Rewrites the presentation in the generating set t_i = prefix * s_i
// (identity for i != sub.target). Every new relation t_i t_j t_i^-1 is
// collected in old coordinates; its leading sign and descending-tail
// coefficients are recovered by peeling t-powers off the collected form,
// which works because the change is triangular.
inline ChangeOfGenerators change_one(const Collector& c, const GeneratorSubstitution& sub) {
  const TowerPresentation& p = c.presentation();
  const int n = p.n;
  if (sub.target < 1 || sub.target > n)
    throw IndexError("substitution target out of range");
  if (sub.prefix.size() != n)
    throw IndexError("substitution prefix has wrong length");
  if (!sub.prefix.supported_above(sub.target))
    throw PreconditionError("substitution prefix must use only generators above the target");

  std::vector<NormalForm> t;  // old normal forms of the new generators, 1-based
  t.push_back(NormalForm());
  for (int i = 1; i <= n; ++i) t.push_back(c.generator(i));
  t[sub.target] = c.multiply(sub.prefix, c.generator(sub.target));

  TowerPresentation q(n);
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      NormalForm rel = c.multiply(c.multiply(t[i], t[j]), c.invert(t[i]));
      detail::internal_check(rel.supported_above(j - 1),
                             "conjugation relation escaped the tail subgroup");
      const Int& lead = rel.e[j - 1];
      detail::internal_check(lead == 1 || lead == -1,
                             "conjugation relation has non-unit leading exponent");
      const int eps_new = static_cast<int>(lead);
      q.set_eps(i, j, eps_new);
      // peel t_j^eps from the left, then descending-tail coefficients off the
      // right: rel * t_j^-eps = t_n^{A_n} ... t_{j+1}^{A_{j+1}}
      NormalForm z = c.multiply(rel, c.power(t[j], Int(-eps_new)));
      for (int k = j + 1; k <= n; ++k) {
        const Int a = z.e[k - 1];
        if (a != 0) {
          q.set_tail_entry(i, j, k, a);
          z = c.multiply(z, c.power(t[k], -a));
        }
        detail::internal_check(z.supported_above(k), "tail peeling left a residue");
      }
      detail::internal_check(z.is_identity(), "tail peeling did not terminate");
    }
  }

  IsomorphismWitness w = identity_witness(n);
  const int m = sub.target;
  // backward: t_m = prefix * s_m, an ascending word in the old generators
  GroupWord back = GroupWord::from_normal_form(sub.prefix);
  back.append(m, Int(1));
  w.backward[m - 1] = back;
  // forward: s_m = prefix^-1 t_m; express prefix^-1 in t-coordinates by
  // ascending peeling
  NormalForm inv_prefix = c.invert(sub.prefix);
  GroupWord fwd;
  for (int k = m + 1; k <= n; ++k) {
    const Int g = inv_prefix.e[k - 1];
    if (g == 0) continue;
    fwd.append(k, g);
    inv_prefix = c.multiply(c.power(t[k], -g), inv_prefix);
  }
  detail::internal_check(inv_prefix.is_identity(), "prefix rewrite did not terminate");
  fwd.append(m, Int(1));
  w.forward[m - 1] = fwd;

  return {std::move(q), std::move(w)};
}

}  // namespace change_detail

// Applies the substitutions in order, composing the witnesses. The output
// presents the same group in the new generating set; it passes
// consistency_check whenever the input does, and the emitted witness passes
// verify_isomorphism.
inline ChangeOfGenerators change_of_generators(const TowerPresentation& p,
                                               std::span<const GeneratorSubstitution> subs) {
  validate(p);
  Collector cp(p);
  ChangeOfGenerators acc{p, identity_witness(p.n)};
  Collector ccur = cp;
  for (const auto& sub : subs) {
    ChangeOfGenerators step = change_detail::change_one(ccur, sub);
    Collector cnext(step.presentation);
    acc.witness = compose_witnesses(cp, cnext, acc.witness, step.witness);
    acc.presentation = std::move(step.presentation);
    ccur = std::move(cnext);
  }
  return acc;
}

inline ChangeOfGenerators change_of_generators(const TowerPresentation& p,
                                               std::initializer_list<GeneratorSubstitution> subs) {
  return change_of_generators(p, std::span<const GeneratorSubstitution>(subs.begin(), subs.size()));
}

}  // namespace towerpc
