#pragma once

#include <string>
#include <utility>
#include <vector>

#include "towerpc/collect.hpp"
#include "towerpc/invariants.hpp"
#include "towerpc/presentation.hpp"
#include "towerpc/smith.hpp"
#include "towerpc/witness.hpp"

namespace towerpc {

// Parameters of the height-3 group Pi(a, e, e1, e2).
struct ThreeParams {
  Int a;
  int eps = 1, eps1 = 1, eps2 = 1;

  bool operator==(const ThreeParams&) const = default;

  TowerPresentation presentation() const { return make_pi3(a, eps, eps1, eps2); }

  std::string str() const {
    return "(" + a.str() + "," + std::to_string(eps) + "," + std::to_string(eps1) + "," +
           std::to_string(eps2) + ")";
  }
};

// One of the ten height-3 outcomes: six flat classes plus the two
// one-parameter families (parameter strictly positive).
struct Class3Label {
  enum class Kind { G1, G2, B1, B2, B3, B4, Nil, InfraNil };

  Kind kind = Kind::G1;
  Int a;  // >= 1 for the two families, 0 otherwise

  bool operator==(const Class3Label&) const = default;

  bool is_family() const { return kind == Kind::Nil || kind == Kind::InfraNil; }

  // Canonical representatives: the first-listed entry of each class, with
  // a in {0,1}, or Pi(a,1,1,1) / Pi(a,-1,-1,1) for the families.
  ThreeParams canonical_params() const {
    switch (kind) {
      case Kind::G1: return {Int(0), 1, 1, 1};
      case Kind::G2: return {Int(0), -1, -1, 1};
      case Kind::B1: return {Int(0), 1, 1, -1};
      case Kind::B2: return {Int(1), 1, 1, -1};
      case Kind::B3: return {Int(0), -1, 1, -1};
      case Kind::B4: return {Int(1), -1, 1, -1};
      case Kind::Nil: return {a, 1, 1, 1};
      case Kind::InfraNil: return {a, -1, -1, 1};
    }
    throw InternalError("unreachable label kind");
  }

  std::string str() const {
    switch (kind) {
      case Kind::G1: return "G1";
      case Kind::G2: return "G2";
      case Kind::B1: return "B1";
      case Kind::B2: return "B2";
      case Kind::B3: return "B3";
      case Kind::B4: return "B4";
      case Kind::Nil: return "NIL(" + a.str() + ")";
      case Kind::InfraNil: return "INFRANIL(" + a.str() + ")";
    }
    throw InternalError("unreachable label kind");
  }
};

// A single classification move, carrying its generator-image witness between
// the presentations before and after.
struct ClassifyMove {
  enum class Kind { Lift, Iso1, Iso2, Iso3, Iso4 };

  Kind kind = Kind::Lift;
  Int b, c;  // Lift only
  ThreeParams from, to;
  IsomorphismWitness step;

  std::string str() const {
    switch (kind) {
      case Kind::Lift: return "LIFT(b=" + b.str() + ",c=" + c.str() + ")";
      case Kind::Iso1: return "ISO1";
      case Kind::Iso2: return "ISO2";
      case Kind::Iso3: return "ISO3";
      case Kind::Iso4: return "ISO4";
    }
    throw InternalError("unreachable move kind");
  }
};

// Moves applied in order from the input parameters to the canonical
// representative, with the composed verified witness.
struct Classification {
  Class3Label label;
  std::vector<ClassifyMove> moves;
  IsomorphismWitness witness;
};

// Change of lifts t1 = s3^-b s1, t2 = s3^-c s2: replaces a by
//   a + (e2-1) b - (e1-1) c     when e = +1,
//   a + (e2-1) b - (e1+e2) c    when e = -1.
inline ClassifyMove move_lift(const ThreeParams& t, const Int& b, const Int& c) {
  Int a_new = t.a + Int(t.eps2 - 1) * b -
              (t.eps == 1 ? Int(t.eps1 - 1) : Int(t.eps1 + t.eps2)) * c;
  ThreeParams to{a_new, t.eps, t.eps1, t.eps2};

  std::vector<GeneratorSubstitution> subs;
  if (b != 0) subs.push_back({1, NormalForm::generator(3, 3, -b)});
  if (c != 0) subs.push_back({2, NormalForm::generator(3, 3, -c)});
  auto change = change_of_generators(t.presentation(), subs);
  detail::internal_check(change.presentation == to.presentation(),
                         "lift substitution disagrees with the closed form");

  ClassifyMove m;
  m.kind = ClassifyMove::Kind::Lift;
  m.b = b;
  m.c = c;
  m.from = t;
  m.to = to;
  m.step = std::move(change.witness);
  return m;
}

// The four sign moves. Forward words act from Pi(t) into the transformed
// presentation; each is verifiable with verify_isomorphism.
inline ClassifyMove move_iso(int k, const ThreeParams& t) {
  ClassifyMove m;
  m.from = t;
  auto word = [](std::initializer_list<GroupWord::Syllable> sylls) {
    GroupWord w;
    for (const auto& s : sylls) w.append(s.gen, s.exp);
    return w;
  };
  switch (k) {
    case 1: {
      // a -> -a by inverting the fiber generator
      m.kind = ClassifyMove::Kind::Iso1;
      m.to = {-t.a, t.eps, t.eps1, t.eps2};
      m.step.forward = {word({{1, 1}}), word({{2, 1}}), word({{3, -1}})};
      m.step.backward = m.step.forward;
      break;
    }
    case 2: {
      // (e1, e2) -> (e1 e2, e2); the backward map is s1 -> s1 s2
      m.kind = ClassifyMove::Kind::Iso2;
      m.to = {t.a, t.eps, t.eps1 * t.eps2, t.eps2};
      m.step.forward = {word({{1, 1}, {2, -1}}), word({{2, 1}}), word({{3, 1}})};
      m.step.backward = {word({{1, 1}, {2, 1}}), word({{2, 1}}), word({{3, 1}})};
      break;
    }
    case 3: {
      // swap e1 and e2; needs e = +1
      if (t.eps != 1) throw PreconditionError("move 3 requires eps = 1");
      m.kind = ClassifyMove::Kind::Iso3;
      m.to = {t.a, 1, t.eps2, t.eps1};
      m.step.forward = {word({{2, 1}}), word({{1, 1}}), word({{3, -1}})};
      m.step.backward = m.step.forward;
      break;
    }
    case 4: {
      // (e, -e, 1) -> (-e, e, 1); needs a in {0,1} (lift first)
      if (t.eps1 != -t.eps || t.eps2 != 1)
        throw PreconditionError("move 4 requires the sign shape (e,-e,1)");
      if (t.a != 0 && t.a != 1)
        throw PreconditionError("move 4 requires a in {0,1}; lift first");
      m.kind = ClassifyMove::Kind::Iso4;
      m.to = {t.a, -t.eps, t.eps, 1};
      if (t.a == 0) {
        m.step.forward = {word({{1, 1}}), word({{3, 1}}), word({{2, 1}})};
        m.step.backward = m.step.forward;
      } else {
        m.step.forward = {word({{1, 1}}), word({{2, 1}}), word({{3, 1}, {2, Int(-2 * t.eps)}})};
        m.step.backward = {word({{1, 1}}), word({{2, 1}}), word({{3, 1}, {2, Int(2 * t.eps)}})};
      }
      break;
    }
    default:
      throw IndexError("iso move index must be 1..4");
  }
  return m;
}

// Nilpotent exactly for the sign pattern (1,1,1): the fiber generator is
// central there and [s1,s2] = s3^a gives a central series.
inline bool is_nilpotent_3(const ThreeParams& t) {
  return t.eps == 1 && t.eps1 == 1 && t.eps2 == 1;
}

// The index-2 subgroup <s1^2, s2, s3> of a height-3 presentation, computed by
// collection. For Pi(a,-1,-1,1) it is the nilpotent group Pi(-2a,1,1,1),
// whose H1 torsion 2|a| separates the infra-nil family members.
inline TowerPresentation index2_subgroup_s1sq(const TowerPresentation& p) {
  validate(p);
  if (p.n != 3) throw IndexError("index-2 subgroup construction needs height 3");
  Collector c(p);
  const NormalForm u1 = c.generator(1, Int(2));
  const NormalForm u2 = c.generator(2);
  const NormalForm u3 = c.generator(3);

  NormalForm r13 = c.conjugate(u1, u3);
  detail::internal_check(r13.exp(1) == 0 && r13.exp(2) == 0 && abs(r13.exp(3)) == 1,
                         "subgroup relation (1,3) is not a generator power");
  NormalForm r23 = c.conjugate(u2, u3);
  detail::internal_check(r23.exp(1) == 0 && r23.exp(2) == 0 && abs(r23.exp(3)) == 1,
                         "subgroup relation (2,3) is not a generator power");
  NormalForm r12 = c.conjugate(u1, u2);
  detail::internal_check(r12.exp(1) == 0 && abs(r12.exp(2)) == 1,
                         "subgroup relation (1,2) has a non-unit leading exponent");

  const int e2 = static_cast<int>(r23.exp(3));
  const int e = static_cast<int>(r12.exp(2));
  // ascending r12 = u2^e u3^x; the stored descending tail is x * e2
  TowerPresentation q(3);
  q.set_eps(1, 2, e);
  q.set_eps(1, 3, static_cast<int>(r13.exp(3)));
  q.set_eps(2, 3, e2);
  q.set_tail_entry(1, 2, 3, r12.exp(3) * e2);
  return q;
}

struct SeparatingInvariants {
  bool flat = false;
  AbelianInvariants h1;
  int b1_mod2 = 0;
  bool nilpotent = false;

  bool operator==(const SeparatingInvariants&) const = default;
};

inline SeparatingInvariants separating_invariants(const ThreeParams& t) {
  TowerPresentation p = t.presentation();
  SeparatingInvariants s;
  s.flat = is_flat_3_formula(t.a, t.eps, t.eps1, t.eps2);
  s.h1 = abelianization(p);
  s.b1_mod2 = b1_mod_p(p, Int(2));
  s.nilpotent = is_nilpotent_3(t);
  return s;
}

// The complete height-3 classification. Moves: lift to a in {0,1} (families
// excepted), then a fixed greedy sign route to the canonical representative;
// the composed witness connects Pi(t) to it.
inline Classification canonical_class(const ThreeParams& t) {
  Classification out;
  std::vector<ClassifyMove>& moves = out.moves;
  ThreeParams cur = t;
  auto push = [&](ClassifyMove m) {
    cur = m.to;
    moves.push_back(std::move(m));
  };

  const bool family_shape = (cur.eps == 1 && cur.eps1 == 1 && cur.eps2 == 1) ||
                            (cur.eps == -1 && cur.eps1 == -1 && cur.eps2 == 1);
  if (family_shape) {
    if (cur.a < 0) push(move_iso(1, cur));
    if (cur.eps == 1)
      out.label = cur.a == 0 ? Class3Label{Class3Label::Kind::G1, Int(0)}
                             : Class3Label{Class3Label::Kind::Nil, cur.a};
    else
      out.label = cur.a == 0 ? Class3Label{Class3Label::Kind::G2, Int(0)}
                             : Class3Label{Class3Label::Kind::InfraNil, cur.a};
  } else {
    // reduce a to its parity
    const Int r = mod2(cur.a);
    if (cur.a != r) {
      Int b(0), c(0);
      if (cur.eps2 == -1)
        b = (cur.a - r) / 2;  // a' = a - 2b
      else if (cur.eps == 1)
        c = (r - cur.a) / 2;  // e1 = -1 here: a' = a + 2c
      else
        c = (cur.a - r) / 2;  // e = -1, e1 = 1, e2 = 1: a' = a - 2c
      push(move_lift(cur, b, c));
    }
    // fixed sign route to the first-listed row entry
    if (cur.eps == 1) {
      if (cur.eps1 == -1 && cur.eps2 == -1) push(move_iso(2, cur));
      else if (cur.eps1 == -1 && cur.eps2 == 1) push(move_iso(3, cur));
    } else {
      if (cur.eps1 == 1 && cur.eps2 == 1) {
        push(move_iso(4, cur));
        push(move_iso(3, cur));
      } else if (cur.eps1 == -1 && cur.eps2 == -1) {
        push(move_iso(2, cur));
      }
    }
    if (cur.eps == 1) {
      detail::internal_check(cur.eps1 == 1 && cur.eps2 == -1, "sign route missed B1/B2");
      out.label = {cur.a == 0 ? Class3Label::Kind::B1 : Class3Label::Kind::B2, Int(0)};
    } else {
      detail::internal_check(cur.eps1 == 1 && cur.eps2 == -1, "sign route missed B3/B4");
      out.label = {cur.a == 0 ? Class3Label::Kind::B3 : Class3Label::Kind::B4, Int(0)};
    }
  }
  detail::internal_check(cur == out.label.canonical_params(),
                         "classification did not land on the canonical representative");

  // compose the step witnesses
  out.witness = identity_witness(3);
  Collector cp(t.presentation());
  for (const auto& m : moves) {
    Collector cnext(m.to.presentation());
    out.witness = compose_witnesses(cp, cnext, out.witness, m.step);
  }
  return out;
}

}  // namespace towerpc
