#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "towerpc/affine.hpp"
#include "towerpc/classify3.hpp"
#include "towerpc/collect.hpp"
#include "towerpc/presentation.hpp"

namespace towerpc {

// Exact affine realization of a height-3 family: three maps satisfying the
// relations of the label's canonical presentation.
struct Realization {
  Class3Label label;
  std::array<AffineMapQ3, 3> gen;
  TowerPresentation presentation;  // the canonical presentation realized
};

namespace realize_detail {

// Euclidean motion 0-indexed: shift coordinate i by 1/2, flip the later
// coordinates whose sign is -1.
inline AffineMapQ3 bott_motion(int i, const std::array<std::array<int, 3>, 3>& signs) {
  AffineMapQ3 m = AffineMapQ3::identity();
  m.t[i] = Rat(1, 2);
  for (int j = i + 1; j < 3; ++j)
    if (signs[i][j] < 0) m.a[j][j] = -1;
  return m;
}

inline std::array<AffineMapQ3, 3> bott_maps(const TowerPresentation& p) {
  std::array<std::array<int, 3>, 3> signs{};
  for (int i = 1; i < 3; ++i)
    for (int j = i + 1; j <= 3; ++j) signs[i - 1][j - 1] = p.eps(i, j);
  return {bott_motion(0, signs), bott_motion(1, signs), bott_motion(2, signs)};
}

}  // namespace realize_detail

// The generator maps per family:
//  - the four flat classes realizable by zero-tail data use the generic
//    half-shift-and-flip motions specialized to the canonical signs;
//  - B2/B4 use the explicit Euclidean motions s1=(x+1/2, ey, -z+1/4),
//    s2=(x, y+1/2, -z), s3=(x, y, z+1/2), composed with the generator change
//    s1 -> s1 s2 so the relations land on the canonical parameters;
//  - NIL(a) uses the lattice shifts of the Heisenberg group,
//  - INFRANIL(a) the affine maps s1=(x+1/2,-y,-z-y/2), s2=(x,y+1,z),
//    s3=(x,y,z-1/(2a)).
inline Realization realize(const Class3Label& label) {
  if (label.is_family() && label.a < 1)
    throw PreconditionError("family parameter must be at least 1");
  Realization r;
  r.label = label;
  r.presentation = label.canonical_params().presentation();

  using K = Class3Label::Kind;
  switch (label.kind) {
    case K::G1:
    case K::G2:
    case K::B1:
    case K::B3: {
      r.gen = realize_detail::bott_maps(r.presentation);
      break;
    }
    case K::B2:
    case K::B4: {
      const int e = label.kind == K::B2 ? 1 : -1;
      AffineMapQ3 s1 = AffineMapQ3::identity();
      s1.a[1][1] = e;
      s1.a[2][2] = -1;
      s1.t = {Rat(1, 2), Rat(0), Rat(1, 4)};
      AffineMapQ3 s2 = AffineMapQ3::identity();
      s2.a[2][2] = -1;
      s2.t = {Rat(0), Rat(1, 2), Rat(0)};
      AffineMapQ3 s3 = AffineMapQ3::translation(Rat(0), Rat(0), Rat(1, 2));
      r.gen = {s1.compose(s2), s2, s3};
      break;
    }
    case K::Nil: {
      AffineMapQ3 s1 = AffineMapQ3::identity();
      s1.a[2][1] = 1;  // (x,y,z) -> (x+1, y, z+y)
      s1.t = {Rat(1), Rat(0), Rat(0)};
      AffineMapQ3 s2 = AffineMapQ3::translation(Rat(0), Rat(1), Rat(0));
      AffineMapQ3 s3 = AffineMapQ3::translation(Rat(0), Rat(0), Rat(1) / Rat(label.a));
      r.gen = {s1, s2, s3};
      break;
    }
    case K::InfraNil: {
      AffineMapQ3 s1 = AffineMapQ3::identity();
      s1.a[1][1] = -1;
      s1.a[2][1] = Rat(-1, 2);
      s1.a[2][2] = -1;  // (x,y,z) -> (x+1/2, -y, -z-y/2)
      s1.t = {Rat(1, 2), Rat(0), Rat(0)};
      AffineMapQ3 s2 = AffineMapQ3::translation(Rat(0), Rat(1), Rat(0));
      AffineMapQ3 s3 = AffineMapQ3::translation(Rat(0), Rat(0), Rat(-1) / (2 * Rat(label.a)));
      r.gen = {s1, s2, s3};
      break;
    }
  }
  return r;
}

// The homomorphism NormalForm -> affine group: s1^{e1} s2^{e2} s3^{e3} as a
// composite map (group product g*h acts as g after h).
inline AffineMapQ3 affine_of(const Realization& r, const NormalForm& u) {
  if (u.size() != 3) throw IndexError("normal form must have length 3");
  return r.gen[0].pow(u.exp(1)).compose(r.gen[1].pow(u.exp(2))).compose(r.gen[2].pow(u.exp(3)));
}

// affine(u) o affine(v); by the homomorphism property this equals
// affine(multiply(u, v)) exactly.
inline AffineMapQ3 oracle_multiply(const Realization& r, const NormalForm& u,
                                   const NormalForm& v) {
  return affine_of(r, u).compose(affine_of(r, v));
}

struct RelationVerdict {
  int i = 0, j = 0;
  bool exact = false;
};

struct RealizationReport {
  Class3Label label;
  std::vector<RelationVerdict> relations;  // every defining relation once
  bool probe_passed = false;
  int probe_depth = 0;

  bool all_relations_exact() const {
    for (const auto& v : relations)
      if (!v.exact) return false;
    return true;
  }

  bool all_ok() const { return all_relations_exact() && probe_passed; }
};

namespace realize_detail {

inline std::vector<RelationVerdict> check_relations(const Realization& r) {
  std::vector<RelationVerdict> out;
  const TowerPresentation& p = r.presentation;
  for (int i = 1; i < 3; ++i) {
    for (int j = i + 1; j <= 3; ++j) {
      AffineMapQ3 lhs = r.gen[i - 1].compose(r.gen[j - 1]).compose(r.gen[i - 1].inverse());
      AffineMapQ3 rhs = AffineMapQ3::identity();
      for (int k = 3; k >= j + 1; --k) rhs = rhs.compose(r.gen[k - 1].pow(p.tail_entry(i, j, k)));
      rhs = rhs.compose(r.gen[j - 1].pow(Int(p.eps(i, j))));
      out.push_back({i, j, lhs == rhs});
    }
  }
  return out;
}

// Freeness probe: walk all reduced words of length <= depth; any word whose
// map is not the identity must move every sample point. Evidence for a free
// action, not a proof.
inline bool freeness_probe(const std::array<AffineMapQ3, 3>& gen, int depth) {
  const std::vector<Vec3Q> samples = {{Rat(0), Rat(0), Rat(0)},
                                      {Rat(1, 3), Rat(1, 5), Rat(1, 7)}};
  struct Node {
    AffineMapQ3 map;
    int last;  // letter index 0..5, gen g sign +- = 2g + (sign<0)
  };
  std::array<AffineMapQ3, 6> letter;
  for (int g = 0; g < 3; ++g) {
    letter[2 * g] = gen[g];
    letter[2 * g + 1] = gen[g].inverse();
  }
  std::vector<Node> frontier = {{AffineMapQ3::identity(), -1}};
  for (int len = 1; len <= depth; ++len) {
    std::vector<Node> next;
    next.reserve(frontier.size() * 5);
    for (const auto& node : frontier) {
      for (int l = 0; l < 6; ++l) {
        if (node.last >= 0 && (node.last ^ 1) == l) continue;  // reduced words only
        Node child{node.map.compose(letter[l]), l};
        if (!child.map.is_identity()) {
          for (const auto& pt : samples)
            if (child.map.apply(pt) == pt) return false;
        }
        next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
  }
  return true;
}

}  // namespace realize_detail

inline RealizationReport verify_realization_maps(const Realization& r, int probe_depth = 6) {
  RealizationReport report;
  report.label = r.label;
  report.relations = realize_detail::check_relations(r);
  report.probe_depth = probe_depth;
  report.probe_passed = realize_detail::freeness_probe(r.gen, probe_depth);
  return report;
}

inline RealizationReport verify_realization(const Class3Label& label, int probe_depth = 6) {
  return verify_realization_maps(realize(label), probe_depth);
}

}  // namespace towerpc
