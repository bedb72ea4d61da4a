#include "doctest.h"

#include "test_support.hpp"
#include "towerpc/consistency.hpp"
#include "towerpc/io.hpp"
#include "towerpc/witness.hpp"

using namespace towerpc;

namespace {
GeneratorSubstitution sub_of(int n, int target, int gen, int exp) {
  GeneratorSubstitution s;
  s.target = target;
  s.prefix = NormalForm::generator(n, gen, Int(exp));
  return s;
}
}  // namespace

TEST_CASE("empty substitution list is the identity") {
  TowerPresentation p = make_pi3(Int(7), 1, -1, 1);
  auto r = change_of_generators(p, {});
  CHECK(r.presentation == p);
  auto v = verify_isomorphism(p, r.presentation, r.witness);
  CHECK(v.valid);
}

TEST_CASE("lifting substitution: Pi(2,1,1,-1) with s1 -> s3^-1 s1 gives Pi(0,1,1,-1)") {
  TowerPresentation p = make_pi3(Int(2), 1, 1, -1);
  auto r = change_of_generators(p, {sub_of(3, 1, 3, -1)});
  CHECK(r.presentation == make_pi3(Int(0), 1, 1, -1));
  auto v = verify_isomorphism(p, r.presentation, r.witness);
  CHECK(v.valid);
  // forward sends s1 to the element s3 s1 of the new group, backward sends
  // s1 to the element s3^-1 s1 of the old one (words are canonicalized, and
  // s1 commutes with s3 in both)
  Collector cp(p), cq(r.presentation);
  CHECK(cq.evaluate(r.witness.forward[0]) ==
        cq.multiply(cq.generator(3), cq.generator(1)));
  CHECK(cp.evaluate(r.witness.backward[0]) ==
        cp.multiply(cp.generator(3, Int(-1)), cp.generator(1)));
}

TEST_CASE("substitution s1 -> s2 s1 mixes the sign data") {
  // t1 = s2 s1 conjugates s3 through both s2 and s1, so eps1' = eps1*eps2,
  // and the tail exponent picks up eps2.
  TowerPresentation p = make_pi3(Int(4), 1, 1, -1);
  auto r = change_of_generators(p, {sub_of(3, 1, 2, 1)});
  CHECK(r.presentation == make_pi3(Int(-4), 1, -1, -1));
  CHECK(verify_isomorphism(p, r.presentation, r.witness).valid);
}

TEST_CASE("verify_isomorphism examples") {
  SUBCASE("identity witness") {
    TowerPresentation p = make_pi3(Int(3), -1, 1, -1);
    CHECK(verify_isomorphism(p, p, identity_witness(3)).valid);
  }
  SUBCASE("swap witness between Pi(a,1,e1,e2) and Pi(a,1,e2,e1)") {
    for (int a : {0, 2, 5})
      for (int e1 : {1, -1})
        for (int e2 : {1, -1}) {
          TowerPresentation p = make_pi3(Int(a), 1, e1, e2);
          TowerPresentation q = make_pi3(Int(a), 1, e2, e1);
          IsomorphismWitness w;
          w.forward = {parse_word("s2", 3), parse_word("s1", 3), parse_word("s3^-1", 3)};
          w.backward = w.forward;
          CHECK(verify_isomorphism(p, q, w).valid);
        }
  }
  SUBCASE("identity images between Pi(1,1,1,1) and Pi(0,1,1,1) fail") {
    TowerPresentation p = make_pi3(Int(1), 1, 1, 1);
    TowerPresentation q = make_pi3(Int(0), 1, 1, 1);
    auto v = verify_isomorphism(p, q, identity_witness(3));
    CHECK_FALSE(v.valid);
    CHECK(v.reason.find("relation") != std::string::npos);
  }
  SUBCASE("wrong composition is rejected") {
    TowerPresentation p = TowerPresentation::trivial(2);
    IsomorphismWitness w;
    // forward doubles s1; relations all hold in Z^2 but s1 is not fixed
    w.forward = {parse_word("s1^2", 2), parse_word("s2", 2)};
    w.backward = {parse_word("s1", 2), parse_word("s2", 2)};
    auto v = verify_isomorphism(p, p, w);
    CHECK_FALSE(v.valid);
    CHECK(v.reason.find("fix") != std::string::npos);
  }
}

TEST_CASE("non-triangular substitutions are rejected") {
  TowerPresentation p = make_pi3(Int(0), 1, 1, 1);
  CHECK_THROWS_AS(change_of_generators(p, {sub_of(3, 2, 1, 1)}), PreconditionError);
}

TEST_CASE("random changes preserve consistency and carry valid witnesses") {
  towerpc::testing::Rng rng(991);
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 12; ++trial) {
      TowerPresentation p = towerpc::testing::random_consistent(rng, n, 4, 2);
      std::vector<GeneratorSubstitution> subs;
      const int count = 1 + trial % 3;
      for (int s = 0; s < count; ++s)
        subs.push_back(towerpc::testing::random_substitution(rng, n, 2, false));
      auto r = change_of_generators(p, subs);
      CHECK(consistency_check(r.presentation).consistent);
      CHECK(verify_isomorphism(p, r.presentation, r.witness).valid);
    }
  }
}
