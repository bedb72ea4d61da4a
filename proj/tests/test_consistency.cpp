#include "doctest.h"

#include "test_support.hpp"
#include "towerpc/consistency.hpp"

using namespace towerpc;

TEST_CASE("every height-3 datum is consistent") {
  for (int e : {1, -1})
    for (int e1 : {1, -1})
      for (int e2 : {1, -1})
        for (int a = -10; a <= 10; ++a) {
          auto r = consistency_check(make_pi3(Int(a), e, e1, e2));
          CHECK(r.consistent);
        }
}

TEST_CASE("trivial data is consistent at every height") {
  for (int n = 1; n <= 6; ++n) CHECK(consistency_check(TowerPresentation::trivial(n)).consistent);
}

TEST_CASE("the height-4 overlap counterexample") {
  // s2 s3 s2^-1 = s4 s3 and s1 s4 s1^-1 = s4^-1, all other relations trivial:
  // conjugating the first relation by s1 flips the s4 exponent on one side.
  TowerPresentation p = TowerPresentation::trivial(4);
  p.set_tail_entry(2, 3, 4, Int(1));
  p.set_eps(1, 4, -1);
  auto r = consistency_check(p);
  REQUIRE_FALSE(r.consistent);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->i == 1);
  CHECK(r.witness->j == 2);
  CHECK(r.witness->k == 3);
  CHECK(r.witness->lhs == NormalForm(std::vector<Int>{Int(0), Int(0), Int(1), Int(1)}));
  CHECK(r.witness->rhs == NormalForm(std::vector<Int>{Int(0), Int(0), Int(1), Int(-1)}));
  CHECK_THROWS_AS(require_consistent(p), InconsistencyError);
}

TEST_CASE("constructed seeds and their scrambles stay consistent") {
  towerpc::testing::Rng rng(20250810);
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 25; ++trial) {
      CHECK(consistency_check(towerpc::testing::random_consistent(rng, n)).consistent);
      if (n >= 3)
        CHECK(consistency_check(towerpc::testing::random_top_tail_consistent(rng, n)).consistent);
    }
  }
}
