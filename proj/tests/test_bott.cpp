#include "doctest.h"

#include "test_support.hpp"
#include "towerpc/bott.hpp"
#include "towerpc/classify3.hpp"
#include "towerpc/consistency.hpp"
#include "towerpc/smith.hpp"

using namespace towerpc;

namespace {

// Scramble a Bott-form presentation by even triangular substitutions; the
// result is consistent, flat, and all-even by construction.
TowerPresentation scrambled_bott(towerpc::testing::Rng& rng, int n, int max_subs) {
  TowerPresentation seed = towerpc::testing::random_bott_signs(rng, n);
  std::uniform_int_distribution<int> dcount(1, max_subs);
  std::vector<GeneratorSubstitution> subs;
  const int count = dcount(rng);
  for (int s = 0; s < count; ++s)
    subs.push_back(towerpc::testing::random_substitution(rng, n, 3, /*even_only=*/true));
  return change_of_generators(seed, subs).presentation;
}

}  // namespace

TEST_CASE("to_bott_matrix") {
  SUBCASE("trivial data gives the zero matrix") {
    BottMatrix m = to_bott_matrix(TowerPresentation::trivial(4));
    CHECK(m == BottMatrix(4));
  }
  SUBCASE("B3 canonical parameters (0,-1,1,-1)") {
    BottMatrix m = to_bott_matrix(make_pi3(Int(0), -1, 1, -1));
    CHECK(m.entry[0][1] == 1);
    CHECK(m.entry[0][2] == 0);
    CHECK(m.entry[1][2] == 1);
  }
  SUBCASE("G2 canonical parameters (0,-1,-1,1)") {
    BottMatrix m = to_bott_matrix(make_pi3(Int(0), -1, -1, 1));
    CHECK(m.entry[0][1] == 1);
    CHECK(m.entry[0][2] == 1);
    CHECK(m.entry[1][2] == 0);
  }
  SUBCASE("nonzero tail is a form error") {
    CHECK_THROWS_AS(to_bott_matrix(make_pi3(Int(2), 1, 1, -1)), FormError);
  }
  SUBCASE("round trip through from_bott_matrix") {
    towerpc::testing::Rng rng(14);
    for (int n = 1; n <= 5; ++n) {
      TowerPresentation p = towerpc::testing::random_bott_signs(rng, n);
      CHECK(from_bott_matrix(to_bott_matrix(p)) == p);
    }
  }
}

TEST_CASE("bott_normalize basics") {
  SUBCASE("already normal: unchanged, empty substitution list") {
    towerpc::testing::Rng rng(5);
    for (int n = 1; n <= 5; ++n) {
      TowerPresentation p = towerpc::testing::random_bott_signs(rng, n);
      BottNormalization r = bott_normalize(p);
      CHECK(r.presentation == p);
      CHECK(r.substitutions.empty());
      CHECK(verify_isomorphism(p, r.presentation, r.witness).valid);
    }
  }
  SUBCASE("Pi(2,1,1,-1) normalizes to Pi(0,1,1,-1) via s1 -> s3^-1 s1") {
    TowerPresentation p = make_pi3(Int(2), 1, 1, -1);
    BottNormalization r = bott_normalize(p);
    CHECK(r.presentation == make_pi3(Int(0), 1, 1, -1));
    REQUIRE(r.substitutions.size() == 1);
    CHECK(r.substitutions[0].target == 1);
    CHECK(r.substitutions[0].prefix == NormalForm::generator(3, 3, Int(-1)));
    CHECK(verify_isomorphism(p, r.presentation, r.witness).valid);
    CHECK(r.matrix.entry[1][2] == 1);
  }
  SUBCASE("preconditions") {
    // odd tail
    CHECK_THROWS_AS(bott_normalize(make_pi3(Int(1), 1, 1, -1)), PreconditionError);
    // even but not flat: (1,1,1) with a != 0
    CHECK_THROWS_AS(bott_normalize(make_pi3(Int(2), 1, 1, 1)), PreconditionError);
    // inconsistent input
    TowerPresentation bad = TowerPresentation::trivial(4);
    bad.set_tail_entry(2, 3, 4, Int(1));
    bad.set_eps(1, 4, -1);
    CHECK_THROWS_AS(bott_normalize(bad), InconsistencyError);
  }
}

TEST_CASE("round trips recover a Bott form with verified witness") {
  towerpc::testing::Rng rng(900913);
  for (int n = 3; n <= 5; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      TowerPresentation scrambled = scrambled_bott(rng, n, 4);
      REQUIRE(is_rp1_tower(scrambled));
      BottNormalization r = bott_normalize(scrambled);
      for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
          for (const Int& a : r.presentation.tail(i, j)) CHECK(a == 0);
      CHECK(verify_isomorphism(scrambled, r.presentation, r.witness).valid);
      CHECK(consistency_check(r.presentation).consistent);
      // H1 and full b1 mod 2 preserved
      CHECK(abelianization(scrambled) == abelianization(r.presentation));
      CHECK(b1_mod_p(scrambled, Int(2)) == n);
      CHECK(b1_mod_p(r.presentation, Int(2)) == n);
      // squares commute in the output
      CHECK(is_flat(Collector(r.presentation)));
    }
  }
}

TEST_CASE("height-4 scramble with prescribed substitutions") {
  // start from a genuine Bott form and scramble by s1 -> s4^2 s1, s2 -> s4^-2 s2
  towerpc::testing::Rng rng(2024);
  TowerPresentation seed = towerpc::testing::random_bott_signs(rng, 4);
  GeneratorSubstitution u{1, NormalForm::generator(4, 4, Int(2))};
  GeneratorSubstitution v{2, NormalForm::generator(4, 4, Int(-2))};
  auto scrambled = change_of_generators(seed, {u, v}).presentation;
  BottNormalization r = bott_normalize(scrambled);
  CHECK(verify_isomorphism(scrambled, r.presentation, r.witness).valid);
  // the output is isomorphic to the seed; both are zero-tail forms
  CHECK(to_bott_matrix(r.presentation).n == 4);
}
