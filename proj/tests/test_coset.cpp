#include "doctest.h"

#include "test_support.hpp"
#include "towerpc/coset.hpp"

using namespace towerpc;

TEST_CASE("quotient orders at height 3") {
  for (int e : {1, -1})
    for (int e1 : {1, -1})
      for (int e2 : {1, -1})
        for (int a : {-7, -2, 0, 1, 4, 9}) {
          TowerPresentation p = make_pi3(Int(a), e, e1, e2);
          auto g = finite_quotient_order(p, QuotientKind::Gamma);
          REQUIRE(g.closed);
          CHECK(g.order == 8);
          auto l = finite_quotient_order(p, QuotientKind::Lambda);
          REQUIRE(l.closed);
          CHECK(l.order == 4);
        }
}

TEST_CASE("quotient orders for Z^n") {
  for (int n = 1; n <= 5; ++n) {
    TowerPresentation p = TowerPresentation::trivial(n);
    auto g = finite_quotient_order(p, QuotientKind::Gamma);
    REQUIRE(g.closed);
    CHECK(g.order == Int(1) << n);
    auto l = finite_quotient_order(p, QuotientKind::Lambda);
    REQUIRE(l.closed);
    CHECK(l.order == Int(1) << (n - 1));
  }
}

TEST_CASE("Klein bottle quotients") {
  TowerPresentation p(2);
  p.set_eps(1, 2, -1);
  CHECK(finite_quotient_order(p, QuotientKind::Gamma).order == 4);
  CHECK(finite_quotient_order(p, QuotientKind::Lambda).order == 2);
}

TEST_CASE("huge tail exponents reduce modulo the killed powers") {
  Int huge("1267650600228229401496703205376");  // 2^100
  TowerPresentation p = make_pi3(huge, 1, 1, 1);
  auto g = finite_quotient_order(p, QuotientKind::Gamma);
  REQUIRE(g.closed);
  CHECK(g.order == 8);
  TowerPresentation q = make_pi3(huge + 1, -1, 1, -1);
  auto l = finite_quotient_order(q, QuotientKind::Lambda);
  REQUIRE(l.closed);
  CHECK(l.order == 4);
}

TEST_CASE("table cap reports did-not-close") {
  TowerPresentation p = TowerPresentation::trivial(3);
  auto r = finite_quotient_order(p, QuotientKind::Gamma, 2);
  CHECK_FALSE(r.closed);
  CHECK(r.cap == 2);
}

TEST_CASE("complete tables are closed under every letter") {
  TowerPresentation p = make_pi3(Int(3), -1, -1, 1);
  CosetTable t = enumerate_cosets(p, QuotientKind::Gamma);
  REQUIRE(t.complete);
  CHECK(t.order == 8);
  CHECK(t.rows.size() == 8);
  for (const auto& row : t.rows) {
    REQUIRE(row.size() == 6);
    for (int x : row) {
      CHECK(x >= 0);
      CHECK(x < 8);
    }
  }
  // letters act as mutually inverse permutations
  for (int g = 0; g < 3; ++g)
    for (int c = 0; c < 8; ++c) CHECK(t.rows[t.rows[c][2 * g]][2 * g + 1] == c);
}

TEST_CASE("random consistent presentations have the expected quotient orders") {
  towerpc::testing::Rng rng(321321);
  for (int n = 3; n <= 5; ++n) {
    for (int trial = 0; trial < 15; ++trial) {
      TowerPresentation p = towerpc::testing::random_consistent(rng, n, 4, 2);
      auto g = finite_quotient_order(p, QuotientKind::Gamma);
      REQUIRE(g.closed);
      CHECK(g.order == Int(1) << n);
      auto l = finite_quotient_order(p, QuotientKind::Lambda);
      REQUIRE(l.closed);
      CHECK(l.order == Int(1) << (n - 1));
    }
  }
}
