#include "doctest.h"
#include "pdel/generators.hpp"
#include "test_helpers.hpp"

using namespace pdel;
using namespace pdel::testing;

TEST_CASE("one-point lattice") {
  FiniteLattice L = FiniteLattice::build(1, {});
  CHECK(L.bottom() == L.top());
  CHECK(L.meet(0, 0) == 0);
  CHECK(L.implies(0, 0) == L.top());
}

TEST_CASE("up-set lattice of the three-state poset") {
  FiniteLattice L = upset_lattice_v();
  CHECK(L.size() == 5);
  CHECK(L.bottom() == 0);
  CHECK(L.top() == 4);
  CHECK(L.join(1, 2) == 3);
  CHECK(L.meet(1, 2) == 0);

  // distributivity, by brute force over all 125 triples
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int c = 0; c < 5; ++c)
        CHECK(L.meet(a, L.join(b, c)) == L.join(L.meet(a, b), L.meet(a, c)));

  // implies({s1}, {}) is the join of everything disjoint from {s1}
  CHECK(L.implies(1, 0) == 2);
  for (int x = 0; x < 5; ++x) {
    CHECK(L.implies(L.bottom(), x) == L.top());
    CHECK(L.implies(L.top(), x) == x);
  }

  // residuation on every triple
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int c = 0; c < 5; ++c)
        CHECK(L.leq(c, L.implies(a, b)) == L.leq(L.meet(c, a), b));
}

TEST_CASE("pentagon is rejected") {
  // bottom 0, x=1 < z=2, y=3, top 4
  std::vector<std::pair<int, int>> leq = {{0, 1}, {0, 2}, {0, 3}, {0, 4},
                                          {1, 2}, {1, 4}, {2, 4}, {3, 4}};
  CHECK_THROWS_AS(FiniteLattice::build(5, leq), LatticeError);
  try {
    FiniteLattice::build(5, leq);
  } catch (const LatticeError& e) {
    CHECK(e.kind == LatticeErrorKind::NotDistributive);
  }
}

TEST_CASE("diamond four-element Boolean algebra is fine") {
  std::vector<std::pair<int, int>> leq = {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}};
  FiniteLattice L = FiniteLattice::build(4, leq);
  CHECK(L.join(1, 2) == 3);
  CHECK(L.implies(1, 0) == 2);  // Boolean complement
}

TEST_CASE("order defects are reported") {
  CHECK_THROWS_AS(FiniteLattice::build(2, {{0, 1}, {1, 0}}), LatticeError);
  // two incomparable points, no common bound
  try {
    FiniteLattice::build(2, {});
    CHECK(false);
  } catch (const LatticeError& e) {
    CHECK(e.kind == LatticeErrorKind::JoinMeetMissing);
  }
  // missing transitivity
  CHECK_THROWS_AS(FiniteLattice::build(4, {{0, 1}, {1, 2}, {0, 3}, {3, 2}, {1, 3}}),
                  LatticeError);
}

TEST_CASE("join irreducibles generate") {
  FiniteLattice L = upset_lattice_v();
  const auto& ji = L.join_irreducibles();
  CHECK(ji == std::vector<int>{1, 2, 4});
  for (int a = 0; a < L.size(); ++a) {
    int acc = L.bottom();
    for (int j : ji)
      if (L.leq(j, a)) acc = L.join(acc, j);
    CHECK(acc == a);
  }
}

TEST_CASE("residuation holds on random lattices") {
  Rng rng(5);
  for (int k = 0; k < 20; ++k) {
    auto A = random_eha(rng, 4, 1);
    const auto& L = A->lat;
    for (int a = 0; a < L.size(); ++a)
      for (int b = 0; b < L.size(); ++b)
        for (int c = 0; c < L.size(); ++c)
          REQUIRE(L.leq(c, L.implies(a, b)) == L.leq(L.meet(c, a), b));
  }
}
