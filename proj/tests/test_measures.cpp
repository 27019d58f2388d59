#include "doctest.h"
#include "pdel/generators.hpp"
#include "pdel/measures.hpp"
#include "test_helpers.hpp"

using namespace pdel;
using namespace pdel::testing;

namespace {

/// Counting measure on a single-cell powerset of k points.
IMeasure uniform_on_powerset(const Eha& A, int k) {
  IMeasure m;
  m.agent = A.agents[0];
  m.values.assign(A.size(), std::nullopt);
  for (int x = 0; x < A.size(); ++x) m.values[x] = rat(__builtin_popcount(x), k);
  return m;
}

}  // namespace

TEST_CASE("uniform counting measure validates strictly") {
  Eha A = powerset_eha(3, {0, 0, 0});
  IMeasure m = uniform_on_powerset(A, 3);
  CHECK(validate(m, A, true).ok());
}

TEST_CASE("broken strict monotonicity is reported") {
  Eha A = powerset_eha(3, {0, 0, 0});
  IMeasure m = uniform_on_powerset(A, 3);
  m.values[0b011] = m.values[0b001];  // mu({x}) == mu({x,y}) on a chain
  MeasureReport rep = validate(m, A, true);
  CHECK(!rep.ok());
  bool strictViolated = false;
  for (const auto& v : rep.violations) strictViolated = strictViolated || v.clause == "strict";
  CHECK(strictViolated);
  // as a premeasure the same table is also broken (modularity), never silent
  CHECK(!validate(m, A, false).ok());
}

TEST_CASE("domain must be exactly the cell downsets") {
  Eha A = powerset_eha(2, {0, 1});  // cells {x}, {y}
  IMeasure m;
  m.agent = "i";
  m.values.assign(4, std::nullopt);
  m.values[0] = rat(0);
  m.values[1] = rat(1);
  m.values[2] = rat(1);
  m.values[3] = rat(1);  // top is outside Min downset here
  MeasureReport rep = validate(m, A, true);
  CHECK(!rep.ok());
  CHECK(rep.violations.front().clause == "domain");
}

TEST_CASE("maximal members strictly below") {
  Eha A;
  A.lat = upset_lattice_v();
  A.agents = {"i"};
  A.diamond = {{0, 4, 4, 4, 4}};
  A.box = {{0, 0, 0, 0, 4}};

  PhiMultiset phi;
  phi.elems = {TableAlgebra::wrap(4), TableAlgebra::wrap(1), TableAlgebra::wrap(2)};
  phi.below = {{0, 0, 0}, {1, 0, 0}, {1, 0, 0}};
  CHECK(phi.mb(0) == std::vector<int>{1, 2});
  CHECK(phi.mb(1).empty());
  CHECK_THROWS_AS(phi.mb(5), MemberNotInPhi);

  PhiMultiset antichain;
  antichain.elems = {TableAlgebra::wrap(1), TableAlgebra::wrap(2)};
  antichain.below = {{0, 0}, {0, 0}};
  CHECK(antichain.mb(0).empty());
  CHECK(antichain.mb(1).empty());

  PhiMultiset copies;
  copies.elems = {TableAlgebra::wrap(1), TableAlgebra::wrap(1)};
  copies.below = {{0, 1}, {0, 0}};
  CHECK(copies.mb(1) == std::vector<int>{0});
}

TEST_CASE("derived premeasure mu^a") {
  Eha A;
  A.lat = upset_lattice_v();
  A.agents = {"i"};
  A.diamond = {{0, 4, 4, 4, 4}};
  A.box = {{0, 0, 0, 0, 4}};

  // investor weights 3/5, 3/10, 1/10 summed over up-sets
  IMeasure m;
  m.agent = "i";
  m.values = {rat(0), rat(3, 10), rat(1, 10), rat(4, 10), rat(1)};
  REQUIRE(validate(m, A, true).ok());
  auto F = make_ape(std::make_shared<Eha>(A), {m});

  PhiMultiset phi;  // top above the extensions of p and ~p
  phi.elems = {TableAlgebra::wrap(4), TableAlgebra::wrap(1), TableAlgebra::wrap(2)};
  phi.below = {{0, 0, 0}, {1, 0, 0}, {1, 0, 0}};

  // mu^top(top) = 1 - 3/10 - 1/10
  CHECK(mu_upper(*F, 0, phi, 0, TableAlgebra::wrap(4)) == rat(3, 5));
  // classical members have empty mb: mu^a(x) = mu(x /\ a)
  CHECK(mu_upper(*F, 0, phi, 1, TableAlgebra::wrap(4)) == rat(3, 10));
  // bottom maps to zero under every member
  for (int k = 0; k < 3; ++k)
    CHECK(mu_upper(*F, 0, phi, k, TableAlgebra::wrap(0)) == rat(0));

  CHECK_THROWS_AS(mu_upper(*F, 0, phi, 0, Elem{uint32_t(9)}), OutOfDomain);
}

TEST_CASE("mu^a locality below enlargements") {
  Rng rng(3);
  for (int t = 0; t < 40; ++t) {
    auto A = random_eha(rng, 4, 1);
    auto F = make_ape(A, {random_measure(rng, *A, 0)});
    const auto& L = A->lat;

    int member = rng.upto(L.size());
    if (member == L.bottom()) continue;
    PhiMultiset phi;
    phi.elems = {TableAlgebra::wrap(member)};
    phi.below = {{0}};
    for (int y = 0; y < L.size(); ++y) {
      if (!L.leq(member, y)) continue;
      for (int cell : i_minimal(*A, 0))
        for (int x = 0; x < L.size(); ++x)
          if (L.leq(x, cell))
            CHECK(mu_upper(*F, 0, phi, 0, TableAlgebra::wrap(x)) ==
                  mu_upper(*F, 0, phi, 0, TableAlgebra::wrap(L.meet(x, y))));
    }
  }
}

TEST_CASE("mu^a is an i-premeasure for every member") {
  Rng rng(19);
  for (int t = 0; t < 25; ++t) {
    auto A = random_eha(rng, 3, 1);
    auto F = make_ape(A, {random_measure(rng, *A, 0)});
    const auto& L = A->lat;

    // random two-member forest: x and its diamond (comparable), or x alone
    int x = rng.upto(L.size());
    if (x == L.bottom()) x = L.top();
    PhiMultiset phi;
    phi.elems = {TableAlgebra::wrap(x)};
    phi.below = {{0}};
    int up = A->dia(0, x);
    if (up != x) {
      phi.elems.push_back(TableAlgebra::wrap(up));
      phi.below = {{0, 1}, {0, 0}};
    }

    for (int member = 0; member < phi.size(); ++member) {
      auto mu = [&](int elem) {
        return mu_upper(*F, 0, phi, member, TableAlgebra::wrap(elem));
      };
      for (int cell : i_minimal(*A, 0)) {
        for (int b = 0; b < L.size(); ++b) {
          if (!L.leq(b, cell)) continue;
          REQUIRE(mu(b) >= 0);
          for (int c = 0; c < L.size(); ++c) {
            if (!L.leq(c, cell)) continue;
            if (L.leq(b, c)) REQUIRE(mu(b) <= mu(c));
            REQUIRE(mu(L.join(b, c)) + mu(L.meet(b, c)) == mu(b) + mu(c));
          }
        }
      }
      REQUIRE(mu(L.bottom()) == 0);
    }
  }
}

TEST_CASE("structure assembly validates everything") {
  Eha A = powerset_eha(2, {0, 0});
  A.agents = {"i"};
  IMeasure m = uniform_on_powerset(A, 2);
  CHECK_NOTHROW(make_ape(std::make_shared<Eha>(A), {m}));

  // missing agent
  Eha B = powerset_eha(2, {0, 0});
  B.agents = {"i", "j"};
  B.diamond.push_back(B.diamond[0]);
  B.box.push_back(B.box[0]);
  CHECK_THROWS_AS(make_ape(std::make_shared<Eha>(B), {m}), ConstructionError);
}

TEST_CASE("counting measure is a strict measure on random algebras") {
  Rng rng(17);
  for (int t = 0; t < 30; ++t) {
    auto A = random_eha(rng, 4, 2);
    for (int i = 0; i < A->agent_count(); ++i) {
      CHECK(validate(counting_measure(*A, i), *A, true).ok());
      CHECK(validate(random_measure(rng, *A, i), *A, true).ok());
    }
  }
}
