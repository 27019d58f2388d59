#include <algorithm>

#include "doctest.h"
#include "pdel/complex_algebra.hpp"
#include "pdel/eval.hpp"
#include "pdel/generators.hpp"
#include "pdel/parser.hpp"
#include "test_helpers.hpp"

using namespace pdel;
using namespace pdel::testing;

namespace {

/// Fig-5-style APE-model on the up-set algebra: one cell, investor weights.
ApeModel upset_model(std::shared_ptr<const EventLibrary> events = nullptr) {
  auto A = std::make_shared<Eha>();
  A->lat = upset_lattice_v();
  A->agents = {"i"};
  A->diamond = {{0, 4, 4, 4, 4}};
  A->box = {{0, 0, 0, 0, 4}};
  IMeasure m;
  m.agent = "i";
  m.values = {rat(0), rat(3, 10), rat(1, 10), rat(4, 10), rat(1)};
  return make_ape_model(A, {m}, {{"p", 1}}, std::move(events));
}

EventStructureL three_event_structure() {
  EventStructureL E;
  E.name = "X";
  E.events = {"e1", "e2", "e3"};
  E.agents = {"i"};
  E.rel = {{{0, 1, 1}, {rat(1), rat(9, 10), rat(1, 10)}}};
  E.phi = {parse_formula("true"), parse_formula("p"), parse_formula("~p")};
  E.phi_order = {{1, 0}, {2, 0}};
  E.pre = {
      {rat(1, 10), rat(1, 2), rat(2, 5)},
      {rat(3, 10), rat(3, 5), rat(1, 10)},
      {rat(1, 100), rat(39, 100), rat(3, 5)},
  };
  E.sub.assign(3, Substitution{});
  return E;
}

Interp interp_on(const ApeModel& M) {
  return [&M](const Formula& f) { return eval_algebraic(M, f); };
}

}  // namespace

TEST_CASE("translation interprets the precondition forest") {
  ApeModel M = upset_model();
  EventStructureL E = three_event_structure();
  EventStructureA EA = translate_event(E, M, interp_on(M));

  CHECK(EA.phi.elems[0] == TableAlgebra::wrap(4));  // top
  CHECK(EA.phi.elems[1] == TableAlgebra::wrap(1));  // p
  CHECK(EA.phi.elems[2] == TableAlgebra::wrap(2));  // ~p, the up-set {s2}
  CHECK(EA.phi.below[1][0] == 1);
  CHECK(EA.phi.below[2][0] == 1);
  CHECK(EA.phi.below[1][2] == 0);
  CHECK(EA.phi.mb(0) == std::vector<int>{1, 2});
}

TEST_CASE("classical antichains have no order") {
  Rng rng(59);
  PesModel M = random_pes(rng, 4, 2, 10);
  EventStructureL E = random_classical_event(rng, M, 3);
  auto lib = std::make_shared<EventLibrary>();
  (*lib)[E.name] = E;
  ApeModel plus = complex_algebra(M, lib);
  EventStructureA EA = translate_event(E, plus, interp_on(plus));
  for (int a = 0; a < EA.phi.size(); ++a) {
    CHECK(EA.phi.mb(a).empty());
    for (int b = 0; b < EA.phi.size(); ++b)
      if (EA.phi.elems[a] != EA.phi.elems[b]) CHECK(!EA.phi.below[a][b]);
  }
}

TEST_CASE("co-extensional preconditions become ordered copies") {
  ApeModel M = upset_model();
  EventStructureL E;
  E.name = "C";
  E.events = {"e1", "e2"};
  E.agents = {"i"};
  E.rel = {{{0, 0}, {rat(1, 2), rat(1, 2)}}};
  E.phi = {parse_formula("p"), parse_formula("p & p")};
  E.pre = {{rat(1, 2), rat(1, 2)}, {rat(1, 3), rat(2, 3)}};
  E.sub.assign(2, Substitution{});

  EventStructureA EA = translate_event(E, M, interp_on(M));
  CHECK(EA.phi.elems[0] == EA.phi.elems[1]);
  CHECK(EA.phi.below[0][1] == 1);
  CHECK(EA.phi.below[1][0] == 0);
  CHECK(EA.phi.mb(1) == std::vector<int>{0});
}

TEST_CASE("forest violations are rejected") {
  // overlapping incomparable interpretations: {x,y} against {y,z}
  Eha P = powerset_eha(3, {0, 0, 0});
  auto PA = std::make_shared<Eha>(P);
  IMeasure m;
  m.agent = "i";
  m.values.assign(8, std::nullopt);
  for (int x = 0; x < 8; ++x) m.values[x] = rat(__builtin_popcount(x), 3);
  ApeModel MP = make_ape_model(PA, {m}, {{"p", 0b011}, {"q", 0b110}});

  EventStructureL E;
  E.name = "B";
  E.events = {"e"};
  E.agents = {"i"};
  E.rel = {{{0}, {rat(1)}}};
  E.phi = {parse_formula("p"), parse_formula("q")};
  E.pre = {{rat(1)}, {rat(1)}};
  E.sub.assign(1, Substitution{});
  CHECK_THROWS_AS(translate_event(E, MP, interp_on(MP)), ForestViolation);
}

TEST_CASE("pre zeros must propagate upward") {
  ApeModel M = upset_model();
  EventStructureL E = three_event_structure();
  // pre(e1|p) = 0 while the weaker member keeps pre(e1|top) > 0
  E.pre[1][0] = rat(0);
  E.pre[1][1] = rat(7, 10);
  E.pre[1][2] = rat(3, 10);
  CHECK_THROWS_AS(translate_event(E, M, interp_on(M)), ForestViolation);
}

TEST_CASE("one-event products are isomorphic to the base") {
  ApeModel M = upset_model();
  EventStructureL V;
  V.name = "V";
  V.events = {"e"};
  V.agents = {"i"};
  V.rel = {{{0}, {rat(1)}}};
  V.phi = {top()};
  V.pre = {{rat(1)}};
  V.sub.assign(1, Substitution{});
  EventStructureA EA = translate_event(V, M, interp_on(M));
  ProductAlgebra prod(M.structure->algebra(), EA.eventCount, EA.rel);

  const AlgebraOps& A = *M.structure->algebra();
  for (const Elem& x : A.carrier()) {
    CHECK(prod.dia(0, prod.constant(x)) == prod.constant(A.dia(0, x)));
    CHECK(prod.box(0, prod.constant(x)) == prod.constant(A.box(0, x)));
  }
}

TEST_CASE("product i-minimals are the one-cell tuples") {
  Rng rng(61);
  for (int t = 0; t < 50; ++t) {
    auto A = random_eha(rng, 3, 2);
    ApeModel M = make_ape_model(
        A, {random_measure(rng, *A, 0), random_measure(rng, *A, 1)}, {{"p", 0}});

    EventStructureL E;
    E.name = "E";
    int nE = rng.between(1, 3);
    for (int e = 0; e < nE; ++e) E.events.push_back("e" + std::to_string(e));
    E.agents = A->agents;
    for (int i = 0; i < 2; ++i) {
      AgentDist d;
      d.cell.resize(nE);
      int cells = rng.between(1, nE);
      for (int e = 0; e < nE; ++e) d.cell[e] = e < cells ? e : rng.upto(cells);
      std::map<int, int> sizes;
      for (int e = 0; e < nE; ++e) sizes[d.cell[e]]++;
      d.p.assign(nE, rat(0));
      for (auto& [c, size] : sizes) {
        auto w = rng.distribution(size, 10);
        int at = 0;
        for (int e = 0; e < nE; ++e)
          if (d.cell[e] == c) d.p[e] = w[at++];
      }
      E.rel.push_back(std::move(d));
    }
    E.phi = {top()};
    E.pre = {std::vector<Rational>(nE, rat(0))};
    auto w = rng.distribution(nE, 10);
    for (int e = 0; e < nE; ++e) E.pre[0][e] = w[e];
    E.sub.assign(nE, Substitution{});

    EventStructureA EA = translate_event(E, M, interp_on(M));
    ProductAlgebra prod(M.structure->algebra(), EA.eventCount, EA.rel);
    for (int i = 0; i < 2; ++i) {
      auto fast = prod.i_minimal(i);
      auto brute = i_minimal_by_definition(prod, i);
      std::sort(fast.begin(), fast.end());
      std::sort(brute.begin(), brute.end());
      REQUIRE(fast == brute);
    }
  }
}

TEST_CASE("pre-bar") {
  ApeModel M = upset_model();
  EventStructureL E = three_event_structure();
  EventStructureA EA = translate_event(E, M, interp_on(M));
  ProductAlgebra prod(M.structure->algebra(), EA.eventCount, EA.rel);
  Elem pb = pre_bar(EA, prod);
  for (int e = 0; e < 3; ++e)
    CHECK(prod.coordinate(pb, e) == TableAlgebra::wrap(4));  // every row positive

  // drive pre(e1|~p) and pre(e1|top) to zero: e1's only admissible member is p
  EventStructureL single = three_event_structure();
  single.pre = {
      {rat(0), rat(1, 2), rat(1, 2)},
      {rat(1, 2), rat(1, 4), rat(1, 4)},
      {rat(0), rat(1, 2), rat(1, 2)},
  };
  EventStructureA SA = translate_event(single, M, interp_on(M));
  Elem pb2 = pre_bar(SA, prod);
  CHECK(prod.coordinate(pb2, 0) == TableAlgebra::wrap(1));
}

TEST_CASE("intermediate premeasure is modular below each cell") {
  Rng rng(67);
  for (int t = 0; t < 30; ++t) {
    ApeModel M = random_ape_model(rng, {});
    const EventStructureL& E = M.events->begin()->second;
    EventStructureA EA = translate_event(E, M, interp_on(M));
    auto inter = std::make_shared<IntermediateStructure>(M.structure, EA);
    const ProductAlgebra& prod = *inter->product();

    CHECK(inter->measure(0, prod.bottom()) == rat(0));
    for (int i = 0; i < prod.agent_count(); ++i) {
      MeasureReport rep = validate_structure(*inter, i, /*strict=*/false);
      REQUIRE(rep.ok());
    }
  }
}

TEST_CASE("updated structures are APE-structures") {
  Rng rng(71);
  for (int t = 0; t < 40; ++t) {
    ApeModel M = random_ape_model(rng, {});
    const EventStructureL& E = M.events->begin()->second;
    EventStructureA EA = translate_event(E, M, interp_on(M));
    auto ustr = update_structure(M.structure, EA);
    for (int i = 0; i < ustr->algebra()->agent_count(); ++i)
      REQUIRE(validate_structure(*ustr, i, /*strict=*/true).ok());
  }
}

TEST_CASE("updated i-minimals match the generic definition") {
  Rng rng(107);
  for (int t = 0; t < 25; ++t) {
    ApeModel M = random_ape_model(rng, {});
    const EventStructureL& E = M.events->begin()->second;
    EventStructureA EA = translate_event(E, M, interp_on(M));
    auto ustr = update_structure(M.structure, EA);
    const UpdatedAlgebra& ualg = *ustr->updated_algebra();
    for (int i = 0; i < ualg.agent_count(); ++i) {
      auto fast = ualg.i_minimal(i);
      auto brute = i_minimal_by_definition(ualg, i);
      std::sort(fast.begin(), fast.end());
      std::sort(brute.begin(), brute.end());
      REQUIRE(fast == brute);
    }
  }
}

TEST_CASE("intermediate premeasure is constant on quotient classes") {
  Rng rng(109);
  for (int t = 0; t < 20; ++t) {
    ApeModel M = random_ape_model(rng, {});
    const EventStructureL& E = M.events->begin()->second;
    EventStructureA EA = translate_event(E, M, interp_on(M));
    auto inter = std::make_shared<IntermediateStructure>(M.structure, EA);
    const ProductAlgebra& prod = *inter->product();
    Elem pb = pre_bar(EA, prod);
    for (int i = 0; i < prod.agent_count(); ++i)
      for (const Elem& cell : prod.i_minimal(i))
        for (const Elem& g : prod.downset(cell))
          REQUIRE(inter->measure(i, g) == inter->measure(i, prod.meet(g, pb)));
  }
}

TEST_CASE("identity update is isomorphic") {
  ApeModel M = upset_model();
  EventStructureL V;
  V.name = "V";
  V.events = {"e"};
  V.agents = {"i"};
  V.rel = {{{0}, {rat(1)}}};
  V.phi = {top()};
  V.pre = {{rat(1)}};
  V.sub.assign(1, Substitution{});

  AlgebraicUpdateResult r = update_model(M, V, interp_on(M));
  const AlgebraOps& A = *M.structure->algebra();
  const auto& ualg = *r.structure->updated_algebra();
  for (const Elem& x : A.carrier()) {
    Elem lifted = ualg.product().constant(x);
    CHECK(ualg.project(lifted) == lifted);
    if (M.structure->in_domain(0, x))
      CHECK(r.structure->measure(0, lifted) == M.structure->measure(0, x));
  }
  CHECK(r.model.valuation.at("p") == ualg.product().constant(TableAlgebra::wrap(1)));
}

TEST_CASE("substituted atoms take the event-wise interpretation") {
  // classical reading of the art scenario: discrete order, powerset algebra
  PesModel M;
  M.states = {"s0", "s1", "s2"};
  M.agents = {"a", "i", "g"};
  AgentDist one{{0, 0, 0}, {rat(3, 5), rat(3, 10), rat(1, 10)}};
  M.rel = {one, one, one};
  M.valuation["p"] = 0b010;
  M.valuation["apply"] = 0;
  M.valuation["exhibit"] = 0;
  validate_pes(M);

  EventStructureL E;
  E.name = "X";
  E.events = {"e1", "e2", "e3"};
  E.agents = {"a", "i", "g"};
  AgentDist discrete{{0, 1, 2}, {rat(1), rat(1), rat(1)}};
  AgentDist investor{{0, 1, 1}, {rat(1), rat(9, 10), rat(1, 10)}};
  E.rel = {discrete, investor, discrete};
  E.phi = {parse_formula("true"), parse_formula("p"), parse_formula("~p")};
  E.phi_order = {{1, 0}, {2, 0}};
  E.pre = {
      {rat(1, 10), rat(1, 2), rat(2, 5)},
      {rat(3, 10), rat(3, 5), rat(1, 10)},
      {rat(1, 100), rat(39, 100), rat(3, 5)},
  };
  E.sub.resize(3);
  E.sub[0] = Substitution({{"apply", top()}, {"exhibit", top()}});
  E.sub[1] = Substitution({{"apply", top()}, {"exhibit", bot()}});
  E.sub[2] = Substitution({{"apply", bot()}, {"exhibit", bot()}});

  ApeModel plus = complex_algebra(M, nullptr);
  AlgebraicUpdateResult r = update_model(plus, E, interp_on(plus));
  const auto& prod = r.structure->updated_algebra()->product();

  Elem applyVal = r.model.valuation.at("apply");
  Mask full = 0b111;
  CHECK(PowersetAlgebra::mask(prod.coordinate(applyVal, 0)) == full);
  CHECK(PowersetAlgebra::mask(prod.coordinate(applyVal, 1)) == full);
  CHECK(PowersetAlgebra::mask(prod.coordinate(applyVal, 2)) == 0);

  Elem exhibitVal = r.model.valuation.at("exhibit");
  CHECK(PowersetAlgebra::mask(prod.coordinate(exhibitVal, 0)) == full);
  CHECK(PowersetAlgebra::mask(prod.coordinate(exhibitVal, 1)) == 0);
}

TEST_CASE("degenerate update is rejected") {
  Eha P = powerset_eha(1, {0});
  auto PA = std::make_shared<Eha>(P);
  IMeasure m;
  m.agent = "i";
  m.values.assign(2, std::nullopt);
  m.values[0] = rat(0);
  m.values[1] = rat(1);
  ApeModel M = make_ape_model(PA, {m}, {{"p", 0}});

  EventStructureL E;
  E.name = "D";
  E.events = {"e"};
  E.agents = {"i"};
  E.rel = {{{0}, {rat(1)}}};
  E.phi = {bot()};
  E.pre = {{rat(1)}};
  E.sub.assign(1, Substitution{});
  CHECK_THROWS_AS(update_model(M, E, interp_on(M)), DegenerateQuotient);
}
