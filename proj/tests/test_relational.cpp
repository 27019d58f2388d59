#include "doctest.h"
#include "pdel/art_demo.hpp"
#include "pdel/generators.hpp"
#include "pdel/parser.hpp"

using namespace pdel;

namespace {

/// Three classical states in one cell, investor-style weights, p at s1.
PesModel fig_model_classical() {
  PesModel m;
  m.states = {"s0", "s1", "s2"};
  m.agents = {"i"};
  m.rel = {{{0, 0, 0}, {rat(3, 5), rat(3, 10), rat(1, 10)}}};
  m.valuation["p"] = 0b010;
  m.valuation["q"] = 0;
  validate_pes(m);
  return m;
}

EventLibrary no_events;

}  // namespace

TEST_CASE("model validation rejects bad distributions") {
  PesModel m = fig_model_classical();
  m.rel[0].p[0] = rat(1, 2);
  CHECK_THROWS_AS(validate_pes(m), ValidationError);
}

TEST_CASE("pre given a state") {
  PesModel M = fig_model_classical();
  EventStructureL E;
  E.name = "E";
  E.events = {"e1", "e2", "e3"};
  E.agents = {"i"};
  E.rel = {{{0, 1, 1}, {rat(1), rat(9, 10), rat(1, 10)}}};
  E.phi = {parse_formula("p"), parse_formula("~p")};
  E.pre = {{rat(3, 10), rat(3, 5), rat(1, 10)}, {rat(1, 100), rat(39, 100), rat(3, 5)}};
  E.sub.assign(3, Substitution{});
  validate_event(E);

  CHECK(pre_given_state(M, no_events, E, 0, 1) == rat(3, 10));   // s1 |= p
  CHECK(pre_given_state(M, no_events, E, 2, 0) == rat(3, 5));    // s0 |= ~p classically
  // a state satisfying no member yields zero
  E.phi = {parse_formula("q"), parse_formula("p & q")};
  CHECK(pre_given_state(M, no_events, E, 0, 0) == rat(0));
  // overlapping members are flagged
  E.phi = {parse_formula("p"), parse_formula("p | q")};
  CHECK_THROWS_AS(pre_given_state(M, no_events, E, 0, 1), AmbiguousPrecondition);
}

TEST_CASE("vacuous announcement is an isomorphism") {
  PesModel M = fig_model_classical();
  EventStructureL E;
  E.name = "E";
  E.events = {"e"};
  E.agents = {"i"};
  E.rel = {{{0}, {rat(1)}}};
  E.phi = {top()};
  E.pre = {{rat(1)}};
  E.sub.assign(1, Substitution{});
  validate_event(E);

  ClassicalUpdateResult r = classical_update(M, no_events, E);
  REQUIRE(r.updated.size() == M.size());
  for (int s = 0; s < M.size(); ++s) {
    CHECK(r.updated.rel[0].p[s] == M.rel[0].p[s]);
    CHECK(((r.updated.valuation.at("p") >> s) & 1) == ((M.valuation.at("p") >> s) & 1));
  }
}

TEST_CASE("announcement of p restricts and renormalises") {
  // Taking Phi = {p}: states outside p satisfy no precondition and drop out.
  PesModel M;
  M.states = {"s0", "s1", "s2"};
  M.agents = {"i"};
  M.rel = {{{0, 0, 0}, {rat(1, 6), rat(1, 3), rat(1, 2)}}};
  M.valuation["p"] = 0b110;
  validate_pes(M);

  EventStructureL E;
  E.name = "E";
  E.events = {"e"};
  E.agents = {"i"};
  E.rel = {{{0}, {rat(1)}}};
  E.phi = {parse_formula("p")};
  E.pre = {{rat(1)}};
  E.sub.assign(1, Substitution{});

  ClassicalUpdateResult r = classical_update(M, no_events, E);
  REQUIRE(r.updated.size() == 2);
  // weights 1/3, 1/2 renormalise over mass 5/6
  CHECK(r.updated.rel[0].p[0] == rat(2, 5));
  CHECK(r.updated.rel[0].p[1] == rat(3, 5));
}

TEST_CASE("empty update is an error") {
  PesModel M = fig_model_classical();
  EventStructureL E;
  E.name = "E";
  E.events = {"e"};
  E.agents = {"i"};
  E.rel = {{{0}, {rat(1)}}};
  E.phi = {parse_formula("q")};  // q holds nowhere in this model
  E.pre = {{rat(1)}};
  E.sub.assign(1, Substitution{});
  CHECK_THROWS_AS(classical_update(M, no_events, E), EmptyUpdate);
}

TEST_CASE("intermediate weights follow the product formula") {
  Rng rng(23);
  for (int t = 0; t < 100; ++t) {
    PesModel M = random_pes(rng, 4, 2, 12);
    EventStructureL E = random_classical_event(rng, M, 3);
    EventLibrary lib{{E.name, E}};
    ClassicalUpdateResult r = classical_update(M, lib, E);
    for (size_t i = 0; i < M.agents.size(); ++i) {
      int ea = E.agent_index(M.agents[i]);
      for (int s = 0; s < M.size(); ++s)
        for (int e = 0; e < E.event_count(); ++e) {
          // independent recomputation of pre(e|s)
          Rational pre = 0;
          for (size_t k = 0; k < E.phi.size(); ++k)
            if (eval_classical(M, lib, s, E.phi[k])) pre = E.pre[k][e];
          REQUIRE(r.intermediate.weight[i][r.intermediate.pair(s, e)] ==
                  M.rel[i].p[s] * E.rel[ea].p[e] * pre);
        }
    }
  }
}

TEST_CASE("model measure") {
  PesModel M = fig_model_classical();
  CHECK(model_measure(M, no_events, 0, 0, top()) == rat(1));
  CHECK(model_measure(M, no_events, 0, 0, parse_formula("p")) == rat(3, 10));
}

TEST_CASE("measure modularity on random models") {
  Rng rng(29);
  EventLibrary lib;
  for (int t = 0; t < 60; ++t) {
    PesModel R = random_pes(rng, 4, 2, 12);
    Formula phi = parse_formula("p | q");
    Formula psi = parse_formula("~p");
    for (int s = 0; s < R.size(); ++s)
      for (size_t i = 0; i < R.agents.size(); ++i) {
        Rational lhs = model_measure(R, lib, int(i), s, phi) +
                       model_measure(R, lib, int(i), s, psi);
        Rational rhs = model_measure(R, lib, int(i), s, disj(phi, psi)) +
                       model_measure(R, lib, int(i), s, conj(phi, psi));
        REQUIRE(lhs == rhs);
      }
  }
}

TEST_CASE("classical satisfaction") {
  PesModel M = fig_model_classical();
  for (int s = 0; s < 3; ++s) {
    CHECK(eval_classical(M, no_events, s, top()));
    CHECK(!eval_classical(M, no_events, s, bot()));
  }
  CHECK(eval_classical(M, no_events, 0, parse_formula("pr[i](1*mu(p) >= 3/10)")));
  CHECK(!eval_classical(M, no_events, 0, parse_formula("pr[i](1*mu(p) > 3/10)")));
  CHECK_THROWS_AS(eval_classical(M, no_events, 0, atom("nope")), UnknownAtom);
  CHECK_THROWS_AS(eval_classical(M, no_events, 0, parse_formula("[Nope,e]p")),
                  UnknownEventName);
}

TEST_CASE("dynamic clause agrees with its definition") {
  Rng rng(31);
  for (int t = 0; t < 100; ++t) {
    PesModel M = random_pes(rng, 3, 2, 10);
    EventStructureL E = random_classical_event(rng, M, 2);
    EventLibrary lib{{E.name, E}};
    int e = rng.upto(E.event_count());
    int s = rng.upto(M.size());
    Formula body = rng.chance(1, 2) ? parse_formula("p | q") : parse_formula("dia[i]p");
    Formula dyn = dyn_dia(E.name, E.events[e], body);
    Formula dynBox = dyn_box(E.name, E.events[e], body);

    bool preHolds = pre_given_state(M, lib, E, e, s) > 0;
    bool inner = false;
    if (preHolds) {
      ClassicalUpdateResult r = classical_update(M, lib, E);
      inner = eval_classical(r.updated, lib, r.pair_index[r.intermediate.pair(s, e)], body);
    }
    REQUIRE(eval_classical(M, lib, s, dyn) == (preHolds && inner));
    REQUIRE(eval_classical(M, lib, s, dynBox) == (!preHolds || inner));
  }
}

TEST_CASE("intuitionistic satisfaction on the fig-5 model") {
  IntKripkeModel M = art_model();
  int s0 = 0, s1 = 1, s2 = 2;
  CHECK(eval_int_static(M, s1, parse_formula("p")));
  CHECK(!eval_int_static(M, s0, parse_formula("p")));
  CHECK(!eval_int_static(M, s0, parse_formula("~p")));
  CHECK(eval_int_static(M, s2, parse_formula("~p")));
  CHECK_THROWS_AS(eval_int_static(M, s0, parse_formula("dia[i]p")), UnsupportedConnective);
}

namespace {

/// Independent set-level oracle for the static intuitionistic fragment:
/// extensions computed as up-sets, implication as the largest up-set inside
/// the classical implication.
Mask int_extension(const IntKripkeModel& M, const Formula& f) {
  const int n = M.m.size();
  Mask full = (Mask(1) << n) - 1;
  switch (f->kind) {
    case Conn::Atom: return M.m.valuation.at(f->name);
    case Conn::Bot: return 0;
    case Conn::Top: return full;
    case Conn::And: return int_extension(M, f->child[0]) & int_extension(M, f->child[1]);
    case Conn::Or: return int_extension(M, f->child[0]) | int_extension(M, f->child[1]);
    case Conn::Imp: {
      Mask classical = (~int_extension(M, f->child[0]) | int_extension(M, f->child[1])) & full;
      Mask out = 0;
      for (int s = 0; s < n; ++s)
        if ((M.up[s] & classical) == M.up[s]) out |= Mask(1) << s;
      return out;
    }
    default: throw UnsupportedConnective("oracle");
  }
}

std::vector<Formula> depth_two_formulas() {
  std::vector<Formula> depth1 = {atom("p"), top(), bot()};
  std::vector<Formula> out = depth1;
  for (const auto& a : depth1)
    for (const auto& b : depth1) {
      out.push_back(conj(a, b));
      out.push_back(disj(a, b));
      out.push_back(imp(a, b));
    }
  std::vector<Formula> two = out;
  for (const auto& a : out)
    for (const auto& b : depth1) {
      two.push_back(imp(a, b));
      two.push_back(imp(b, a));
    }
  return two;
}

}  // namespace

TEST_CASE("static clauses agree with the set-level oracle, exhaustively") {
  IntKripkeModel M = art_model();
  for (const auto& f : depth_two_formulas()) {
    Mask oracle = int_extension(M, f);
    for (int s = 0; s < M.m.size(); ++s)
      REQUIRE(eval_int_static(M, s, f) == bool((oracle >> s) & 1));
  }
}

TEST_CASE("persistence of static satisfaction") {
  Rng rng(37);
  for (int t = 0; t < 1000; ++t) {
    // random intuitionistic model: random order, up-closed random valuation
    PesModel base = random_pes(rng, 4, 1, 6);
    IntKripkeModel M;
    M.m = base;
    const int n = base.size();
    M.up.assign(n, 0);
    for (int s = 0; s < n; ++s) M.up[s] |= Mask(1) << s;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (rng.chance(1, 3)) M.up[a] |= Mask(1) << b;
    for (int k = 0; k < n; ++k)
      for (int s = 0; s < n; ++s)
        if (M.leq(s, k)) M.up[s] |= M.up[k];
    for (auto& [atomName, mask] : M.m.valuation) {
      Mask closed = 0;
      for (int s = 0; s < n; ++s)
        if ((mask >> s) & 1) closed |= M.up[s];
      mask = closed;
    }
    validate_int(M);

    std::vector<Formula> pool = depth_two_formulas();
    const Formula& f = pool[rng.upto(static_cast<int>(pool.size()))];
    for (int s = 0; s < n; ++s)
      if (eval_int_static(M, s, f))
        for (int u = 0; u < n; ++u)
          if (M.leq(s, u)) REQUIRE(eval_int_static(M, u, f));
  }
}

TEST_CASE("coproduct weights by recursion") {
  IntKripkeModel M = art_model();
  EventStructureL E = art_event();
  int investor = M.m.agent_index("i");

  CHECK(int_coproduct_weights(M, E, investor, 1, 0) == rat(9, 100));
  CHECK(int_coproduct_weights(M, E, investor, 2, 0) == rat(1, 1000));
  CHECK(int_coproduct_weights(M, E, investor, 0, 0) == rat(6, 100));

  // single vacuous event: the recursion telescopes to the state weights
  EventStructureL V;
  V.name = "V";
  V.events = {"e"};
  V.agents = {"a", "i", "g"};
  V.rel = {{{0}, {rat(1)}}, {{0}, {rat(1)}}, {{0}, {rat(1)}}};
  V.phi = {top()};
  V.pre = {{rat(1)}};
  V.sub.assign(1, Substitution{});
  for (int s = 0; s < 3; ++s)
    CHECK(int_coproduct_weights(M, V, investor, s, 0) == M.m.rel[investor].p[s]);
}

TEST_CASE("normalised update cells sum to one") {
  IntKripkeModel M = art_model();
  EventStructureL E = art_event();
  IntUpdateResult r = int_update(M, E);
  for (size_t i = 0; i < r.model.m.agents.size(); ++i) {
    std::map<int, Rational> sums;
    for (size_t x = 0; x < r.pair_of.size(); ++x)
      sums[r.model.m.rel[i].cell[x]] += r.model.m.rel[i].p[x];
    for (auto& [cell, sum] : sums) CHECK(sum == rat(1));
  }
}

TEST_CASE("identity event leaves the intuitionistic model unchanged") {
  IntKripkeModel M = art_model();
  EventStructureL V;
  V.name = "V";
  V.events = {"e"};
  V.agents = {"a", "i", "g"};
  V.rel = {{{0}, {rat(1)}}, {{0}, {rat(1)}}, {{0}, {rat(1)}}};
  V.phi = {top()};
  V.pre = {{rat(1)}};
  V.sub.assign(1, Substitution{});

  IntUpdateResult r = int_update(M, V);
  REQUIRE(r.model.m.size() == 3);
  for (int s = 0; s < 3; ++s) {
    CHECK(r.model.m.rel[1].p[s] == M.m.rel[1].p[s]);
    CHECK(r.model.up[s] == M.up[s]);
  }
  CHECK(r.model.m.valuation.at("p") == M.m.valuation.at("p"));
}
