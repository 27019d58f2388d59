#include "doctest.h"
#include "pdel/art_demo.hpp"
#include "pdel/json_io.hpp"

using namespace pdel;

TEST_CASE("relational models round trip through JSON") {
  IntKripkeModel M = art_model();
  Json j = int_model_to_json(M);
  IntKripkeModel back = int_model_from_json(j);
  CHECK(back.m.states == M.m.states);
  CHECK(back.m.valuation == M.m.valuation);
  CHECK(back.up == M.up);
  // agents may come back in a different order; compare by name
  for (const auto& agent : M.m.agents) {
    int a = M.m.agent_index(agent);
    int b = back.m.agent_index(agent);
    REQUIRE(b >= 0);
    for (int s = 0; s < 3; ++s) CHECK(back.m.rel[b].p[s] == M.m.rel[a].p[s]);
  }
}

TEST_CASE("event structures load from JSON") {
  Json j;
  j["name"] = "X";
  j["events"] = Json::array({"e1", "e2"});
  j["agents"]["i"]["partition"] = Json::array({Json::array({"e1", "e2"})});
  j["agents"]["i"]["P"] = Json{{"e1", "1/4"}, {"e2", "3/4"}};
  j["preconditions"] = Json::array({"p", "~p"});
  j["pre"] = Json::array({Json::array({"1", "0"}), Json::array({"0", "1"})});
  j["sub"]["e1"]["p"] = "false";
  EventStructureL E = event_from_json(j);
  CHECK(E.event_count() == 2);
  CHECK(E.pre[0][0] == rat(1));
  CHECK(E.sub[0].in_domain("p"));
  CHECK(!E.sub[1].in_domain("p"));

  j["pre"] = Json::array({Json::array({"1", "1"}), Json::array({"0", "1"})});
  CHECK_THROWS_AS(event_from_json(j), ValidationError);
}

TEST_CASE("algebras and measures load from JSON") {
  Json j;
  j["n"] = 3;
  j["leq"] = {{0, 1}, {1, 2}, {0, 2}};
  j["agents"]["i"]["diamond"] = {0, 2, 2};
  j["agents"]["i"]["box"] = {0, 0, 2};
  auto A = algebra_from_json(j);
  CHECK(A->size() == 3);
  CHECK(A->lat.bottom() == 0);
  CHECK(A->lat.top() == 2);
  CHECK(check_eha_axioms(*A).ok());

  Json mj;
  mj["agent"] = "i";
  mj["values"] = {{"0", "0"}, {"1", "1/3"}, {"2", "1"}};
  IMeasure m = measure_from_json(mj, *A);
  CHECK(validate(m, *A, true).ok());

  Json apej;
  apej["algebra"] = j;
  apej["measures"] = Json::array({mj});
  apej["valuation"] = {{"p", 1}};
  ApeModel M = ape_model_from_json(apej, nullptr);
  CHECK(M.valuation.at("p") == TableAlgebra::wrap(1));
}

TEST_CASE("pattern files") {
  Json j;
  j["patterns"] = Json::array(
      {Json{{"agent", "i"},
            {"atoms", Json::array({Json{{"formula", "pr[i](1*mu(p) >= 3/5)"},
                                        {"cells", Json{{"0", 1}}}}})}}});
  j["valuation"] = {{"p", 1}};
  PatternFile pf = patterns_from_json(j);
  REQUIRE(pf.patterns.size() == 1);
  CHECK(pf.patterns[0].atoms[0].bound == rat(3, 5));
  CHECK(pf.patterns[0].atoms[0].cells.at(0) == 1);
  CHECK(pf.valuation.at("p") == 1);

  // a bare pattern object is accepted as well
  PatternFile bare = patterns_from_json(j["patterns"][0]);
  CHECK(bare.patterns.size() == 1);
}

TEST_CASE("duality reports serialise") {
  DualityReport rep;
  rep.mismatch("measure differs on subset 3");
  Json j = duality_report_to_json(DualityMode::Update, rep);
  CHECK(j["mode"] == "update");
  CHECK(j["ok"] == false);
  CHECK(j["witnesses"].size() == 1);
}
