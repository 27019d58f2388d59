#include "pdel/art_demo.hpp"

#include "pdel/parser.hpp"

namespace pdel {

const char* category_name(Category c) {
  switch (c) {
    case Category::Impossible: return "Impossible";
    case Category::Implausible: return "Implausible";
    case Category::Unlikely: return "Unlikely";
    case Category::Likely: return "Likely";
    case Category::VeryLikely: return "Very likely";
    case Category::AlmostCertain: return "Almost certain";
    case Category::Certain: return "Certain";
  }
  return "?";
}

Category categorize(const Rational& q) {
  if (q < 0 || q > 1) throw OutOfRange("probability " + rational_string(q));
  if (q < Rational(1, 100)) return Category::Impossible;
  if (q <= Rational(1, 10)) return Category::Implausible;
  if (q <= Rational(1, 2)) return Category::Unlikely;
  if (q <= Rational(7, 10)) return Category::Likely;
  if (q < Rational(9, 10)) return Category::VeryLikely;
  if (q <= Rational(99, 100)) return Category::AlmostCertain;
  return Category::Certain;
}

IntKripkeModel art_model() {
  IntKripkeModel M;
  M.m.states = {"s0", "s1", "s2"};
  M.m.agents = {"a", "i", "g"};
  // every agent sees one cell; only the investor's weights matter, the
  // artist and the gallery get the uniform distribution
  AgentDist investor{{0, 0, 0}, {rat(3, 5), rat(3, 10), rat(1, 10)}};
  AgentDist uniform{{0, 0, 0}, {rat(1, 3), rat(1, 3), rat(1, 3)}};
  M.m.rel = {uniform, investor, uniform};
  M.m.valuation["p"] = 0b010;  // s1 only
  M.up = {0b111, 0b010, 0b100};
  validate_int(M);
  return M;
}

EventStructureL art_event() {
  EventStructureL E;
  E.name = "exhibit";
  E.events = {"e1", "e2", "e3"};
  E.agents = {"a", "i", "g"};
  AgentDist discrete{{0, 1, 2}, {rat(1), rat(1), rat(1)}};
  AgentDist investor{{0, 1, 1}, {rat(1), rat(9, 10), rat(1, 10)}};
  E.rel = {discrete, investor, discrete};
  E.phi = {parse_formula("true"), parse_formula("p"), parse_formula("~p")};
  E.phi_order = {{1, 0}, {2, 0}};  // p < true, ~p < true
  E.pre = {
      {rat(1, 10), rat(1, 2), rat(2, 5)},
      {rat(3, 10), rat(3, 5), rat(1, 10)},
      {rat(1, 100), rat(39, 100), rat(3, 5)},
  };
  E.sub.resize(3);
  E.sub[0] = Substitution({{"apply", top()}, {"exhibit", top()}});
  E.sub[1] = Substitution({{"apply", top()}, {"exhibit", bot()}});
  E.sub[2] = Substitution({{"apply", bot()}, {"exhibit", bot()}});
  validate_event(E);
  return E;
}

ArtDemo run_art_demo() {
  ArtDemo d;
  d.initial = art_model();
  d.event = art_event();
  d.update = int_update(d.initial, d.event);

  int investor = d.initial.m.agent_index("i");
  auto row = [&](const std::string& label, const Rational& q) {
    return ArtDemo::Row{label, q, round_decimal(q, 3), categorize(q)};
  };

  const std::vector<std::string> stateOrder = {"s1", "s0", "s2"};
  for (const auto& s : stateOrder) {
    int idx = d.initial.m.state_index(s);
    d.initialRows.push_back(row(s, d.initial.m.rel[investor].p[idx]));
  }

  const PesModel& U = d.update.model.m;
  for (int e = 0; e < d.event.event_count(); ++e)
    for (const auto& s : stateOrder) {
      int sIdx = d.initial.m.state_index(s);
      int x = d.update.pair_index[sIdx * d.event.event_count() + e];
      if (x < 0) continue;
      auto r = row("(" + d.event.events[e] + "," + s + ")", U.rel[investor].p[x]);
      d.updatedRows.push_back(r);
      if (e == 0) d.submodelRows.push_back(r);
    }
  return d;
}

}  // namespace pdel
