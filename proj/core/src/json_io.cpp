#include "pdel/json_io.hpp"

#include <fstream>

#include "pdel/parser.hpp"

namespace pdel {

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw FileError("bad JSON in '" + path + "': " + e.what());
  }
  return j;
}

namespace {

Rational rat_field(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw FileError("expected a rational (string or integer)");
}

/// Partition blocks plus per-point weights into an AgentDist aligned with
/// `names`.
AgentDist dist_from_json(const Json& j, const std::vector<std::string>& names,
                         const std::string& what) {
  AgentDist d;
  d.cell.assign(names.size(), -1);
  d.p.assign(names.size(), Rational(0));
  int cellId = 0;
  for (const auto& block : j.at("partition")) {
    for (const auto& nm : block) {
      auto it = std::find(names.begin(), names.end(), nm.get<std::string>());
      if (it == names.end())
        throw FileError(what + ": unknown name '" + nm.get<std::string>() + "'");
      d.cell[it - names.begin()] = cellId;
    }
    ++cellId;
  }
  for (size_t s = 0; s < names.size(); ++s)
    if (d.cell[s] < 0) throw FileError(what + ": '" + names[s] + "' missing from partition");
  for (const auto& [nm, q] : j.at("P").items()) {
    auto it = std::find(names.begin(), names.end(), nm);
    if (it == names.end()) throw FileError(what + ": unknown name '" + nm + "' in P");
    d.p[it - names.begin()] = rat_field(q);
  }
  return d;
}

}  // namespace

PesModel pes_from_json(const Json& j) {
  PesModel m;
  for (const auto& s : j.at("states")) m.states.push_back(s.get<std::string>());
  for (const auto& [agent, block] : j.at("agents").items()) {
    m.agents.push_back(agent);
    m.rel.push_back(dist_from_json(block, m.states, "agent " + agent));
  }
  if (j.contains("valuation"))
    for (const auto& [atom, states] : j.at("valuation").items()) {
      Mask mask = 0;
      for (const auto& s : states) {
        int idx = m.state_index(s.get<std::string>());
        if (idx < 0) throw FileError("valuation of '" + atom + "': unknown state");
        mask |= Mask(1) << idx;
      }
      m.valuation[atom] = mask;
    }
  validate_pes(m);
  return m;
}

bool json_has_order(const Json& j) { return j.contains("order"); }

IntKripkeModel int_model_from_json(const Json& j) {
  IntKripkeModel M;
  M.m = pes_from_json(j);
  const int n = M.m.size();
  M.up.assign(n, 0);
  for (int s = 0; s < n; ++s) M.up[s] |= Mask(1) << s;
  // no order block means the discrete order
  const Json order = j.contains("order") ? j.at("order") : Json::array();
  for (const auto& pair : order) {
    int a = M.m.state_index(pair.at(0).get<std::string>());
    int b = M.m.state_index(pair.at(1).get<std::string>());
    if (a < 0 || b < 0) throw FileError("order mentions unknown state");
    M.up[a] |= Mask(1) << b;
  }
  // transitive closure
  for (int k = 0; k < n; ++k)
    for (int s = 0; s < n; ++s)
      if (M.leq(s, k)) M.up[s] |= M.up[k];
  validate_int(M);
  return M;
}

EventStructureL event_from_json(const Json& j) {
  EventStructureL E;
  if (j.contains("name")) E.name = j.at("name").get<std::string>();
  for (const auto& e : j.at("events")) E.events.push_back(e.get<std::string>());
  for (const auto& [agent, block] : j.at("agents").items()) {
    E.agents.push_back(agent);
    E.rel.push_back(dist_from_json(block, E.events, "event agent " + agent));
  }
  for (const auto& s : j.at("preconditions"))
    E.phi.push_back(parse_formula(s.get<std::string>()));
  if (j.contains("order"))
    for (const auto& pair : j.at("order"))
      E.phi_order.emplace_back(pair.at(0).get<int>(), pair.at(1).get<int>());
  for (const auto& row : j.at("pre")) {
    std::vector<Rational> r;
    for (const auto& q : row) r.push_back(rat_field(q));
    E.pre.push_back(std::move(r));
  }
  E.sub.assign(E.events.size(), Substitution{});
  if (j.contains("sub"))
    for (const auto& [ev, mapping] : j.at("sub").items()) {
      int e = E.event_index(ev);
      if (e < 0) throw FileError("sub mentions unknown event '" + ev + "'");
      std::map<std::string, Formula> sigma;
      for (const auto& [atom, f] : mapping.items())
        sigma[atom] = parse_formula(f.get<std::string>());
      E.sub[e] = Substitution(std::move(sigma));
    }
  validate_event(E);
  return E;
}

std::shared_ptr<const Eha> algebra_from_json(const Json& j) {
  int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> leq;
  for (const auto& pair : j.at("leq"))
    leq.emplace_back(pair.at(0).get<int>(), pair.at(1).get<int>());

  auto A = std::make_shared<Eha>();
  A->lat = FiniteLattice::build(n, leq);
  for (const auto& [agent, block] : j.at("agents").items()) {
    A->agents.push_back(agent);
    std::vector<int16_t> dia(n), box(n);
    const auto& dj = block.at("diamond");
    const auto& bj = block.at("box");
    if (static_cast<int>(dj.size()) != n || static_cast<int>(bj.size()) != n)
      throw FileError("diamond/box tables must list all " + std::to_string(n) + " elements");
    for (int a = 0; a < n; ++a) {
      dia[a] = int16_t(dj.at(a).get<int>());
      box[a] = int16_t(bj.at(a).get<int>());
    }
    A->diamond.push_back(std::move(dia));
    A->box.push_back(std::move(box));
  }
  return A;
}

IMeasure measure_from_json(const Json& j, const Eha& A) {
  IMeasure m;
  m.agent = j.at("agent").get<std::string>();
  m.strict = true;
  m.values.assign(A.size(), std::nullopt);
  for (const auto& [key, q] : j.at("values").items()) {
    int idx = std::stoi(key);
    if (idx < 0 || idx >= A.size())
      throw FileError("measure value for element " + key + " out of range");
    m.values[idx] = rat_field(q);
  }
  return m;
}

ApeModel ape_model_from_json(const Json& j, std::shared_ptr<const EventLibrary> events) {
  auto A = algebra_from_json(j.at("algebra"));
  std::vector<IMeasure> ms;
  for (const auto& mj : j.at("measures")) ms.push_back(measure_from_json(mj, *A));
  std::map<std::string, int> valuation;
  if (j.contains("valuation"))
    for (const auto& [atom, idx] : j.at("valuation").items())
      valuation[atom] = idx.get<int>();
  return make_ape_model(std::move(A), std::move(ms), std::move(valuation), std::move(events));
}

PatternFile patterns_from_json(const Json& j) {
  PatternFile out;
  const Json* list = nullptr;
  Json wrapped;
  if (j.is_array()) {
    list = &j;
  } else if (j.contains("patterns")) {
    list = &j.at("patterns");
  } else {
    wrapped = Json::array({j});
    list = &wrapped;
  }
  if (j.is_object() && j.contains("valuation"))
    for (const auto& [atom, idx] : j.at("valuation").items())
      out.valuation[atom] = idx.get<int>();

  for (const auto& pj : *list) {
    AgentPattern p;
    p.agent = pj.at("agent").get<std::string>();
    for (const auto& aj : pj.at("atoms")) {
      Formula f = parse_formula(aj.at("formula").get<std::string>());
      if (f->kind != Conn::ProbGeq && f->kind != Conn::ProbGt)
        throw FileError("pattern formula must be a probability atom");
      if (f->name != p.agent)
        throw FileError("pattern atom agent differs from pattern agent");
      AgentPattern::AtomPattern ap;
      ap.terms = f->terms;
      ap.strict = f->kind == Conn::ProbGt;
      ap.bound = f->bound;
      for (const auto& [cell, bit] : aj.at("cells").items())
        ap.cells[std::stoi(cell)] = bit.get<int>();
      p.atoms.push_back(std::move(ap));
    }
    out.patterns.push_back(std::move(p));
  }
  return out;
}

namespace {

Json dist_to_json(const AgentDist& d, const std::vector<std::string>& names) {
  std::map<int, std::vector<std::string>> blocks;
  for (size_t s = 0; s < names.size(); ++s) blocks[d.cell[s]].push_back(names[s]);
  Json partition = Json::array();
  for (auto& [id, block] : blocks) partition.push_back(block);
  Json P = Json::object();
  for (size_t s = 0; s < names.size(); ++s) P[names[s]] = rational_string(d.p[s]);
  return Json{{"partition", partition}, {"P", P}};
}

}  // namespace

Json pes_to_json(const PesModel& m) {
  Json j;
  j["states"] = m.states;
  Json agents = Json::object();
  for (size_t i = 0; i < m.agents.size(); ++i)
    agents[m.agents[i]] = dist_to_json(m.rel[i], m.states);
  j["agents"] = agents;
  Json val = Json::object();
  for (const auto& [atom, mask] : m.valuation) {
    std::vector<std::string> names;
    for (int s = 0; s < m.size(); ++s)
      if ((mask >> s) & 1) names.push_back(m.states[s]);
    val[atom] = names;
  }
  j["valuation"] = val;
  return j;
}

Json int_model_to_json(const IntKripkeModel& m) {
  Json j = pes_to_json(m.m);
  Json order = Json::array();
  for (int s = 0; s < m.m.size(); ++s)
    for (int t = 0; t < m.m.size(); ++t)
      if (s != t && m.leq(s, t)) order.push_back(Json::array({m.m.states[s], m.m.states[t]}));
  j["order"] = order;
  return j;
}

Json duality_report_to_json(DualityMode mode, const DualityReport& rep) {
  return Json{{"mode", mode == DualityMode::Intermediate ? "intermediate" : "update"},
              {"ok", rep.ok},
              {"witnesses", rep.witnesses}};
}

Json measures_to_json(const std::vector<IMeasure>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) {
    Json values = Json::object();
    for (size_t i = 0; i < m.values.size(); ++i)
      if (m.values[i]) values[std::to_string(i)] = rational_string(*m.values[i]);
    out.push_back(Json{{"agent", m.agent}, {"values", values}});
  }
  return out;
}

}  // namespace pdel
