#include "pdel/relational.hpp"

#include <algorithm>
#include <numeric>

namespace pdel {

namespace {

int find_name(const std::vector<std::string>& names, const std::string& name) {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

void validate_dist(const std::vector<int>& cell, const std::vector<Rational>& p,
                   const std::string& what) {
  if (cell.size() != p.size())
    throw ValidationError(what + ": cell/weight size mismatch");
  std::map<int, Rational> sums;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) throw ValidationError(what + ": weight not strictly positive");
    sums[cell[i]] += p[i];
  }
  for (auto& [c, s] : sums)
    if (s != 1)
      throw ValidationError(what + ": cell " + std::to_string(c) +
                            " weights sum to " + rational_string(s) + ", not 1");
}

}  // namespace

int PesModel::state_index(const std::string& name) const { return find_name(states, name); }
int PesModel::agent_index(const std::string& name) const { return find_name(agents, name); }

Mask PesModel::cell_mask(int agent, int s) const {
  Mask m = 0;
  for (int t = 0; t < size(); ++t)
    if (rel[agent].cell[t] == rel[agent].cell[s]) m |= Mask(1) << t;
  return m;
}

void validate_pes(const PesModel& m) {
  if (m.states.empty()) throw ValidationError("model has no states");
  if (m.rel.size() != m.agents.size())
    throw ValidationError("model: one relation per agent required");
  for (size_t i = 0; i < m.agents.size(); ++i)
    validate_dist(m.rel[i].cell, m.rel[i].p, "agent " + m.agents[i]);
  for (const auto& [atom, mask] : m.valuation)
    if (mask >> m.size())
      throw ValidationError("valuation of '" + atom + "' mentions unknown states");
}

void validate_int(const IntKripkeModel& M) {
  validate_pes(M.m);
  const int n = M.m.size();
  if (static_cast<int>(M.up.size()) != n)
    throw ValidationError("order rows do not match state count");
  for (int s = 0; s < n; ++s) {
    if (!M.leq(s, s)) throw ValidationError("order not reflexive");
    for (int t = 0; t < n; ++t) {
      if (M.leq(s, t) && M.leq(t, s) && s != t)
        throw ValidationError("order not antisymmetric");
      if (M.leq(s, t))
        for (int u = 0; u < n; ++u)
          if (M.leq(t, u) && !M.leq(s, u)) throw ValidationError("order not transitive");
    }
  }
  for (const auto& [atom, mask] : M.m.valuation)
    for (int s = 0; s < n; ++s)
      if ((mask >> s) & 1)
        if ((M.up[s] & mask) != M.up[s])
          throw ValidationError("valuation of '" + atom + "' is not an up-set");
}

int EventStructureL::event_index(const std::string& n) const { return find_name(events, n); }
int EventStructureL::agent_index(const std::string& n) const { return find_name(agents, n); }

bool EventStructureL::declared_below(int j, int k) const {
  for (auto [a, b] : phi_order)
    if (a == j && b == k) return true;
  return false;
}

Formula EventStructureL::sub_formula(int e, const std::string& a) const {
  return sub[e].in_domain(a) ? sub[e].at(a) : atom(a);
}

Formula EventStructureL::pre_formula(int e) const {
  std::vector<Formula> pos;
  for (size_t k = 0; k < phi.size(); ++k)
    if (pre[k][e] != 0) pos.push_back(phi[k]);
  return disj_all(pos);
}

void validate_event(const EventStructureL& E) {
  if (E.events.empty()) throw ValidationError("event structure has no events");
  if (E.rel.size() != E.agents.size())
    throw ValidationError("event structure: one relation per agent required");
  for (size_t i = 0; i < E.agents.size(); ++i)
    validate_dist(E.rel[i].cell, E.rel[i].p, "event agent " + E.agents[i]);
  if (E.pre.size() != E.phi.size())
    throw ValidationError("pre must have one row per precondition");
  for (size_t k = 0; k < E.pre.size(); ++k) {
    if (E.pre[k].size() != E.events.size())
      throw ValidationError("pre row size mismatch");
    Rational s = 0;
    for (const auto& q : E.pre[k]) {
      if (q < 0) throw ValidationError("pre value negative");
      s += q;
    }
    if (s != 1)
      throw ValidationError("pre row " + std::to_string(k) + " sums to " +
                            rational_string(s) + ", not 1");
  }
  if (E.sub.size() != E.events.size())
    throw ValidationError("sub must assign a substitution to every event");
  for (auto [j, k] : E.phi_order)
    if (j < 0 || k < 0 || j >= static_cast<int>(E.phi.size()) ||
        k >= static_cast<int>(E.phi.size()) || j == k)
      throw ValidationError("precondition order references bad indices");
}

Rational pre_given_state(const PesModel& M, const EventLibrary& lib,
                         const EventStructureL& E, int e, int s) {
  int found = -1;
  for (size_t k = 0; k < E.phi.size(); ++k) {
    if (eval_classical(M, lib, s, E.phi[k])) {
      if (found >= 0)
        throw AmbiguousPrecondition("state " + M.states[s] + " satisfies preconditions " +
                                    std::to_string(found) + " and " + std::to_string(k));
      found = static_cast<int>(k);
    }
  }
  return found < 0 ? Rational(0) : E.pre[found][e];
}

ClassicalUpdateResult classical_update(const PesModel& M, const EventLibrary& lib,
                                       const EventStructureL& E) {
  const int nS = M.size(), nE = E.event_count();
  ClassicalUpdateResult out;
  IntermediateModel& im = out.intermediate;
  im.stateCount = nS;
  im.eventCount = nE;
  im.agents = M.agents;

  std::vector<int> eAgent(M.agents.size());
  for (size_t i = 0; i < M.agents.size(); ++i) {
    eAgent[i] = E.agent_index(M.agents[i]);
    if (eAgent[i] < 0)
      throw ValidationError("event structure lacks agent '" + M.agents[i] + "'");
  }

  // pre(e | s) for every pair, shared by all agents
  std::vector<Rational> preAt(size_t(nS) * nE);
  for (int s = 0; s < nS; ++s)
    for (int e = 0; e < nE; ++e) preAt[im.pair(s, e)] = pre_given_state(M, lib, E, e, s);

  im.cell.assign(M.agents.size(), std::vector<int>(size_t(nS) * nE));
  im.weight.assign(M.agents.size(), std::vector<Rational>(size_t(nS) * nE));
  for (size_t i = 0; i < M.agents.size(); ++i)
    for (int s = 0; s < nS; ++s)
      for (int e = 0; e < nE; ++e) {
        int pr = im.pair(s, e);
        im.cell[i][pr] = M.rel[i].cell[s] * (nE + 1) + E.rel[eAgent[i]].cell[e];
        im.weight[i][pr] = M.rel[i].p[s] * E.rel[eAgent[i]].p[e] * preAt[pr];
      }
  for (const auto& [a, mask] : M.valuation) {
    Mask pm = 0;
    for (int s = 0; s < nS; ++s)
      if ((mask >> s) & 1)
        for (int e = 0; e < nE; ++e) pm |= Mask(1) << im.pair(s, e);
    im.valuation[a] = pm;
  }

  // surviving pairs: some precondition holds at s with positive pre(e|.)
  out.pair_index.assign(size_t(nS) * nE, -1);
  for (int s = 0; s < nS; ++s)
    for (int e = 0; e < nE; ++e)
      if (preAt[im.pair(s, e)] > 0) {
        out.pair_index[im.pair(s, e)] = static_cast<int>(out.pair_of.size());
        out.pair_of.emplace_back(s, e);
      }
  if (out.pair_of.empty()) throw EmptyUpdate("no event is executable at any state");

  PesModel& U = out.updated;
  U.agents = M.agents;
  for (auto [s, e] : out.pair_of)
    U.states.push_back("(" + M.states[s] + "," + E.events[e] + ")");
  U.rel.assign(M.agents.size(), AgentDist{});
  for (size_t i = 0; i < M.agents.size(); ++i) {
    U.rel[i].cell.resize(out.pair_of.size());
    U.rel[i].p.resize(out.pair_of.size());
    for (size_t x = 0; x < out.pair_of.size(); ++x)
      U.rel[i].cell[x] = im.cell[i][im.pair(out.pair_of[x].first, out.pair_of[x].second)];
    // renormalise within each surviving cell
    std::map<int, Rational> mass;
    for (size_t x = 0; x < out.pair_of.size(); ++x)
      mass[U.rel[i].cell[x]] +=
          im.weight[i][im.pair(out.pair_of[x].first, out.pair_of[x].second)];
    for (size_t x = 0; x < out.pair_of.size(); ++x) {
      const Rational& w =
          im.weight[i][im.pair(out.pair_of[x].first, out.pair_of[x].second)];
      U.rel[i].p[x] = w / mass[U.rel[i].cell[x]];
    }
  }

  // substituted valuation: (s,e) satisfies p iff s satisfied sub(e)(p)
  std::vector<std::string> atoms;
  for (const auto& [a, mask] : M.valuation) atoms.push_back(a);
  for (int e = 0; e < nE; ++e)
    for (const auto& [a, f] : E.sub[e].mapping())
      if (std::find(atoms.begin(), atoms.end(), a) == atoms.end()) atoms.push_back(a);
  for (const auto& a : atoms) {
    Mask um = 0;
    for (size_t x = 0; x < out.pair_of.size(); ++x) {
      auto [s, e] = out.pair_of[x];
      if (eval_classical(M, lib, s, E.sub_formula(e, a))) um |= Mask(1) << x;
    }
    U.valuation[a] = um;
  }

  validate_pes(U);
  return out;
}

Rational model_measure(const PesModel& M, const EventLibrary& lib, int agent, int s,
                       const Formula& phi) {
  Rational acc = 0;
  for (int t = 0; t < M.size(); ++t)
    if (M.sim(agent, s, t) && eval_classical(M, lib, t, phi)) acc += M.rel[agent].p[t];
  return acc;
}

bool eval_classical(const PesModel& M, const EventLibrary& lib, int s, const Formula& f) {
  switch (f->kind) {
    case Conn::Atom: {
      auto it = M.valuation.find(f->name);
      if (it == M.valuation.end()) throw UnknownAtom("atom '" + f->name + "'");
      return (it->second >> s) & 1;
    }
    case Conn::Bot: return false;
    case Conn::Top: return true;
    case Conn::And:
      return eval_classical(M, lib, s, f->child[0]) && eval_classical(M, lib, s, f->child[1]);
    case Conn::Or:
      return eval_classical(M, lib, s, f->child[0]) || eval_classical(M, lib, s, f->child[1]);
    case Conn::Imp:
      return !eval_classical(M, lib, s, f->child[0]) || eval_classical(M, lib, s, f->child[1]);
    case Conn::Dia: {
      int i = M.agent_index(f->name);
      if (i < 0) throw UnknownAtom("agent '" + f->name + "'");
      for (int t = 0; t < M.size(); ++t)
        if (M.sim(i, s, t) && eval_classical(M, lib, t, f->child[0])) return true;
      return false;
    }
    case Conn::Box: {
      int i = M.agent_index(f->name);
      if (i < 0) throw UnknownAtom("agent '" + f->name + "'");
      for (int t = 0; t < M.size(); ++t)
        if (M.sim(i, s, t) && !eval_classical(M, lib, t, f->child[0])) return false;
      return true;
    }
    case Conn::DynDia:
    case Conn::DynBox: {
      auto it = lib.find(f->name);
      if (it == lib.end()) throw UnknownEventName("event structure '" + f->name + "'");
      const EventStructureL& E = it->second;
      int e = E.event_index(f->event);
      if (e < 0) throw UnknownEventName("event '" + f->event + "' in '" + f->name + "'");
      bool preHolds = pre_given_state(M, lib, E, e, s) > 0;
      if (!preHolds) return f->kind == Conn::DynBox;
      ClassicalUpdateResult up = classical_update(M, lib, E);
      int target = up.pair_index[up.intermediate.pair(s, e)];
      return eval_classical(up.updated, lib, target, f->child[0]);
    }
    case Conn::ProbGeq:
    case Conn::ProbGt: {
      int i = M.agent_index(f->name);
      if (i < 0) throw UnknownAtom("agent '" + f->name + "'");
      Rational acc = 0;
      for (const auto& t : f->terms) acc += t.coeff * model_measure(M, lib, i, s, t.arg);
      return f->kind == Conn::ProbGeq ? acc >= f->bound : acc > f->bound;
    }
  }
  return false;
}

Mask extension_classical(const PesModel& M, const EventLibrary& lib, const Formula& phi) {
  Mask m = 0;
  for (int s = 0; s < M.size(); ++s)
    if (eval_classical(M, lib, s, phi)) m |= Mask(1) << s;
  return m;
}

bool eval_int_static(const IntKripkeModel& M, int s, const Formula& f) {
  switch (f->kind) {
    case Conn::Atom: {
      auto it = M.m.valuation.find(f->name);
      if (it == M.m.valuation.end()) throw UnknownAtom("atom '" + f->name + "'");
      return (it->second >> s) & 1;
    }
    case Conn::Bot: return false;
    case Conn::Top: return true;
    case Conn::And: return eval_int_static(M, s, f->child[0]) && eval_int_static(M, s, f->child[1]);
    case Conn::Or: return eval_int_static(M, s, f->child[0]) || eval_int_static(M, s, f->child[1]);
    case Conn::Imp: {
      for (int t = 0; t < M.m.size(); ++t)
        if (M.leq(s, t) && eval_int_static(M, t, f->child[0]) &&
            !eval_int_static(M, t, f->child[1]))
          return false;
      return true;
    }
    default:
      throw UnsupportedConnective(
          "intuitionistic relational semantics covers only the static base fragment");
  }
}

namespace {

/// Per-state most specific precondition: the unique minimal satisfied member
/// of Phi, or -1 when none is satisfied or two incomparable ones are (the
/// latter is also reported).
struct PhiAnalysis {
  std::vector<Mask> ext;                // extension per member
  std::vector<std::vector<char>> below; // strict member order
  std::vector<int> countsFor;           // per state
  std::vector<std::string> warnings;
};

PhiAnalysis analyse_phi(const IntKripkeModel& M, const EventStructureL& E) {
  const int n = M.m.size();
  const int k = static_cast<int>(E.phi.size());
  PhiAnalysis out;
  out.ext.resize(k);
  for (int j = 0; j < k; ++j) {
    Mask m = 0;
    for (int s = 0; s < n; ++s)
      if (eval_int_static(M, s, E.phi[j])) m |= Mask(1) << s;
    out.ext[j] = m;
  }

  out.below.assign(k, std::vector<char>(k, 0));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      if (a == b) continue;
      if (out.ext[a] != out.ext[b]) {
        bool sub = (out.ext[a] & ~out.ext[b]) == 0;
        bool disj = (out.ext[a] & out.ext[b]) == 0;
        if (!sub && !disj && !((out.ext[b] & ~out.ext[a]) == 0))
          throw NotAForest("preconditions " + std::to_string(a) + " and " +
                           std::to_string(b) + " neither contradict nor entail");
        // empty-extension members count as inconsistent with everything, not
        // as strictly below (cf. the algebraic translation)
        out.below[a][b] = (sub && out.ext[a] != 0) ? 1 : 0;
      } else if (out.ext[a] != 0) {
        // copies of the same extension ordered by declaration, else by index
        bool declared = E.declared_below(a, b) || (!E.declared_below(b, a) && a < b);
        out.below[a][b] = declared ? 1 : 0;
      }
    }

  out.countsFor.assign(n, -1);
  for (int s = 0; s < n; ++s) {
    std::vector<int> sat;
    for (int j = 0; j < k; ++j)
      if ((out.ext[j] >> s) & 1) sat.push_back(j);
    std::vector<int> minimal;
    for (int j : sat) {
      bool isMin = true;
      for (int j2 : sat)
        if (j2 != j && out.below[j2][j]) {
          isMin = false;
          break;
        }
      if (isMin) minimal.push_back(j);
    }
    if (minimal.size() == 1) {
      out.countsFor[s] = minimal.front();
    } else if (minimal.size() > 1) {
      out.warnings.push_back("state " + M.m.states[s] +
                             " satisfies incomparable preconditions; contributes to none");
    }
  }
  return out;
}

// disjointness caveat: empty extensions are mutually disjoint, so they never
// violate the forest shape

std::vector<int> states_by_decreasing_height(const IntKripkeModel& M) {
  const int n = M.m.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> upc(n);
  for (int s = 0; s < n; ++s) upc[s] = __builtin_popcountll(M.up[s]);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return upc[a] < upc[b]; });
  return order;  // maximal states (small up-sets) first
}

std::vector<std::vector<Rational>> coproduct_table(const IntKripkeModel& M,
                                                   const EventStructureL& E, int agent,
                                                   const PhiAnalysis& phi) {
  const int n = M.m.size(), nE = E.event_count();
  int ea = E.agent_index(M.m.agents[agent]);
  if (ea < 0)
    throw ValidationError("event structure lacks agent '" + M.m.agents[agent] + "'");

  // P^alpha_i(s) = total weight of the states above s counting for alpha
  const int k = static_cast<int>(E.phi.size());
  std::vector<std::vector<Rational>> palpha(k, std::vector<Rational>(n, 0));
  for (int a = 0; a < k; ++a)
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t)
        if (M.leq(s, t) && phi.countsFor[t] == a) palpha[a][s] += M.m.rel[agent].p[t];

  // recursion on the inverse order
  std::vector<std::vector<Rational>> w(n, std::vector<Rational>(nE, 0));
  for (int s : states_by_decreasing_height(M)) {
    for (int e = 0; e < nE; ++e) {
      Rational acc = 0;
      for (int a = 0; a < k; ++a)
        acc += E.rel[ea].p[e] * palpha[a][s] * E.pre[a][e];
      for (int t = 0; t < n; ++t)
        if (t != s && M.leq(s, t)) acc -= w[t][e];
      w[s][e] = acc;
    }
  }
  return w;
}

}  // namespace

Rational int_coproduct_weights(const IntKripkeModel& M, const EventStructureL& E,
                               int agent, int s, int e) {
  PhiAnalysis phi = analyse_phi(M, E);
  return coproduct_table(M, E, agent, phi)[s][e];
}

IntUpdateResult int_update(const IntKripkeModel& M, const EventStructureL& E) {
  const int n = M.m.size(), nE = E.event_count();
  PhiAnalysis phi = analyse_phi(M, E);

  std::vector<std::vector<std::vector<Rational>>> w;  // [agent][s][e]
  for (size_t i = 0; i < M.m.agents.size(); ++i)
    w.push_back(coproduct_table(M, E, static_cast<int>(i), phi));

  IntUpdateResult out;
  out.warnings = phi.warnings;
  out.pair_index.assign(size_t(n) * nE, -1);
  for (int s = 0; s < n; ++s)
    for (int e = 0; e < nE; ++e) {
      bool positive = w[0][s][e] > 0;
      for (size_t i = 0; i < w.size(); ++i) {
        if (w[i][s][e] < 0)
          throw ValidationError("negative coproduct weight; event structure invalid");
        if ((w[i][s][e] > 0) != positive)
          throw ValidationError("coproduct weight signs disagree across agents");
      }
      if (positive) {
        out.pair_index[s * nE + e] = static_cast<int>(out.pair_of.size());
        out.pair_of.emplace_back(s, e);
      }
    }
  if (out.pair_of.empty()) throw EmptyUpdate("no event is executable at any state");

  PesModel& U = out.model.m;
  U.agents = M.m.agents;
  for (auto [s, e] : out.pair_of)
    U.states.push_back("(" + M.m.states[s] + "," + E.events[e] + ")");

  U.rel.assign(M.m.agents.size(), AgentDist{});
  for (size_t i = 0; i < M.m.agents.size(); ++i) {
    int ea = E.agent_index(M.m.agents[i]);
    U.rel[i].cell.resize(out.pair_of.size());
    U.rel[i].p.resize(out.pair_of.size());
    std::map<int, Rational> mass;
    for (size_t x = 0; x < out.pair_of.size(); ++x) {
      auto [s, e] = out.pair_of[x];
      U.rel[i].cell[x] = M.m.rel[i].cell[s] * (nE + 1) + E.rel[ea].cell[e];
      mass[U.rel[i].cell[x]] += w[i][s][e];
    }
    for (size_t x = 0; x < out.pair_of.size(); ++x) {
      auto [s, e] = out.pair_of[x];
      U.rel[i].p[x] = w[i][s][e] / mass[U.rel[i].cell[x]];
    }
  }

  // order: within an event slice only
  out.model.up.assign(out.pair_of.size(), 0);
  for (size_t x = 0; x < out.pair_of.size(); ++x)
    for (size_t y = 0; y < out.pair_of.size(); ++y)
      if (out.pair_of[x].second == out.pair_of[y].second &&
          M.leq(out.pair_of[x].first, out.pair_of[y].first))
        out.model.up[x] |= Mask(1) << y;

  // substituted valuation, evaluated in the original model
  std::vector<std::string> atoms;
  for (const auto& [a, mask] : M.m.valuation) atoms.push_back(a);
  for (int e = 0; e < nE; ++e)
    for (const auto& [a, f] : E.sub[e].mapping())
      if (std::find(atoms.begin(), atoms.end(), a) == atoms.end()) atoms.push_back(a);
  for (const auto& a : atoms) {
    Mask um = 0;
    for (size_t x = 0; x < out.pair_of.size(); ++x) {
      auto [s, e] = out.pair_of[x];
      if (eval_int_static(M, s, E.sub_formula(e, a))) um |= Mask(1) << x;
    }
    U.valuation[a] = um;
  }

  validate_int(out.model);
  return out;
}

}  // namespace pdel
