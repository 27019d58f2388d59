#include "pdel/generators.hpp"

#include <algorithm>
#include <numeric>

#include "pdel/parser.hpp"

namespace pdel {

std::vector<Rational> Rng::distribution(int parts, int maxDen) {
  int den = between(std::max(parts, 1), std::max(parts, maxDen));
  std::vector<int> cuts(parts, 1);
  int left = den - parts;
  for (int i = 0; i < parts && left > 0; ++i) {
    int take = upto(left + 1);
    cuts[i] += take;
    left -= take;
  }
  if (left > 0) cuts[parts - 1] += left;
  std::vector<Rational> out;
  for (int c : cuts) out.push_back(rat(c, den));
  return out;
}

namespace {

AgentDist random_dist(Rng& rng, int n, int maxDen) {
  AgentDist d;
  d.cell.resize(n);
  int cells = rng.between(1, n);
  for (int s = 0; s < n; ++s) d.cell[s] = rng.upto(cells);
  // normalise ids and make sure every id occurs
  std::map<int, int> remap;
  for (int s = 0; s < n; ++s)
    if (!remap.count(d.cell[s])) {
      int id = static_cast<int>(remap.size());
      remap[d.cell[s]] = id;
    }
  for (int s = 0; s < n; ++s) d.cell[s] = remap[d.cell[s]];

  d.p.assign(n, Rational(0));
  int cellCount = static_cast<int>(remap.size());
  for (int c = 0; c < cellCount; ++c) {
    std::vector<int> members;
    for (int s = 0; s < n; ++s)
      if (d.cell[s] == c) members.push_back(s);
    auto weights = rng.distribution(static_cast<int>(members.size()), maxDen);
    for (size_t i = 0; i < members.size(); ++i) d.p[members[i]] = weights[i];
  }
  return d;
}

}  // namespace

PesModel random_pes(Rng& rng, int maxStates, int agents, int maxDen) {
  PesModel m;
  int n = rng.between(1, maxStates);
  for (int s = 0; s < n; ++s) m.states.push_back("s" + std::to_string(s));
  for (int i = 0; i < agents; ++i) {
    m.agents.push_back(i == 0 ? "i" : "j" + std::to_string(i));
    m.rel.push_back(random_dist(rng, n, maxDen));
  }
  Mask full = n == 64 ? ~Mask(0) : (Mask(1) << n) - 1;
  m.valuation["p"] = rng.raw() & full;
  m.valuation["q"] = rng.raw() & full;
  validate_pes(m);
  return m;
}

EventStructureL random_classical_event(Rng& rng, const PesModel& M, int maxEvents,
                                       const std::string& name) {
  static const std::vector<std::vector<std::string>> kTemplates = {
      {"true"},
      {"p", "~p"},
      {"q", "~q"},
      {"p & q", "p & ~q", "~p"},
      {"p", "~p & q", "~p & ~q"},
  };
  EventLibrary none;
  for (int attempt = 0; attempt < 64; ++attempt) {
    EventStructureL E;
    E.name = name;
    int nE = rng.between(1, maxEvents);
    for (int e = 0; e < nE; ++e) E.events.push_back("e" + std::to_string(e));
    for (const auto& agent : M.agents) {
      E.agents.push_back(agent);
      E.rel.push_back(random_dist(rng, nE, 12));
    }
    const auto& tpl = kTemplates[rng.upto(static_cast<int>(kTemplates.size()))];
    for (const auto& s : tpl) E.phi.push_back(parse_formula(s));
    for (size_t k = 0; k < E.phi.size(); ++k) {
      // support of the row, then a distribution on it
      int support = rng.between(1, (1 << nE) - 1);
      std::vector<int> members;
      for (int e = 0; e < nE; ++e)
        if ((support >> e) & 1) members.push_back(e);
      auto weights = rng.distribution(static_cast<int>(members.size()), 12);
      std::vector<Rational> row(nE, Rational(0));
      for (size_t x = 0; x < members.size(); ++x) row[members[x]] = weights[x];
      E.pre.push_back(std::move(row));
    }
    E.sub.assign(nE, Substitution{});
    static const std::vector<std::string> kSubPool = {"true", "false", "q",
                                                      "~p",   "p & q", "p | q"};
    for (int e = 0; e < nE; ++e) {
      if (rng.chance(1, 2)) continue;
      std::map<std::string, Formula> sigma;
      sigma[rng.chance(1, 2) ? "p" : "q"] =
          parse_formula(kSubPool[rng.upto(static_cast<int>(kSubPool.size()))]);
      E.sub[e] = Substitution(std::move(sigma));
    }
    validate_event(E);

    bool executable = false;
    for (int s = 0; s < M.size() && !executable; ++s)
      for (int e = 0; e < nE && !executable; ++e)
        if (pre_given_state(M, none, E, e, s) > 0) executable = true;
    if (executable) return E;
  }
  throw std::logic_error("random_classical_event: no executable structure found");
}

namespace {

/// Random poset on {0..k-1} as a strict-below bit matrix, transitively
/// closed, with edges only from lower to higher index.
std::vector<std::vector<char>> random_poset(Rng& rng, int k) {
  std::vector<std::vector<char>> lt(k, std::vector<char>(k, 0));
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (rng.chance(1, 3)) lt[a][b] = 1;
  for (int m = 0; m < k; ++m)
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        if (lt[a][m] && lt[m][b]) lt[a][b] = 1;
  return lt;
}

}  // namespace

std::shared_ptr<Eha> random_eha(Rng& rng, int maxJi, int agents) {
  int k = rng.between(1, maxJi);
  auto lt = random_poset(rng, k);

  // down-sets of the poset, each a bitmask over join-irreducibles
  std::vector<int> downsets;
  for (int m = 0; m < (1 << k); ++m) {
    bool closed = true;
    for (int b = 0; b < k && closed; ++b)
      if ((m >> b) & 1)
        for (int a = 0; a < k; ++a)
          if (lt[a][b] && !((m >> a) & 1)) closed = false;
    if (closed) downsets.push_back(m);
  }
  std::sort(downsets.begin(), downsets.end());

  const int n = static_cast<int>(downsets.size());
  std::vector<std::pair<int, int>> leq;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if ((downsets[x] & ~downsets[y]) == 0) leq.emplace_back(x, y);

  auto A = std::make_shared<Eha>();
  A->lat = FiniteLattice::build(n, leq);

  // connected components of the comparability graph; any grouping of them
  // is a partition of top into lattice elements
  std::vector<int> comp(k, -1);
  int comps = 0;
  for (int a = 0; a < k; ++a) {
    if (comp[a] >= 0) continue;
    std::vector<int> stack{a};
    comp[a] = comps;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int b = 0; b < k; ++b)
        if (comp[b] < 0 && (lt[x][b] || lt[b][x])) {
          comp[b] = comps;
          stack.push_back(b);
        }
    }
    ++comps;
  }

  auto elemIndex = [&](int mask) {
    return static_cast<int>(
        std::lower_bound(downsets.begin(), downsets.end(), mask) - downsets.begin());
  };

  for (int i = 0; i < agents; ++i) {
    A->agents.push_back(i == 0 ? "i" : "j" + std::to_string(i));
    int groups = rng.between(1, comps);
    std::vector<int> groupOf(comps);
    for (int c = 0; c < comps; ++c) groupOf[c] = rng.upto(groups);
    std::vector<int> cellMask(groups, 0);
    for (int b = 0; b < k; ++b) cellMask[groupOf[comp[b]]] |= 1 << b;
    std::vector<int> cells;
    for (int g = 0; g < groups; ++g)
      if (cellMask[g]) cells.push_back(elemIndex(cellMask[g]));

    std::vector<int16_t> dia(n), box(n);
    for (int x = 0; x < n; ++x) {
      int d = A->lat.bottom(), bx = A->lat.bottom();
      for (int cell : cells) {
        if (A->lat.meet(x, cell) != A->lat.bottom()) d = A->lat.join(d, cell);
        if (A->lat.leq(cell, x)) bx = A->lat.join(bx, cell);
      }
      dia[x] = int16_t(d);
      box[x] = int16_t(bx);
    }
    A->diamond.push_back(std::move(dia));
    A->box.push_back(std::move(box));
  }
  return A;
}

IMeasure random_measure(Rng& rng, const Eha& A, int agent) {
  const auto& L = A.lat;
  std::vector<Rational> weight(L.size(), Rational(0));
  for (int j : L.join_irreducibles()) weight[j] = Rational(rng.between(1, 6));

  auto mass = [&](int elem) {
    Rational acc = 0;
    for (int j : L.join_irreducibles())
      if (L.leq(j, elem)) acc += weight[j];
    return acc;
  };

  IMeasure m;
  m.agent = A.agents[agent];
  m.strict = true;
  m.values.assign(L.size(), std::nullopt);
  for (int cell : i_minimal(A, agent)) {
    Rational total = mass(cell);
    for (int b = 0; b < L.size(); ++b)
      if (L.leq(b, cell)) m.values[b] = total == 0 ? Rational(0) : mass(b) / total;
  }
  return m;
}

namespace {

/// Intuitionistic event structure over the model's algebra: preconditions
/// are dedicated atoms naming a forest of elements, declared order matching
/// the lattice order, pre-supports shrinking upward.
EventStructureL random_int_event(Rng& rng, const Eha& A,
                                 std::map<std::string, int>& valuation,
                                 const std::string& name, int maxEvents,
                                 bool allowCopies) {
  const auto& L = A.lat;
  EventStructureL E;
  E.name = name;
  int nE = rng.between(1, maxEvents);
  for (int e = 0; e < nE; ++e) E.events.push_back(name + "e" + std::to_string(e));
  for (const auto& agent : A.agents) {
    E.agents.push_back(agent);
    E.rel.push_back(random_dist(rng, nE, 12));
  }

  // pick forest elements greedily
  std::vector<int> elems;
  int want = rng.between(1, 3);
  if (rng.chance(1, 2)) elems.push_back(L.top());
  for (int attempt = 0; attempt < 24 && static_cast<int>(elems.size()) < want; ++attempt) {
    int x = rng.upto(L.size());
    if (x == L.bottom()) continue;
    bool fits = true;
    bool duplicate = false;
    for (int y : elems) {
      if (x == y) duplicate = true;
      if (x != y && L.meet(x, y) != L.bottom() && !L.leq(x, y) && !L.leq(y, x)) fits = false;
    }
    if (!fits) continue;
    if (duplicate && (!allowCopies || !rng.chance(1, 3))) continue;
    elems.push_back(x);
  }
  if (elems.empty()) elems.push_back(L.top());

  const int k = static_cast<int>(elems.size());
  for (int m = 0; m < k; ++m) {
    std::string atomName = "w" + std::to_string(valuation.size());
    valuation[atomName] = elems[m];
    E.phi.push_back(atom(atomName));
  }
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      if (a == b) continue;
      if (elems[a] == elems[b]) {
        if (a < b) E.phi_order.emplace_back(a, b);
      } else if (L.leq(elems[a], elems[b])) {
        E.phi_order.emplace_back(a, b);
      }
    }

  // supports shrink upward: members with something above them get full
  // support, maximal members a random nonempty one
  for (int m = 0; m < k; ++m) {
    bool belowSomething = false;
    for (auto [a, b] : E.phi_order)
      if (a == m) belowSomething = true;
    int support = belowSomething ? (1 << nE) - 1 : rng.between(1, (1 << nE) - 1);
    std::vector<int> members;
    for (int e = 0; e < nE; ++e)
      if ((support >> e) & 1) members.push_back(e);
    auto weights = rng.distribution(static_cast<int>(members.size()), 12);
    std::vector<Rational> row(nE, Rational(0));
    for (size_t x = 0; x < members.size(); ++x) row[members[x]] = weights[x];
    E.pre.push_back(std::move(row));
  }

  E.sub.assign(nE, Substitution{});
  for (int e = 0; e < nE; ++e) {
    if (rng.chance(1, 2)) continue;
    static const std::vector<std::string> kSubPool = {"true", "false", "q", "p & q",
                                                      "p | q", "~p"};
    std::map<std::string, Formula> sigma;
    sigma[rng.chance(1, 2) ? "p" : "q"] =
        parse_formula(kSubPool[rng.upto(static_cast<int>(kSubPool.size()))]);
    E.sub[e] = Substitution(std::move(sigma));
  }
  validate_event(E);
  return E;
}

}  // namespace

ApeModel random_ape_model(Rng& rng, const RandomModelOptions& opts) {
  auto A = random_eha(rng, opts.maxJi, opts.agents);
  std::vector<IMeasure> ms;
  for (int i = 0; i < A->agent_count(); ++i) ms.push_back(random_measure(rng, *A, i));

  std::map<std::string, int> valuation;
  valuation["p"] = rng.upto(A->size());
  valuation["q"] = rng.upto(A->size());
  valuation["r"] = rng.upto(A->size());

  auto events = std::make_shared<EventLibrary>();
  for (int x = 0; x < opts.events; ++x) {
    std::string name = "E" + std::to_string(x);
    (*events)[name] =
        random_int_event(rng, *A, valuation, name, opts.maxEvents, opts.allowCopies);
  }
  return make_ape_model(std::move(A), std::move(ms), std::move(valuation),
                        std::move(events));
}

namespace {

std::vector<std::string> model_atoms(const ApeModel& M) {
  std::vector<std::string> out;
  for (const auto& [a, v] : M.valuation)
    if (a == "p" || a == "q" || a == "r") out.push_back(a);
  return out;
}

Formula random_prob_atom(Rng& rng, const ApeModel& M, int depth) {
  std::vector<ProbTerm> terms;
  int n = rng.between(1, 2);
  for (int t = 0; t < n; ++t) {
    Rational coeff(rng.chance(1, 4) ? -rng.between(1, 2) : rng.between(1, 2));
    terms.push_back({coeff, random_static_formula(rng, M, depth)});
  }
  Rational bound = rat(rng.between(-2, 2), rng.between(1, 6));
  const std::string& agent = M.agents[rng.upto(static_cast<int>(M.agents.size()))];
  return rng.chance(1, 4) ? prob_gt(agent, std::move(terms), bound)
                          : prob_geq(agent, std::move(terms), bound);
}

}  // namespace

Formula random_static_formula(Rng& rng, const ApeModel& M, int depth) {
  auto atoms = model_atoms(M);
  if (depth <= 0 || rng.chance(1, 4)) {
    int pick = rng.upto(static_cast<int>(atoms.size()) + 2);
    if (pick < static_cast<int>(atoms.size())) return atom(atoms[pick]);
    return pick == static_cast<int>(atoms.size()) ? top() : bot();
  }
  switch (rng.upto(6)) {
    case 0: return conj(random_static_formula(rng, M, depth - 1),
                        random_static_formula(rng, M, depth - 1));
    case 1: return disj(random_static_formula(rng, M, depth - 1),
                        random_static_formula(rng, M, depth - 1));
    case 2: return imp(random_static_formula(rng, M, depth - 1),
                       random_static_formula(rng, M, depth - 1));
    case 3: return dia(M.agents[rng.upto(static_cast<int>(M.agents.size()))],
                       random_static_formula(rng, M, depth - 1));
    case 4: return box(M.agents[rng.upto(static_cast<int>(M.agents.size()))],
                       random_static_formula(rng, M, depth - 1));
    default: return random_prob_atom(rng, M, depth - 1);
  }
}

Formula random_dynamic_formula(Rng& rng, const ApeModel& M, int depth, int dynDepth) {
  if (!M.events || M.events->empty() || dynDepth <= 0)
    return random_static_formula(rng, M, depth);

  auto it = M.events->begin();
  std::advance(it, rng.upto(static_cast<int>(M.events->size())));
  const EventStructureL& E = it->second;
  const std::string& ev = E.events[rng.upto(E.event_count())];

  Formula body = rng.chance(1, 3)
                     ? random_dynamic_formula(rng, M, depth, dynDepth - 1)
                     : random_static_formula(rng, M, depth);
  Formula dyn = rng.chance(1, 2) ? dyn_box(it->first, ev, body) : dyn_dia(it->first, ev, body);

  // sometimes wrap the dynamic core in static connectives
  switch (rng.upto(4)) {
    case 0: return dyn;
    case 1: return conj(dyn, random_static_formula(rng, M, 1));
    case 2: return disj(random_static_formula(rng, M, 1), dyn);
    default: return imp(random_static_formula(rng, M, 1), dyn);
  }
}

}  // namespace pdel
