#include "pdel/measures.hpp"

#include <algorithm>

namespace pdel {

MeasureReport validate(const IMeasure& m, const Eha& A, bool strict) {
  MeasureReport rep;
  const auto& L = A.lat;
  const int n = L.size();
  auto viol = [&](const std::string& c, std::vector<int> e, std::string d = "") {
    rep.violations.push_back({c, std::move(e), std::move(d)});
  };

  int agent = A.agent_index(m.agent);
  if (agent < 0) {
    viol("domain", {}, "agent '" + m.agent + "' not in algebra");
    return rep;
  }
  if (static_cast<int>(m.values.size()) != n) {
    viol("domain", {}, "value table size differs from carrier size");
    return rep;
  }

  std::vector<int> cells = i_minimal(A, agent);
  std::vector<char> inDom(n, 0);
  for (int a : cells)
    for (int b = 0; b < n; ++b)
      if (L.leq(b, a)) inDom[b] = 1;

  for (int b = 0; b < n; ++b) {
    if (inDom[b] && !m.values[b]) viol("domain", {b}, "missing value inside Min_i downset");
    if (!inDom[b] && m.values[b]) viol("domain", {b}, "value outside Min_i downset");
  }
  if (!rep.ok()) return rep;  // remaining clauses need a well-formed table

  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c)
      if (inDom[b] && inDom[c] && L.leq(b, c) && *m.values[b] > *m.values[c])
        viol("monotone", {b, c});

  for (int a : cells) {
    for (int b = 0; b < n; ++b) {
      if (!L.leq(b, a)) continue;
      for (int c = b; c < n; ++c) {
        if (!L.leq(c, a)) continue;
        Rational lhs = *m.values[L.join(b, c)];
        Rational rhs = *m.values[b] + *m.values[c] - *m.values[L.meet(b, c)];
        if (lhs != rhs) viol("modular", {b, c}, "within cell " + std::to_string(a));
        if (strict && b != c) {
          if (L.leq(b, c) && !(*m.values[b] < *m.values[c]))
            viol("strict", {b, c}, "within cell " + std::to_string(a));
          if (L.leq(c, b) && !(*m.values[c] < *m.values[b]))
            viol("strict", {c, b}, "within cell " + std::to_string(a));
        }
      }
    }
    if (strict && *m.values[a] != 1) viol("cell-one", {a});
  }

  bool domNonempty = std::any_of(inDom.begin(), inDom.end(), [](char c) { return c; });
  if (domNonempty && *m.values[L.bottom()] != 0) viol("bottom", {L.bottom()});

  for (int b = 0; b < n; ++b)
    if (inDom[b] && *m.values[b] < 0) viol("monotone", {b}, "negative value");

  return rep;
}

TableStructure::TableStructure(std::shared_ptr<const Eha> algebra,
                               std::vector<IMeasure> measures)
    : eha_(std::move(algebra)),
      ops_(std::make_shared<TableAlgebra>(eha_)),
      measures_(std::move(measures)) {}

std::shared_ptr<const TableStructure> make_ape(std::shared_ptr<const Eha> algebra,
                                               std::vector<IMeasure> measures) {
  // one strict measure per declared agent, in agent order
  std::vector<IMeasure> ordered(algebra->agent_count());
  std::vector<char> seen(algebra->agent_count(), 0);
  for (auto& m : measures) {
    int i = algebra->agent_index(m.agent);
    if (i < 0) throw ConstructionError("measure for unknown agent '" + m.agent + "'");
    if (seen[i]) throw ConstructionError("duplicate measure for agent '" + m.agent + "'");
    seen[i] = 1;
    ordered[i] = std::move(m);
  }
  for (int i = 0; i < algebra->agent_count(); ++i)
    if (!seen[i])
      throw ConstructionError("missing measure for agent '" + algebra->agents[i] + "'");

  for (const auto& m : ordered) {
    MeasureReport rep = validate(m, *algebra, /*strict=*/true);
    if (!rep.ok())
      throw ConstructionError("measure for agent '" + m.agent + "' violates clause '" +
                              rep.violations.front().clause + "'");
  }
  return std::make_shared<TableStructure>(std::move(algebra), std::move(ordered));
}

MeasureReport validate_structure(const Structure& F, int agent, bool strict) {
  MeasureReport rep;
  auto viol = [&](const std::string& c, std::string d = "") {
    rep.violations.push_back({c, {}, std::move(d)});
  };
  const AlgebraOps& A = *F.algebra();
  const Elem bot = A.bottom();

  std::vector<Elem> cells = A.i_minimal(agent);
  bool domNonempty = false;

  for (const Elem& cell : cells) {
    auto down = A.downset(cell);
    domNonempty = domNonempty || !down.empty();
    for (size_t x = 0; x < down.size(); ++x) {
      if (!F.in_domain(agent, down[x])) {
        viol("domain", "cell downset element missing from domain");
        continue;
      }
      if (F.measure(agent, down[x]) < 0) viol("monotone", "negative value");
      for (size_t y = x; y < down.size(); ++y) {
        const Elem &b = down[x], &c = down[y];
        Rational lhs = F.measure(agent, A.join(b, c));
        Rational rhs = F.measure(agent, b) + F.measure(agent, c) -
                       F.measure(agent, A.meet(b, c));
        if (lhs != rhs) viol("modular");
        if (A.leq(b, c) && !(F.measure(agent, b) <= F.measure(agent, c))) viol("monotone");
        if (A.leq(c, b) && !(F.measure(agent, c) <= F.measure(agent, b))) viol("monotone");
        if (strict && b != c) {
          if (A.leq(b, c) && !(F.measure(agent, b) < F.measure(agent, c))) viol("strict");
          if (A.leq(c, b) && !(F.measure(agent, c) < F.measure(agent, b))) viol("strict");
        }
      }
    }
    if (strict && F.measure(agent, cell) != 1) viol("cell-one");
  }
  if (domNonempty && F.measure(agent, bot) != 0) viol("bottom");
  return rep;
}

std::vector<int> PhiMultiset::mb(int k) const {
  if (k < 0 || k >= size()) throw MemberNotInPhi("member index " + std::to_string(k));
  std::vector<int> out;
  for (int j = 0; j < size(); ++j) {
    if (!below[j][k]) continue;
    bool maximal = true;
    for (int j2 = 0; j2 < size(); ++j2)
      if (below[j][j2] && below[j2][k]) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(j);
  }
  return out;
}

Rational mu_upper(const Structure& F, int agent, const PhiMultiset& phi, int member,
                  const Elem& x) {
  const AlgebraOps& A = *F.algebra();
  if (!F.in_domain(agent, x))
    throw OutOfDomain("mu_upper argument outside the measure domain");
  Rational acc = F.measure(agent, A.meet(x, phi.elems[member]));
  for (int j : phi.mb(member)) acc -= F.measure(agent, A.meet(x, phi.elems[j]));
  return acc;
}

IMeasure counting_measure(const Eha& A, int agent) {
  const auto& L = A.lat;
  IMeasure m;
  m.agent = A.agents[agent];
  m.strict = true;
  m.values.assign(L.size(), std::nullopt);
  for (int cell : i_minimal(A, agent)) {
    int total = L.ji_below(cell).count();
    for (int b = 0; b < L.size(); ++b)
      if (L.leq(b, cell))
        m.values[b] = total == 0 ? Rational(0) : rat(L.ji_below(b).count(), total);
  }
  return m;
}

}  // namespace pdel
