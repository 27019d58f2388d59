#include "pdel/synthesis.hpp"

#include <algorithm>

namespace pdel {

LinSystem build_system(const Eha& A, int agent, int cell,
                       const std::vector<CellAtom>& atoms) {
  const auto& L = A.lat;
  auto cells = i_minimal(A, agent);
  if (std::find(cells.begin(), cells.end(), cell) == cells.end())
    throw ConstructionError("element " + std::to_string(cell) +
                            " is not i-minimal for agent " + A.agents[agent]);

  LinSystem sys;
  sys.cell = cell;
  sys.elemVar.assign(L.size(), -1);
  for (int b = 0; b < L.size(); ++b)
    if (L.leq(b, cell)) {
      sys.elemVar[b] = static_cast<int>(sys.varElem.size());
      sys.varElem.push_back(b);
    }

  auto var = [&](int elem) { return sys.elemVar[L.meet(elem, cell)]; };

  for (const auto& atom : atoms) {
    LinRow row;
    for (const auto& [c, elem] : atom.terms) row.coeff[var(elem)] += c;
    row.rhs = atom.bound;
    row.cmp = atom.holds ? (atom.strict ? RowCmp::Gt : RowCmp::Ge)
                         : (atom.strict ? RowCmp::Le : RowCmp::Lt);
    row.tag = "atom";
    sys.rows.push_back(std::move(row));
  }

  const int nv = static_cast<int>(sys.varElem.size());
  // TODO: emit modularity only for incomparable pairs and monotonicity only
  // for covers; the full quadratic row set is what limits 64-element cells.
  for (int v = 0; v < nv; ++v) {
    sys.rows.push_back({{{v, 1}}, RowCmp::Ge, 0, "lower-bound"});
    sys.rows.push_back({{{v, 1}}, RowCmp::Le, 1, "upper-bound"});
  }
  for (int v = 0; v < nv; ++v)
    for (int w = v + 1; w < nv; ++w) {
      int b = sys.varElem[v], c = sys.varElem[w];
      LinRow row;
      row.coeff[v] += 1;
      row.coeff[w] += 1;
      row.coeff[sys.elemVar[L.meet(b, c)]] -= 1;
      row.coeff[sys.elemVar[L.join(b, c)]] -= 1;
      row.cmp = RowCmp::Eq;
      row.rhs = 0;
      row.tag = "modularity";
      sys.rows.push_back(std::move(row));
      if (L.leq(b, c))
        sys.rows.push_back({{{v, 1}, {w, -1}}, RowCmp::Le, 0, "monotonicity"});
      if (L.leq(c, b))
        sys.rows.push_back({{{w, 1}, {v, -1}}, RowCmp::Le, 0, "monotonicity"});
    }
  sys.rows.push_back({{{sys.elemVar[L.bottom()], 1}}, RowCmp::Eq, 0, "bottom"});
  sys.rows.push_back({{{sys.elemVar[cell], 1}}, RowCmp::Eq, 1, "cell-one"});
  return sys;
}

namespace {

/// Weak LP translation: strict rows displaced by the shared epsilon
/// variable (index nv), bounded by 1.
std::vector<LpRow> weak_rows(const LinSystem& sys, bool& hasStrict) {
  const int eps = static_cast<int>(sys.varElem.size());
  std::vector<LpRow> rows;
  hasStrict = false;
  for (const auto& r : sys.rows) {
    LpRow lp;
    for (auto& [v, c] : r.coeff) lp.coeff[v] = c;
    lp.rhs = r.rhs;
    switch (r.cmp) {
      case RowCmp::Le: lp.cmp = LpCmp::Le; break;
      case RowCmp::Ge: lp.cmp = LpCmp::Ge; break;
      case RowCmp::Eq: lp.cmp = LpCmp::Eq; break;
      case RowCmp::Lt:
        lp.cmp = LpCmp::Le;
        lp.coeff[eps] += 1;
        hasStrict = true;
        break;
      case RowCmp::Gt:
        lp.cmp = LpCmp::Ge;
        lp.coeff[eps] -= 1;
        hasStrict = true;
        break;
    }
    // drop rows that normalised to nothing (e.g. modularity of comparable pairs)
    if (!lp.coeff.empty() || lp.rhs != 0) {
      bool allZero = true;
      for (auto& [v, c] : lp.coeff)
        if (c != 0) allZero = false;
      if (allZero && lp.rhs == 0) continue;
      rows.push_back(std::move(lp));
    }
  }
  rows.push_back({{{eps, 1}}, LpCmp::Le, 1});
  return rows;
}

Solution extract(const LinSystem& sys, const LpResult& lp) {
  Solution s;
  s.feasible = true;
  for (size_t v = 0; v < sys.varElem.size(); ++v) s.value[sys.varElem[v]] = lp.x[v];
  s.epsilon = lp.x[sys.varElem.size()];
  return s;
}

}  // namespace

Solution solve_exact(const LinSystem& sys) {
  bool hasStrict = false;
  auto rows = weak_rows(sys, hasStrict);
  const int nv = static_cast<int>(sys.varElem.size()) + 1;
  std::vector<Rational> obj(nv, 0);
  obj[nv - 1] = 1;  // maximise epsilon
  LpResult lp = solve_lp(nv, rows, obj);
  if (lp.status != LpStatus::Optimal) return {};
  if (hasStrict && lp.x[nv - 1] <= 0) return {};
  return extract(sys, lp);
}

Solution strictify(const Eha& A, const LinSystem& sys) {
  Solution base = solve_exact(sys);
  if (!base.feasible)
    throw Infeasible("cell " + std::to_string(sys.cell) + ": system has no solution");

  bool hasStrict = false;
  auto rows = weak_rows(sys, hasStrict);
  const int nv = static_cast<int>(sys.varElem.size()) + 1;
  if (hasStrict) {
    // pin the strict slack at half its optimum so pair solutions stay strict
    LpRow floor;
    floor.coeff[nv - 1] = 1;
    floor.cmp = LpCmp::Ge;
    floor.rhs = base.epsilon / 2;
    rows.push_back(std::move(floor));
  }

  const auto& L = A.lat;
  std::vector<Solution> solutions;
  for (size_t v = 0; v < sys.varElem.size(); ++v)
    for (size_t w = 0; w < sys.varElem.size(); ++w) {
      int b = sys.varElem[v], c = sys.varElem[w];
      if (b == c || !L.leq(b, c)) continue;
      std::vector<Rational> obj(nv, 0);
      obj[w] += 1;
      obj[v] -= 1;
      LpResult lp = solve_lp(nv, rows, obj);
      if (lp.status != LpStatus::Optimal || lp.objective <= 0)
        throw Infeasible("cell " + std::to_string(sys.cell) + ": pattern forces x_" +
                         std::to_string(b) + " = x_" + std::to_string(c));
      solutions.push_back(extract(sys, lp));
    }

  if (solutions.empty()) return base;

  Solution avg;
  avg.feasible = true;
  Rational share(1, static_cast<long>(solutions.size()));
  for (const auto& s : solutions) {
    for (const auto& [elem, val] : s.value) avg.value[elem] += share * val;
    avg.epsilon += share * s.epsilon;
  }
  if (!check_solution(sys, avg.value))
    throw std::logic_error("strictify produced a non-solution; solver defect");
  return avg;
}

bool check_solution(const LinSystem& sys, const std::map<int, Rational>& value) {
  for (const auto& r : sys.rows) {
    Rational lhs = 0;
    for (auto& [v, c] : r.coeff) lhs += c * value.at(sys.varElem[v]);
    switch (r.cmp) {
      case RowCmp::Le: if (!(lhs <= r.rhs)) return false; break;
      case RowCmp::Ge: if (!(lhs >= r.rhs)) return false; break;
      case RowCmp::Eq: if (!(lhs == r.rhs)) return false; break;
      case RowCmp::Lt: if (!(lhs < r.rhs)) return false; break;
      case RowCmp::Gt: if (!(lhs > r.rhs)) return false; break;
    }
  }
  return true;
}

int interpret_static(const Eha& A, const std::map<std::string, int>& valuation,
                     const Formula& f) {
  const auto& L = A.lat;
  switch (f->kind) {
    case Conn::Atom: {
      auto it = valuation.find(f->name);
      if (it == valuation.end())
        throw UninterpretedSubformula("atom '" + f->name + "' has no interpretation");
      return it->second;
    }
    case Conn::Bot: return L.bottom();
    case Conn::Top: return L.top();
    case Conn::And:
      return L.meet(interpret_static(A, valuation, f->child[0]),
                    interpret_static(A, valuation, f->child[1]));
    case Conn::Or:
      return L.join(interpret_static(A, valuation, f->child[0]),
                    interpret_static(A, valuation, f->child[1]));
    case Conn::Imp:
      return L.implies(interpret_static(A, valuation, f->child[0]),
                       interpret_static(A, valuation, f->child[1]));
    case Conn::Dia: {
      int i = A.agent_index(f->name);
      if (i < 0) throw UninterpretedSubformula("agent '" + f->name + "'");
      return A.dia(i, interpret_static(A, valuation, f->child[0]));
    }
    case Conn::Box: {
      int i = A.agent_index(f->name);
      if (i < 0) throw UninterpretedSubformula("agent '" + f->name + "'");
      return A.bx(i, interpret_static(A, valuation, f->child[0]));
    }
    default:
      throw UninterpretedSubformula(
          "pattern subformulas must be static and probability-free");
  }
}

std::vector<IMeasure> synthesize_measures(const Eha& A,
                                          const std::vector<AgentPattern>& patterns,
                                          const std::map<std::string, int>& valuation) {
  std::vector<IMeasure> out;
  for (int i = 0; i < A.agent_count(); ++i) {
    const AgentPattern* pat = nullptr;
    for (const auto& p : patterns)
      if (p.agent == A.agents[i]) pat = &p;
    if (!pat) {
      out.push_back(counting_measure(A, i));
      continue;
    }

    IMeasure m;
    m.agent = A.agents[i];
    m.strict = true;
    m.values.assign(A.size(), std::nullopt);
    auto cells = i_minimal(A, i);
    for (size_t k = 0; k < cells.size(); ++k) {
      std::vector<CellAtom> atoms;
      for (const auto& ap : pat->atoms) {
        CellAtom ca;
        for (const auto& t : ap.terms)
          ca.terms.emplace_back(t.coeff, interpret_static(A, valuation, t.arg));
        ca.strict = ap.strict;
        ca.bound = ap.bound;
        auto bit = ap.cells.find(static_cast<int>(k));
        if (bit == ap.cells.end())
          throw ConstructionError("pattern for agent '" + pat->agent +
                                  "' misses cell " + std::to_string(k));
        ca.holds = bit->second != 0;
        atoms.push_back(std::move(ca));
      }
      LinSystem sys = build_system(A, i, cells[k], atoms);
      Solution sol = strictify(A, sys);
      for (const auto& [elem, val] : sol.value) m.values[elem] = val;
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace pdel
