#include "pdel/rewrite.hpp"

namespace pdel {

std::vector<std::vector<char>> formula_phi_below(const EventStructureL& E) {
  const int k = static_cast<int>(E.phi.size());
  std::vector<std::vector<char>> below(k, std::vector<char>(k, 0));
  for (auto [a, b] : E.phi_order) below[a][b] = 1;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (a != b && !below[a][b] && !below[b][a] &&
          formula_string(E.phi[a]) == formula_string(E.phi[b]) && a < b)
        below[a][b] = 1;
  // transitive closure
  for (int m = 0; m < k; ++m)
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        if (below[a][m] && below[m][b]) below[a][b] = 1;
  return below;
}

namespace {

std::vector<int> formula_mb(const std::vector<std::vector<char>>& below, int m) {
  const int k = static_cast<int>(below.size());
  std::vector<int> out;
  for (int j = 0; j < k; ++j) {
    if (!below[j][m]) continue;
    bool maximal = true;
    for (int j2 = 0; j2 < k; ++j2)
      if (below[j][j2] && below[j2][m]) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(j);
  }
  return out;
}

/// Flat linear atom for the probability reduction: for every event e' in
/// e's cell and every member phi_m with positive occurrence probability,
/// the terms of  coeff * P_i(e') * pre(e'|phi_m) * mu^{phi_m}(chi)  with
/// mu^phi expanded to mu(chi /\ phi) - sum_{sigma in mb(phi)} mu(chi /\ sigma).
Formula prob_reduction_atom(const EventStructureL& E, int e, const Formula& probAtom,
                            Conn innerDyn) {
  int agent = E.agent_index(probAtom->name);
  if (agent < 0)
    throw ValidationError("event structure '" + E.name + "' lacks agent '" +
                          probAtom->name + "'");
  auto below = formula_phi_below(E);
  const int members = static_cast<int>(E.phi.size());

  std::vector<ProbTerm> terms;
  auto push_mu_phi = [&](const Rational& coeff, const Formula& chi, int m) {
    if (coeff == 0) return;
    terms.push_back({coeff, chi ? conj(chi, E.phi[m]) : E.phi[m]});
    for (int j : formula_mb(below, m))
      terms.push_back({-coeff, chi ? conj(chi, E.phi[j]) : E.phi[j]});
  };

  for (int e2 = 0; e2 < E.event_count(); ++e2) {
    if (E.rel[agent].cell[e2] != E.rel[agent].cell[e]) continue;
    for (int m = 0; m < members; ++m) {
      Rational w = E.rel[agent].p[e2] * E.pre[m][e2];
      if (w == 0) continue;
      for (const auto& t : probAtom->terms) {
        Formula inner = innerDyn == Conn::DynBox
                            ? dyn_box(E.name, E.events[e2], t.arg)
                            : dyn_dia(E.name, E.events[e2], t.arg);
        push_mu_phi(t.coeff * w, inner, m);
      }
      push_mu_phi(-probAtom->bound * w, nullptr, m);
    }
  }
  return probAtom->kind == Conn::ProbGt ? prob_gt(probAtom->name, std::move(terms), 0)
                                        : prob_geq(probAtom->name, std::move(terms), 0);
}

}  // namespace

Formula reduction_rhs(Conn dynKind, const EventStructureL& E, int e, const Formula& body) {
  const bool isBox = dynKind == Conn::DynBox;
  const Formula pre = E.pre_formula(e);
  const std::string& ev = E.events[e];

  switch (body->kind) {
    case Conn::Atom: {
      Formula target = E.sub_formula(e, body->name);
      return isBox ? imp(pre, target) : conj(pre, target);  // I1 / I2
    }
    case Conn::Top:
      return isBox ? top() : pre;  // I3 / I4
    case Conn::Bot:
      return isBox ? neg(pre) : bot();  // I5 / I6
    case Conn::And: {  // I7 / I8
      Formula l = isBox ? dyn_box(E.name, ev, body->child[0])
                        : dyn_dia(E.name, ev, body->child[0]);
      Formula r = isBox ? dyn_box(E.name, ev, body->child[1])
                        : dyn_dia(E.name, ev, body->child[1]);
      return conj(l, r);
    }
    case Conn::Or: {  // I9 / I10
      Formula l = dyn_dia(E.name, ev, body->child[0]);
      Formula r = dyn_dia(E.name, ev, body->child[1]);
      return isBox ? imp(pre, disj(l, r)) : disj(l, r);
    }
    case Conn::Imp: {  // I11 / I12
      Formula l = dyn_dia(E.name, ev, body->child[0]);
      Formula r = dyn_dia(E.name, ev, body->child[1]);
      return isBox ? imp(l, r) : conj(pre, imp(l, r));
    }
    case Conn::Dia: {  // I13 / I14
      int agent = E.agent_index(body->name);
      if (agent < 0)
        throw ValidationError("event structure '" + E.name + "' lacks agent '" +
                              body->name + "'");
      std::vector<Formula> parts;
      for (int e2 = 0; e2 < E.event_count(); ++e2)
        if (E.rel[agent].cell[e2] == E.rel[agent].cell[e])
          parts.push_back(dia(body->name, dyn_dia(E.name, E.events[e2], body->child[0])));
      Formula joinPart = disj_all(parts);
      return isBox ? imp(pre, joinPart) : conj(pre, joinPart);
    }
    case Conn::Box: {  // I15 / I16
      int agent = E.agent_index(body->name);
      if (agent < 0)
        throw ValidationError("event structure '" + E.name + "' lacks agent '" +
                              body->name + "'");
      std::vector<Formula> parts;
      for (int e2 = 0; e2 < E.event_count(); ++e2)
        if (E.rel[agent].cell[e2] == E.rel[agent].cell[e])
          parts.push_back(box(body->name, dyn_box(E.name, E.events[e2], body->child[0])));
      Formula meetPart = conj_all(parts);
      return isBox ? imp(pre, meetPart) : conj(pre, meetPart);
    }
    case Conn::ProbGeq:
    case Conn::ProbGt: {  // I17 / I18
      Formula atomOut = prob_reduction_atom(E, e, body, isBox ? Conn::DynBox : Conn::DynDia);
      return isBox ? imp(pre, atomOut) : conj(pre, atomOut);
    }
    default:
      throw std::logic_error("reduction_rhs: body is not static");
  }
}

Formula f_translate(const Formula& psi, const EventStructureL& E, int e,
                    const EventLibrary& lib) {
  switch (psi->kind) {
    case Conn::Atom: return E.sub_formula(e, psi->name);
    case Conn::Bot: return bot();
    case Conn::Top: return top();
    case Conn::And:
      return conj(f_translate(psi->child[0], E, e, lib),
                  f_translate(psi->child[1], E, e, lib));
    case Conn::Or:
      return disj(f_translate(psi->child[0], E, e, lib),
                  f_translate(psi->child[1], E, e, lib));
    case Conn::Imp:
      return imp(f_translate(psi->child[0], E, e, lib),
                 f_translate(psi->child[1], E, e, lib));
    case Conn::Dia: {
      int agent = E.agent_index(psi->name);
      if (agent < 0)
        throw ValidationError("event structure '" + E.name + "' lacks agent '" +
                              psi->name + "'");
      std::vector<Formula> parts;
      for (int e2 = 0; e2 < E.event_count(); ++e2)
        if (E.rel[agent].cell[e2] == E.rel[agent].cell[e])
          parts.push_back(dia(psi->name, conj(f_translate(psi->child[0], E, e2, lib),
                                              E.pre_formula(e2))));
      return disj_all(parts);
    }
    case Conn::Box: {
      int agent = E.agent_index(psi->name);
      if (agent < 0)
        throw ValidationError("event structure '" + E.name + "' lacks agent '" +
                              psi->name + "'");
      std::vector<Formula> parts;
      for (int e2 = 0; e2 < E.event_count(); ++e2)
        if (E.rel[agent].cell[e2] == E.rel[agent].cell[e])
          parts.push_back(box(psi->name, imp(E.pre_formula(e2),
                                             f_translate(psi->child[0], E, e2, lib))));
      return conj_all(parts);
    }
    case Conn::DynDia:
    case Conn::DynBox: {
      auto it = lib.find(psi->name);
      if (it == lib.end()) throw UnknownEventName("event structure '" + psi->name + "'");
      const EventStructureL& E2 = it->second;
      int e2 = E2.event_index(psi->event);
      if (e2 < 0)
        throw UnknownEventName("event '" + psi->event + "' in '" + psi->name + "'");
      Formula innerF = f_translate(psi->child[0], E2, e2, lib);
      Formula guarded = psi->kind == Conn::DynDia ? conj(E2.pre_formula(e2), innerF)
                                                  : imp(E2.pre_formula(e2), innerF);
      return f_translate(guarded, E, e, lib);
    }
    case Conn::ProbGeq:
    case Conn::ProbGt: {
      int agent = E.agent_index(psi->name);
      if (agent < 0)
        throw ValidationError("event structure '" + E.name + "' lacks agent '" +
                              psi->name + "'");
      auto below = formula_phi_below(E);
      std::vector<ProbTerm> terms;
      auto push_mu_phi = [&](const Rational& coeff, const Formula& chi, int m) {
        if (coeff == 0) return;
        terms.push_back({coeff, chi ? conj(chi, E.phi[m]) : E.phi[m]});
        for (int j : formula_mb(below, m))
          terms.push_back({-coeff, chi ? conj(chi, E.phi[j]) : E.phi[j]});
      };
      for (int e2 = 0; e2 < E.event_count(); ++e2) {
        if (E.rel[agent].cell[e2] != E.rel[agent].cell[e]) continue;
        for (int m = 0; m < static_cast<int>(E.phi.size()); ++m) {
          Rational w = E.rel[agent].p[e2] * E.pre[m][e2];
          if (w == 0) continue;
          for (const auto& t : psi->terms)
            push_mu_phi(t.coeff * w, f_translate(t.arg, E, e2, lib), m);
          push_mu_phi(-psi->bound * w, nullptr, m);
        }
      }
      return psi->kind == Conn::ProbGt ? prob_gt(psi->name, std::move(terms), 0)
                                       : prob_geq(psi->name, std::move(terms), 0);
    }
  }
  throw std::logic_error("unreachable formula kind");
}

namespace {

struct Rewriter {
  const EventLibrary& lib;
  size_t budget;
  std::vector<RewriteStep> trace;

  void spend() {
    if (budget == 0)
      throw NonTermination("rewrite step budget exhausted; this indicates a defect");
    --budget;
  }

  std::string axiom_name(Conn dynKind, Conn bodyKind) const {
    const bool isBox = dynKind == Conn::DynBox;
    switch (bodyKind) {
      case Conn::Atom: return isBox ? "I1" : "I2";
      case Conn::Top: return isBox ? "I3" : "I4";
      case Conn::Bot: return isBox ? "I5" : "I6";
      case Conn::And: return isBox ? "I7" : "I8";
      case Conn::Or: return isBox ? "I9" : "I10";
      case Conn::Imp: return isBox ? "I11" : "I12";
      case Conn::Dia: return isBox ? "I13" : "I14";
      case Conn::Box: return isBox ? "I15" : "I16";
      case Conn::ProbGeq:
      case Conn::ProbGt: return isBox ? "I17" : "I18";
      default: return "?";
    }
  }

  Formula rewrite(const Formula& f) {
    spend();
    switch (f->kind) {
      case Conn::Atom:
      case Conn::Bot:
      case Conn::Top: return f;
      case Conn::And: return conj(rewrite(f->child[0]), rewrite(f->child[1]));
      case Conn::Or: return disj(rewrite(f->child[0]), rewrite(f->child[1]));
      case Conn::Imp: return imp(rewrite(f->child[0]), rewrite(f->child[1]));
      case Conn::Dia: return dia(f->name, rewrite(f->child[0]));
      case Conn::Box: return box(f->name, rewrite(f->child[0]));
      case Conn::ProbGeq:
      case Conn::ProbGt: {
        std::vector<ProbTerm> terms;
        for (const auto& t : f->terms) terms.push_back({t.coeff, rewrite(t.arg)});
        return f->kind == Conn::ProbGt ? prob_gt(f->name, std::move(terms), f->bound)
                                       : prob_geq(f->name, std::move(terms), f->bound);
      }
      case Conn::DynDia:
      case Conn::DynBox: {
        Formula body = rewrite(f->child[0]);  // innermost first
        auto it = lib.find(f->name);
        if (it == lib.end()) throw UnknownEventName("event structure '" + f->name + "'");
        const EventStructureL& E = it->second;
        int e = E.event_index(f->event);
        if (e < 0)
          throw UnknownEventName("event '" + f->event + "' in '" + f->name + "'");
        Formula lhs = f->kind == Conn::DynBox ? dyn_box(f->name, f->event, body)
                                              : dyn_dia(f->name, f->event, body);
        Formula rhs = reduction_rhs(f->kind, E, e, body);
        trace.push_back({axiom_name(f->kind, body->kind), lhs, rhs});
        return rewrite(rhs);
      }
    }
    throw std::logic_error("unreachable formula kind");
  }
};

}  // namespace

RewriteResult rewrite_static(const Formula& f, const EventLibrary& lib, size_t stepBudget) {
  Rewriter rw{lib, stepBudget, {}};
  Formula out = rw.rewrite(f);
  return {out, std::move(rw.trace)};
}

ReductionCheck check_reduction_axiom(const ApeModel& M, const std::string& axiomId,
                                     const AxiomInstance& inst) {
  if (!M.events) throw UnknownEventName("no event structures loaded");
  const EventStructureL& E = M.events->at(inst.eventName);
  int e = E.event_index(inst.eventId);
  if (e < 0) throw UnknownEventName("event '" + inst.eventId + "'");

  int num = std::stoi(axiomId.substr(1));
  bool isBox = num % 2 == 1;
  Conn dynKind = isBox ? Conn::DynBox : Conn::DynDia;

  Formula body;
  switch ((num + 1) / 2) {
    case 1: body = atom(inst.atomName); break;
    case 2: body = top(); break;
    case 3: body = bot(); break;
    case 4: body = conj(inst.psi.at(0), inst.psi.at(1)); break;
    case 5: body = disj(inst.psi.at(0), inst.psi.at(1)); break;
    case 6: body = imp(inst.psi.at(0), inst.psi.at(1)); break;
    case 7: body = dia(inst.agent, inst.psi.at(0)); break;
    case 8: body = box(inst.agent, inst.psi.at(0)); break;
    case 9:
      body = inst.strictAtom ? prob_gt(inst.agent, inst.terms, inst.bound)
                             : prob_geq(inst.agent, inst.terms, inst.bound);
      break;
    default: throw std::invalid_argument("unknown axiom id " + axiomId);
  }

  ReductionCheck out;
  out.lhs = isBox ? dyn_box(inst.eventName, inst.eventId, body)
                  : dyn_dia(inst.eventName, inst.eventId, body);
  out.rhs = reduction_rhs(dynKind, E, e, body);
  Evaluator ev(M);
  out.lhsVal = ev.eval(out.lhs);
  out.rhsVal = ev.eval(out.rhs);
  out.ok = out.lhsVal == out.rhsVal;
  return out;
}

}  // namespace pdel
