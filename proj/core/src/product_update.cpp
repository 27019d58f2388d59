#include "pdel/product_update.hpp"

#include <algorithm>

namespace pdel {

EventStructureA translate_event(const EventStructureL& E, const ApeModel& M,
                                const Interp& interp) {
  EventStructureA out;
  out.eventCount = E.event_count();
  const AlgebraOps& A = *M.structure->algebra();

  for (const auto& agent : M.agents) {
    int i = E.agent_index(agent);
    if (i < 0) throw ValidationError("event structure lacks agent '" + agent + "'");
    out.rel.push_back(E.rel[i]);
  }

  const int k = static_cast<int>(E.phi.size());
  out.phi.elems.reserve(k);
  for (const auto& f : E.phi) out.phi.elems.push_back(interp(f));
  out.pre = E.pre;

  out.phi.below.assign(k, std::vector<char>(k, 0));
  const Elem bot = A.bottom();
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      if (a == b) continue;
      const Elem &ea = out.phi.elems[a], &eb = out.phi.elems[b];
      if (ea != eb) {
        bool belowAB = A.leq(ea, eb);
        bool belowBA = A.leq(eb, ea);
        bool disjoint = A.meet(ea, eb) == bot;
        if (!belowAB && !belowBA && !disjoint)
          throw ForestViolation("preconditions " + std::to_string(a) + " and " +
                                std::to_string(b) +
                                " are neither comparable nor inconsistent");
        // a bottom member satisfies both disjuncts of the forest condition;
        // reading it as inconsistent-with-everything keeps it order-isolated,
        // and its measure terms vanish either way
        out.phi.below[a][b] = (belowAB && ea != bot) ? 1 : 0;
        if (E.declared_below(a, b) && !belowAB)
          out.warnings.push_back("declared order " + std::to_string(a) + " < " +
                                 std::to_string(b) + " not confirmed by the model");
      } else if (ea != bot) {
        out.phi.below[a][b] =
            (E.declared_below(a, b) || (!E.declared_below(b, a) && a < b)) ? 1 : 0;
      }
    }

  // pre zeros must propagate upward through the forest order
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (out.phi.below[a][b])
        for (int e = 0; e < out.eventCount; ++e)
          if (out.pre[a][e] == 0 && out.pre[b][e] != 0)
            throw ForestViolation("pre(e" + std::to_string(e) + "|" + std::to_string(a) +
                                  ") = 0 but member " + std::to_string(b) +
                                  " above it keeps positive probability");

  return out;
}

ProductAlgebra::ProductAlgebra(AlgebraPtr base, int eventCount,
                               std::vector<AgentDist> eventRel)
    : base_(std::move(base)), nE_(eventCount), eventRel_(std::move(eventRel)) {}

Elem ProductAlgebra::coordinate(const Elem& f, int e) const {
  const int w = base_->width();
  return Elem(f.begin() + size_t(e) * w, f.begin() + size_t(e + 1) * w);
}

Elem ProductAlgebra::tuple(const std::vector<Elem>& coords) const {
  Elem out;
  out.reserve(width());
  for (const auto& c : coords) out.insert(out.end(), c.begin(), c.end());
  return out;
}

Elem ProductAlgebra::constant(const Elem& x) const {
  Elem out;
  out.reserve(width());
  for (int e = 0; e < nE_; ++e) out.insert(out.end(), x.begin(), x.end());
  return out;
}

Elem ProductAlgebra::meet(const Elem& a, const Elem& b) const {
  std::vector<Elem> coords;
  for (int e = 0; e < nE_; ++e)
    coords.push_back(base_->meet(coordinate(a, e), coordinate(b, e)));
  return tuple(coords);
}

Elem ProductAlgebra::join(const Elem& a, const Elem& b) const {
  std::vector<Elem> coords;
  for (int e = 0; e < nE_; ++e)
    coords.push_back(base_->join(coordinate(a, e), coordinate(b, e)));
  return tuple(coords);
}

Elem ProductAlgebra::implies(const Elem& a, const Elem& b) const {
  std::vector<Elem> coords;
  for (int e = 0; e < nE_; ++e)
    coords.push_back(base_->implies(coordinate(a, e), coordinate(b, e)));
  return tuple(coords);
}

Elem ProductAlgebra::dia(int agent, const Elem& a) const {
  std::vector<Elem> coords(nE_);
  for (int e = 0; e < nE_; ++e) {
    Elem acc = base_->bottom();
    for (int e2 = 0; e2 < nE_; ++e2)
      if (event_sim(agent, e, e2))
        acc = base_->join(acc, base_->dia(agent, coordinate(a, e2)));
    coords[e] = std::move(acc);
  }
  return tuple(coords);
}

Elem ProductAlgebra::box(int agent, const Elem& a) const {
  std::vector<Elem> coords(nE_);
  for (int e = 0; e < nE_; ++e) {
    Elem acc = base_->top();
    for (int e2 = 0; e2 < nE_; ++e2)
      if (event_sim(agent, e, e2))
        acc = base_->meet(acc, base_->box(agent, coordinate(a, e2)));
    coords[e] = std::move(acc);
  }
  return tuple(coords);
}

std::vector<Elem> ProductAlgebra::i_minimal(int agent) const {
  // one f_{e,a} per (event cell, base i-minimal): a on the cell, bottom off it
  std::vector<Elem> out;
  std::vector<int> seenCells;
  for (int e = 0; e < nE_; ++e) {
    int c = eventRel_[agent].cell[e];
    if (std::find(seenCells.begin(), seenCells.end(), c) != seenCells.end()) continue;
    seenCells.push_back(c);
    for (const Elem& a : base_->i_minimal(agent)) {
      std::vector<Elem> coords(nE_);
      for (int e2 = 0; e2 < nE_; ++e2)
        coords[e2] = eventRel_[agent].cell[e2] == c ? a : base_->bottom();
      out.push_back(tuple(coords));
    }
  }
  return out;
}

std::vector<Elem> ProductAlgebra::carrier() const {
  std::vector<Elem> out{Elem{}};
  for (int e = 0; e < nE_; ++e) {
    std::vector<Elem> next;
    for (const Elem& prefix : out)
      for (const Elem& x : base_->carrier()) {
        Elem ext = prefix;
        ext.insert(ext.end(), x.begin(), x.end());
        next.push_back(std::move(ext));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<Elem> ProductAlgebra::downset(const Elem& a) const {
  std::vector<Elem> out{Elem{}};
  for (int e = 0; e < nE_; ++e) {
    std::vector<Elem> coordDown = base_->downset(coordinate(a, e));
    std::vector<Elem> next;
    for (const Elem& prefix : out)
      for (const Elem& x : coordDown) {
        Elem ext = prefix;
        ext.insert(ext.end(), x.begin(), x.end());
        next.push_back(std::move(ext));
      }
    out = std::move(next);
  }
  return out;
}

IntermediateStructure::IntermediateStructure(StructurePtr base, EventStructureA E)
    : base_(std::move(base)),
      E_(std::move(E)),
      prod_(std::make_shared<ProductAlgebra>(base_->algebra(), E_.eventCount, E_.rel)) {}

Rational IntermediateStructure::measure(int agent, const Elem& f) const {
  if (!in_domain(agent, f))
    throw OutOfDomain("mu' argument outside Min_i downset of the product");
  Rational acc = 0;
  for (int e = 0; e < E_.eventCount; ++e) {
    Elem fe = prod_->coordinate(f, e);
    for (int m = 0; m < E_.phi.size(); ++m) {
      if (E_.pre[m][e] == 0) continue;
      acc += E_.rel[agent].p[e] * mu_upper(*base_, agent, E_.phi, m, fe) * E_.pre[m][e];
    }
  }
  return acc;
}

bool IntermediateStructure::in_domain(int agent, const Elem& f) const {
  for (const Elem& cell : prod_->i_minimal(agent))
    if (prod_->leq(f, cell)) return true;
  return false;
}

Elem pre_bar(const EventStructureA& E, const ProductAlgebra& prod) {
  const AlgebraOps& A = prod.base();
  std::vector<Elem> coords(E.eventCount);
  for (int e = 0; e < E.eventCount; ++e) {
    Elem acc = A.bottom();
    for (int m = 0; m < E.phi.size(); ++m)
      if (E.pre[m][e] != 0) acc = A.join(acc, E.phi.elems[m]);
    coords[e] = std::move(acc);
  }
  return prod.tuple(coords);
}

UpdatedAlgebra::UpdatedAlgebra(std::shared_ptr<const ProductAlgebra> prod, Elem preBar)
    : prod_(std::move(prod)), preBar_(std::move(preBar)) {}

std::vector<Elem> UpdatedAlgebra::i_minimal(int agent) const {
  std::vector<Elem> out;
  const Elem bot = bottom();
  for (const Elem& f : prod_->i_minimal(agent)) {
    Elem rep = project(f);
    if (rep != bot) out.push_back(std::move(rep));
  }
  return out;
}

UpdatedStructure::UpdatedStructure(std::shared_ptr<const IntermediateStructure> inter)
    : inter_(std::move(inter)),
      alg_(std::make_shared<UpdatedAlgebra>(inter_->product(),
                                            pre_bar(inter_->event(), *inter_->product()))) {}

Rational UpdatedStructure::measure(int agent, const Elem& g) const {
  if (g == alg_->bottom()) {
    if (!in_domain(agent, g)) throw OutOfDomain("measure domain is empty");
    return 0;
  }
  // locate the unique quotient cell above [g]; g is canonical, so comparing
  // against the product-level f_{e,a} is enough
  for (const Elem& f : inter_->product()->i_minimal(agent)) {
    Elem rep = alg_->project(f);
    if (rep == alg_->bottom()) continue;
    if (alg_->leq(g, rep)) {
      Rational denom = inter_->measure(agent, rep);
      if (denom == 0)
        throw ConstructionError("cell with zero intermediate mass; event structure "
                                "violates the pre-zero propagation condition");
      return inter_->measure(agent, g) / denom;
    }
  }
  throw OutOfDomain("element lies below no updated cell");
}

bool UpdatedStructure::in_domain(int agent, const Elem& g) const {
  for (const Elem& f : alg_->i_minimal(agent))
    if (alg_->leq(g, f)) return true;
  return false;
}

std::shared_ptr<const UpdatedStructure> update_structure(StructurePtr F,
                                                         EventStructureA E) {
  auto inter = std::make_shared<IntermediateStructure>(std::move(F), std::move(E));
  auto out = std::make_shared<UpdatedStructure>(inter);
  if (out->updated_algebra()->pre_bar_elem() ==
      out->updated_algebra()->product().bottom())
    throw DegenerateQuotient("no event is executable anywhere: pre-bar is bottom");
  return out;
}

AlgebraicUpdateResult update_model(const ApeModel& M, const EventStructureL& E,
                                   const Interp& interp) {
  AlgebraicUpdateResult out;
  out.event = translate_event(E, M, interp);
  out.structure = update_structure(M.structure, out.event);
  const auto& ualg = *out.structure->updated_algebra();
  const auto& prod = ualg.product();

  out.model.structure = out.structure;
  out.model.agents = M.agents;
  out.model.events = M.events;

  std::vector<std::string> atoms;
  for (const auto& [a, v] : M.valuation) atoms.push_back(a);
  for (int e = 0; e < E.event_count(); ++e)
    for (const auto& [a, f] : E.sub[e].mapping())
      if (std::find(atoms.begin(), atoms.end(), a) == atoms.end()) atoms.push_back(a);

  for (const auto& a : atoms) {
    std::vector<Elem> coords(E.event_count());
    for (int e = 0; e < E.event_count(); ++e) coords[e] = interp(E.sub_formula(e, a));
    out.model.valuation[a] = ualg.project(prod.tuple(coords));
  }
  return out;
}

}  // namespace pdel
