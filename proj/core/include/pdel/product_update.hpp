#pragma once

#include <functional>

#include "pdel/apemodel.hpp"

namespace pdel {

struct ForestViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateQuotient : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Interprets a formula as an element of the current model's algebra; the
/// evaluator passes itself in so that preconditions and substitution targets
/// may themselves be dynamic.
using Interp = std::function<Elem(const Formula&)>;

/// Event structure over an algebra: events with epistemic data aligned to
/// the model's agent order, the precondition multiset as interpreted
/// elements with the forest order, and the transported pre map.
struct EventStructureA {
  int eventCount = 0;
  std::vector<AgentDist> rel;              // [model agent]
  PhiMultiset phi;
  std::vector<std::vector<Rational>> pre;  // [member][event]
  std::vector<std::string> warnings;
};

/// Interprets the preconditions of E in M and carries the structure over:
/// members keep their positions (co-extensional formulas become copies of
/// one element), the order between distinct elements is the lattice order,
/// copies are ordered by declaration then by position. Checks the forest
/// condition and the upward propagation of pre zeros.
EventStructureA translate_event(const EventStructureL& E, const ApeModel& M,
                                const Interp& interp);

/// |E|-fold power of a base algebra with the saturated modalities: the
/// diamond of a tuple joins the base diamonds across each agent's event
/// cell, the box meets the base boxes. Elements are coordinate-wise
/// concatenations of base elements.
class ProductAlgebra final : public AlgebraOps {
 public:
  ProductAlgebra(AlgebraPtr base, int eventCount, std::vector<AgentDist> eventRel);

  const AlgebraOps& base() const { return *base_; }
  AlgebraPtr base_ptr() const { return base_; }
  int event_count() const { return nE_; }
  bool event_sim(int agent, int e1, int e2) const {
    return eventRel_[agent].cell[e1] == eventRel_[agent].cell[e2];
  }

  Elem coordinate(const Elem& f, int e) const;
  Elem tuple(const std::vector<Elem>& coords) const;
  Elem constant(const Elem& x) const;

  int width() const override { return nE_ * base_->width(); }
  int agent_count() const override { return base_->agent_count(); }
  Elem bottom() const override { return constant(base_->bottom()); }
  Elem top() const override { return constant(base_->top()); }
  Elem meet(const Elem& a, const Elem& b) const override;
  Elem join(const Elem& a, const Elem& b) const override;
  Elem implies(const Elem& a, const Elem& b) const override;
  Elem dia(int agent, const Elem& a) const override;
  Elem box(int agent, const Elem& a) const override;
  std::vector<Elem> i_minimal(int agent) const override;  // the f_{e,a} family
  std::vector<Elem> carrier() const override;
  std::vector<Elem> downset(const Elem& a) const override;

 private:
  AlgebraPtr base_;
  int nE_;
  std::vector<AgentDist> eventRel_;
};

/// Intermediate ApPE-structure: the product algebra together with the
/// premeasures mu'_i(f) = sum_e sum_a P_i(e) mu_i^a(f(e)) pre(e|a).
class IntermediateStructure final : public Structure {
 public:
  IntermediateStructure(StructurePtr base, EventStructureA E);

  AlgebraPtr algebra() const override { return prod_; }
  std::shared_ptr<const ProductAlgebra> product() const { return prod_; }
  const EventStructureA& event() const { return E_; }
  const Structure& base() const { return *base_; }

  Rational measure(int agent, const Elem& f) const override;  // mu'_i
  bool in_domain(int agent, const Elem& f) const override;

 private:
  StructurePtr base_;
  EventStructureA E_;
  std::shared_ptr<const ProductAlgebra> prod_;
};

/// The element pre-bar of the product: coordinate e is the join of the
/// members with positive occurrence probability at e.
Elem pre_bar(const EventStructureA& E, const ProductAlgebra& prod);

/// Pseudo-quotient of the product by pre-bar, on canonical representatives
/// g /\ pre-bar. Operations are the transported ones; the carrier is the
/// pointwise downset of pre-bar.
class UpdatedAlgebra final : public AlgebraOps {
 public:
  UpdatedAlgebra(std::shared_ptr<const ProductAlgebra> prod, Elem preBar);

  const ProductAlgebra& product() const { return *prod_; }
  const Elem& pre_bar_elem() const { return preBar_; }
  Elem project(const Elem& g) const { return prod_->meet(g, preBar_); }

  int width() const override { return prod_->width(); }
  int agent_count() const override { return prod_->agent_count(); }
  Elem bottom() const override { return prod_->bottom(); }
  Elem top() const override { return preBar_; }
  Elem meet(const Elem& a, const Elem& b) const override { return prod_->meet(a, b); }
  Elem join(const Elem& a, const Elem& b) const override { return prod_->join(a, b); }
  Elem implies(const Elem& a, const Elem& b) const override {
    return project(prod_->implies(a, b));
  }
  Elem dia(int agent, const Elem& a) const override {
    return project(prod_->dia(agent, a));
  }
  Elem box(int agent, const Elem& a) const override {
    return project(prod_->box(agent, prod_->implies(preBar_, a)));
  }
  std::vector<Elem> i_minimal(int agent) const override;
  std::vector<Elem> carrier() const override { return prod_->downset(preBar_); }
  std::vector<Elem> downset(const Elem& a) const override { return prod_->downset(a); }

 private:
  std::shared_ptr<const ProductAlgebra> prod_;
  Elem preBar_;
};

/// Updated APE-structure on the pseudo-quotient, with
/// mu^E([g]) = mu'(g) / mu'(f) for the unique cell [f] above [g].
class UpdatedStructure final : public Structure {
 public:
  UpdatedStructure(std::shared_ptr<const IntermediateStructure> inter);

  AlgebraPtr algebra() const override { return alg_; }
  std::shared_ptr<const UpdatedAlgebra> updated_algebra() const { return alg_; }
  const IntermediateStructure& intermediate() const { return *inter_; }

  Rational measure(int agent, const Elem& g) const override;
  bool in_domain(int agent, const Elem& g) const override;

 private:
  std::shared_ptr<const IntermediateStructure> inter_;
  std::shared_ptr<const UpdatedAlgebra> alg_;
};

/// Quotient-after-product update of an APE-structure. Throws
/// DegenerateQuotient when no event is executable anywhere (pre-bar is the
/// bottom map).
std::shared_ptr<const UpdatedStructure> update_structure(StructurePtr F,
                                                         EventStructureA E);

struct AlgebraicUpdateResult {
  ApeModel model;
  std::shared_ptr<const UpdatedStructure> structure;
  EventStructureA event;
};

/// Full model update: translates the event structure, updates the
/// structure, and re-values atoms event-wise through the substitutions
/// before projecting to the quotient.
AlgebraicUpdateResult update_model(const ApeModel& M, const EventStructureL& E,
                                   const Interp& interp);

}  // namespace pdel
