#pragma once

#include "pdel/eval.hpp"

namespace pdel {

struct NonTermination : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Strict precondition order at the formula level: declared pairs closed
/// under transitivity, with syntactically equal members ordered by
/// declaration and then by position.
std::vector<std::vector<char>> formula_phi_below(const EventStructureL& E);

/// The right-hand side of the reduction axiom pushing `dynKind` (DynBox for
/// the box family I1,I3,...,I17, DynDia for I2,I4,...,I18) over event e of E
/// through the top connective of `body`. `body`'s top connective selects the
/// axiom; its immediate subformulas become the metavariables.
Formula reduction_rhs(Conn dynKind, const EventStructureL& E, int e, const Formula& body);

/// The one-step translation f(psi, e): a formula whose value in the base
/// model is the e-th coordinate of a representative of [[psi]] in the
/// updated model. Probability atoms fold the event weights, occurrence
/// probabilities and the mb-corrected cell premeasures into one flat linear
/// atom.
Formula f_translate(const Formula& psi, const EventStructureL& E, int e,
                    const EventLibrary& lib);

struct RewriteStep {
  std::string axiom;
  Formula before, after;
};

struct RewriteResult {
  Formula formula;
  std::vector<RewriteStep> trace;
};

/// Rewrites every dynamic operator away, innermost first, axioms applied
/// left to right. The result is provably equivalent and static. The step
/// budget is a defect guard; exceeding it throws NonTermination.
RewriteResult rewrite_static(const Formula& f, const EventLibrary& lib,
                             size_t stepBudget = 1000000);

/// Instantiation data for one reduction axiom check.
struct AxiomInstance {
  std::string eventName;
  std::string eventId;
  std::string agent;                    // for I13..I18
  std::string atomName;                 // for I1/I2
  std::vector<Formula> psi;             // metavariable formulas
  std::vector<ProbTerm> terms;          // for I17/I18
  Rational bound = 0;                   // for I17/I18
  bool strictAtom = false;              // ProbGt instead of ProbGeq
};

struct ReductionCheck {
  bool ok = false;
  Formula lhs, rhs;
  Elem lhsVal, rhsVal;
};

/// Evaluates both sides of axiom "I1".."I18" on M for the given instance
/// and reports exact equality of the two algebra elements.
ReductionCheck check_reduction_axiom(const ApeModel& M, const std::string& axiomId,
                                     const AxiomInstance& inst);

}  // namespace pdel
