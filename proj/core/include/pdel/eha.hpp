#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pdel/lattice.hpp"

namespace pdel {

/// Finite epistemic Heyting algebra: a distributive lattice with Heyting
/// implication plus one (diamond, box) pair of unary operator tables per
/// agent. The tables are explicit data; nothing assumes they came from a
/// relation.
struct Eha {
  FiniteLattice lat;
  std::vector<std::string> agents;
  std::vector<std::vector<int16_t>> diamond;  // [agent][element]
  std::vector<std::vector<int16_t>> box;

  int size() const { return lat.size(); }
  int agent_count() const { return static_cast<int>(agents.size()); }
  int agent_index(const std::string& name) const;

  int dia(int agent, int a) const { return diamond[agent][a]; }
  int bx(int agent, int a) const { return box[agent][a]; }
};

/// One violated axiom instance: which law, on which elements.
struct AxiomViolation {
  std::string axiom;  // "M1".."M9", "E", "residuation", "fact1-..." etc.
  std::vector<int> elems;
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Pointwise check of M1..M9 and E for every agent, plus the closure facts
/// about the diamond image (Boolean subalgebra, equal to the box image) and
/// residuation of the implication table. Violations are data, not errors.
AxiomReport check_eha_axioms(const Eha& A);

/// The i-minimal elements: minimal nonbottom fixed points of diamond_i,
/// computed directly from the definition. Ascending element order.
std::vector<int> i_minimal(const Eha& A, int agent);

/// Pseudo-quotient of A by `divisor`: classes b ~ c iff b /\ a = c /\ a,
/// kept as canonical representatives b /\ a. The carrier is the downset of
/// the divisor; operations are the transported ones.
struct QuotientAlgebra {
  Eha algebra;                 // the quotient as a first-class EHA
  int divisor;                 // element of the base
  std::vector<int> project;    // base element -> quotient index
  std::vector<int> section;    // quotient index -> canonical base element
  bool degenerate;             // divisor was bottom (one-point quotient)
};

QuotientAlgebra pseudo_quotient(const Eha& A, int divisor);

}  // namespace pdel
