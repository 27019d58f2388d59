#pragma once

#include "pdel/apemodel.hpp"
#include "pdel/simplex.hpp"

namespace pdel {

struct Infeasible : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UninterpretedSubformula : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class RowCmp { Le, Ge, Eq, Lt, Gt };

struct LinRow {
  std::map<int, Rational> coeff;  // LP variable -> coefficient
  RowCmp cmp = RowCmp::Ge;
  Rational rhs = 0;
  std::string tag;  // row kind, for infeasibility reports
};

/// Per-cell linear system over the variables x_b, one for each element b of
/// the cell's downset. Contains the structural rows (bounds, modularity,
/// monotonicity, bottom and cell normalisation) plus one row per prescribed
/// probability atom.
struct LinSystem {
  int cell = -1;                 // the i-minimal element this system lives under
  std::vector<int> varElem;      // LP variable -> element index
  std::vector<int> elemVar;      // element index -> LP variable or -1
  std::vector<LinRow> rows;
};

/// One probability atom restricted to a cell, subformulas already
/// interpreted as elements.
struct CellAtom {
  std::vector<std::pair<Rational, int>> terms;  // coefficient, element
  bool strict = false;                          // > instead of >=
  Rational bound = 0;
  bool holds = true;  // the prescribed sign f_sigma(cell)
};

LinSystem build_system(const Eha& A, int agent, int cell,
                       const std::vector<CellAtom>& atoms);

struct Solution {
  bool feasible = false;
  std::map<int, Rational> value;  // element -> value
  Rational epsilon = 0;           // realised slack of the strict rows
};

/// Exact feasibility: strict rows become weak ones displaced by a fresh
/// epsilon which is then maximised; a positive optimum realises strictness.
Solution solve_exact(const LinSystem& sys);

/// A single solution that is strict on every comparable pair below the
/// cell: per-pair gap maximisation followed by the equal-weight convex
/// combination. Throws Infeasible when some pair admits no strict solution.
Solution strictify(const Eha& A, const LinSystem& sys);

/// Substitution check: does the assignment satisfy every row exactly?
bool check_solution(const LinSystem& sys, const std::map<int, Rational>& value);

/// Sign pattern for one agent: each atom carries its formula parts and the
/// prescribed truth bit per cell (cells indexed in i_minimal order).
struct AgentPattern {
  std::string agent;
  struct AtomPattern {
    std::vector<ProbTerm> terms;
    bool strict = false;
    Rational bound = 0;
    std::map<int, int> cells;  // cell position -> 0/1
  };
  std::vector<AtomPattern> atoms;
};

/// Interprets a static formula (atoms, bot, top, and, or, imp, dia, box)
/// as an element of A under the given valuation. Probability atoms and
/// dynamic operators throw UninterpretedSubformula.
int interpret_static(const Eha& A, const std::map<std::string, int>& valuation,
                     const Formula& f);

/// Builds one strict i-measure per agent so that each pattern atom holds at
/// exactly the prescribed cells. Agents without a pattern receive the
/// join-irreducible counting measure. Throws Infeasible (with the cell in
/// the message) when a cell's system has no strict solution.
std::vector<IMeasure> synthesize_measures(const Eha& A,
                                          const std::vector<AgentPattern>& patterns,
                                          const std::map<std::string, int>& valuation);

}  // namespace pdel
