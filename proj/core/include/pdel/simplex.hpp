#pragma once

#include <map>
#include <vector>

#include "pdel/rational.hpp"

namespace pdel {

enum class LpCmp { Le, Ge, Eq };

struct LpRow {
  std::map<int, Rational> coeff;  // variable index -> coefficient
  LpCmp cmp = LpCmp::Le;
  Rational rhs = 0;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rational> x;
  Rational objective = 0;
};

/// Maximises objective . x subject to the rows and x >= 0, in exact rational
/// arithmetic. Two-phase tableau simplex with Bland's rule, so it terminates
/// on every input. Callers encode free upper bounds as ordinary rows.
LpResult solve_lp(int numVars, const std::vector<LpRow>& rows,
                  const std::vector<Rational>& objective);

}  // namespace pdel
