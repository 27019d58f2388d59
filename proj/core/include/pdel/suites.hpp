#pragma once

#include <cstdint>

#include "pdel/generators.hpp"

namespace pdel {

struct SuiteResult {
  std::string name;
  int passed = 0, total = 0;
  std::vector<std::string> failures;

  bool ok() const { return total > 0 && passed == total; }
  void record(bool pass, const std::string& what) {
    ++total;
    if (pass) {
      ++passed;
    } else if (failures.size() < 16) {
      failures.push_back(what);
    }
  }
};

/// Art scenario reproduction: exact updated weights, 3-decimal displays and
/// the category labels of the initial and updated readings.
SuiteResult suite_art();

/// Both duality modes on pseudorandom classical (model, event) pairs.
SuiteResult suite_duality(uint64_t seed, int count);

/// Per-axiom soundness of I1..I18: `count` random instances of every axiom
/// spread over at least 20 random APE-models.
SuiteResult suite_reduction(uint64_t seed, int count);

/// Semantic equivalence of rewrite_static on random dynamic formulas.
SuiteResult suite_rewrite(uint64_t seed, int count);

/// The translation lemma: coordinates of the updated interpretation equal
/// the base interpretation of the translated formulas.
SuiteResult suite_translation(uint64_t seed, int count);

/// Complex algebras are APE-structures; their i-minimal elements are the
/// epistemic cells.
SuiteResult suite_complex_validity(uint64_t seed, int count);

/// Pseudo-quotient i-minimal characterisation plus projection laws on
/// random (algebra, divisor) pairs.
SuiteResult suite_quotient(uint64_t seed, int count);

/// Validity of the static axiom schemas (N0-N6, P1-P5), the classical p4
/// comparison on Boolean models, and the cell-relativisation lemma.
SuiteResult suite_static_axioms(uint64_t seed, int count);

/// Measure synthesis round trips: satisfiable patterns produce validating
/// measures whose atoms evaluate as prescribed; contradictory patterns are
/// reported infeasible.
SuiteResult suite_synthesis(uint64_t seed, int count, int contradictory);

/// On discrete orders the intuitionistic update collapses to the classical
/// one, exactly.
SuiteResult suite_degenerate(uint64_t seed, int count);

}  // namespace pdel
