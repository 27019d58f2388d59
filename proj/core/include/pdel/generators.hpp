#pragma once

#include <random>

#include "pdel/apemodel.hpp"

namespace pdel {

/// Seeded generator with hand-rolled bounded sampling so that runs are
/// reproducible across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t raw() { return eng_(); }
  int upto(int n) { return n <= 1 ? 0 : static_cast<int>(raw() % uint64_t(n)); }
  int between(int lo, int hi) { return lo + upto(hi - lo + 1); }  // inclusive
  bool chance(int num, int den) { return upto(den) < num; }

  /// Random composition: `parts` strictly positive integers summing to a
  /// denominator <= maxDen, as exact rationals summing to one.
  std::vector<Rational> distribution(int parts, int maxDen);

 private:
  std::mt19937_64 eng_;
};

/// Random PES-model over atoms p, q with the given bounds; weights have
/// denominators <= maxDen.
PesModel random_pes(Rng& rng, int maxStates = 4, int agents = 2, int maxDen = 12);

/// Random classical event structure valid against M: the preconditions come
/// from pairwise-inconsistent templates over p and q, so the unique-match
/// assumption holds on every classical model. Guarantees at least one
/// executable (state, event) pair.
EventStructureL random_classical_event(Rng& rng, const PesModel& M, int maxEvents = 3,
                                       const std::string& name = "E");

/// Random finite epistemic Heyting algebra: the lattice of down-sets of a
/// random poset (at most maxJi join-irreducibles), with per-agent cell
/// partitions built from the poset's connected components.
std::shared_ptr<Eha> random_eha(Rng& rng, int maxJi = 4, int agents = 2);

/// Random strict i-measure: positive weights on the join-irreducibles,
/// normalised per cell.
IMeasure random_measure(Rng& rng, const Eha& A, int agent);

struct RandomModelOptions {
  int maxJi = 4;
  int agents = 2;
  int events = 1;          // event structures to generate
  int maxEvents = 3;       // events per structure
  bool allowCopies = true; // co-extensional precondition pairs
};

/// Random APE-model over a random algebra, with valuation for p, q, r plus
/// dedicated precondition atoms, and `events` intuitionistic event
/// structures named "E0", "E1", ... in its library.
ApeModel random_ape_model(Rng& rng, const RandomModelOptions& opts = {});

/// Random static formula over the model's atoms and agents; probability
/// atoms appear with small coefficient lists.
Formula random_static_formula(Rng& rng, const ApeModel& M, int depth);

/// Random formula containing at least one dynamic operator, nesting depth
/// at most dynDepth.
Formula random_dynamic_formula(Rng& rng, const ApeModel& M, int depth, int dynDepth);

}  // namespace pdel
