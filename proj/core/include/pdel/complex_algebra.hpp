#pragma once

#include "pdel/apemodel.hpp"

namespace pdel {

/// Powerset algebra of an indexed finite set with per-agent partitions:
/// meets and joins are bitwise, implication is Boolean, the modalities are
/// the cell saturation and cell interior. Elements are 64-bit masks stored
/// in two words.
class PowersetAlgebra final : public AlgebraOps {
 public:
  PowersetAlgebra(int points, std::vector<std::vector<int>> cellOf);

  int points() const { return n_; }
  Mask full() const { return full_; }
  const std::vector<Mask>& cells(int agent) const { return cells_[agent]; }

  static Elem wrap(Mask m) { return {uint32_t(m & 0xffffffffu), uint32_t(m >> 32)}; }
  static Mask mask(const Elem& e) { return Mask(e[0]) | (Mask(e[1]) << 32); }

  int width() const override { return 2; }
  int agent_count() const override { return static_cast<int>(cellOf_.size()); }
  Elem bottom() const override { return wrap(0); }
  Elem top() const override { return wrap(full_); }
  Elem meet(const Elem& a, const Elem& b) const override {
    return wrap(mask(a) & mask(b));
  }
  Elem join(const Elem& a, const Elem& b) const override {
    return wrap(mask(a) | mask(b));
  }
  Elem implies(const Elem& a, const Elem& b) const override {
    return wrap((~mask(a) | mask(b)) & full_);
  }
  Elem dia(int agent, const Elem& a) const override;
  Elem box(int agent, const Elem& a) const override;
  std::vector<Elem> i_minimal(int agent) const override;
  std::vector<Elem> carrier() const override;
  std::vector<Elem> downset(const Elem& a) const override;

 private:
  int n_;
  Mask full_;
  std::vector<std::vector<int>> cellOf_;   // [agent][point]
  std::vector<std::vector<Mask>> cells_;   // [agent] -> partition masks
};

/// P+ measures over a powerset algebra: domain is the subsets of single
/// cells, the value is the summed point weight. Works both for genuine
/// PES-models (per-cell distributions) and for raw intermediate weights.
class PowersetStructure final : public Structure {
 public:
  PowersetStructure(std::shared_ptr<const PowersetAlgebra> alg,
                    std::vector<std::vector<Rational>> weights);

  AlgebraPtr algebra() const override { return alg_; }
  const PowersetAlgebra& powerset() const { return *alg_; }
  Rational measure(int agent, const Elem& x) const override;
  bool in_domain(int agent, const Elem& x) const override;

 private:
  std::shared_ptr<const PowersetAlgebra> alg_;
  std::vector<std::vector<Rational>> weights_;  // [agent][point]
};

/// The complex algebra of a PES-model as a full APE-model: powerset with
/// modalities from the epistemic relations, P+ measures from the state
/// weights, the valuation reused as masks.
ApeModel complex_algebra(const PesModel& M, std::shared_ptr<const EventLibrary> events);

struct DualityReport {
  bool ok = true;
  std::vector<std::string> witnesses;

  void mismatch(std::string w) {
    ok = false;
    if (witnesses.size() < 32) witnesses.push_back(std::move(w));
  }
};

enum class DualityMode { Intermediate, Update };

/// Builds both sides of the duality square for a classical model and event
/// structure and checks that the canonical bijection X |-> (e |-> X_e) is an
/// isomorphism of algebras carrying measures and valuations across exactly.
DualityReport check_duality(const PesModel& M, const EventLibrary& lib,
                            const EventStructureL& E, DualityMode mode);

}  // namespace pdel
