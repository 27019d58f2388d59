#pragma once

#include "pdel/product_update.hpp"

namespace pdel {

struct CyclicEventReference : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Algebraic evaluation context for one model. Subformula values and
/// constructed updated models are memoized for the lifetime of the
/// evaluator; a fresh evaluator starts clean.
class Evaluator {
 public:
  explicit Evaluator(const ApeModel& M);

  Elem eval(const Formula& f);

  /// The evaluator of M^E for a named event structure, building the update
  /// on first use. Exposed so callers can inspect the updated model.
  struct Updated {
    AlgebraicUpdateResult update;
    std::unique_ptr<Evaluator> eval;
  };
  const Updated& updated(const std::string& eventName);

  const ApeModel& model() const { return M_; }

 private:
  const ApeModel& M_;
  std::map<std::string, Elem> memo_;
  std::map<std::string, std::shared_ptr<Updated>> updated_;
  std::vector<std::string> building_;  // cycle guard across nested evaluators
  Evaluator* parent_ = nullptr;

  bool is_building(const std::string& name) const;
  Elem eval_uncached(const Formula& f);
};

/// One-shot evaluation of a formula on an APE-model.
Elem eval_algebraic(const ApeModel& M, const Formula& f);

}  // namespace pdel
