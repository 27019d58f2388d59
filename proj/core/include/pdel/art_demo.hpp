#pragma once

#include "pdel/relational.hpp"

namespace pdel {

struct OutOfRange : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Coarse probability scale of the investor, partitioning [0,1]. Boundary
/// membership follows the bracketing exactly: [0,0.01) impossible,
/// [0.01,0.1] implausible, (0.1,0.5] unlikely, (0.5,0.7] likely,
/// (0.7,0.9) very likely, [0.9,0.99] almost certain, [0.99,1] certain.
enum class Category {
  Impossible,
  Implausible,
  Unlikely,
  Likely,
  VeryLikely,
  AlmostCertain,
  Certain,
};

const char* category_name(Category c);
Category categorize(const Rational& q);  // throws OutOfRange outside [0,1]

/// The built-in art-investment scenario: an investor watching whether a
/// young artist exhibits at a top gallery. Three epistemic states ordered
/// by information growth, one three-event announcement structure.
IntKripkeModel art_model();
EventStructureL art_event();

struct ArtDemo {
  IntKripkeModel initial;
  EventStructureL event;
  IntUpdateResult update;

  struct Row {
    std::string label;
    Rational exact;
    std::string display;  // half-up, 3 decimals
    Category category;
  };
  std::vector<Row> initialRows;   // investor weights of the initial states
  std::vector<Row> updatedRows;   // all nine updated pairs
  std::vector<Row> submodelRows;  // the announced-exhibition cell
};

ArtDemo run_art_demo();

}  // namespace pdel
