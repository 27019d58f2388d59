#pragma once

#include <map>
#include <memory>
#include <string>

#include "pdel/measures.hpp"
#include "pdel/relational.hpp"

namespace pdel {

/// Algebraic probabilistic epistemic model: an APE-structure, a valuation of
/// atoms into its algebra, and the library of named event structures that
/// dynamic operators may reference.
struct ApeModel {
  StructurePtr structure;
  std::vector<std::string> agents;
  std::map<std::string, Elem> valuation;
  std::shared_ptr<const EventLibrary> events;

  int agent_index(const std::string& name) const {
    for (size_t i = 0; i < agents.size(); ++i)
      if (agents[i] == name) return static_cast<int>(i);
    return -1;
  }

  Elem atom_value(const std::string& name) const {
    auto it = valuation.find(name);
    if (it == valuation.end()) throw UnknownAtom("atom '" + name + "'");
    return it->second;
  }
};

/// Assembles a table-backed APE-model, validating structure and valuation.
ApeModel make_ape_model(std::shared_ptr<const Eha> algebra, std::vector<IMeasure> measures,
                        std::map<std::string, int> valuation,
                        std::shared_ptr<const EventLibrary> events = nullptr);

}  // namespace pdel
