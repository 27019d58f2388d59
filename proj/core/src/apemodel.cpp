#include "pdel/apemodel.hpp"

namespace pdel {

ApeModel make_ape_model(std::shared_ptr<const Eha> algebra, std::vector<IMeasure> measures,
                        std::map<std::string, int> valuation,
                        std::shared_ptr<const EventLibrary> events) {
  ApeModel out;
  out.agents = algebra->agents;
  int n = algebra->size();
  for (const auto& [a, v] : valuation) {
    if (v < 0 || v >= n)
      throw ConstructionError("valuation of '" + a + "' is not an algebra element");
    out.valuation[a] = TableAlgebra::wrap(v);
  }
  out.structure = make_ape(std::move(algebra), std::move(measures));
  out.events = std::move(events);
  return out;
}

}  // namespace pdel
