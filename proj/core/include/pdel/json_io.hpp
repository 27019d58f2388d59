#pragma once

#include "json.hpp"  // vendored single-header nlohmann/json

#include "pdel/apemodel.hpp"
#include "pdel/complex_algebra.hpp"
#include "pdel/synthesis.hpp"

namespace pdel {

struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Json = nlohmann::json;

Json load_json_file(const std::string& path);

/// {"states":[...], "order":[["s0","s1"],...]?, "agents":{"i":{"partition":
/// [["s0","s1"],...],"P":{"s0":"3/5",...}}}, "valuation":{"p":["s1"]}}
/// The order block, when present, makes it an intuitionistic model; pairs
/// are (lower, upper) and the reflexive-transitive closure is taken.
PesModel pes_from_json(const Json& j);
bool json_has_order(const Json& j);
IntKripkeModel int_model_from_json(const Json& j);

/// {"name":..., "events":[...], "agents":{...as models...},
///  "preconditions":["true","p","~p"], "order":[[1,0],[2,0]]?,
///  "pre":[["1/10","1/2","2/5"],...], "sub":{"e3":{"apply":"false"}}}
EventStructureL event_from_json(const Json& j);

/// {"n":5, "leq":[[0,1],...], "agents":{"i":{"diamond":[...],"box":[...]}}}
std::shared_ptr<const Eha> algebra_from_json(const Json& j);

/// {"agent":"i", "values":{"0":"1/2", ...}}; element keys are indices.
IMeasure measure_from_json(const Json& j, const Eha& A);

/// {"algebra":{...}, "measures":[{...},...], "valuation":{"p":3}}
ApeModel ape_model_from_json(const Json& j, std::shared_ptr<const EventLibrary> events);

/// {"patterns":[{"agent":"i","atoms":[{"formula":"pr[i](1*mu(p) >= 3/5)",
///  "cells":{"0":1,"1":0}}]}], "valuation":{"p":2}}; a bare pattern object
/// or array is accepted too.
struct PatternFile {
  std::vector<AgentPattern> patterns;
  std::map<std::string, int> valuation;
};
PatternFile patterns_from_json(const Json& j);

Json pes_to_json(const PesModel& m);
Json int_model_to_json(const IntKripkeModel& m);
Json measures_to_json(const std::vector<IMeasure>& ms);

/// {"mode":"intermediate"|"update", "ok":bool, "witnesses":[...]}
Json duality_report_to_json(DualityMode mode, const DualityReport& rep);

}  // namespace pdel
