// Command-line front end: load models, events, algebras and formulas from
// JSON files, run updates and evaluations, rewrite dynamic formulas, run the
// randomised check suites, synthesize measures, and replay the built-in
// art-investment scenario.

#include <iostream>

#include "CLI11.hpp"
#include "pdel/art_demo.hpp"
#include "pdel/complex_algebra.hpp"
#include "pdel/eval.hpp"
#include "pdel/json_io.hpp"
#include "pdel/parser.hpp"
#include "pdel/rewrite.hpp"
#include "pdel/suites.hpp"

namespace {

using namespace pdel;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitFile = 2;
constexpr int kExitInfeasible = 3;

std::shared_ptr<EventLibrary> load_events(const std::vector<std::string>& paths) {
  auto lib = std::make_shared<EventLibrary>();
  for (const auto& p : paths) {
    EventStructureL E = event_from_json(load_json_file(p));
    if (E.name.empty()) E.name = "E" + std::to_string(lib->size());
    (*lib)[E.name] = std::move(E);
  }
  return lib;
}

Json elem_to_json(const Elem& e) {
  Json j = Json::array();
  for (uint32_t w : e) j.push_back(w);
  return j;
}

int cmd_update(const std::string& modelPath, const std::string& eventPath,
               bool forceInt, bool asJson) {
  Json mj = load_json_file(modelPath);
  EventStructureL E = event_from_json(load_json_file(eventPath));
  EventLibrary lib{{E.name, E}};

  Json out;
  if (forceInt || json_has_order(mj)) {
    IntKripkeModel M = int_model_from_json(mj);
    IntUpdateResult r = int_update(M, E);
    out = int_model_to_json(r.model);
    for (const auto& w : r.warnings) out["warnings"].push_back(w);
  } else {
    PesModel M = pes_from_json(mj);
    ClassicalUpdateResult r = classical_update(M, lib, E);
    out = pes_to_json(r.updated);
  }
  if (asJson) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "updated states:";
    for (const auto& s : out["states"]) std::cout << " " << s.get<std::string>();
    std::cout << "\n";
    for (const auto& [agent, block] : out["agents"].items()) {
      std::cout << agent << ":";
      for (const auto& [st, q] : block["P"].items()) {
        Rational exact = parse_rational(q.get<std::string>());
        std::cout << " " << st << "=" << q.get<std::string>() << " ("
                  << round_decimal(exact, 3) << ")";
      }
      std::cout << "\n";
    }
    if (out.contains("warnings"))
      for (const auto& w : out["warnings"])
        std::cout << "warning: " << w.get<std::string>() << "\n";
  }
  return kExitOk;
}

int cmd_eval(const std::string& modelPath, const std::string& formulaText,
             const std::string& state, const std::vector<std::string>& eventPaths,
             bool asJson) {
  Json mj = load_json_file(modelPath);
  Formula f = parse_formula(formulaText);
  auto lib = load_events(eventPaths);

  Json out;
  if (mj.contains("states")) {
    PesModel M = pes_from_json(mj);
    if (!state.empty()) {
      int s = M.state_index(state);
      if (s < 0) throw FileError("unknown state '" + state + "'");
      bool v = eval_classical(M, *lib, s, f);
      out = Json{{"formula", formula_string(f)}, {"state", state}, {"holds", v}};
      if (!asJson) std::cout << (v ? "true" : "false") << "\n";
    } else {
      Mask ext = extension_classical(M, *lib, f);
      std::vector<std::string> names;
      for (int s = 0; s < M.size(); ++s)
        if ((ext >> s) & 1) names.push_back(M.states[s]);
      out = Json{{"formula", formula_string(f)}, {"extension", names}};
      if (!asJson) {
        std::cout << "{";
        for (size_t i = 0; i < names.size(); ++i) std::cout << (i ? ", " : " ") << names[i];
        std::cout << " }\n";
      }
    }
  } else {
    ApeModel M = ape_model_from_json(mj, lib);
    Elem v = eval_algebraic(M, f);
    out = Json{{"formula", formula_string(f)}, {"element", elem_to_json(v)}};
    if (!asJson) {
      if (v.size() == 1)
        std::cout << "element " << v[0] << "\n";
      else
        std::cout << out["element"].dump() << "\n";
    }
  }
  if (asJson) std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_rewrite(const std::string& formulaText, const std::vector<std::string>& eventPaths,
                bool trace, bool asJson) {
  Formula f = parse_formula(formulaText);
  auto lib = load_events(eventPaths);
  RewriteResult r = rewrite_static(f, *lib);
  if (asJson) {
    Json out{{"input", formula_string(f)}, {"result", formula_string(r.formula)}};
    if (trace) {
      Json steps = Json::array();
      for (const auto& s : r.trace)
        steps.push_back(Json{{"axiom", s.axiom},
                             {"before", formula_string(s.before)},
                             {"after", formula_string(s.after)}});
      out["trace"] = steps;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    if (trace)
      for (const auto& s : r.trace)
        std::cout << s.axiom << ": " << formula_string(s.before) << "  ~~>  "
                  << formula_string(s.after) << "\n";
    std::cout << formula_string(r.formula) << "\n";
  }
  return kExitOk;
}

int cmd_check(const std::string& suite, uint64_t seed, int count, bool asJson) {
  std::vector<SuiteResult> results;
  if (suite == "duality") {
    results.push_back(suite_duality(seed, count));
  } else if (suite == "axioms") {
    results.push_back(suite_static_axioms(seed, count));
  } else if (suite == "reduction") {
    results.push_back(suite_reduction(seed, std::max(1, count / 10)));
    results.push_back(suite_rewrite(seed + 1, count));
  } else if (suite == "measures") {
    results.push_back(suite_complex_validity(seed, count));
  } else {
    std::cerr << "unknown suite '" << suite << "'\n";
    return kExitFile;
  }

  bool ok = true;
  Json out = Json::array();
  for (const auto& r : results) {
    ok = ok && r.ok();
    out.push_back(Json{{"suite", r.name},
                       {"passed", r.passed},
                       {"total", r.total},
                       {"failures", r.failures}});
    if (!asJson) {
      std::cout << r.name << ": " << r.passed << "/" << r.total
                << (r.ok() ? " ok" : " FAILED") << "\n";
      for (const auto& f : r.failures) std::cout << "  " << f << "\n";
    }
  }
  if (asJson) std::cout << out.dump(2) << "\n";
  return ok ? kExitOk : kExitValidation;
}

int cmd_synthesize(const std::string& algebraPath, const std::string& patternPath,
                   bool asJson) {
  auto A = algebra_from_json(load_json_file(algebraPath));
  PatternFile pf = patterns_from_json(load_json_file(patternPath));
  std::vector<IMeasure> ms = synthesize_measures(*A, pf.patterns, pf.valuation);
  make_ape(A, ms);  // full validation
  Json out = measures_to_json(ms);
  if (asJson) {
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& m : out) {
      std::cout << m["agent"].get<std::string>() << ":";
      for (const auto& [elem, q] : m["values"].items())
        std::cout << " x" << elem << "=" << q.get<std::string>();
      std::cout << "\n";
    }
  }
  return kExitOk;
}

int cmd_demo_art(bool asJson) {
  ArtDemo d = run_art_demo();
  auto rows_json = [](const std::vector<ArtDemo::Row>& rows) {
    Json out = Json::array();
    for (const auto& r : rows)
      out.push_back(Json{{"label", r.label},
                         {"exact", rational_string(r.exact)},
                         {"display", r.display},
                         {"category", category_name(r.category)}});
    return out;
  };
  if (asJson) {
    Json out{{"initial", rows_json(d.initialRows)},
             {"updated", rows_json(d.updatedRows)},
             {"submodel", rows_json(d.submodelRows)}};
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "initial model (investor weights):\n";
  for (const auto& r : d.initialRows)
    std::cout << "  " << r.label << "  " << r.display << " (" << rational_string(r.exact)
              << ")  " << category_name(r.category) << "\n";
  std::cout << "updated model:\n";
  for (const auto& r : d.updatedRows)
    std::cout << "  " << r.label << "  " << r.display << " (" << rational_string(r.exact)
              << ")  " << category_name(r.category) << "\n";
  std::cout << "announced-exhibition cell:\n";
  for (const auto& r : d.submodelRows)
    std::cout << "  " << r.label << "  " << r.display << "  " << category_name(r.category)
              << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"probabilistic dynamic epistemic logic over finite algebras"};
  app.require_subcommand(1);

  std::string modelPath, eventPath, formulaText, state, suite, algebraPath, patternPath;
  std::vector<std::string> eventPaths;
  bool forceInt = false, asJson = false, trace = false;
  uint64_t seed = 1;
  int count = 100;

  auto* update = app.add_subcommand("update", "product update of a relational model");
  update->add_option("--model", modelPath)->required();
  update->add_option("--event", eventPath)->required();
  update->add_flag("--int", forceInt, "force the intuitionistic update");
  update->add_flag("--json", asJson);

  auto* eval = app.add_subcommand("eval", "evaluate a formula on a model");
  eval->add_option("--model", modelPath)->required();
  eval->add_option("--formula", formulaText)->required();
  eval->add_option("--state", state);
  eval->add_option("--event", eventPaths, "event structure files for dynamic operators");
  eval->add_flag("--json", asJson);

  auto* rewrite = app.add_subcommand("rewrite", "reduce a formula to the static fragment");
  rewrite->add_option("--formula", formulaText)->required();
  rewrite->add_option("--event", eventPaths);
  rewrite->add_flag("--trace", trace);
  rewrite->add_flag("--json", asJson);

  auto* check = app.add_subcommand("check", "run a randomised verification suite");
  check->add_option("--suite", suite, "axioms|duality|reduction|measures")->required();
  check->add_option("--seed", seed);
  check->add_option("--count", count);
  check->add_flag("--json", asJson);

  auto* synth = app.add_subcommand("synthesize", "measures from a sign pattern");
  synth->add_option("--algebra", algebraPath)->required();
  synth->add_option("--pattern", patternPath)->required();
  synth->add_flag("--json", asJson);

  auto* demo = app.add_subcommand("demo-art", "replay the art-investment scenario");
  demo->add_flag("--json", asJson);

  CLI11_PARSE(app, argc, argv);

  try {
    if (update->parsed()) return cmd_update(modelPath, eventPath, forceInt, asJson);
    if (eval->parsed()) return cmd_eval(modelPath, formulaText, state, eventPaths, asJson);
    if (rewrite->parsed()) return cmd_rewrite(formulaText, eventPaths, trace, asJson);
    if (check->parsed()) return cmd_check(suite, seed, count, asJson);
    if (synth->parsed()) return cmd_synthesize(algebraPath, patternPath, asJson);
    if (demo->parsed()) return cmd_demo_art(asJson);
  } catch (const FileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFile;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFile;
  } catch (const SyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFile;
  } catch (const Infeasible& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}
