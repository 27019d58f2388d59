// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Counts and time budgets are pinned here; the seeds make every run
// reproducible.

#include <chrono>
#include <cstdio>
#include <functional>

#include "pdel/art_demo.hpp"
#include "pdel/suites.hpp"

using namespace pdel;

namespace {

int failures = 0;

void run(int number, const std::string& what, double budgetSeconds,
         const std::function<SuiteResult()>& suite) {
  auto start = std::chrono::steady_clock::now();
  SuiteResult r;
  try {
    r = suite();
  } catch (const std::exception& e) {
    r.total = 1;
    r.failures = {std::string("exception: ") + e.what()};
  }
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  bool withinBudget = elapsed < budgetSeconds;
  bool ok = r.ok() && withinBudget;
  std::printf("[%s] %2d. %-28s %4d/%-4d  %6.2fs (budget %.0fs)\n",
              ok ? "PASS" : "FAIL", number, what.c_str(), r.passed, r.total, elapsed,
              budgetSeconds);
  if (!ok) {
    ++failures;
    for (const auto& f : r.failures) std::printf("        %s\n", f.c_str());
    if (!withinBudget) std::printf("        exceeded the time budget\n");
  }
}

SuiteResult art_values_only() {
  SuiteResult r{"art-values", 0, 0, {}};
  ArtDemo d = run_art_demo();
  const char* displays[9] = {"0.596", "0.397", "0.007", "0.324", "0.540",
                             "0.070", "0.006", "0.048", "0.012"};
  for (int k = 0; k < 9; ++k)
    r.record(d.updatedRows[k].display == displays[k],
             d.updatedRows[k].label + " shows " + d.updatedRows[k].display);
  r.record(d.updatedRows[0].exact == rat(90, 151), "exact weight of (e1,s1)");
  r.record(d.updatedRows[1].exact == rat(60, 151), "exact weight of (e1,s0)");
  r.record(d.updatedRows[2].exact == rat(1, 151), "exact weight of (e1,s2)");
  return r;
}

SuiteResult art_categories_only() {
  SuiteResult r{"art-categories", 0, 0, {}};
  ArtDemo d = run_art_demo();
  const Category initial[3] = {Category::Unlikely, Category::Likely,
                               Category::Implausible};
  for (int k = 0; k < 3; ++k)
    r.record(d.initialRows[k].category == initial[k],
             "initial " + d.initialRows[k].label + " categorised as " +
                 category_name(d.initialRows[k].category));
  const Category updated[9] = {Category::Likely,      Category::Unlikely,
                               Category::Impossible,  Category::Unlikely,
                               Category::Likely,      Category::Implausible,
                               Category::Impossible,  Category::Implausible,
                               Category::Implausible};
  for (int k = 0; k < 9; ++k)
    r.record(d.updatedRows[k].category == updated[k],
             d.updatedRows[k].label + " categorised as " +
                 category_name(d.updatedRows[k].category));
  return r;
}

}  // namespace

int main() {
  run(1, "art-example reproduction", 1.0, art_values_only);
  run(2, "category labels", 1.0, art_categories_only);
  run(3, "duality, both modes", 60.0, [] { return suite_duality(7, 200); });
  run(4, "reduction axioms I1..I18", 120.0, [] { return suite_reduction(11, 50); });
  run(4, "rewriting equivalence", 120.0, [] { return suite_rewrite(13, 500); });
  run(5, "update translation lemma", 60.0, [] { return suite_translation(17, 200); });
  run(6, "complex-algebra validity", 30.0, [] { return suite_complex_validity(19, 200); });
  run(7, "pseudo-quotient i-minimals", 30.0, [] { return suite_quotient(23, 50); });
  run(8, "static axiom validities", 60.0, [] { return suite_static_axioms(29, 40); });
  run(9, "measure synthesis", 120.0, [] { return suite_synthesis(31, 30, 10); });
  run(10, "discrete-order collapse", 30.0, [] { return suite_degenerate(37, 100); });

  if (failures) std::printf("%d criterion(s) FAILED\n", failures);
  return failures ? 1 : 0;
}
