#include "doctest.h"
#include "pdel/art_demo.hpp"
#include "pdel/generators.hpp"
#include "pdel/suites.hpp"

using namespace pdel;

TEST_CASE("category boundaries follow the bracketed intervals") {
  CHECK(categorize(rat(0)) == Category::Impossible);
  CHECK(categorize(rat(9, 1000)) == Category::Impossible);
  CHECK(categorize(rat(1, 100)) == Category::Implausible);
  CHECK(categorize(rat(1, 10)) == Category::Implausible);
  CHECK(categorize(rat(11, 100)) == Category::Unlikely);
  CHECK(categorize(rat(1, 2)) == Category::Unlikely);
  CHECK(categorize(rat(51, 100)) == Category::Likely);
  CHECK(categorize(rat(7, 10)) == Category::Likely);
  CHECK(categorize(rat(71, 100)) == Category::VeryLikely);
  CHECK(categorize(rat(899, 1000)) == Category::VeryLikely);
  CHECK(categorize(rat(9, 10)) == Category::AlmostCertain);
  CHECK(categorize(rat(99, 100)) == Category::AlmostCertain);
  CHECK(categorize(rat(991, 1000)) == Category::Certain);
  CHECK(categorize(rat(1)) == Category::Certain);
  CHECK_THROWS_AS(categorize(rat(-1, 2)), OutOfRange);
  CHECK_THROWS_AS(categorize(rat(3, 2)), OutOfRange);
}

TEST_CASE("every probability lands in exactly one category") {
  Rng rng(103);
  for (int t = 0; t < 500; ++t) {
    int den = rng.between(1, 1000);
    Rational q = rat(rng.between(0, den), den);
    CHECK_NOTHROW(categorize(q));
  }
}

TEST_CASE("art scenario reproduction") {
  SuiteResult r = suite_art();
  CAPTURE(r.failures.empty() ? std::string() : r.failures.front());
  CHECK(r.ok());
}

TEST_CASE("art demo is deterministic") {
  ArtDemo a = run_art_demo();
  ArtDemo b = run_art_demo();
  REQUIRE(a.updatedRows.size() == b.updatedRows.size());
  for (size_t i = 0; i < a.updatedRows.size(); ++i) {
    CHECK(a.updatedRows[i].exact == b.updatedRows[i].exact);
    CHECK(a.updatedRows[i].display == b.updatedRows[i].display);
  }
}
