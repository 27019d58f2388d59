#include "doctest.h"
#include "pdel/generators.hpp"
#include "pdel/parser.hpp"

using namespace pdel;

TEST_CASE("parsing basics") {
  CHECK(parse_formula("true")->kind == Conn::Top);
  CHECK(parse_formula("false")->kind == Conn::Bot);

  Formula f = parse_formula("[Ev,e1] p");
  CHECK(f->kind == Conn::DynBox);
  CHECK(f->name == "Ev");
  CHECK(f->event == "e1");
  CHECK(f->child[0]->kind == Conn::Atom);

  Formula g = parse_formula("<Ev,e2>(p & q)");
  CHECK(g->kind == Conn::DynDia);
  CHECK(g->child[0]->kind == Conn::And);
}

TEST_CASE("probability atoms") {
  Formula f = parse_formula("pr[i]( 1*mu(p) - 1*mu(q) >= 1/2 )");
  REQUIRE(f->kind == Conn::ProbGeq);
  CHECK(f->name == "i");
  REQUIRE(f->terms.size() == 2);
  CHECK(f->terms[0].coeff == rat(1));
  CHECK(f->terms[1].coeff == rat(-1));
  CHECK(f->bound == rat(1, 2));

  Formula g = parse_formula("pr[i](0.5*mu(p) > 0.25)");
  CHECK(g->kind == Conn::ProbGt);
  CHECK(g->terms[0].coeff == rat(1, 2));
  CHECK(g->bound == rat(1, 4));

  // shorthand without an explicit coefficient, and the constant-zero form
  CHECK(parse_formula("pr[i](mu(p) >= 0)")->terms[0].coeff == rat(1));
  CHECK(parse_formula("pr[i](0 >= -1)")->terms.empty());
}

TEST_CASE("sugar and precedence") {
  CHECK(formula_equal(parse_formula("~p"), imp(atom("p"), bot())));
  CHECK(formula_equal(parse_formula("p <-> q"),
                      conj(imp(atom("p"), atom("q")), imp(atom("q"), atom("p")))));
  CHECK(formula_equal(parse_formula("p -> q -> r"),
                      imp(atom("p"), imp(atom("q"), atom("r")))));
  CHECK(formula_equal(parse_formula("p & q | r"),
                      disj(conj(atom("p"), atom("q")), atom("r"))));
  CHECK(formula_equal(parse_formula("p | q -> r"),
                      imp(disj(atom("p"), atom("q")), atom("r"))));
  CHECK(formula_equal(parse_formula("dia[i]p & q"),
                      conj(dia("i", atom("p")), atom("q"))));
}

TEST_CASE("print/parse round trip") {
  std::vector<std::string> sources = {
      "p", "true", "false", "p & (q | r)", "(p -> q) -> r",
      "dia[i]box[j](p -> false)", "[Ev,e1]<Ev,e2>p",
      "pr[agent](2*mu(p & q) - 1/3*mu(dia[i]q) > -2/7)",
  };
  for (const auto& s : sources) {
    Formula f = parse_formula(s);
    CHECK(formula_equal(parse_formula(formula_string(f)), f));
  }

  Rng rng(42);
  ApeModel M = random_ape_model(rng, {});
  for (int i = 0; i < 300; ++i) {
    Formula f = rng.chance(1, 3) ? random_dynamic_formula(rng, M, 2, 2)
                                 : random_static_formula(rng, M, 3);
    CAPTURE(formula_string(f));
    CHECK(formula_equal(parse_formula(formula_string(f)), f));
  }
}

TEST_CASE("syntax errors carry a position") {
  CHECK_THROWS_AS(parse_formula("p &"), SyntaxError);
  CHECK_THROWS_AS(parse_formula("pr[i](1*mu(p) = 1)"), SyntaxError);
  CHECK_THROWS_AS(parse_formula("(p"), SyntaxError);
  CHECK_THROWS_AS(parse_formula("p q"), SyntaxError);
}

TEST_CASE("substitution") {
  Substitution eps;
  Formula f = parse_formula("apply & p");
  CHECK(formula_equal(apply_substitution(eps, f), f));

  Substitution sigma({{"apply", bot()}});
  CHECK(formula_equal(apply_substitution(sigma, f), conj(bot(), atom("p"))));

  // atoms outside the domain stay put, including under every connective
  Rng rng(7);
  ApeModel M = random_ape_model(rng, {});
  Substitution tau({{"zz", top()}});
  for (int i = 0; i < 100; ++i) {
    Formula g = random_static_formula(rng, M, 3);
    CHECK(formula_equal(apply_substitution(tau, g), g));
  }
}

TEST_CASE("static detection") {
  CHECK(is_static(parse_formula("pr[i](1*mu(p) >= 0)")));
  CHECK(!is_static(parse_formula("pr[i](1*mu([E,e]p) >= 0)")));
  CHECK(dynamic_depth(parse_formula("[E,e]<E,f>p")) == 2);
  CHECK(dynamic_depth(parse_formula("[E,e]p & <E,f>q")) == 1);
}
