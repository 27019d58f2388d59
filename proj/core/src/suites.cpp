#include "pdel/suites.hpp"

#include <algorithm>

#include "pdel/art_demo.hpp"
#include "pdel/complex_algebra.hpp"
#include "pdel/eval.hpp"
#include "pdel/parser.hpp"
#include "pdel/rewrite.hpp"
#include "pdel/synthesis.hpp"

namespace pdel {

namespace {

std::string idx(int i) { return "#" + std::to_string(i); }

/// Negated copy of a linear term vector.
std::vector<ProbTerm> negate_terms(const std::vector<ProbTerm>& ts) {
  std::vector<ProbTerm> out;
  for (const auto& t : ts) out.push_back({Rational(-t.coeff), t.arg});
  return out;
}

std::vector<ProbTerm> concat_terms(std::vector<ProbTerm> a, const std::vector<ProbTerm>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

SuiteResult suite_art() {
  SuiteResult res{"art", 0, 0, {}};
  ArtDemo d = run_art_demo();

  auto expect_row = [&](const ArtDemo::Row& row, const std::string& display,
                        const Rational& exact, Category cat) {
    res.record(row.display == display, row.label + " displays " + row.display +
                                           " instead of " + display);
    res.record(row.exact == exact, row.label + " is " + rational_string(row.exact) +
                                       " instead of " + rational_string(exact));
    res.record(row.category == cat, row.label + " categorised as " +
                                        category_name(row.category));
  };

  if (d.updatedRows.size() != 9) {
    res.record(false, "expected nine updated pairs");
    return res;
  }
  // announced-exhibition cell, reading order s1, s0, s2
  expect_row(d.updatedRows[0], "0.596", rat(90, 151), Category::Likely);
  expect_row(d.updatedRows[1], "0.397", rat(60, 151), Category::Unlikely);
  expect_row(d.updatedRows[2], "0.007", rat(1, 151), Category::Impossible);
  // rejected / not-applied cell
  expect_row(d.updatedRows[3], "0.324", rat(1620, 5001), Category::Unlikely);
  expect_row(d.updatedRows[4], "0.540", rat(2700, 5001), Category::Likely);
  expect_row(d.updatedRows[5], "0.070", rat(351, 5001), Category::Implausible);
  expect_row(d.updatedRows[6], "0.006", rat(30, 5001), Category::Impossible);
  expect_row(d.updatedRows[7], "0.048", rat(240, 5001), Category::Implausible);
  expect_row(d.updatedRows[8], "0.012", rat(60, 5001), Category::Implausible);

  const Category initialCats[3] = {Category::Unlikely, Category::Likely,
                                   Category::Implausible};
  for (int k = 0; k < 3; ++k)
    res.record(d.initialRows[k].category == initialCats[k],
               "initial " + d.initialRows[k].label + " categorised as " +
                   category_name(d.initialRows[k].category));

  res.record(categorize(rat(0)) == Category::Impossible, "categorize(0)");
  res.record(categorize(rat(1)) == Category::Certain, "categorize(1)");
  return res;
}

SuiteResult suite_duality(uint64_t seed, int count) {
  SuiteResult res{"duality", 0, 0, {}};
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    PesModel M = random_pes(rng, 4, 2, 12);
    EventStructureL E = random_classical_event(rng, M, 3);
    EventLibrary lib{{E.name, E}};
    try {
      DualityReport a = check_duality(M, lib, E, DualityMode::Intermediate);
      DualityReport b = check_duality(M, lib, E, DualityMode::Update);
      std::string why;
      if (!a.ok) why = "intermediate: " + a.witnesses.front();
      if (!b.ok) why += " update: " + b.witnesses.front();
      res.record(a.ok && b.ok, idx(i) + ": " + why);
    } catch (const std::exception& e) {
      res.record(false, idx(i) + ": " + e.what());
    }
  }
  return res;
}

namespace {

AxiomInstance random_instance(Rng& rng, const ApeModel& M, int axiomNum) {
  AxiomInstance inst;
  auto it = M.events->begin();
  std::advance(it, rng.upto(static_cast<int>(M.events->size())));
  inst.eventName = it->first;
  inst.eventId = it->second.events[rng.upto(it->second.event_count())];
  inst.agent = M.agents[rng.upto(static_cast<int>(M.agents.size()))];
  static const char* kAtoms[3] = {"p", "q", "r"};
  inst.atomName = kAtoms[rng.upto(3)];

  auto metavar = [&]() {
    return rng.chance(1, 5) ? random_dynamic_formula(rng, M, 1, 1)
                            : random_static_formula(rng, M, 2);
  };
  int group = (axiomNum + 1) / 2;
  if (group >= 4 && group <= 6) inst.psi = {metavar(), metavar()};
  if (group == 7 || group == 8) inst.psi = {metavar()};
  if (group == 9) {
    int n = rng.between(1, 2);
    for (int t = 0; t < n; ++t)
      inst.terms.push_back({Rational(rng.chance(1, 4) ? -1 : rng.between(1, 2)),
                            random_static_formula(rng, M, 1)});
    inst.bound = rat(rng.between(-1, 2), rng.between(1, 5));
    inst.strictAtom = rng.chance(1, 4);
  }
  return inst;
}

}  // namespace

SuiteResult suite_reduction(uint64_t seed, int count) {
  SuiteResult res{"reduction", 0, 0, {}};
  Rng rng(seed);
  const int numModels = std::max(20, (count + 2) / 3);
  std::vector<ApeModel> models;
  RandomModelOptions opts;
  opts.events = 2;
  for (int m = 0; m < numModels; ++m) models.push_back(random_ape_model(rng, opts));

  for (int axiom = 1; axiom <= 18; ++axiom) {
    std::string id = "I" + std::to_string(axiom);
    for (int i = 0; i < count; ++i) {
      const ApeModel& M = models[size_t(i) % models.size()];
      for (int attempt = 0;; ++attempt) {
        AxiomInstance inst = random_instance(rng, M, axiom);
        try {
          ReductionCheck chk = check_reduction_axiom(M, id, inst);
          res.record(chk.ok, id + " " + idx(i) + ": " + formula_string(chk.lhs));
        } catch (const DegenerateQuotient&) {
          if (attempt < 32) continue;
          res.record(false, id + " " + idx(i) + ": only degenerate instances sampled");
        } catch (const std::exception& e) {
          res.record(false, id + " " + idx(i) + ": " + e.what());
        }
        break;
      }
    }
  }
  return res;
}

SuiteResult suite_rewrite(uint64_t seed, int count) {
  SuiteResult res{"rewrite", 0, 0, {}};
  Rng rng(seed);
  const int numModels = std::max(20, count / 25);
  RandomModelOptions opts;
  opts.events = 2;
  std::vector<ApeModel> models;
  for (int m = 0; m < numModels; ++m) models.push_back(random_ape_model(rng, opts));

  for (int i = 0; i < count; ++i) {
    const ApeModel& M = models[size_t(i) % models.size()];
    for (int attempt = 0;; ++attempt) {
      Formula f = random_dynamic_formula(rng, M, 2, 2);
      try {
        Elem a = eval_algebraic(M, f);
        RewriteResult rw = rewrite_static(f, *M.events);
        bool staticOut = is_static(rw.formula);
        Elem b = eval_algebraic(M, rw.formula);
        res.record(staticOut && a == b, idx(i) + ": " + formula_string(f));
      } catch (const DegenerateQuotient&) {
        // a nested update with no executable event has no defined value;
        // sample another formula
        if (attempt < 32) continue;
        res.record(false, idx(i) + ": only degenerate formulas sampled");
      } catch (const std::exception& e) {
        res.record(false, idx(i) + ": " + e.what());
      }
      break;
    }
  }
  return res;
}

SuiteResult suite_translation(uint64_t seed, int count) {
  SuiteResult res{"translation", 0, 0, {}};
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    ApeModel M = random_ape_model(rng, {});
    const std::string eventName = M.events->begin()->first;
    const EventStructureL& E = M.events->begin()->second;
    for (int attempt = 0;; ++attempt) {
      Formula psi = rng.chance(1, 4) ? random_dynamic_formula(rng, M, 1, 1)
                                     : random_static_formula(rng, M, 2);
      try {
        Evaluator ev(M);
        const auto& up = ev.updated(eventName);
        const auto& ualg = *up.update.structure->updated_algebra();
        const auto& prod = ualg.product();
        Elem inner = up.eval->eval(psi);  // canonical representative of [[psi]]^E

        bool good = true;
        for (int e = 0; e < E.event_count(); ++e) {
          Elem viaF = ev.eval(f_translate(psi, E, e, *M.events));
          Elem guard = prod.coordinate(ualg.pre_bar_elem(), e);
          const AlgebraOps& A = *M.structure->algebra();
          if (prod.coordinate(inner, e) != A.meet(viaF, guard)) good = false;
        }
        res.record(good, idx(i) + ": " + formula_string(psi));
      } catch (const DegenerateQuotient&) {
        if (attempt < 32) continue;
        res.record(false, idx(i) + ": only degenerate formulas sampled");
      } catch (const std::exception& e) {
        res.record(false, idx(i) + ": " + e.what());
      }
      break;
    }
  }
  return res;
}

SuiteResult suite_complex_validity(uint64_t seed, int count) {
  SuiteResult res{"complex-validity", 0, 0, {}};
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    PesModel M = random_pes(rng, 5, 2, 12);
    ApeModel plus = complex_algebra(M, nullptr);
    bool good = true;
    std::string why;

    const AlgebraOps& A = *plus.structure->algebra();
    AxiomReport ax = check_axioms_generic(A);
    if (!ax.ok()) {
      good = false;
      why = "axiom " + ax.violations.front().axiom;
    }
    for (int a = 0; a < A.agent_count() && good; ++a) {
      MeasureReport mr = validate_structure(*plus.structure, a, /*strict=*/true);
      if (!mr.ok()) {
        good = false;
        why = "measure clause " + mr.violations.front().clause;
      }
      auto mins = A.i_minimal(a);
      auto brute = i_minimal_by_definition(A, a);
      std::vector<Elem> cells;
      for (int s = 0; s < M.size(); ++s) cells.push_back(PowersetAlgebra::wrap(M.cell_mask(a, s)));
      std::sort(cells.begin(), cells.end());
      cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
      std::sort(mins.begin(), mins.end());
      std::sort(brute.begin(), brute.end());
      if (mins != cells || brute != cells) {
        good = false;
        why = "i-minimal elements differ from the epistemic cells";
      }
    }
    res.record(good, idx(i) + ": " + why);
  }
  return res;
}

SuiteResult suite_quotient(uint64_t seed, int count) {
  SuiteResult res{"quotient", 0, 0, {}};
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    auto A = random_eha(rng, rng.chance(1, 2) ? 3 : 4, 2);
    int divisor = rng.upto(A->size());
    try {
      QuotientAlgebra Q = pseudo_quotient(*A, divisor);
      bool good = true;
      std::string why;

      AxiomReport ax = check_eha_axioms(Q.algebra);
      if (!ax.ok()) {
        good = false;
        why = "quotient violates " + ax.violations.front().axiom;
      }

      const auto& L = A->lat;
      for (int b = 0; b < A->size() && good; ++b) {
        if (Q.section[Q.project[b]] != L.meet(b, divisor)) {
          good = false;
          why = "section(project(b)) != b /\\ a";
        }
        for (int c = 0; c < A->size(); ++c)
          if ((Q.project[b] == Q.project[c]) !=
              (L.meet(b, divisor) == L.meet(c, divisor))) {
            good = false;
            why = "projection kernel differs from meet congruence";
          }
      }

      for (int agent = 0; agent < A->agent_count() && good; ++agent) {
        std::vector<int> generic = i_minimal(Q.algebra, agent);
        std::vector<int> expected;
        int withMeetNonzero = 0;
        for (int b : i_minimal(*A, agent))
          if (L.meet(b, divisor) != L.bottom()) {
            expected.push_back(Q.project[b]);
            ++withMeetNonzero;
          }
        std::sort(expected.begin(), expected.end());
        expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
        std::sort(generic.begin(), generic.end());
        if (generic != expected) {
          good = false;
          why = "quotient i-minimal set differs from the characterisation";
        }
        if (static_cast<int>(expected.size()) != withMeetNonzero) {
          good = false;
          why = "two base cells collapsed onto one quotient class";
        }
      }
      res.record(good, idx(i) + ": " + why);
    } catch (const std::exception& e) {
      res.record(false, idx(i) + ": " + e.what());
    }
  }
  return res;
}

namespace {

std::vector<ProbTerm> random_terms(Rng& rng, const ApeModel& M, int maxTerms) {
  std::vector<ProbTerm> out;
  int n = rng.between(1, maxTerms);
  for (int t = 0; t < n; ++t)
    out.push_back({Rational(rng.chance(1, 4) ? -1 : rng.between(1, 2)),
                   random_static_formula(rng, M, 1)});
  return out;
}

}  // namespace

SuiteResult suite_static_axioms(uint64_t seed, int count) {
  SuiteResult res{"static-axioms", 0, 0, {}};
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    ApeModel M = random_ape_model(rng, {});
    Evaluator ev(M);
    const AlgebraOps& A = *M.structure->algebra();
    const Elem topE = A.top();
    const std::string agent = M.agents[rng.upto(static_cast<int>(M.agents.size()))];

    auto check = [&](const char* which, bool pass) {
      res.record(pass, idx(i) + ": " + which);
    };
    auto is_top = [&](const Formula& f) { return ev.eval(f) == topE; };
    auto leq = [&](const Formula& f, const Formula& g) {
      return A.leq(ev.eval(f), ev.eval(g));
    };

    std::vector<ProbTerm> t = random_terms(rng, M, 2);
    Rational beta = rat(rng.between(-1, 2), rng.between(1, 5));

    // N0: t >= t, folded into t - t >= 0
    check("N0", is_top(prob_geq(agent, concat_terms(t, negate_terms(t)), 0)));

    // N1: padding with a zero coefficient changes nothing
    {
      auto padded = t;
      padded.push_back({Rational(0), random_static_formula(rng, M, 1)});
      check("N1", ev.eval(prob_geq(agent, t, beta)) ==
                      ev.eval(prob_geq(agent, padded, beta)));
    }

    // N2: permutation invariance
    {
      auto rev = t;
      std::reverse(rev.begin(), rev.end());
      check("N2", ev.eval(prob_geq(agent, t, beta)) ==
                      ev.eval(prob_geq(agent, rev, beta)));
    }

    // N3: adding two inequalities over the same formulas
    {
      std::vector<ProbTerm> t2;
      std::vector<ProbTerm> sum;
      for (const auto& term : t) {
        Rational c2(rng.between(-1, 2));
        t2.push_back({c2, term.arg});
        sum.push_back({term.coeff + c2, term.arg});
      }
      Rational beta2 = rat(rng.between(-1, 1), rng.between(1, 4));
      check("N3", leq(conj(prob_geq(agent, t, beta), prob_geq(agent, t2, beta2)),
                      prob_geq(agent, sum, beta + beta2)));
    }

    // N4: scaling by a nonnegative constant
    {
      Rational d = rat(rng.between(0, 3), rng.between(1, 3));
      std::vector<ProbTerm> scaled;
      for (const auto& term : t) scaled.push_back({d * term.coeff, term.arg});
      Formula dNonneg = prob_geq(agent, {}, Rational(-d));  // 0 >= -d iff d >= 0
      check("N4", leq(conj(prob_geq(agent, t, beta), dNonneg),
                      prob_geq(agent, scaled, d * beta)));
    }

    // N5: totality of the numeric order at each cell
    check("N5", is_top(disj(prob_geq(agent, t, beta),
                            prob_geq(agent, negate_terms(t), Rational(-beta)))));

    // N6: weakening the bound strictly
    {
      Rational gamma = beta - rat(1, rng.between(1, 7));
      check("N6", leq(prob_geq(agent, t, beta), prob_gt(agent, t, gamma)));
    }

    // P1, P2
    check("P1", is_top(conj(prob_geq(agent, {{Rational(1), bot()}}, 0),
                            prob_geq(agent, {{Rational(-1), bot()}}, 0))));
    check("P2", is_top(conj(prob_geq(agent, {{Rational(1), top()}}, 1),
                            prob_geq(agent, {{Rational(-1), top()}}, Rational(-1)))));

    // P3: modularity as a pair of inequalities
    {
      Formula phi = random_static_formula(rng, M, 2);
      Formula psi = random_static_formula(rng, M, 2);
      std::vector<ProbTerm> mod = {{Rational(1), phi},
                                   {Rational(1), psi},
                                   {Rational(-1), disj(phi, psi)},
                                   {Rational(-1), conj(phi, psi)}};
      check("P3", is_top(conj(prob_geq(agent, mod, 0),
                              prob_geq(agent, negate_terms(mod), 0))));
    }

    // P4 and P5
    {
      Formula phi = random_static_formula(rng, M, 2);
      Formula psi = random_static_formula(rng, M, 2);
      std::vector<ProbTerm> diff = {{Rational(1), phi}, {Rational(-1), psi}};
      Formula equal = conj(prob_geq(agent, diff, 0),
                           prob_geq(agent, negate_terms(diff), 0));
      Formula lhs = conj(box(agent, imp(phi, psi)), equal);
      Formula rhs = box(agent, iff(psi, phi));
      check("P4-ltr", leq(lhs, rhs));
      check("P4", ev.eval(lhs) == ev.eval(rhs));

      Formula sigma = prob_geq(agent, t, beta);
      check("P5", is_top(imp(sigma, box(agent, sigma))));
      Formula sigmaGt = prob_gt(agent, t, beta);
      check("P5-strict", is_top(imp(sigmaGt, box(agent, sigmaGt))));
    }

    // relativisation lemma: dia psi /\ (sum >= beta) entails the cell-local sum
    {
      Formula psi = random_static_formula(rng, M, 2);
      std::vector<ProbTerm> local;
      for (const auto& term : t) local.push_back({term.coeff, conj(term.arg, dia(agent, psi))});
      check("relativisation", leq(conj(dia(agent, psi), prob_geq(agent, t, beta)),
                                  prob_geq(agent, local, beta)));
    }

    // Boolean reading: on a complex algebra p4 and P4 coincide
    {
      PesModel Mc = random_pes(rng, 4, 2, 10);
      ApeModel plus = complex_algebra(Mc, nullptr);
      Evaluator evc(plus);
      const Elem topC = plus.structure->algebra()->top();
      Formula phi = atom("p"), psi = atom("q");
      const std::string ag = plus.agents[rng.upto(2)];

      Formula mu1 = conj(prob_geq(ag, {{Rational(1), phi}}, 1),
                         prob_geq(ag, {{Rational(-1), phi}}, Rational(-1)));
      Formula p4 = iff(box(ag, phi), mu1);
      std::vector<ProbTerm> diff = {{Rational(1), phi}, {Rational(-1), psi}};
      Formula equal = conj(prob_geq(ag, diff, 0), prob_geq(ag, negate_terms(diff), 0));
      Formula P4 = iff(conj(box(ag, imp(phi, psi)), equal), box(ag, iff(psi, phi)));
      check("p4-boolean", evc.eval(p4) == topC);
      check("P4-boolean", evc.eval(P4) == topC);
      check("p4-vs-P4", evc.eval(p4) == evc.eval(P4));
    }
  }
  return res;
}

SuiteResult suite_synthesis(uint64_t seed, int count, int contradictory) {
  SuiteResult res{"synthesis", 0, 0, {}};
  Rng rng(seed);

  for (int i = 0; i < count; ++i) {
    auto A = random_eha(rng, 3, 2);
    std::map<std::string, int> valuation{{"p", rng.upto(A->size())},
                                         {"q", rng.upto(A->size())}};
    static const std::vector<std::string> kPool = {"p",     "q",     "p & q",
                                                   "p | q", "~p",    "p -> q"};
    try {
      // witness measures make the generated pattern satisfiable by construction
      std::vector<IMeasure> witness;
      for (int a = 0; a < A->agent_count(); ++a) witness.push_back(random_measure(rng, *A, a));

      std::vector<AgentPattern> patterns;
      for (int a = 0; a < A->agent_count(); ++a) {
        AgentPattern pat;
        pat.agent = A->agents[a];
        auto cells = i_minimal(*A, a);
        int atomCount = rng.between(1, 2);
        for (int x = 0; x < atomCount; ++x) {
          AgentPattern::AtomPattern ap;
          int terms = rng.between(1, 2);
          for (int tIdx = 0; tIdx < terms; ++tIdx) {
            Formula f = parse_formula(kPool[rng.upto(static_cast<int>(kPool.size()))]);
            ap.terms.push_back({Rational(rng.chance(1, 4) ? -1 : 1), f});
          }
          ap.strict = rng.chance(1, 4);
          ap.bound = rat(rng.between(-1, 2), rng.between(1, 4));
          for (size_t k = 0; k < cells.size(); ++k) {
            Rational sum = 0;
            for (const auto& term : ap.terms) {
              int elem = interpret_static(*A, valuation, term.arg);
              sum += term.coeff * witness[a].at(A->lat.meet(elem, cells[k]));
            }
            bool holds = ap.strict ? sum > ap.bound : sum >= ap.bound;
            ap.cells[static_cast<int>(k)] = holds ? 1 : 0;
          }
          pat.atoms.push_back(std::move(ap));
        }
        patterns.push_back(std::move(pat));
      }

      std::vector<IMeasure> ms = synthesize_measures(*A, patterns, valuation);
      ApeModel M = make_ape_model(A, ms, valuation);
      Evaluator ev(M);
      const AlgebraOps& ops = *M.structure->algebra();

      bool good = true;
      for (const auto& pat : patterns) {
        int a = M.agent_index(pat.agent);
        auto cells = ops.i_minimal(a);
        for (const auto& ap : pat.atoms) {
          Formula sigma = ap.strict ? prob_gt(pat.agent, ap.terms, ap.bound)
                                    : prob_geq(pat.agent, ap.terms, ap.bound);
          Elem expected = ops.bottom();
          for (size_t k = 0; k < cells.size(); ++k)
            if (ap.cells.at(static_cast<int>(k))) expected = ops.join(expected, cells[k]);
          if (ev.eval(sigma) != expected) good = false;
        }
      }
      res.record(good, idx(i) + ": synthesized atom valuation differs from pattern");
    } catch (const std::exception& e) {
      res.record(false, idx(i) + ": " + e.what());
    }
  }

  for (int i = 0; i < contradictory; ++i) {
    auto A = random_eha(rng, 3, 1);
    std::map<std::string, int> valuation{{"p", rng.upto(A->size())}};
    AgentPattern pat;
    pat.agent = A->agents[0];
    auto cells = i_minimal(*A, 0);
    AgentPattern::AtomPattern ap;
    if (rng.chance(1, 2)) {
      // mu(top) >= 1 declared false somewhere: contradicts the cell mass
      ap.terms = {{Rational(1), top()}};
      ap.bound = 1;
      ap.strict = false;
      for (size_t k = 0; k < cells.size(); ++k) ap.cells[static_cast<int>(k)] = 0;
    } else {
      // mu(bot) > 0 declared true: contradicts mu(bot) = 0
      ap.terms = {{Rational(1), bot()}};
      ap.bound = 0;
      ap.strict = true;
      for (size_t k = 0; k < cells.size(); ++k) ap.cells[static_cast<int>(k)] = 1;
    }
    pat.atoms.push_back(std::move(ap));
    try {
      synthesize_measures(*A, {pat}, valuation);
      res.record(false, "contradictory " + idx(i) + ": synthesis did not fail");
    } catch (const Infeasible&) {
      res.record(true, "");
    } catch (const std::exception& e) {
      res.record(false, "contradictory " + idx(i) + ": wrong error: " + e.what());
    }
  }
  return res;
}

SuiteResult suite_degenerate(uint64_t seed, int count) {
  SuiteResult res{"degenerate", 0, 0, {}};
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    PesModel M = random_pes(rng, 4, 2, 12);
    EventStructureL E = random_classical_event(rng, M, 3);
    EventLibrary lib{{E.name, E}};

    IntKripkeModel MI;
    MI.m = M;
    MI.up.assign(M.size(), 0);
    for (int s = 0; s < M.size(); ++s) MI.up[s] = Mask(1) << s;

    try {
      ClassicalUpdateResult rc = classical_update(M, lib, E);
      IntUpdateResult ri = int_update(MI, E);

      bool good = ri.pair_of == rc.pair_of;
      std::string why = good ? "" : "surviving pairs differ";

      // raw coproduct weights agree with the product formula
      for (int s = 0; s < M.size() && good; ++s)
        for (int e = 0; e < E.event_count() && good; ++e)
          for (size_t a = 0; a < M.agents.size() && good; ++a)
            if (int_coproduct_weights(MI, E, static_cast<int>(a), s, e) !=
                rc.intermediate.weight[a][rc.intermediate.pair(s, e)]) {
              good = false;
              why = "coproduct weight differs from the classical product";
            }

      for (size_t a = 0; a < M.agents.size() && good; ++a) {
        for (size_t x = 0; x < rc.pair_of.size() && good; ++x) {
          if (ri.model.m.rel[a].p[x] != rc.updated.rel[a].p[x]) {
            good = false;
            why = "normalised weights differ";
          }
          for (size_t y = 0; y < rc.pair_of.size(); ++y)
            if ((ri.model.m.rel[a].cell[x] == ri.model.m.rel[a].cell[y]) !=
                (rc.updated.rel[a].cell[x] == rc.updated.rel[a].cell[y])) {
              good = false;
              why = "epistemic cells differ";
            }
        }
      }
      if (good && ri.model.m.valuation != rc.updated.valuation) {
        good = false;
        why = "valuations differ";
      }
      res.record(good, idx(i) + ": " + why);
    } catch (const std::exception& e) {
      res.record(false, idx(i) + ": " + e.what());
    }
  }
  return res;
}

}  // namespace pdel
