#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "pdel/rational.hpp"

namespace pdel {

class FormulaNode;
using Formula = std::shared_ptr<const FormulaNode>;

enum class Conn {
  Atom,
  Bot,
  Top,
  And,
  Or,
  Imp,
  Dia,      // dia[agent]
  Box,      // box[agent]
  DynDia,   // <Event,e>
  DynBox,   // [Event,e]
  ProbGeq,  // pr[agent](sum of coeff*mu(term) >= bound)
  ProbGt,   // same with strict >
};

/// One summand of a linear probability atom.
struct ProbTerm {
  Rational coeff;
  Formula arg;
};

/// Immutable formula AST node. Negation is sugar for (phi -> false) and is
/// produced by the parser, never stored.
class FormulaNode {
 public:
  Conn kind;
  std::string name;            // atom name / agent / event-structure name
  std::string event;           // event id for DynDia/DynBox
  std::vector<Formula> child;  // 1 or 2 children for connectives
  std::vector<ProbTerm> terms; // probability atoms; may be empty (constant 0)
  Rational bound;

  explicit FormulaNode(Conn k) : kind(k) {}
};

Formula atom(const std::string& name);
Formula bot();
Formula top();
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula imp(Formula a, Formula b);
Formula neg(Formula a);  // a -> false
Formula iff(Formula a, Formula b);
Formula dia(const std::string& agent, Formula a);
Formula box(const std::string& agent, Formula a);
Formula dyn_dia(const std::string& ev, const std::string& e, Formula a);
Formula dyn_box(const std::string& ev, const std::string& e, Formula a);
Formula prob_geq(const std::string& agent, std::vector<ProbTerm> terms,
                 Rational bound);
Formula prob_gt(const std::string& agent, std::vector<ProbTerm> terms,
                Rational bound);

/// Joins a list with disj; empty list is bot, singleton is the element.
Formula disj_all(const std::vector<Formula>& fs);
Formula conj_all(const std::vector<Formula>& fs);  // empty list is top

bool formula_equal(const Formula& a, const Formula& b);

/// Canonical concrete syntax; parse(formula_string(f)) is structurally f.
std::string formula_string(const Formula& f);

/// Substitution function: finitely many atoms mapped to formulas, identity
/// elsewhere.
class Substitution {
 public:
  Substitution() = default;
  explicit Substitution(std::map<std::string, Formula> m) : map_(std::move(m)) {}

  bool in_domain(const std::string& atom) const { return map_.count(atom) > 0; }
  Formula at(const std::string& atom) const;  // atom(name) when outside dom
  const std::map<std::string, Formula>& mapping() const { return map_; }
  bool is_identity() const { return map_.empty(); }

 private:
  std::map<std::string, Formula> map_;
};

/// Replaces atoms per sigma, recursing through every connective including
/// probability terms and dynamic operators.
Formula apply_substitution(const Substitution& sigma, const Formula& f);

/// True when the formula contains no DynDia/DynBox anywhere (including
/// inside probability terms).
bool is_static(const Formula& f);

/// Maximum nesting depth of dynamic operators (0 for static formulas).
int dynamic_depth(const Formula& f);

}  // namespace pdel
