#include "pdel/formula.hpp"

#include <sstream>

namespace pdel {

namespace {

std::shared_ptr<FormulaNode> make(Conn k) { return std::make_shared<FormulaNode>(k); }

Formula unary(Conn k, const std::string& agent, Formula a) {
  auto n = make(k);
  n->name = agent;
  n->child.push_back(std::move(a));
  return n;
}

Formula binary(Conn k, Formula a, Formula b) {
  auto n = make(k);
  n->child.push_back(std::move(a));
  n->child.push_back(std::move(b));
  return n;
}

}  // namespace

Formula atom(const std::string& name) {
  auto n = make(Conn::Atom);
  n->name = name;
  return n;
}
Formula bot() { return make(Conn::Bot); }
Formula top() { return make(Conn::Top); }
Formula conj(Formula a, Formula b) { return binary(Conn::And, std::move(a), std::move(b)); }
Formula disj(Formula a, Formula b) { return binary(Conn::Or, std::move(a), std::move(b)); }
Formula imp(Formula a, Formula b) { return binary(Conn::Imp, std::move(a), std::move(b)); }
Formula neg(Formula a) { return imp(std::move(a), bot()); }
Formula iff(Formula a, Formula b) { return conj(imp(a, b), imp(b, a)); }
Formula dia(const std::string& agent, Formula a) { return unary(Conn::Dia, agent, std::move(a)); }
Formula box(const std::string& agent, Formula a) { return unary(Conn::Box, agent, std::move(a)); }

Formula dyn_dia(const std::string& ev, const std::string& e, Formula a) {
  auto n = make(Conn::DynDia);
  n->name = ev;
  n->event = e;
  n->child.push_back(std::move(a));
  return n;
}
Formula dyn_box(const std::string& ev, const std::string& e, Formula a) {
  auto n = make(Conn::DynBox);
  n->name = ev;
  n->event = e;
  n->child.push_back(std::move(a));
  return n;
}

Formula prob_geq(const std::string& agent, std::vector<ProbTerm> terms, Rational bound) {
  auto n = std::make_shared<FormulaNode>(Conn::ProbGeq);
  n->name = agent;
  n->terms = std::move(terms);
  n->bound = std::move(bound);
  return n;
}
Formula prob_gt(const std::string& agent, std::vector<ProbTerm> terms, Rational bound) {
  auto n = std::make_shared<FormulaNode>(Conn::ProbGt);
  n->name = agent;
  n->terms = std::move(terms);
  n->bound = std::move(bound);
  return n;
}

Formula disj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return bot();
  Formula out = fs.front();
  for (size_t i = 1; i < fs.size(); ++i) out = disj(out, fs[i]);
  return out;
}
Formula conj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return top();
  Formula out = fs.front();
  for (size_t i = 1; i < fs.size(); ++i) out = conj(out, fs[i]);
  return out;
}

bool formula_equal(const Formula& a, const Formula& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind || a->name != b->name || a->event != b->event) return false;
  if (a->child.size() != b->child.size() || a->terms.size() != b->terms.size()) return false;
  if (a->kind == Conn::ProbGeq || a->kind == Conn::ProbGt) {
    if (a->bound != b->bound) return false;
    for (size_t i = 0; i < a->terms.size(); ++i) {
      if (a->terms[i].coeff != b->terms[i].coeff) return false;
      if (!formula_equal(a->terms[i].arg, b->terms[i].arg)) return false;
    }
  }
  for (size_t i = 0; i < a->child.size(); ++i)
    if (!formula_equal(a->child[i], b->child[i])) return false;
  return true;
}

namespace {

// Precedence levels: -> is 0 (right assoc), | is 1, & is 2, prefix ops 3,
// leaves 4. A child is parenthesised when its level is below the context.
int level(Conn k) {
  switch (k) {
    case Conn::Imp: return 0;
    case Conn::Or: return 1;
    case Conn::And: return 2;
    case Conn::Dia:
    case Conn::Box:
    case Conn::DynDia:
    case Conn::DynBox: return 3;
    default: return 4;
  }
}

void print(const Formula& f, int min_level, std::ostream& os) {
  bool paren = level(f->kind) < min_level;
  switch (f->kind) {
    case Conn::Atom: os << f->name; return;
    case Conn::Bot: os << "false"; return;
    case Conn::Top: os << "true"; return;
    case Conn::And:
      if (paren) os << "(";
      print(f->child[0], 2, os);
      os << " & ";
      print(f->child[1], 3, os);
      if (paren) os << ")";
      return;
    case Conn::Or:
      if (paren) os << "(";
      print(f->child[0], 1, os);
      os << " | ";
      print(f->child[1], 2, os);
      if (paren) os << ")";
      return;
    case Conn::Imp:
      if (paren) os << "(";
      print(f->child[0], 1, os);
      os << " -> ";
      print(f->child[1], 0, os);
      if (paren) os << ")";
      return;
    case Conn::Dia:
      os << "dia[" << f->name << "]";
      print(f->child[0], 3, os);
      return;
    case Conn::Box:
      os << "box[" << f->name << "]";
      print(f->child[0], 3, os);
      return;
    case Conn::DynDia:
      os << "<" << f->name << "," << f->event << ">";
      print(f->child[0], 3, os);
      return;
    case Conn::DynBox:
      os << "[" << f->name << "," << f->event << "]";
      print(f->child[0], 3, os);
      return;
    case Conn::ProbGeq:
    case Conn::ProbGt: {
      os << "pr[" << f->name << "](";
      if (f->terms.empty()) {
        os << "0";
      } else {
        for (size_t i = 0; i < f->terms.size(); ++i) {
          const auto& t = f->terms[i];
          if (i == 0) {
            os << rational_string(t.coeff);
          } else if (t.coeff < 0) {
            os << " - " << rational_string(Rational(-t.coeff));
          } else {
            os << " + " << rational_string(t.coeff);
          }
          os << "*mu(";
          print(t.arg, 0, os);
          os << ")";
        }
      }
      os << (f->kind == Conn::ProbGeq ? " >= " : " > ");
      os << rational_string(f->bound) << ")";
      return;
    }
  }
}

}  // namespace

std::string formula_string(const Formula& f) {
  std::ostringstream os;
  print(f, 0, os);
  return os.str();
}

Formula Substitution::at(const std::string& a) const {
  auto it = map_.find(a);
  return it == map_.end() ? atom(a) : it->second;
}

Formula apply_substitution(const Substitution& sigma, const Formula& f) {
  if (sigma.is_identity()) return f;
  switch (f->kind) {
    case Conn::Atom: return sigma.at(f->name);
    case Conn::Bot:
    case Conn::Top: return f;
    default: break;
  }
  auto n = std::make_shared<FormulaNode>(f->kind);
  n->name = f->name;
  n->event = f->event;
  n->bound = f->bound;
  for (const auto& c : f->child) n->child.push_back(apply_substitution(sigma, c));
  for (const auto& t : f->terms)
    n->terms.push_back({t.coeff, apply_substitution(sigma, t.arg)});
  return n;
}

bool is_static(const Formula& f) { return dynamic_depth(f) == 0; }

int dynamic_depth(const Formula& f) {
  int d = 0;
  for (const auto& c : f->child) d = std::max(d, dynamic_depth(c));
  for (const auto& t : f->terms) d = std::max(d, dynamic_depth(t.arg));
  if (f->kind == Conn::DynDia || f->kind == Conn::DynBox) d += 1;
  return d;
}

}  // namespace pdel
