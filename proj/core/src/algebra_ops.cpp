#include "pdel/algebra_ops.hpp"

#include <algorithm>

namespace pdel {

std::vector<Elem> TableAlgebra::i_minimal(int agent) const {
  std::vector<Elem> out;
  for (int a : pdel::i_minimal(*eha_, agent)) out.push_back(wrap(a));
  return out;
}

std::vector<Elem> TableAlgebra::carrier() const {
  std::vector<Elem> out;
  out.reserve(eha_->size());
  for (int a = 0; a < eha_->size(); ++a) out.push_back(wrap(a));
  return out;
}

std::vector<Elem> TableAlgebra::downset(const Elem& a) const {
  std::vector<Elem> out;
  for (int b = 0; b < eha_->size(); ++b)
    if (eha_->lat.leq(b, a[0])) out.push_back(wrap(b));
  return out;
}

std::vector<Elem> i_minimal_by_definition(const AlgebraOps& A, int agent) {
  const Elem bot = A.bottom();
  std::vector<Elem> fixed;
  for (const Elem& a : A.carrier())
    if (a != bot && A.dia(agent, a) == a) fixed.push_back(a);
  std::vector<Elem> mins;
  for (const Elem& a : fixed) {
    bool minimal = true;
    for (const Elem& b : fixed)
      if (b != a && A.leq(b, a)) {
        minimal = false;
        break;
      }
    if (minimal) mins.push_back(a);
  }
  return mins;
}

AxiomReport check_axioms_generic(const AlgebraOps& A) {
  AxiomReport rep;
  auto viol = [&](const std::string& ax) { rep.violations.push_back({ax, {}, ""}); };

  const auto elems = A.carrier();
  const Elem bot = A.bottom(), topE = A.top();

  for (const Elem& a : elems)
    for (const Elem& b : elems) {
      Elem ab = A.implies(a, b);
      for (const Elem& c : elems)
        if (A.leq(c, ab) != A.leq(A.meet(c, a), b)) {
          viol("residuation");
          break;
        }
    }

  for (int i = 0; i < A.agent_count(); ++i) {
    if (!A.leq(A.dia(i, bot), bot)) viol("M8");
    if (!A.leq(topE, A.box(i, topE))) viol("M9");
    for (const Elem& a : elems) {
      if (!A.leq(a, A.dia(i, a))) viol("M1");
      if (!A.leq(A.box(i, a), a)) viol("M2");
      if (!A.leq(A.dia(i, a), A.box(i, A.dia(i, a)))) viol("M5");
      if (!A.leq(A.dia(i, A.box(i, a)), A.box(i, a))) viol("M6");
      Elem da = A.dia(i, a);
      if (A.join(da, A.neg(da)) != topE) viol("E");
      for (const Elem& b : elems) {
        if (A.leq(a, b) && !A.leq(A.dia(i, a), A.dia(i, b))) viol("mono-dia");
        if (A.leq(a, b) && !A.leq(A.box(i, a), A.box(i, b))) viol("mono-box");
        if (!A.leq(A.dia(i, A.join(a, b)), A.join(A.dia(i, a), A.dia(i, b)))) viol("M3");
        if (!A.leq(A.box(i, A.implies(a, b)), A.implies(A.box(i, a), A.box(i, b)))) viol("M4");
        if (!A.leq(A.box(i, A.implies(a, b)), A.implies(A.dia(i, a), A.dia(i, b)))) viol("M7");
      }
    }
  }
  return rep;
}

}  // namespace pdel
