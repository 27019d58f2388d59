#include "pdel/eha.hpp"

#include <algorithm>
#include <set>

namespace pdel {

int Eha::agent_index(const std::string& name) const {
  for (size_t i = 0; i < agents.size(); ++i)
    if (agents[i] == name) return static_cast<int>(i);
  return -1;
}

namespace {

void check_agent_axioms(const Eha& A, int i, AxiomReport& rep) {
  const auto& L = A.lat;
  const int n = L.size();
  auto viol = [&](const std::string& ax, std::vector<int> elems) {
    rep.violations.push_back({ax, std::move(elems), "agent " + A.agents[i]});
  };

  if (!L.leq(A.dia(i, L.bottom()), L.bottom())) viol("M8", {L.bottom()});
  if (!L.leq(L.top(), A.bx(i, L.top()))) viol("M9", {L.top()});
  for (int a = 0; a < n; ++a) {
    if (!L.leq(a, A.dia(i, a))) viol("M1", {a});
    if (!L.leq(A.bx(i, a), a)) viol("M2", {a});
    if (!L.leq(A.dia(i, a), A.bx(i, A.dia(i, a)))) viol("M5", {a});
    if (!L.leq(A.dia(i, A.bx(i, a)), A.bx(i, a))) viol("M6", {a});
    for (int b = 0; b < n; ++b) {
      // the modal operators are required to be monotone on top of M1..M9
      if (L.leq(a, b) && !L.leq(A.dia(i, a), A.dia(i, b))) viol("mono-dia", {a, b});
      if (L.leq(a, b) && !L.leq(A.bx(i, a), A.bx(i, b))) viol("mono-box", {a, b});
      if (!L.leq(A.dia(i, L.join(a, b)), L.join(A.dia(i, a), A.dia(i, b)))) viol("M3", {a, b});
      if (!L.leq(A.bx(i, L.implies(a, b)), L.implies(A.bx(i, a), A.bx(i, b)))) viol("M4", {a, b});
      if (!L.leq(A.bx(i, L.implies(a, b)), L.implies(A.dia(i, a), A.dia(i, b)))) viol("M7", {a, b});
    }
    int da = A.dia(i, a);
    if (L.join(da, L.implies(da, L.bottom())) != L.top()) viol("E", {a});
  }

  // Fact: the diamond image is a Boolean subalgebra and coincides with the
  // box image.
  std::set<int> diaImg, boxImg;
  for (int a = 0; a < n; ++a) {
    diaImg.insert(A.dia(i, a));
    boxImg.insert(A.bx(i, a));
  }
  if (diaImg != boxImg) viol("fact1-images-differ", {});
  auto in_img = [&](int x) { return diaImg.count(x) > 0; };
  for (int x : diaImg) {
    if (!in_img(L.implies(x, L.bottom()))) viol("fact1-complement", {x});
    for (int y : diaImg) {
      if (!in_img(L.meet(x, y))) viol("fact1-meet", {x, y});
      if (!in_img(L.join(x, y))) viol("fact1-join", {x, y});
      if (!in_img(L.implies(x, y))) viol("fact1-implies", {x, y});
    }
  }
}

}  // namespace

AxiomReport check_eha_axioms(const Eha& A) {
  AxiomReport rep;
  const auto& L = A.lat;
  const int n = L.size();

  // residuation of the implication table: c <= a->b iff c /\ a <= b
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (L.leq(c, L.implies(a, b)) != L.leq(L.meet(c, a), b)) {
          rep.violations.push_back({"residuation", {a, b, c}, ""});
          break;
        }

  for (int i = 0; i < A.agent_count(); ++i) check_agent_axioms(A, i, rep);
  return rep;
}

std::vector<int> i_minimal(const Eha& A, int agent) {
  const auto& L = A.lat;
  std::vector<int> fixed;
  for (int a = 0; a < L.size(); ++a)
    if (a != L.bottom() && A.dia(agent, a) == a) fixed.push_back(a);
  std::vector<int> mins;
  for (int a : fixed) {
    bool minimal = true;
    for (int b : fixed)
      if (b != a && L.leq(b, a)) {
        minimal = false;
        break;
      }
    if (minimal) mins.push_back(a);
  }
  return mins;
}

QuotientAlgebra pseudo_quotient(const Eha& A, int divisor) {
  const auto& L = A.lat;
  const int n = L.size();

  // carrier: canonical representatives b /\ a, i.e. the downset of the divisor
  std::vector<int> section;
  std::vector<int> baseToQ(n, -1);
  for (int b = 0; b < n; ++b)
    if (L.leq(b, divisor)) {
      baseToQ[b] = static_cast<int>(section.size());
      section.push_back(b);
    }
  const int m = static_cast<int>(section.size());

  std::vector<std::pair<int, int>> leq;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (L.leq(section[x], section[y])) leq.emplace_back(x, y);

  Eha Q;
  Q.lat = FiniteLattice::build(m, leq);
  Q.agents = A.agents;
  Q.diamond.assign(A.agent_count(), std::vector<int16_t>(m));
  Q.box.assign(A.agent_count(), std::vector<int16_t>(m));
  for (int i = 0; i < A.agent_count(); ++i)
    for (int x = 0; x < m; ++x) {
      int b = section[x];
      // diamond^a [b] = [dia(b /\ a)],  box^a [b] = [box(a -> b)]
      Q.diamond[i][x] = int16_t(baseToQ[L.meet(A.dia(i, b), divisor)]);
      Q.box[i][x] = int16_t(baseToQ[L.meet(A.bx(i, L.implies(divisor, b)), divisor)]);
    }

  // the transported Heyting implication is (x -> y) /\ a; FiniteLattice::build
  // recomputed it from the restricted order, which agrees on downsets, so we
  // only need to rebuild the modal tables above.

  std::vector<int> project(n);
  for (int b = 0; b < n; ++b) project[b] = baseToQ[L.meet(b, divisor)];

  return QuotientAlgebra{std::move(Q), divisor, std::move(project), std::move(section),
                         divisor == L.bottom()};
}

}  // namespace pdel
