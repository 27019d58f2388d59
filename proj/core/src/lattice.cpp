#include "pdel/lattice.hpp"

#include <bit>

namespace pdel {

int Bitset::count() const {
  int c = 0;
  for (uint64_t w : w_) c += std::popcount(w);
  return c;
}

Bitset Bitset::operator&(const Bitset& o) const {
  Bitset r(n_);
  for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
  return r;
}

Bitset Bitset::operator|(const Bitset& o) const {
  Bitset r(n_);
  for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | o.w_[i];
  return r;
}

bool Bitset::subset_of(const Bitset& o) const {
  for (size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & ~o.w_[i]) return false;
  return true;
}

bool Bitset::any() const {
  for (uint64_t w : w_)
    if (w) return true;
  return false;
}

FiniteLattice FiniteLattice::build(int n, const std::vector<std::pair<int, int>>& leq) {
  if (n < 1)
    throw LatticeError(LatticeErrorKind::NotAPartialOrder, "lattice needs at least one element");
  if (n > 4096)
    throw LatticeError(LatticeErrorKind::TooLarge,
                       "lattice carrier exceeds supported size (4096)");

  FiniteLattice L;
  L.n_ = n;
  L.up_.assign(n, Bitset(n));
  L.down_.assign(n, Bitset(n));
  for (int a = 0; a < n; ++a) L.up_[a].set(a);
  for (auto [a, b] : leq) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw LatticeError(LatticeErrorKind::NotAPartialOrder, "leq index out of range");
    L.up_[a].set(b);
  }

  // antisymmetry and transitivity
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a != b && L.up_[a].test(b) && L.up_[b].test(a))
        throw LatticeError(LatticeErrorKind::NotAPartialOrder,
                           "antisymmetry fails between " + std::to_string(a) + " and " +
                               std::to_string(b));
      if (L.up_[a].test(b) && !L.up_[b].subset_of(L.up_[a]))
        throw LatticeError(LatticeErrorKind::NotAPartialOrder,
                           "transitivity fails at " + std::to_string(a) + " <= " +
                               std::to_string(b));
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (L.up_[b].test(a)) L.down_[a].set(b);

  // lubs and glbs for every pair
  L.meet_.assign(size_t(n) * n, -1);
  L.join_.assign(size_t(n) * n, -1);
  auto extremum = [&](const Bitset& candidates, const std::vector<Bitset>& cone) {
    // the element of `candidates` whose cone equals the whole candidate set,
    // i.e. the least upper bound / greatest lower bound when it exists
    for (int c = 0; c < n; ++c)
      if (candidates.test(c) && (cone[c] & candidates) == candidates) return c;
    return -1;
  };
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      int lub = extremum(L.up_[a] & L.up_[b], L.up_);
      int glb = extremum(L.down_[a] & L.down_[b], L.down_);
      if (lub < 0 || glb < 0)
        throw LatticeError(LatticeErrorKind::JoinMeetMissing,
                           "pair (" + std::to_string(a) + "," + std::to_string(b) +
                               ") has no " + (lub < 0 ? "join" : "meet"));
      L.join_[a * n + b] = L.join_[b * n + a] = int16_t(lub);
      L.meet_[a * n + b] = L.meet_[b * n + a] = int16_t(glb);
    }

  Bitset everything(n);
  for (int a = 0; a < n; ++a) everything.set(a);
  L.bottom_ = extremum(everything, L.up_);
  L.top_ = extremum(everything, L.down_);
  if (L.bottom_ < 0 || L.top_ < 0)
    throw LatticeError(LatticeErrorKind::JoinMeetMissing, "no bottom or top element");

  // join-irreducibles: nonbottom elements that are not the join of two
  // strictly smaller elements
  for (int j = 0; j < n; ++j) {
    if (j == L.bottom_) continue;
    bool reducible = false;
    for (int x = 0; x < n && !reducible; ++x) {
      if (x == j || !L.down_[j].test(x)) continue;
      for (int y = x; y < n; ++y) {
        if (y == j || !L.down_[j].test(y)) continue;
        if (L.join_[x * n + y] == j) {
          reducible = true;
          break;
        }
      }
    }
    if (!reducible) L.ji_.push_back(j);
  }
  L.jiBelow_.assign(n, Bitset(n));
  for (int a = 0; a < n; ++a)
    for (int j : L.ji_)
      if (L.down_[a].test(j)) L.jiBelow_[a].set(j);

  // Distributivity via the Birkhoff embedding a |-> { j in JI : j <= a }:
  // the lattice is distributive iff this map turns joins into unions and
  // meets into intersections and is injective.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!((L.jiBelow_[a] | L.jiBelow_[b]) == L.jiBelow_[L.join_[a * n + b]]) ||
          !((L.jiBelow_[a] & L.jiBelow_[b]) == L.jiBelow_[L.meet_[a * n + b]]))
        throw LatticeError(LatticeErrorKind::NotDistributive,
                           "distributivity fails on pair (" + std::to_string(a) + "," +
                               std::to_string(b) + ")");
      if (a != b && L.jiBelow_[a] == L.jiBelow_[b])
        throw LatticeError(LatticeErrorKind::NotDistributive,
                           "elements " + std::to_string(a) + " and " + std::to_string(b) +
                               " sit below the same join-irreducibles");
    }

  // Heyting implication a->b = join{ c | c /\ a <= b }. By residuation this
  // join is the join of the join-irreducibles j with j /\ a <= b.
  L.imp_.assign(size_t(n) * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int acc = L.bottom_;
      for (int j : L.ji_)
        if (L.down_[b].test(L.meet_[j * n + a])) acc = L.join_[acc * n + j];
      L.imp_[a * n + b] = int16_t(acc);
    }

  return L;
}

}  // namespace pdel
