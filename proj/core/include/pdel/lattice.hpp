#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pdel {

enum class LatticeErrorKind {
  NotAPartialOrder,
  JoinMeetMissing,
  NotDistributive,
  TooLarge,
};

struct LatticeError : std::runtime_error {
  LatticeErrorKind kind;
  LatticeError(LatticeErrorKind k, const std::string& msg)
      : std::runtime_error(msg), kind(k) {}
};

/// Dense bitset over element indices; lattices here stay small (n <= 4096)
/// so one row per element is cheap.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int size() const { return n_; }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
  int count() const;

  Bitset operator&(const Bitset& o) const;
  Bitset operator|(const Bitset& o) const;
  bool operator==(const Bitset& o) const { return w_ == o.w_; }
  bool subset_of(const Bitset& o) const;
  bool any() const;

  const std::vector<uint64_t>& words() const { return w_; }

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

/// Finite bounded distributive lattice over indices 0..n-1. The order is a
/// bit-matrix and meets/joins are precomputed tables, so all operations are
/// O(1) and exhaustive law checks stay cheap.
class FiniteLattice {
 public:
  /// Builds from a relation given as (a, b) pairs meaning a <= b. The
  /// reflexive-transitive closure is NOT taken: the input must already be a
  /// partial order (reflexive pairs may be omitted; transitivity is required).
  /// Throws LatticeError if the input is not a partial order, if some pair
  /// lacks a lub or glb, or if the lattice is not distributive.
  static FiniteLattice build(int n, const std::vector<std::pair<int, int>>& leq);

  int size() const { return n_; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  bool leq(int a, int b) const { return up_[a].test(b); }
  int meet(int a, int b) const { return meet_[a * n_ + b]; }
  int join(int a, int b) const { return join_[a * n_ + b]; }

  /// Heyting implication: join of { c | c /\ a <= b }. Total on distributive
  /// lattices; satisfies residuation c <= (a->b) iff c/\a <= b.
  int implies(int a, int b) const { return imp_[a * n_ + b]; }

  const Bitset& upset(int a) const { return up_[a]; }    // { b | a <= b }
  const Bitset& downset(int a) const { return down_[a]; }  // { b | b <= a }

  /// Join-irreducible elements (nonbottom, with a unique lower cover),
  /// ascending. Every element is the join of the join-irreducibles below it.
  const std::vector<int>& join_irreducibles() const { return ji_; }

  /// Bitset of join-irreducibles below a (the Birkhoff coordinates of a).
  const Bitset& ji_below(int a) const { return jiBelow_[a]; }

 private:
  int n_ = 0;
  int bottom_ = -1, top_ = -1;
  std::vector<Bitset> up_, down_;
  std::vector<int16_t> meet_, join_, imp_;
  std::vector<int> ji_;
  std::vector<Bitset> jiBelow_;
};

}  // namespace pdel
