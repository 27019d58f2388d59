#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "pdel/eha.hpp"

namespace pdel {

/// Opaque algebra element. The encoding is owned by the algebra that issued
/// it: a table algebra stores one word (the element index), a powerset
/// algebra a bitmask, a product algebra the concatenation of its coordinate
/// encodings. Canonical encodings make equality plain word comparison.
using Elem = std::vector<uint32_t>;

/// Operation interface of a finite epistemic Heyting algebra. Updated and
/// intermediate algebras can be exponentially larger than their base, so the
/// interface never requires materialised operation tables; carrier() and
/// downset() enumerate lazily and are meant for small instances (validation,
/// exhaustive law checks).
class AlgebraOps {
 public:
  virtual ~AlgebraOps() = default;

  virtual int width() const = 0;  // words per element
  virtual int agent_count() const = 0;

  virtual Elem bottom() const = 0;
  virtual Elem top() const = 0;
  virtual Elem meet(const Elem& a, const Elem& b) const = 0;
  virtual Elem join(const Elem& a, const Elem& b) const = 0;
  virtual Elem implies(const Elem& a, const Elem& b) const = 0;
  virtual Elem dia(int agent, const Elem& a) const = 0;
  virtual Elem box(int agent, const Elem& a) const = 0;

  /// The i-minimal elements, each implementation using its own
  /// characterisation. i_minimal_by_definition is the generic oracle.
  virtual std::vector<Elem> i_minimal(int agent) const = 0;

  virtual std::vector<Elem> carrier() const = 0;
  virtual std::vector<Elem> downset(const Elem& a) const = 0;

  bool leq(const Elem& a, const Elem& b) const { return meet(a, b) == a; }
  bool is_bottom(const Elem& a) const { return a == bottom(); }
  Elem neg(const Elem& a) const { return implies(a, bottom()); }
};

using AlgebraPtr = std::shared_ptr<const AlgebraOps>;

/// Adapter exposing a concrete table-based Eha through the ops interface.
/// Elements are single words holding the element index.
class TableAlgebra final : public AlgebraOps {
 public:
  explicit TableAlgebra(std::shared_ptr<const Eha> a) : eha_(std::move(a)) {}

  const Eha& eha() const { return *eha_; }

  int width() const override { return 1; }
  int agent_count() const override { return eha_->agent_count(); }
  Elem bottom() const override { return {uint32_t(eha_->lat.bottom())}; }
  Elem top() const override { return {uint32_t(eha_->lat.top())}; }
  Elem meet(const Elem& a, const Elem& b) const override {
    return {uint32_t(eha_->lat.meet(a[0], b[0]))};
  }
  Elem join(const Elem& a, const Elem& b) const override {
    return {uint32_t(eha_->lat.join(a[0], b[0]))};
  }
  Elem implies(const Elem& a, const Elem& b) const override {
    return {uint32_t(eha_->lat.implies(a[0], b[0]))};
  }
  Elem dia(int agent, const Elem& a) const override {
    return {uint32_t(eha_->dia(agent, a[0]))};
  }
  Elem box(int agent, const Elem& a) const override {
    return {uint32_t(eha_->bx(agent, a[0]))};
  }
  std::vector<Elem> i_minimal(int agent) const override;
  std::vector<Elem> carrier() const override;
  std::vector<Elem> downset(const Elem& a) const override;

  static Elem wrap(int idx) { return {uint32_t(idx)}; }
  static int index(const Elem& e) { return int(e[0]); }

 private:
  std::shared_ptr<const Eha> eha_;
};

/// Min_i computed straight from the definition (nonbottom minimal fixed
/// points of dia_i) by scanning the carrier. Exponential on product
/// algebras; used as the independent oracle in tests and validation.
std::vector<Elem> i_minimal_by_definition(const AlgebraOps& A, int agent);

/// Pointwise law check (M1..M9, E, residuation) through the ops interface,
/// enumerating the carrier. Same report format as the concrete checker.
AxiomReport check_axioms_generic(const AlgebraOps& A);

}  // namespace pdel
