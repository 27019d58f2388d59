#include "pdel/complex_algebra.hpp"

#include <algorithm>

#include "pdel/eval.hpp"
#include "pdel/product_update.hpp"

namespace pdel {

PowersetAlgebra::PowersetAlgebra(int points, std::vector<std::vector<int>> cellOf)
    : n_(points), cellOf_(std::move(cellOf)) {
  if (n_ > 64) throw ValidationError("powerset algebra limited to 64 points");
  full_ = n_ == 64 ? ~Mask(0) : ((Mask(1) << n_) - 1);
  cells_.resize(cellOf_.size());
  for (size_t i = 0; i < cellOf_.size(); ++i) {
    std::map<int, Mask> byId;
    for (int s = 0; s < n_; ++s) byId[cellOf_[i][s]] |= Mask(1) << s;
    for (auto& [id, m] : byId) cells_[i].push_back(m);
  }
}

Elem PowersetAlgebra::dia(int agent, const Elem& a) const {
  Mask x = mask(a), out = 0;
  for (Mask cell : cells_[agent])
    if (cell & x) out |= cell;
  return wrap(out);
}

Elem PowersetAlgebra::box(int agent, const Elem& a) const {
  Mask x = mask(a), out = 0;
  for (Mask cell : cells_[agent])
    if ((cell & x) == cell) out |= cell;
  return wrap(out);
}

std::vector<Elem> PowersetAlgebra::i_minimal(int agent) const {
  std::vector<Elem> out;
  for (Mask cell : cells_[agent]) out.push_back(wrap(cell));
  return out;
}

std::vector<Elem> PowersetAlgebra::carrier() const {
  if (n_ > 20) throw ValidationError("carrier enumeration limited to 20 points");
  std::vector<Elem> out;
  out.reserve(size_t(1) << n_);
  for (Mask m = 0; m <= full_; ++m) out.push_back(wrap(m));
  return out;
}

std::vector<Elem> PowersetAlgebra::downset(const Elem& a) const {
  Mask x = mask(a);
  std::vector<Elem> out;
  Mask sub = x;
  while (true) {
    out.push_back(wrap(sub));
    if (sub == 0) break;
    sub = (sub - 1) & x;
  }
  return out;
}

PowersetStructure::PowersetStructure(std::shared_ptr<const PowersetAlgebra> alg,
                                     std::vector<std::vector<Rational>> weights)
    : alg_(std::move(alg)), weights_(std::move(weights)) {}

bool PowersetStructure::in_domain(int agent, const Elem& x) const {
  Mask m = PowersetAlgebra::mask(x);
  for (Mask cell : alg_->cells(agent))
    if ((m & ~cell) == 0) return true;
  return false;
}

Rational PowersetStructure::measure(int agent, const Elem& x) const {
  if (!in_domain(agent, x))
    throw OutOfDomain("set is not contained in a single epistemic cell");
  Mask m = PowersetAlgebra::mask(x);
  Rational acc = 0;
  for (int s = 0; s < alg_->points(); ++s)
    if ((m >> s) & 1) acc += weights_[agent][s];
  return acc;
}

ApeModel complex_algebra(const PesModel& M, std::shared_ptr<const EventLibrary> events) {
  std::vector<std::vector<int>> cellOf;
  std::vector<std::vector<Rational>> weights;
  for (const auto& r : M.rel) {
    cellOf.push_back(r.cell);
    weights.push_back(r.p);
  }
  auto alg = std::make_shared<PowersetAlgebra>(M.size(), std::move(cellOf));
  auto str = std::make_shared<PowersetStructure>(alg, std::move(weights));

  ApeModel out;
  out.structure = str;
  out.agents = M.agents;
  out.events = std::move(events);
  for (const auto& [a, mask] : M.valuation) out.valuation[a] = PowersetAlgebra::wrap(mask);
  return out;
}

namespace {

/// Canonical identification of a set of pairs with a map E -> P(S):
/// coordinate e collects the states paired with e.
Elem slices(const ProductAlgebra& prod, const IntermediateModel& im, Mask pairMask) {
  std::vector<Elem> coords(im.eventCount);
  for (int e = 0; e < im.eventCount; ++e) {
    Mask se = 0;
    for (int s = 0; s < im.stateCount; ++s)
      if ((pairMask >> im.pair(s, e)) & 1) se |= Mask(1) << s;
    coords[e] = PowersetAlgebra::wrap(se);
  }
  return prod.tuple(coords);
}

/// Exhaustively checks that `phi` is a bijective homomorphism for the
/// lattice and modal structure between two algebras whose carriers are the
/// 2^bits subsets of pair space. Binary operations are sampled when the
/// carrier is large.
template <typename Map>
void check_iso(const AlgebraOps& lhs, const AlgebraOps& rhs, int bits, const Map& phi,
               DualityReport& rep) {
  auto lift = [&](Mask m) { return phi(m); };
  const Mask fullPairs = bits == 64 ? ~Mask(0) : ((Mask(1) << bits) - 1);

  auto each = [&](auto&& fn) {
    for (Mask m = 0;; ++m) {
      fn(m);
      if (m == fullPairs) break;
    }
  };

  if (!(lift(fullPairs) == rhs.top())) rep.mismatch("top not preserved");
  if (!(lift(0) == rhs.bottom())) rep.mismatch("bottom not preserved");

  each([&](Mask m) {
    for (int i = 0; i < lhs.agent_count(); ++i) {
      if (!(lift(PowersetAlgebra::mask(lhs.dia(i, PowersetAlgebra::wrap(m)))) ==
            rhs.dia(i, lift(m))))
        rep.mismatch("diamond mismatch on mask " + std::to_string(m));
      if (!(lift(PowersetAlgebra::mask(lhs.box(i, PowersetAlgebra::wrap(m)))) ==
            rhs.box(i, lift(m))))
        rep.mismatch("box mismatch on mask " + std::to_string(m));
    }
  });

  // binary operations: every pair for small carriers, a strided sample above
  Mask stride = bits <= 8 ? 1 : (Mask(1) << (bits - 8)) + 1;
  for (Mask a = 0; a <= fullPairs; a += stride) {
    for (Mask b = 0; b <= fullPairs; b += stride) {
      Elem la = lift(a), lb = lift(b);
      if (!(lift(a & b) == rhs.meet(la, lb))) rep.mismatch("meet mismatch");
      if (!(lift(a | b) == rhs.join(la, lb))) rep.mismatch("join mismatch");
      if (!(lift(PowersetAlgebra::mask(
                lhs.implies(PowersetAlgebra::wrap(a), PowersetAlgebra::wrap(b)))) ==
            rhs.implies(la, lb)))
        rep.mismatch("implication mismatch");
      if (b == fullPairs) break;
    }
    if (a == fullPairs) break;
  }
}

DualityReport check_intermediate(const PesModel& M, const EventLibrary& lib,
                                 const EventStructureL& E) {
  DualityReport rep;

  ClassicalUpdateResult cu = classical_update(M, lib, E);
  const IntermediateModel& im = cu.intermediate;
  const int bits = im.stateCount * im.eventCount;

  // left side: the complex algebra of the intermediate relational structure
  std::vector<std::vector<int>> pairCell(im.cell);
  auto lhsAlg = std::make_shared<PowersetAlgebra>(bits, pairCell);
  PowersetStructure lhsStr(lhsAlg, im.weight);

  // right side: the intermediate ApPE-structure over the complex algebra
  ApeModel plus = complex_algebra(M, std::make_shared<EventLibrary>(lib));
  Evaluator ev(plus);
  EventStructureA EA =
      translate_event(E, plus, [&](const Formula& g) { return ev.eval(g); });
  auto inter = std::make_shared<IntermediateStructure>(plus.structure, EA);
  const ProductAlgebra& prod = *inter->product();

  auto phi = [&](Mask m) { return slices(prod, im, m); };
  check_iso(*lhsAlg, prod, bits, phi, rep);

  // i-minimal elements correspond
  for (int i = 0; i < lhsAlg->agent_count(); ++i) {
    auto lhsMin = lhsAlg->i_minimal(i);
    auto rhsMin = prod.i_minimal(i);
    std::vector<Elem> mapped;
    for (const Elem& c : lhsMin) mapped.push_back(phi(PowersetAlgebra::mask(c)));
    std::sort(mapped.begin(), mapped.end());
    std::sort(rhsMin.begin(), rhsMin.end());
    if (mapped != rhsMin) rep.mismatch("i-minimal sets differ for agent " + std::to_string(i));
  }

  // measures agree on the whole domain: subsets of each relational cell
  for (int i = 0; i < lhsAlg->agent_count(); ++i) {
    for (Mask cell : lhsAlg->cells(i)) {
      Mask sub = cell;
      while (true) {
        Rational l = lhsStr.measure(i, PowersetAlgebra::wrap(sub));
        Rational r = inter->measure(i, phi(sub));
        if (l != r)
          rep.mismatch("measure differs on subset " + std::to_string(sub) + " (agent " +
                       std::to_string(i) + "): " + rational_string(l) + " vs " +
                       rational_string(r));
        if (sub == 0) break;
        sub = (sub - 1) & cell;
      }
    }
  }

  // valuations correspond (intermediate valuation is extension x E)
  for (const auto& [a, mask] : im.valuation) {
    Elem rhs = prod.constant(plus.valuation.at(a));
    if (!(phi(mask) == rhs)) rep.mismatch("valuation of '" + a + "' differs");
  }

  return rep;
}

DualityReport check_update(const PesModel& M, const EventLibrary& lib,
                           const EventStructureL& E) {
  DualityReport rep;

  ClassicalUpdateResult cu = classical_update(M, lib, E);
  const PesModel& U = cu.updated;
  const int bits = U.size();

  std::vector<std::vector<int>> cellOf;
  std::vector<std::vector<Rational>> weights;
  for (const auto& r : U.rel) {
    cellOf.push_back(r.cell);
    weights.push_back(r.p);
  }
  auto lhsAlg = std::make_shared<PowersetAlgebra>(bits, cellOf);
  PowersetStructure lhsStr(lhsAlg, weights);

  ApeModel plus = complex_algebra(M, std::make_shared<EventLibrary>(lib));
  Evaluator ev(plus);
  AlgebraicUpdateResult au =
      update_model(plus, E, [&](const Formula& g) { return ev.eval(g); });
  const UpdatedStructure& ustr = *au.structure;
  const UpdatedAlgebra& ualg = *ustr.updated_algebra();
  const ProductAlgebra& prod = ualg.product();

  // canonical map: subsets of the surviving pairs -> canonical representatives
  auto phi = [&](Mask m) {
    std::vector<Elem> coords(au.event.eventCount);
    for (int e = 0; e < au.event.eventCount; ++e) {
      Mask se = 0;
      for (int x = 0; x < bits; ++x)
        if (((m >> x) & 1) != 0 && cu.pair_of[x].second == e)
          se |= Mask(1) << cu.pair_of[x].first;
      coords[e] = PowersetAlgebra::wrap(se);
    }
    return prod.tuple(coords);
  };

  // the map must land exactly on the canonical representatives
  if (!(phi((bits == 64 ? ~Mask(0) : (Mask(1) << bits) - 1)) == ualg.top()))
    rep.mismatch("surviving pairs do not match pre-bar");

  check_iso(*lhsAlg, ualg, bits, phi, rep);

  for (int i = 0; i < lhsAlg->agent_count(); ++i) {
    auto lhsMin = lhsAlg->i_minimal(i);
    auto rhsMin = ualg.i_minimal(i);
    std::vector<Elem> mapped;
    for (const Elem& c : lhsMin) mapped.push_back(phi(PowersetAlgebra::mask(c)));
    std::sort(mapped.begin(), mapped.end());
    std::sort(rhsMin.begin(), rhsMin.end());
    if (mapped != rhsMin) rep.mismatch("updated i-minimal sets differ");
  }

  for (int i = 0; i < lhsAlg->agent_count(); ++i) {
    for (Mask cell : lhsAlg->cells(i)) {
      Mask sub = cell;
      while (true) {
        Rational l = lhsStr.measure(i, PowersetAlgebra::wrap(sub));
        Rational r = ustr.measure(i, phi(sub));
        if (l != r)
          rep.mismatch("updated measure differs on subset " + std::to_string(sub) +
                       ": " + rational_string(l) + " vs " + rational_string(r));
        if (sub == 0) break;
        sub = (sub - 1) & cell;
      }
    }
  }

  for (const auto& [a, mask] : U.valuation) {
    auto it = au.model.valuation.find(a);
    if (it == au.model.valuation.end()) {
      rep.mismatch("atom '" + a + "' missing from algebraic update");
      continue;
    }
    if (!(phi(mask) == it->second)) rep.mismatch("updated valuation of '" + a + "' differs");
  }

  return rep;
}

}  // namespace

DualityReport check_duality(const PesModel& M, const EventLibrary& lib,
                            const EventStructureL& E, DualityMode mode) {
  return mode == DualityMode::Intermediate ? check_intermediate(M, lib, E)
                                           : check_update(M, lib, E);
}

}  // namespace pdel
