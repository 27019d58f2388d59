#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pdel/algebra_ops.hpp"
#include "pdel/rational.hpp"

namespace pdel {

struct OutOfDomain : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Per-agent i-(pre)measure on a table algebra, stored as an explicit map
/// from element index to value. The domain is exactly the downset of the
/// i-minimal elements; entries outside it stay empty.
struct IMeasure {
  std::string agent;
  std::vector<std::optional<Rational>> values;
  bool strict = true;  // measure, as opposed to premeasure

  const Rational& at(int elem) const {
    if (elem < 0 || elem >= static_cast<int>(values.size()) || !values[elem])
      throw OutOfDomain("measure undefined on element " + std::to_string(elem));
    return *values[elem];
  }
};

struct MeasureViolation {
  std::string clause;  // "domain", "monotone", "modular", "bottom", "strict", "cell-one"
  std::vector<int> elems;
  std::string detail;
};

struct MeasureReport {
  std::vector<MeasureViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks every clause of the i-(pre)measure definition against A and
/// reports all violations with witnesses. `strict` additionally demands
/// strict monotonicity inside each cell and value 1 on each cell.
MeasureReport validate(const IMeasure& m, const Eha& A, bool strict);

/// APE-structure view: an algebra together with one i-measure per agent.
/// Implementations exist for table algebras, complex algebras of relational
/// models, intermediate product structures and pseudo-quotient updates.
class Structure {
 public:
  virtual ~Structure() = default;
  virtual AlgebraPtr algebra() const = 0;
  virtual Rational measure(int agent, const Elem& x) const = 0;  // throws OutOfDomain
  virtual bool in_domain(int agent, const Elem& x) const = 0;
};

using StructurePtr = std::shared_ptr<const Structure>;

class TableStructure final : public Structure {
 public:
  TableStructure(std::shared_ptr<const Eha> algebra, std::vector<IMeasure> measures);

  AlgebraPtr algebra() const override { return ops_; }
  const Eha& eha() const { return *eha_; }
  const std::vector<IMeasure>& measures() const { return measures_; }

  Rational measure(int agent, const Elem& x) const override {
    return measures_[agent].at(TableAlgebra::index(x));
  }
  bool in_domain(int agent, const Elem& x) const override {
    int i = TableAlgebra::index(x);
    return i >= 0 && i < static_cast<int>(measures_[agent].values.size()) &&
           measures_[agent].values[i].has_value();
  }

 private:
  std::shared_ptr<const Eha> eha_;
  std::shared_ptr<const TableAlgebra> ops_;
  std::vector<IMeasure> measures_;
};

/// Assembles and fully validates an APE-structure; any violated measure
/// clause or missing agent becomes a ConstructionError.
std::shared_ptr<const TableStructure> make_ape(std::shared_ptr<const Eha> algebra,
                                               std::vector<IMeasure> measures);

/// Validates the measures of an arbitrary structure through the ops
/// interface by enumerating each agent's cells and their downsets.
MeasureReport validate_structure(const Structure& F, int agent, bool strict);

/// Ordered multiset of algebra elements with the event-structure forest
/// order. Copies of the same element carry a linear order; `below[j][k]`
/// holds when member j is strictly below member k (lattice order between
/// distinct elements, copy order between equal ones).
struct PhiMultiset {
  std::vector<Elem> elems;
  std::vector<std::vector<char>> below;

  int size() const { return static_cast<int>(elems.size()); }

  /// Maximal members strictly below member k.
  std::vector<int> mb(int k) const;
};

struct MemberNotInPhi : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The derived cell premeasure
///   mu_i^a(x) = mu_i(x /\ a) - sum_{b in mb(a)} mu_i(x /\ b),
/// where a is the member of Phi at index `member`.
Rational mu_upper(const Structure& F, int agent, const PhiMultiset& phi, int member,
                  const Elem& x);

/// Strict i-measure counting join-irreducibles: inside each cell a,
/// mu(b) = |JI below b| / |JI below a|. On Boolean cells this is the uniform
/// atom-counting measure.
IMeasure counting_measure(const Eha& A, int agent);

}  // namespace pdel
