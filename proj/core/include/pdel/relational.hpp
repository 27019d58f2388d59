#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pdel/formula.hpp"
#include "pdel/rational.hpp"

namespace pdel {

struct UnknownEventName : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnknownAtom : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct AmbiguousPrecondition : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EmptyUpdate : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotAForest : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnsupportedConnective : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// States (or events) as bits of a 64-bit mask; relational models here are
/// small and updates multiply sizes, so 64 is plenty.
using Mask = uint64_t;

/// Per-agent epistemic data over an indexed finite set: equivalence cells as
/// cell ids, and a strictly positive weight per point forming a probability
/// distribution on each cell.
struct AgentDist {
  std::vector<int> cell;
  std::vector<Rational> p;
};

struct PesModel {
  std::vector<std::string> states;
  std::vector<std::string> agents;
  std::vector<AgentDist> rel;                // indexed by agent
  std::map<std::string, Mask> valuation;

  int size() const { return static_cast<int>(states.size()); }
  int state_index(const std::string& name) const;
  int agent_index(const std::string& name) const;
  Mask cell_mask(int agent, int s) const;
  bool sim(int agent, int s, int t) const { return rel[agent].cell[s] == rel[agent].cell[t]; }
};

/// Throws ValidationError unless every agent's weights are positive and form
/// a probability distribution on each cell.
void validate_pes(const PesModel& m);

/// PES-model with an intuitionistic partial order; atom extensions must be
/// up-sets.
struct IntKripkeModel {
  PesModel m;
  std::vector<Mask> up;  // up[s] = { t | s <= t }, including s

  bool leq(int s, int t) const { return (up[s] >> t) & 1; }
};

void validate_int(const IntKripkeModel& m);

/// Event structure over the language: events with per-agent epistemic data,
/// a sequence of precondition formulas, occurrence probabilities pre(e|phi)
/// per precondition, per-event substitutions, and an optional declared
/// strict order on the preconditions (used in intuitionistic mode; the
/// classical reading expects pairwise inconsistent preconditions and no
/// order).
struct EventStructureL {
  std::string name;
  std::vector<std::string> events;
  std::vector<std::string> agents;
  std::vector<AgentDist> rel;
  std::vector<Formula> phi;
  std::vector<std::pair<int, int>> phi_order;  // (j,k): phi_j strictly below phi_k
  std::vector<std::vector<Rational>> pre;      // pre[k][e]
  std::vector<Substitution> sub;               // per event

  int event_count() const { return static_cast<int>(events.size()); }
  int event_index(const std::string& name) const;
  int agent_index(const std::string& name) const;
  bool declared_below(int j, int k) const;

  /// sub(e)(p) when p is in the substitution domain, p itself otherwise.
  Formula sub_formula(int e, const std::string& atom) const;

  /// The induced precondition formula of an event: the join of all members
  /// with positive occurrence probability at e.
  Formula pre_formula(int e) const;
};

void validate_event(const EventStructureL& E);

using EventLibrary = std::map<std::string, EventStructureL>;

/// pre(e|s): pre(e|phi) for the unique satisfied member of Phi, else 0.
/// Throws AmbiguousPrecondition when two members hold at s.
Rational pre_given_state(const PesModel& M, const EventLibrary& lib,
                         const EventStructureL& E, int e, int s);

/// The two-step classical update. The intermediate structure keeps every
/// pair with the raw product weights; the updated model keeps the pairs
/// where some positive-probability precondition holds, with renormalised
/// distributions and substituted valuation.
struct IntermediateModel {
  int stateCount = 0, eventCount = 0;  // pairs are indexed s * eventCount + e
  std::vector<std::string> agents;
  std::vector<std::vector<int>> cell;        // [agent][pair]
  std::vector<std::vector<Rational>> weight; // [agent][pair], may be 0
  std::map<std::string, Mask> valuation;     // atom -> pair mask (extension x E)

  int pair(int s, int e) const { return s * eventCount + e; }
};

struct ClassicalUpdateResult {
  IntermediateModel intermediate;
  PesModel updated;
  std::vector<std::pair<int, int>> pair_of;  // updated state -> (s, e)
  std::vector<int> pair_index;               // s*|E|+e -> updated state or -1
};

ClassicalUpdateResult classical_update(const PesModel& M, const EventLibrary& lib,
                                       const EventStructureL& E);

/// mu^M_i(s, phi): summed weight of the states in s's cell satisfying phi.
Rational model_measure(const PesModel& M, const EventLibrary& lib, int agent, int s,
                       const Formula& phi);

/// Classical satisfaction at a state; dynamic operators recurse through
/// classical_update, probability atoms through model_measure.
bool eval_classical(const PesModel& M, const EventLibrary& lib, int s, const Formula& phi);

/// Extension mask of phi.
Mask extension_classical(const PesModel& M, const EventLibrary& lib, const Formula& phi);

/// Intuitionistic satisfaction for the static base fragment (atoms, bot,
/// top, and, or, imp). Throws UnsupportedConnective on anything else.
bool eval_int_static(const IntKripkeModel& M, int s, const Formula& phi);

/// The coproduct weight P^coprod_i(s,e) defined by recursion on the inverse
/// order, with the most-specific-precondition state weights P^alpha.
Rational int_coproduct_weights(const IntKripkeModel& M, const EventStructureL& E,
                               int agent, int s, int e);

struct IntUpdateResult {
  IntKripkeModel model;
  std::vector<std::pair<int, int>> pair_of;
  std::vector<int> pair_index;  // s*|E|+e -> new state or -1
  std::vector<std::string> warnings;
};

/// Product update of an intuitionistic model: coproduct weights by the
/// inverse-order recursion, zero-weight pairs dropped, per-cell
/// renormalisation, event-wise substituted valuation.
IntUpdateResult int_update(const IntKripkeModel& M, const EventStructureL& E);

}  // namespace pdel
