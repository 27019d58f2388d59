#include "pdel/eval.hpp"

namespace pdel {

Evaluator::Evaluator(const ApeModel& M) : M_(M) {}

bool Evaluator::is_building(const std::string& name) const {
  for (const Evaluator* ev = this; ev != nullptr; ev = ev->parent_)
    for (const auto& n : ev->building_)
      if (n == name) return true;
  return false;
}

const Evaluator::Updated& Evaluator::updated(const std::string& eventName) {
  auto it = updated_.find(eventName);
  if (it != updated_.end()) return *it->second;

  if (!M_.events) throw UnknownEventName("no event structures loaded");
  auto def = M_.events->find(eventName);
  if (def == M_.events->end())
    throw UnknownEventName("event structure '" + eventName + "'");
  if (is_building(eventName))
    throw CyclicEventReference("preconditions of '" + eventName +
                               "' reference the structure itself");

  building_.push_back(eventName);
  auto up = std::make_shared<Updated>();
  up->update = update_model(M_, def->second, [this](const Formula& g) { return eval(g); });
  up->eval = std::make_unique<Evaluator>(up->update.model);
  up->eval->parent_ = this;
  building_.pop_back();

  return *updated_.emplace(eventName, std::move(up)).first->second;
}

Elem Evaluator::eval(const Formula& f) {
  std::string key = formula_string(f);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  Elem v = eval_uncached(f);
  memo_.emplace(std::move(key), v);
  return v;
}

Elem Evaluator::eval_uncached(const Formula& f) {
  const AlgebraOps& A = *M_.structure->algebra();
  switch (f->kind) {
    case Conn::Atom: return M_.atom_value(f->name);
    case Conn::Bot: return A.bottom();
    case Conn::Top: return A.top();
    case Conn::And: return A.meet(eval(f->child[0]), eval(f->child[1]));
    case Conn::Or: return A.join(eval(f->child[0]), eval(f->child[1]));
    case Conn::Imp: return A.implies(eval(f->child[0]), eval(f->child[1]));
    case Conn::Dia: {
      int i = M_.agent_index(f->name);
      if (i < 0) throw UnknownAtom("agent '" + f->name + "'");
      return A.dia(i, eval(f->child[0]));
    }
    case Conn::Box: {
      int i = M_.agent_index(f->name);
      if (i < 0) throw UnknownAtom("agent '" + f->name + "'");
      return A.box(i, eval(f->child[0]));
    }
    case Conn::DynDia:
    case Conn::DynBox: {
      const Updated& up = updated(f->name);
      const auto& ualg = *up.update.structure->updated_algebra();
      const auto& prod = ualg.product();
      int e = M_.events->at(f->name).event_index(f->event);
      if (e < 0) throw UnknownEventName("event '" + f->event + "' in '" + f->name + "'");
      // [[<E,e>phi]] = pre-bar(e) /\ pi_e(iota([[phi]]_{M^E}));
      // values of the updated model are already canonical representatives
      Elem inner = up.eval->eval(f->child[0]);
      Elem coord = prod.coordinate(inner, e);
      Elem guard = prod.coordinate(ualg.pre_bar_elem(), e);
      return f->kind == Conn::DynDia ? A.meet(guard, coord) : A.implies(guard, coord);
    }
    case Conn::ProbGeq:
    case Conn::ProbGt: {
      int i = M_.agent_index(f->name);
      if (i < 0) throw UnknownAtom("agent '" + f->name + "'");
      Elem acc = A.bottom();
      for (const Elem& cell : A.i_minimal(i)) {
        Rational sum = 0;
        for (const auto& t : f->terms)
          sum += t.coeff * M_.structure->measure(i, A.meet(eval(t.arg), cell));
        bool holds = f->kind == Conn::ProbGeq ? sum >= f->bound : sum > f->bound;
        if (holds) acc = A.join(acc, cell);
      }
      return acc;
    }
  }
  throw std::logic_error("unreachable formula kind");
}

Elem eval_algebraic(const ApeModel& M, const Formula& f) {
  Evaluator ev(M);
  return ev.eval(f);
}

}  // namespace pdel
