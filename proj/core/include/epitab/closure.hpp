#ifndef EPITAB_CLOSURE_HPP
#define EPITAB_CLOSURE_HPP

#include "epitab/agents.hpp"
#include "epitab/formula.hpp"
#include "epitab/formula_set.hpp"

namespace epitab {

// Least set containing θ that is closed under subformulas and under
//   D{A}φ  ∈ cl  ⇒  D{A'}φ ∈ cl        for every A ⊆ A' ⊆ Σ
//   C{A}φ  ∈ cl  ⇒  D{a}(φ & C{A}φ) ∈ cl  for every a ∈ A
FormulaSet closure(FormulaId theta, FormulaArena& arena,
                   const AgentUniverse& universe);

// closure(θ) plus the single negation of each of its members. Every label
// in a tableau for θ stays inside this set; it is finite for every θ.
FormulaSet extended_closure(FormulaId theta, FormulaArena& arena,
                            const AgentUniverse& universe);

}  // namespace epitab

#endif
