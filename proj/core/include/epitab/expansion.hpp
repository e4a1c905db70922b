#ifndef EPITAB_EXPANSION_HPP
#define EPITAB_EXPANSION_HPP

#include <optional>
#include <unordered_map>
#include <vector>

#include "epitab/agents.hpp"
#include "epitab/formula.hpp"
#include "epitab/formula_set.hpp"

namespace epitab {

// Saturation engine for fully expanded sets.
//
// A set Δ is fully expanded when every decomposition obligation of every
// member is met:
//   ~~φ ∈ Δ                ⇒ φ ∈ Δ
//   φ&ψ ∈ Δ                ⇒ φ, ψ ∈ Δ
//   ~(φ&ψ) ∈ Δ             ⇒ ~φ ∈ Δ or ~ψ ∈ Δ            (single negations)
//   D{A}φ ∈ Δ              ⇒ φ ∈ Δ and D{A'}φ ∈ Δ, A ⊆ A' ⊆ Σ
//   C{A}φ ∈ Δ              ⇒ D{a}(φ & C{A}φ) ∈ Δ, every a ∈ A
//   ~C{A}φ ∈ Δ             ⇒ ~D{a}(φ & C{A}φ) ∈ Δ, some a ∈ A
//   ~D{A}~D{B}φ ∈ Δ, B ⊆ A ⇒ D{B}φ ∈ Δ
// plus the witness-profile condition: for ~D{A}φ ∈ Δ there must be some
// minimal fully expanded extension E of {~φ} whose D-formulas over
// subcoalitions of A all belong to Δ. Every R^D_A successor satisfies
// one such E, and those D-formulas hold at the successor iff they hold
// here, so committing to a profile keeps source and witness labels in
// agreement.
class ExpansionContext {
 public:
  ExpansionContext(FormulaArena& arena, const AgentUniverse& universe)
      : arena_(arena), universe_(universe) {}

  FormulaArena& arena() { return arena_; }
  const AgentUniverse& universe() const { return universe_; }

  bool is_fully_expanded(const FormulaSet& set);

  // All minimal fully expanded extensions of base, canonically ordered.
  // Every fully expanded Δ with base ⊆ Δ contains at least one of them.
  std::vector<FormulaSet> minimal_extensions(const FormulaSet& base);

  // D-formulas over subcoalitions of the mark's coalition that are certain
  // at any witness of mark = ~D{A}φ: one FormulaSet per distinct minimal
  // profile of the minimal extensions of {~φ}. Memoized.
  const std::vector<FormulaSet>& witness_profiles(FormulaId mark);

  // Some member together with its own negation.
  bool patently_inconsistent(const FormulaSet& set) const;

 private:
  // One unmet obligation: alternative ways to discharge it, each a list of
  // formulas to add. A single alternative means a forced addition.
  struct Obligation {
    std::vector<std::vector<FormulaId>> alternatives;
  };

  std::optional<Obligation> first_unsatisfied(const FormulaSet& set,
                                              bool with_witness_rule);
  std::optional<Obligation> obligation_for(FormulaId f, const FormulaSet& set,
                                           bool with_witness_rule);
  std::vector<FormulaSet> extensions_impl(const FormulaSet& base,
                                          bool with_witness_rule);

  FormulaArena& arena_;
  const AgentUniverse& universe_;
  std::unordered_map<FormulaId, std::vector<FormulaSet>> profile_memo_;
};

}  // namespace epitab

#endif
