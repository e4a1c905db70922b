#ifndef EPITAB_SEMANTICS_HPP
#define EPITAB_SEMANTICS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "epitab/formula.hpp"
#include "epitab/formula_set.hpp"
#include "epitab/pseudo_model.hpp"

namespace epitab {

// States reachable from s by any sequence of R^D_a steps, a ∈ A,
// including s itself.
std::vector<std::uint32_t> a_reachable(const PseudoModel& m, std::uint32_t s,
                                       Coalition a);

// Memoizing model checker. C{A} is evaluated by on-the-fly reachability
// over the individual agent relations rather than via a materialized
// R^C_A; on (pseudo-)frames the two readings coincide.
class Evaluator {
 public:
  Evaluator(const PseudoModel& model, const FormulaArena& arena)
      : model_(model), arena_(arena) {}

  bool satisfies(std::uint32_t state, FormulaId f);

 private:
  bool atom_true(std::uint32_t state, std::uint32_t atom_id);

  const PseudoModel& model_;
  const FormulaArena& arena_;
  std::unordered_map<std::uint64_t, bool> memo_;
};

// Convenience wrapper for one-off checks.
bool satisfies(const PseudoModel& m, std::uint32_t state, FormulaId f,
               const FormulaArena& arena);

enum class FrameClass { CMAEF, PseudoCMAEF, Invalid };

struct FrameReport {
  FrameClass cls = FrameClass::Invalid;
  std::string detail;  // witness description when not a genuine frame
  bool at_least_pseudo() const { return cls != FrameClass::Invalid; }
};

// Classifies the model's relational structure:
//   CMAEF:        every R^D_A is an equivalence and equals ∩_{a∈A} R^D_a
//   pseudo-CMAEF: every R^D_A is an equivalence and R^D_A ⊆ R^D_B for B ⊆ A
//   invalid:      anything else, with a witness in `detail`
// Coalitions without a declared relation are treated as empty relations,
// which fail reflexivity and classify as invalid.
FrameReport validate_frame(const PseudoModel& m);

// Per state, the subset of `universe_of_formulas` true at that state.
std::vector<FormulaSet> extended_labeling(const PseudoModel& m,
                                          const FormulaSet& universe_of_formulas,
                                          const FormulaArena& arena);

}  // namespace epitab

#endif
