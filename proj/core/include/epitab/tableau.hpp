#ifndef EPITAB_TABLEAU_HPP
#define EPITAB_TABLEAU_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "epitab/expansion.hpp"
#include "epitab/formula_set.hpp"

namespace epitab {

class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what)
      : std::runtime_error(what) {}
};

// Construction-phase graph: prestates expand into states (double edges),
// states demand witness prestates (single edges marked with ~D{A}φ).
class Pretableau {
 public:
  struct Prestate {
    FormulaSet label;
    std::vector<std::uint32_t> states;  // SR targets, creation order
  };
  struct State {
    FormulaSet label;
    bool patently_inconsistent = false;
    // DR edges: (mark, prestate index)
    std::vector<std::pair<FormulaId, std::uint32_t>> edges;
  };

  std::vector<Prestate> prestates;
  std::vector<State> states;

  std::size_t node_count() const { return prestates.size() + states.size(); }
  std::string to_dot(const FormulaArena& arena, const AgentUniverse& u) const;
};

enum class ElimRule { E1, E2, E3 };

struct EliminationEntry {
  std::uint32_t state;
  ElimRule rule;
  FormulaId witness;
};

// Marking result for one eventuality: level[s] is the round at which the
// alive state s was marked as realizing it (0 for seed states containing
// the negated target), or -1 when unrealized.
struct Marking {
  std::vector<int> level;
  bool marked(std::uint32_t s) const { return level[s] >= 0; }
};

class Tableau {
 public:
  struct Edge {
    FormulaId mark;
    std::uint32_t target;
  };
  struct State {
    FormulaSet label;
    std::vector<Edge> edges;
    bool alive = true;
  };

  std::vector<State> states;
  std::vector<EliminationEntry> log;
  std::vector<FormulaId> eventualities;  // order of first occurrence

  std::size_t alive_count() const;
  std::string to_dot(const FormulaArena& arena, const AgentUniverse& u) const;
  std::string log_to_json(const FormulaArena& arena,
                          const AgentUniverse& u) const;
};

// Alternates SR over fresh prestates with DR over fresh states until
// quiescence, starting from a single root prestate. Throws
// ResourceLimitError when more than max_nodes nodes get created.
Pretableau build_pretableau(ExpansionContext& ctx, const FormulaSet& root,
                            std::size_t max_nodes);

// Discharges all prestates: each marked edge Δ →χ Γ is replaced by edges
// Δ →χ Δ' for every Δ' ∈ states(Γ).
Tableau prestate_elimination(const Pretableau& p);

// Least fixpoint of: seed states whose label contains the single negation
// of φ (for eventuality ~C{A}φ), closed under edges marked ~D{B}ψ with
// B ⊆ A into marked alive states. Only alive states participate.
Marking mark_realized(const Tableau& t, FormulaId eventuality,
                      ExpansionContext& ctx);

// State elimination: one pass of the inconsistency rule, then witness-loss
// elimination to fixpoint, then cycles over the eventuality list of
// (unrealized-eventuality elimination; witness-loss fixpoint) until a full
// cycle removes nothing. Fills the elimination log and eventuality list.
void eliminate(Tableau& t, ExpansionContext& ctx);

// Re-applies a log to a fresh copy of the initial tableau; used to check
// that the log replays to the exact final alive set.
std::vector<bool> replay_log(const Tableau& initial,
                             const std::vector<EliminationEntry>& log);

}  // namespace epitab

#endif
