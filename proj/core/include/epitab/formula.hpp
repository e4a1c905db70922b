#ifndef EPITAB_FORMULA_HPP
#define EPITAB_FORMULA_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "epitab/agents.hpp"

namespace epitab {

using FormulaId = std::uint32_t;
inline constexpr FormulaId kNoFormula = 0xffffffffu;

enum class Kind : std::uint8_t {
  Atom,  // proposition
  Not,   // ~φ
  And,   // φ & ψ
  Dist,  // D{A} φ   distributed knowledge
  Comm,  // C{A} φ   common knowledge
};

struct FormulaNode {
  Kind kind;
  Coalition coalition;   // Dist/Comm only
  FormulaId left = kNoFormula;
  FormulaId right = kNoFormula;  // And only
  std::uint32_t atom = 0;        // Atom only
  std::uint32_t size = 1;        // AST node count
};

// Hash-consing factory: structurally equal formulas share one id, so
// structural equality is id equality and sets of formulas can be kept as
// sorted id vectors. Ids are dense and creation-ordered; children always
// precede parents.
class FormulaArena {
 public:
  FormulaArena() = default;
  FormulaArena(const FormulaArena&) = delete;
  FormulaArena& operator=(const FormulaArena&) = delete;

  FormulaId atom(std::string_view name);
  FormulaId negation(FormulaId f);
  FormulaId conjunction(FormulaId l, FormulaId r);
  FormulaId dist(Coalition a, FormulaId f);
  FormulaId comm(Coalition a, FormulaId f);

  // "Single negation": strips one leading Not if present, else wraps.
  FormulaId single_negation(FormulaId f);

  const FormulaNode& node(FormulaId f) const { return nodes_[f]; }
  Kind kind(FormulaId f) const { return nodes_[f].kind; }
  std::uint32_t formula_size(FormulaId f) const { return nodes_[f].size; }
  std::size_t node_count() const { return nodes_.size(); }

  const std::string& atom_name(std::uint32_t atom_id) const {
    return atom_names_[atom_id];
  }
  std::size_t atom_count() const { return atom_names_.size(); }

  // True iff f has the shape ~C{A}ψ (an epistemic eventuality).
  bool is_eventuality(FormulaId f) const;

  // Concrete syntax; parses back to the same id.
  std::string to_string(FormulaId f, const AgentUniverse& u) const;

 private:
  struct Key {
    Kind kind;
    std::uint32_t coalition;
    FormulaId left;
    FormulaId right;
    std::uint32_t atom;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const;
  };

  FormulaId intern(Kind kind, Coalition c, FormulaId l, FormulaId r,
                   std::uint32_t atom);
  void print(FormulaId f, const AgentUniverse& u, std::string& out) const;

  std::vector<FormulaNode> nodes_;
  std::unordered_map<Key, FormulaId, KeyHash> interned_;
  std::vector<std::string> atom_names_;
  std::unordered_map<std::string, std::uint32_t> atom_ids_;
};

}  // namespace epitab

#endif
