#ifndef EPITAB_PSEUDO_MODEL_HPP
#define EPITAB_PSEUDO_MODEL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "epitab/agents.hpp"

namespace epitab {

// Finite Kripke structure with one binary relation per coalition and an
// atomic labeling. The C-relations are never materialized; they are
// derived from the D-relations on demand (see semantics.hpp).
class PseudoModel {
 public:
  PseudoModel(AgentUniverse universe, std::uint32_t num_states,
              std::uint32_t root)
      : universe_(std::move(universe)),
        labels_(num_states),
        root_(root) {}

  const AgentUniverse& universe() const { return universe_; }
  std::uint32_t num_states() const {
    return static_cast<std::uint32_t>(labels_.size());
  }
  std::uint32_t root() const { return root_; }

  void add_atom(std::uint32_t state, const std::string& name);
  bool has_atom(std::uint32_t state, const std::string& name) const;
  const std::vector<std::string>& label(std::uint32_t state) const {
    return labels_[state];
  }

  void add_edge(Coalition c, std::uint32_t s, std::uint32_t t);
  bool has_relation(Coalition c) const { return relations_.contains(c); }
  // Empty when the coalition has no declared relation.
  const std::vector<std::uint32_t>& neighbors(Coalition c,
                                              std::uint32_t s) const;
  const std::map<Coalition, std::vector<std::vector<std::uint32_t>>>&
  relations() const {
    return relations_;
  }

  // Schema: {"agents":[...], "states":[...], "labeling":{id:[atoms]},
  //          "relations":{"D":{"a,b":[[s,t],...]}}, "root": id}
  std::string to_json() const;
  static PseudoModel from_json(const std::string& text);

  std::string to_dot() const;

 private:
  AgentUniverse universe_;
  std::vector<std::vector<std::string>> labels_;  // sorted atom names
  std::map<Coalition, std::vector<std::vector<std::uint32_t>>> relations_;
  std::uint32_t root_;
};

}  // namespace epitab

#endif
