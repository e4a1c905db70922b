#include "epitab/pseudo_model.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace epitab {

void PseudoModel::add_atom(std::uint32_t state, const std::string& name) {
  auto& row = labels_[state];
  auto it = std::lower_bound(row.begin(), row.end(), name);
  if (it == row.end() || *it != name) row.insert(it, name);
}

bool PseudoModel::has_atom(std::uint32_t state, const std::string& name) const {
  const auto& row = labels_[state];
  return std::binary_search(row.begin(), row.end(), name);
}

void PseudoModel::add_edge(Coalition c, std::uint32_t s, std::uint32_t t) {
  auto& adj = relations_[c];
  if (adj.empty()) adj.resize(labels_.size());
  auto& row = adj[s];
  auto it = std::lower_bound(row.begin(), row.end(), t);
  if (it == row.end() || *it != t) row.insert(it, t);
}

const std::vector<std::uint32_t>& PseudoModel::neighbors(
    Coalition c, std::uint32_t s) const {
  static const std::vector<std::uint32_t> kEmpty;
  auto it = relations_.find(c);
  if (it == relations_.end()) return kEmpty;
  return it->second[s];
}

std::string PseudoModel::to_json() const {
  nlohmann::ordered_json j;
  for (int i = 0; i < universe_.size(); ++i)
    j["agents"].push_back(universe_.name(i));
  j["states"] = nlohmann::ordered_json::array();
  for (std::uint32_t s = 0; s < num_states(); ++s) j["states"].push_back(s);
  nlohmann::ordered_json lab = nlohmann::ordered_json::object();
  for (std::uint32_t s = 0; s < num_states(); ++s)
    lab[std::to_string(s)] = labels_[s];
  j["labeling"] = std::move(lab);
  nlohmann::ordered_json rel = nlohmann::ordered_json::object();
  for (const auto& [coal, adj] : relations_) {
    nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
    for (std::uint32_t s = 0; s < adj.size(); ++s)
      for (std::uint32_t t : adj[s])
        pairs.push_back(nlohmann::ordered_json::array({s, t}));
    rel[universe_.coalition_name(coal)] = std::move(pairs);
  }
  j["relations"]["D"] = std::move(rel);
  j["root"] = root_;
  return j.dump(2) + "\n";
}

PseudoModel PseudoModel::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);

  std::vector<std::string> agents;
  for (const auto& a : j.at("agents")) agents.push_back(a.get<std::string>());
  AgentUniverse universe(agents);

  std::vector<std::uint32_t> ids;
  for (const auto& s : j.at("states")) ids.push_back(s.get<std::uint32_t>());
  // ids are required to be dense 0..n-1
  std::vector<std::uint32_t> sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  for (std::uint32_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i)
      throw std::runtime_error("model states must be 0..n-1");

  PseudoModel m(universe, static_cast<std::uint32_t>(ids.size()),
                j.at("root").get<std::uint32_t>());
  if (m.root() >= m.num_states())
    throw std::runtime_error("model root is not a state");

  for (const auto& [key, atoms] : j.at("labeling").items()) {
    std::uint32_t s = static_cast<std::uint32_t>(std::stoul(key));
    if (s >= m.num_states()) throw std::runtime_error("labeling of unknown state");
    for (const auto& atom : atoms) m.add_atom(s, atom.get<std::string>());
  }

  if (j.contains("relations") && j.at("relations").contains("D")) {
    for (const auto& [key, pairs] : j.at("relations").at("D").items()) {
      Coalition c;
      std::size_t start = 0;
      while (start <= key.size()) {
        std::size_t comma = key.find(',', start);
        std::string name = key.substr(
            start, comma == std::string::npos ? comma : comma - start);
        int id = universe.id_of(name);
        if (id < 0) throw std::runtime_error("unknown agent in coalition key: " + name);
        c = c.unite(Coalition::singleton(id));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      if (c.empty()) throw std::runtime_error("empty coalition key");
      for (const auto& pair : pairs) {
        std::uint32_t s = pair.at(0).get<std::uint32_t>();
        std::uint32_t t = pair.at(1).get<std::uint32_t>();
        if (s >= m.num_states() || t >= m.num_states())
          throw std::runtime_error("relation pair over unknown state");
        m.add_edge(c, s, t);
      }
    }
  }
  return m;
}

std::string PseudoModel::to_dot() const {
  std::ostringstream out;
  out << "digraph model {\n  rankdir=LR;\n";
  for (std::uint32_t s = 0; s < num_states(); ++s) {
    out << "  s" << s << " [shape=" << (s == root_ ? "doublecircle" : "circle")
        << ", label=\"s" << s << "\\n";
    for (std::size_t i = 0; i < labels_[s].size(); ++i) {
      if (i) out << ",";
      out << labels_[s][i];
    }
    out << "\"];\n";
  }
  for (const auto& [coal, adj] : relations_) {
    for (std::uint32_t s = 0; s < adj.size(); ++s)
      for (std::uint32_t t : adj[s])
        if (s != t)  // reflexive pairs only clutter the picture
          out << "  s" << s << " -> s" << t << " [label=\"D{"
              << universe_.coalition_name(coal) << "}\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace epitab
