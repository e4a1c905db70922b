#include "epitab/tableau.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace epitab {

namespace {

std::string escape_dot(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string label_text(const FormulaSet& label, const FormulaArena& arena,
                       const AgentUniverse& u) {
  std::string out;
  for (FormulaId f : label) {
    if (!out.empty()) out += "\\n";
    out += escape_dot(arena.to_string(f, u));
  }
  return out;
}

}  // namespace

std::string Pretableau::to_dot(const FormulaArena& arena,
                               const AgentUniverse& u) const {
  std::ostringstream out;
  out << "digraph pretableau {\n  node [fontsize=10];\n";
  for (std::uint32_t i = 0; i < prestates.size(); ++i)
    out << "  p" << i << " [shape=box, style=dashed, label=\"G" << i << "\\n"
        << label_text(prestates[i].label, arena, u) << "\"];\n";
  for (std::uint32_t i = 0; i < states.size(); ++i)
    out << "  s" << i << " [shape=box, label=\"D" << i << "\\n"
        << label_text(states[i].label, arena, u) << "\"];\n";
  for (std::uint32_t i = 0; i < prestates.size(); ++i)
    for (std::uint32_t s : prestates[i].states)
      out << "  p" << i << " -> s" << s
          << " [style=bold, color=\"black:black\", arrowhead=normal];\n";
  for (std::uint32_t i = 0; i < states.size(); ++i)
    for (const auto& [mark, target] : states[i].edges)
      out << "  s" << i << " -> p" << target << " [label=\""
          << escape_dot(arena.to_string(mark, u)) << "\"];\n";
  out << "}\n";
  return out.str();
}

std::size_t Tableau::alive_count() const {
  std::size_t n = 0;
  for (const State& s : states) n += s.alive;
  return n;
}

std::string Tableau::to_dot(const FormulaArena& arena,
                            const AgentUniverse& u) const {
  std::ostringstream out;
  out << "digraph tableau {\n  node [fontsize=10];\n";
  for (std::uint32_t i = 0; i < states.size(); ++i) {
    out << "  s" << i << " [shape=box";
    if (!states[i].alive) out << ", style=filled, fillcolor=gray80";
    out << ", label=\"D" << i << "\\n" << label_text(states[i].label, arena, u)
        << "\"];\n";
  }
  for (const EliminationEntry& e : log) {
    const char* rule = e.rule == ElimRule::E1   ? "E1"
                       : e.rule == ElimRule::E2 ? "E2"
                                                : "E3";
    out << "  s" << e.state << " [xlabel=\"" << rule << ": "
        << escape_dot(arena.to_string(e.witness, u)) << "\"];\n";
  }
  for (std::uint32_t i = 0; i < states.size(); ++i)
    for (const Edge& e : states[i].edges)
      out << "  s" << i << " -> s" << e.target << " [label=\""
          << escape_dot(arena.to_string(e.mark, u)) << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string Tableau::log_to_json(const FormulaArena& arena,
                                 const AgentUniverse& u) const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const EliminationEntry& e : log) {
    nlohmann::ordered_json item;
    item["state"] = e.state;
    item["rule"] = e.rule == ElimRule::E1   ? "E1"
                   : e.rule == ElimRule::E2 ? "E2"
                                            : "E3";
    item["witness"] = arena.to_string(e.witness, u);
    arr.push_back(std::move(item));
  }
  return arr.dump(2) + "\n";
}

Pretableau build_pretableau(ExpansionContext& ctx, const FormulaSet& root,
                            std::size_t max_nodes) {
  FormulaArena& arena = ctx.arena();
  Pretableau p;
  std::unordered_map<FormulaSet, std::uint32_t, FormulaSetHash> prestate_ids;
  std::unordered_map<FormulaSet, std::uint32_t, FormulaSetHash> state_ids;

  auto check_cap = [&] {
    if (p.node_count() > max_nodes)
      throw ResourceLimitError("node cap exceeded (" +
                               std::to_string(max_nodes) + " nodes)");
  };

  auto intern_prestate = [&](FormulaSet label) -> std::uint32_t {
    auto it = prestate_ids.find(label);
    if (it != prestate_ids.end()) return it->second;
    std::uint32_t id = static_cast<std::uint32_t>(p.prestates.size());
    p.prestates.push_back({std::move(label), {}});
    prestate_ids.emplace(p.prestates.back().label, id);
    check_cap();
    return id;
  };

  auto intern_state = [&](const FormulaSet& label) -> std::uint32_t {
    auto it = state_ids.find(label);
    if (it != state_ids.end()) return it->second;
    std::uint32_t id = static_cast<std::uint32_t>(p.states.size());
    Pretableau::State s;
    s.label = label;
    s.patently_inconsistent = ctx.patently_inconsistent(label);
    p.states.push_back(std::move(s));
    state_ids.emplace(label, id);
    check_cap();
    return id;
  };

  intern_prestate(root);
  std::size_t next_prestate = 0;
  std::size_t next_state = 0;

  while (next_prestate < p.prestates.size() || next_state < p.states.size()) {
    // SR over prestates created so far.
    for (; next_prestate < p.prestates.size(); ++next_prestate) {
      // minimal_extensions may intern new formulas; label copies stay valid.
      FormulaSet label = p.prestates[next_prestate].label;
      for (const FormulaSet& ext : ctx.minimal_extensions(label)) {
        std::uint32_t s = intern_state(ext);
        p.prestates[next_prestate].states.push_back(s);
      }
    }
    // DR over states created so far.
    for (; next_state < p.states.size(); ++next_state) {
      if (p.states[next_state].patently_inconsistent) continue;
      FormulaSet label = p.states[next_state].label;
      for (FormulaId f : label) {
        const FormulaNode& n = arena.node(f);
        if (n.kind != Kind::Not || arena.kind(n.left) != Kind::Dist) continue;
        const FormulaNode& d = arena.node(n.left);
        Coalition a = d.coalition;

        FormulaSet target;
        target.insert(arena.single_negation(d.left));
        for (FormulaId g : label) {
          if (g == f) continue;  // the mark itself stays behind
          const FormulaNode& gn = arena.node(g);
          if (gn.kind == Kind::Dist && gn.coalition.subset_of(a)) {
            target.insert(g);
          } else if (gn.kind == Kind::Not &&
                     arena.kind(gn.left) == Kind::Dist &&
                     arena.node(gn.left).coalition.subset_of(a)) {
            target.insert(g);
          }
        }
        std::uint32_t pre = intern_prestate(std::move(target));
        p.states[next_state].edges.emplace_back(f, pre);
      }
    }
  }
  return p;
}

Tableau prestate_elimination(const Pretableau& p) {
  Tableau t;
  t.states.resize(p.states.size());
  for (std::uint32_t i = 0; i < p.states.size(); ++i) {
    t.states[i].label = p.states[i].label;
    for (const auto& [mark, pre] : p.states[i].edges)
      for (std::uint32_t target : p.prestates[pre].states)
        t.states[i].edges.push_back({mark, target});
    auto& edges = t.states[i].edges;
    std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
      return a.mark != b.mark ? a.mark < b.mark : a.target < b.target;
    });
    edges.erase(std::unique(edges.begin(), edges.end(),
                            [](const auto& a, const auto& b) {
                              return a.mark == b.mark && a.target == b.target;
                            }),
                edges.end());
  }
  return t;
}

Marking mark_realized(const Tableau& t, FormulaId eventuality,
                      ExpansionContext& ctx) {
  FormulaArena& arena = ctx.arena();
  const FormulaNode& n = arena.node(eventuality);  // ~C{A}φ
  const FormulaNode& c = arena.node(n.left);
  Coalition scope = c.coalition;
  FormulaId target = arena.single_negation(c.left);

  Marking m;
  m.level.assign(t.states.size(), -1);
  for (std::uint32_t s = 0; s < t.states.size(); ++s)
    if (t.states[s].alive && t.states[s].label.contains(target)) m.level[s] = 0;

  bool changed = true;
  int round = 0;
  while (changed) {
    changed = false;
    ++round;
    for (std::uint32_t s = 0; s < t.states.size(); ++s) {
      if (!t.states[s].alive || m.level[s] >= 0) continue;
      for (const Tableau::Edge& e : t.states[s].edges) {
        if (!t.states[e.target].alive || m.level[e.target] < 0 ||
            m.level[e.target] >= round)
          continue;
        const FormulaNode& mark = arena.node(e.mark);
        if (arena.node(mark.left).coalition.subset_of(scope)) {
          m.level[s] = round;
          changed = true;
          break;
        }
      }
    }
  }
  return m;
}

namespace {

// Removes alive states that contain some ~D{A}φ whose marked successors
// are all dead. Runs to fixpoint.
bool witness_loss_fixpoint(Tableau& t, ExpansionContext& ctx) {
  FormulaArena& arena = ctx.arena();
  bool removed_any = false;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint32_t s = 0; s < t.states.size(); ++s) {
      if (!t.states[s].alive) continue;
      for (FormulaId f : t.states[s].label) {
        const FormulaNode& n = arena.node(f);
        if (n.kind != Kind::Not || arena.kind(n.left) != Kind::Dist) continue;
        bool any_alive = false;
        for (const Tableau::Edge& e : t.states[s].edges)
          if (e.mark == f && t.states[e.target].alive) {
            any_alive = true;
            break;
          }
        if (!any_alive) {
          t.states[s].alive = false;
          t.log.push_back({s, ElimRule::E2, f});
          removed_any = true;
          changed = true;
          break;
        }
      }
    }
  }
  return removed_any;
}

}  // namespace

void eliminate(Tableau& t, ExpansionContext& ctx) {
  FormulaArena& arena = ctx.arena();

  // Patent inconsistencies, once.
  for (std::uint32_t s = 0; s < t.states.size(); ++s) {
    if (!ctx.patently_inconsistent(t.states[s].label)) continue;
    FormulaId witness = kNoFormula;
    for (FormulaId f : t.states[s].label) {
      const FormulaNode& n = arena.node(f);
      if (n.kind == Kind::Not && t.states[s].label.contains(n.left)) {
        witness = f;
        break;
      }
    }
    t.states[s].alive = false;
    t.log.push_back({s, ElimRule::E1, witness});
  }

  witness_loss_fixpoint(t, ctx);

  // Eventualities present in the surviving tableau, in order of first
  // occurrence scanning states by index.
  for (const Tableau::State& s : t.states) {
    if (!s.alive) continue;
    for (FormulaId f : s.label)
      if (arena.is_eventuality(f) &&
          std::find(t.eventualities.begin(), t.eventualities.end(), f) ==
              t.eventualities.end())
        t.eventualities.push_back(f);
  }

  if (t.eventualities.empty()) return;

  bool removed_in_cycle = true;
  while (removed_in_cycle) {
    removed_in_cycle = false;
    for (FormulaId ev : t.eventualities) {
      Marking m = mark_realized(t, ev, ctx);
      for (std::uint32_t s = 0; s < t.states.size(); ++s) {
        if (!t.states[s].alive || !t.states[s].label.contains(ev)) continue;
        if (!m.marked(s)) {
          t.states[s].alive = false;
          t.log.push_back({s, ElimRule::E3, ev});
          removed_in_cycle = true;
        }
      }
      removed_in_cycle |= witness_loss_fixpoint(t, ctx);
    }
  }
}

std::vector<bool> replay_log(const Tableau& initial,
                             const std::vector<EliminationEntry>& log) {
  std::vector<bool> alive(initial.states.size(), true);
  for (const EliminationEntry& e : log) alive[e.state] = false;
  return alive;
}

}  // namespace epitab
