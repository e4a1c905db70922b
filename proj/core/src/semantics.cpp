#include "epitab/semantics.hpp"

#include <algorithm>
#include <deque>

namespace epitab {

std::vector<std::uint32_t> a_reachable(const PseudoModel& m, std::uint32_t s,
                                       Coalition a) {
  std::vector<char> seen(m.num_states(), 0);
  std::deque<std::uint32_t> queue{s};
  seen[s] = 1;
  std::vector<std::uint32_t> out;
  while (!queue.empty()) {
    std::uint32_t cur = queue.front();
    queue.pop_front();
    out.push_back(cur);
    for (int agent : a.agents()) {
      for (std::uint32_t next : m.neighbors(Coalition::singleton(agent), cur)) {
        if (!seen[next]) {
          seen[next] = 1;
          queue.push_back(next);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Evaluator::atom_true(std::uint32_t state, std::uint32_t atom_id) {
  return model_.has_atom(state, arena_.atom_name(atom_id));
}

bool Evaluator::satisfies(std::uint32_t state, FormulaId f) {
  if (state >= model_.num_states())
    throw std::invalid_argument("satisfies: unknown state");
  std::uint64_t key = (static_cast<std::uint64_t>(state) << 32) | f;
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  const FormulaNode& n = arena_.node(f);
  bool value = false;
  switch (n.kind) {
    case Kind::Atom:
      value = atom_true(state, n.atom);
      break;
    case Kind::Not:
      value = !satisfies(state, n.left);
      break;
    case Kind::And:
      value = satisfies(state, n.left) && satisfies(state, n.right);
      break;
    case Kind::Dist: {
      if (!n.coalition.subset_of(model_.universe().full()))
        throw std::invalid_argument("satisfies: coalition outside the universe");
      value = true;
      for (std::uint32_t t : model_.neighbors(n.coalition, state))
        if (!satisfies(t, n.left)) {
          value = false;
          break;
        }
      break;
    }
    case Kind::Comm: {
      if (!n.coalition.subset_of(model_.universe().full()))
        throw std::invalid_argument("satisfies: coalition outside the universe");
      value = true;
      for (std::uint32_t t : a_reachable(model_, state, n.coalition))
        if (!satisfies(t, n.left)) {
          value = false;
          break;
        }
      break;
    }
  }
  memo_.emplace(key, value);
  return value;
}

bool satisfies(const PseudoModel& m, std::uint32_t state, FormulaId f,
               const FormulaArena& arena) {
  Evaluator eval(m, arena);
  return eval.satisfies(state, f);
}

namespace {

bool contains_pair(const PseudoModel& m, Coalition c, std::uint32_t s,
                   std::uint32_t t) {
  const auto& row = m.neighbors(c, s);
  return std::binary_search(row.begin(), row.end(), t);
}

}  // namespace

FrameReport validate_frame(const PseudoModel& m) {
  FrameReport report;
  const AgentUniverse& u = m.universe();
  const std::uint32_t n = m.num_states();

  for (Coalition c : u.all_coalitions()) {
    for (std::uint32_t s = 0; s < n; ++s) {
      if (!contains_pair(m, c, s, s)) {
        report.cls = FrameClass::Invalid;
        report.detail = "R^D_{" + u.coalition_name(c) +
                        "} is not reflexive at state " + std::to_string(s);
        return report;
      }
      for (std::uint32_t t : m.neighbors(c, s)) {
        if (!contains_pair(m, c, t, s)) {
          report.cls = FrameClass::Invalid;
          report.detail = "R^D_{" + u.coalition_name(c) +
                          "} is not symmetric on (" + std::to_string(s) + "," +
                          std::to_string(t) + ")";
          return report;
        }
        for (std::uint32_t v : m.neighbors(c, t)) {
          if (!contains_pair(m, c, s, v)) {
            report.cls = FrameClass::Invalid;
            report.detail = "R^D_{" + u.coalition_name(c) +
                            "} is not transitive via (" + std::to_string(s) +
                            "," + std::to_string(t) + "," + std::to_string(v) +
                            ")";
            return report;
          }
        }
      }
    }
  }

  // (††): R^D_A ⊆ R^D_B whenever B ⊆ A.
  for (Coalition a : u.all_coalitions()) {
    for (Coalition b : u.all_coalitions()) {
      if (!b.subset_of(a) || a == b) continue;
      for (std::uint32_t s = 0; s < n; ++s)
        for (std::uint32_t t : m.neighbors(a, s))
          if (!contains_pair(m, b, s, t)) {
            report.cls = FrameClass::Invalid;
            report.detail = "R^D_{" + u.coalition_name(a) + "} is not within R^D_{" +
                            u.coalition_name(b) + "} on (" + std::to_string(s) +
                            "," + std::to_string(t) + ")";
            return report;
          }
    }
  }

  // (†): R^D_A = ∩_{a∈A} R^D_a. The ⊆ half is (††); check ⊇.
  for (Coalition a : u.all_coalitions()) {
    if (a.count() < 2) continue;
    for (std::uint32_t s = 0; s < n; ++s)
      for (std::uint32_t t = 0; t < n; ++t) {
        bool in_all = true;
        for (int agent : a.agents())
          if (!contains_pair(m, Coalition::singleton(agent), s, t)) {
            in_all = false;
            break;
          }
        if (in_all && !contains_pair(m, a, s, t)) {
          report.cls = FrameClass::PseudoCMAEF;
          report.detail = "intersection condition fails for R^D_{" +
                          u.coalition_name(a) + "} on (" + std::to_string(s) +
                          "," + std::to_string(t) + ")";
          return report;
        }
      }
  }

  report.cls = FrameClass::CMAEF;
  return report;
}

std::vector<FormulaSet> extended_labeling(const PseudoModel& m,
                                          const FormulaSet& universe_of_formulas,
                                          const FormulaArena& arena) {
  std::vector<FormulaSet> out(m.num_states());
  Evaluator eval(m, arena);
  for (std::uint32_t s = 0; s < m.num_states(); ++s)
    for (FormulaId f : universe_of_formulas)
      if (eval.satisfies(s, f)) out[s].insert(f);
  return out;
}

}  // namespace epitab
