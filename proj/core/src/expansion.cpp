#include "epitab/expansion.hpp"

#include <algorithm>
#include <unordered_set>

namespace epitab {

bool ExpansionContext::patently_inconsistent(const FormulaSet& set) const {
  for (FormulaId f : set) {
    const FormulaNode& n = arena_.node(f);
    if (n.kind == Kind::Not && set.contains(n.left)) return true;
  }
  return false;
}

std::optional<ExpansionContext::Obligation> ExpansionContext::obligation_for(
    FormulaId f, const FormulaSet& set, bool with_witness_rule) {
  const FormulaNode& n = arena_.node(f);
  auto forced = [](std::vector<FormulaId> add) {
    Obligation ob;
    ob.alternatives.push_back(std::move(add));
    return ob;
  };

  switch (n.kind) {
    case Kind::Atom:
      return std::nullopt;

    case Kind::And: {
      std::vector<FormulaId> missing;
      if (!set.contains(n.left)) missing.push_back(n.left);
      if (!set.contains(n.right)) missing.push_back(n.right);
      if (missing.empty()) return std::nullopt;
      return forced(std::move(missing));
    }

    case Kind::Dist: {
      std::vector<FormulaId> missing;
      if (!set.contains(n.left)) missing.push_back(n.left);
      for (Coalition sup : universe_.supersets_of(n.coalition)) {
        FormulaId g = arena_.dist(sup, n.left);
        if (!set.contains(g)) missing.push_back(g);
      }
      if (missing.empty()) return std::nullopt;
      return forced(std::move(missing));
    }

    case Kind::Comm: {
      std::vector<FormulaId> missing;
      for (int a : n.coalition.agents()) {
        FormulaId g = arena_.dist(Coalition::singleton(a),
                                  arena_.conjunction(n.left, f));
        if (!set.contains(g)) missing.push_back(g);
      }
      if (missing.empty()) return std::nullopt;
      return forced(std::move(missing));
    }

    case Kind::Not: {
      const FormulaNode& c = arena_.node(n.left);
      switch (c.kind) {
        case Kind::Atom:
          return std::nullopt;

        case Kind::Not:  // ~~φ ⇒ φ
          if (set.contains(c.left)) return std::nullopt;
          return forced({c.left});

        case Kind::And: {  // ~(φ&ψ) ⇒ ~φ or ~ψ
          FormulaId nl = arena_.single_negation(c.left);
          FormulaId nr = arena_.single_negation(c.right);
          if (set.contains(nl) || set.contains(nr)) return std::nullopt;
          Obligation ob;
          ob.alternatives.push_back({nl});
          if (nr != nl) ob.alternatives.push_back({nr});
          return ob;
        }

        case Kind::Comm: {  // ~C{A}φ ⇒ ~D{a}(φ & C{A}φ) for some a ∈ A
          std::vector<FormulaId> choices;
          for (int a : c.coalition.agents()) {
            FormulaId g = arena_.negation(
                arena_.dist(Coalition::singleton(a),
                            arena_.conjunction(c.left, n.left)));
            if (set.contains(g)) return std::nullopt;
            choices.push_back(g);
          }
          Obligation ob;
          for (FormulaId g : choices) ob.alternatives.push_back({g});
          return ob;
        }

        case Kind::Dist: {
          // ~D{A}~D{B}φ with B ⊆ A forces D{B}φ; then the witness-profile
          // condition for the mark itself.
          const FormulaNode& inner = arena_.node(c.left);
          if (inner.kind == Kind::Not &&
              arena_.kind(inner.left) == Kind::Dist) {
            const FormulaNode& dd = arena_.node(inner.left);
            if (dd.coalition.subset_of(c.coalition) &&
                !set.contains(inner.left))
              return forced({inner.left});
          }
          if (with_witness_rule) {
            const auto& profiles = witness_profiles(f);
            for (const FormulaSet& p : profiles)
              if (p.subset_of(set)) return std::nullopt;
            Obligation ob;
            for (const FormulaSet& p : profiles)
              ob.alternatives.push_back(p.items());
            return ob;
          }
          return std::nullopt;
        }
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::optional<ExpansionContext::Obligation> ExpansionContext::first_unsatisfied(
    const FormulaSet& set, bool with_witness_rule) {
  for (FormulaId f : set) {
    auto ob = obligation_for(f, set, with_witness_rule);
    if (ob) return ob;
  }
  return std::nullopt;
}

bool ExpansionContext::is_fully_expanded(const FormulaSet& set) {
  return !first_unsatisfied(set, /*with_witness_rule=*/true).has_value();
}

std::vector<FormulaSet> ExpansionContext::extensions_impl(
    const FormulaSet& base, bool with_witness_rule) {
  std::vector<FormulaSet> fixpoints;
  std::vector<FormulaSet> stack{base};
  std::unordered_set<FormulaSet, FormulaSetHash> seen;

  while (!stack.empty()) {
    FormulaSet cur = std::move(stack.back());
    stack.pop_back();
    while (true) {
      auto ob = first_unsatisfied(cur, with_witness_rule);
      if (!ob) {
        if (seen.insert(cur).second) fixpoints.push_back(std::move(cur));
        break;
      }
      if (ob->alternatives.size() == 1) {
        for (FormulaId f : ob->alternatives[0]) cur.insert(f);
        continue;
      }
      // Push in reverse so the first alternative is explored first.
      for (auto it = ob->alternatives.rbegin(); it != ob->alternatives.rend();
           ++it) {
        FormulaSet branch = cur;
        for (FormulaId f : *it) branch.insert(f);
        if (!seen.contains(branch)) stack.push_back(std::move(branch));
      }
      break;
    }
  }

  // Keep only subset-minimal fixpoints.
  std::vector<FormulaSet> minimal;
  for (const FormulaSet& a : fixpoints) {
    bool dominated = false;
    for (const FormulaSet& b : fixpoints) {
      if (&a != &b && b.subset_of(a) && !(a == b)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(a);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

std::vector<FormulaSet> ExpansionContext::minimal_extensions(
    const FormulaSet& base) {
  return extensions_impl(base, /*with_witness_rule=*/true);
}

const std::vector<FormulaSet>& ExpansionContext::witness_profiles(
    FormulaId mark) {
  auto it = profile_memo_.find(mark);
  if (it != profile_memo_.end()) return it->second;

  const FormulaNode& n = arena_.node(mark);        // ~D{A}φ
  const FormulaNode& d = arena_.node(n.left);
  Coalition scope = d.coalition;
  FormulaId seed = arena_.single_negation(d.left);

  // Profiles come from witness-rule-free saturations; this keeps the
  // computation well-founded while remaining sound (any witness state
  // still satisfies one of these extensions).
  std::vector<FormulaSet> exts = extensions_impl({seed}, false);

  std::vector<FormulaSet> profiles;
  for (const FormulaSet& e : exts) {
    FormulaSet p;
    for (FormulaId g : e) {
      const FormulaNode& gn = arena_.node(g);
      if (gn.kind == Kind::Dist && gn.coalition.subset_of(scope)) p.insert(g);
    }
    if (std::find(profiles.begin(), profiles.end(), p) == profiles.end())
      profiles.push_back(std::move(p));
  }
  // Drop profiles that contain another one: the smaller commitment already
  // discharges the obligation.
  std::vector<FormulaSet> minimal;
  for (const FormulaSet& a : profiles) {
    bool dominated = false;
    for (const FormulaSet& b : profiles)
      if (!(a == b) && b.subset_of(a)) {
        dominated = true;
        break;
      }
    if (!dominated) minimal.push_back(a);
  }
  std::sort(minimal.begin(), minimal.end());
  return profile_memo_.emplace(mark, std::move(minimal)).first->second;
}

}  // namespace epitab
