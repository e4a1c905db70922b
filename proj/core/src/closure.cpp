#include "epitab/closure.hpp"

namespace epitab {

FormulaSet closure(FormulaId theta, FormulaArena& arena,
                   const AgentUniverse& universe) {
  FormulaSet out;
  std::vector<FormulaId> work{theta};
  auto add = [&](FormulaId f) {
    if (out.insert(f)) work.push_back(f);
  };
  add(theta);
  while (!work.empty()) {
    FormulaId f = work.back();
    work.pop_back();
    const FormulaNode& n = arena.node(f);
    switch (n.kind) {
      case Kind::Atom:
        break;
      case Kind::Not:
        add(n.left);
        break;
      case Kind::And:
        add(n.left);
        add(n.right);
        break;
      case Kind::Dist:
        add(n.left);
        for (Coalition sup : universe.supersets_of(n.coalition))
          add(arena.dist(sup, n.left));
        break;
      case Kind::Comm:
        add(n.left);
        for (int a : n.coalition.agents())
          add(arena.dist(Coalition::singleton(a),
                         arena.conjunction(n.left, f)));
        break;
    }
  }
  return out;
}

FormulaSet extended_closure(FormulaId theta, FormulaArena& arena,
                            const AgentUniverse& universe) {
  FormulaSet cl = closure(theta, arena, universe);
  FormulaSet out = cl;
  for (FormulaId f : cl) out.insert(arena.single_negation(f));
  return out;
}

}  // namespace epitab
