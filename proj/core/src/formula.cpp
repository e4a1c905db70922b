#include "epitab/formula.hpp"

namespace epitab {

std::size_t FormulaArena::KeyHash::operator()(const Key& k) const {
  std::size_t h = static_cast<std::size_t>(k.kind);
  auto mix = [&h](std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  mix(k.coalition);
  mix(k.left);
  mix(k.right);
  mix(k.atom);
  return h;
}

FormulaId FormulaArena::intern(Kind kind, Coalition c, FormulaId l,
                               FormulaId r, std::uint32_t atom) {
  Key key{kind, c.bits(), l, r, atom};
  auto it = interned_.find(key);
  if (it != interned_.end()) return it->second;

  FormulaNode n;
  n.kind = kind;
  n.coalition = c;
  n.left = l;
  n.right = r;
  n.atom = atom;
  n.size = 1;
  if (l != kNoFormula) n.size += nodes_[l].size;
  if (r != kNoFormula) n.size += nodes_[r].size;

  FormulaId id = static_cast<FormulaId>(nodes_.size());
  nodes_.push_back(n);
  interned_.emplace(key, id);
  return id;
}

FormulaId FormulaArena::atom(std::string_view name) {
  auto it = atom_ids_.find(std::string(name));
  std::uint32_t atom_id;
  if (it != atom_ids_.end()) {
    atom_id = it->second;
  } else {
    atom_id = static_cast<std::uint32_t>(atom_names_.size());
    atom_names_.emplace_back(name);
    atom_ids_.emplace(std::string(name), atom_id);
  }
  return intern(Kind::Atom, Coalition(), kNoFormula, kNoFormula, atom_id);
}

FormulaId FormulaArena::negation(FormulaId f) {
  return intern(Kind::Not, Coalition(), f, kNoFormula, 0);
}

FormulaId FormulaArena::conjunction(FormulaId l, FormulaId r) {
  return intern(Kind::And, Coalition(), l, r, 0);
}

FormulaId FormulaArena::dist(Coalition a, FormulaId f) {
  if (a.empty()) throw std::invalid_argument("empty coalition in D operator");
  return intern(Kind::Dist, a, f, kNoFormula, 0);
}

FormulaId FormulaArena::comm(Coalition a, FormulaId f) {
  if (a.empty()) throw std::invalid_argument("empty coalition in C operator");
  return intern(Kind::Comm, a, f, kNoFormula, 0);
}

FormulaId FormulaArena::single_negation(FormulaId f) {
  if (kind(f) == Kind::Not) return nodes_[f].left;
  return negation(f);
}

bool FormulaArena::is_eventuality(FormulaId f) const {
  return kind(f) == Kind::Not && kind(nodes_[f].left) == Kind::Comm;
}

void FormulaArena::print(FormulaId f, const AgentUniverse& u,
                         std::string& out) const {
  const FormulaNode& n = nodes_[f];
  // Only And binds looser than the prefix operators, so it is the only
  // child shape that needs parentheses under a prefix.
  auto child = [&](FormulaId c) {
    if (kind(c) == Kind::And) {
      out += '(';
      print(c, u, out);
      out += ')';
    } else {
      print(c, u, out);
    }
  };
  switch (n.kind) {
    case Kind::Atom:
      out += atom_names_[n.atom];
      break;
    case Kind::Not:
      out += '~';
      child(n.left);
      break;
    case Kind::Dist:
    case Kind::Comm: {
      out += n.kind == Kind::Dist ? 'D' : 'C';
      out += '{';
      bool first = true;
      for (int a : n.coalition.agents()) {
        if (!first) out += ',';
        out += u.name(a);
        first = false;
      }
      out += '}';
      child(n.left);
      break;
    }
    case Kind::And:
      // & is parsed left-associatively: a left And child needs no parens,
      // a right one does.
      print(n.left, u, out);
      out += " & ";
      if (kind(n.right) == Kind::And) {
        out += '(';
        print(n.right, u, out);
        out += ')';
      } else {
        print(n.right, u, out);
      }
      break;
  }
}

std::string FormulaArena::to_string(FormulaId f, const AgentUniverse& u) const {
  std::string out;
  print(f, u, out);
  return out;
}

}  // namespace epitab
