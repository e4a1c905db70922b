#include "epitab/agents.hpp"

#include <algorithm>

namespace epitab {

AgentUniverse::AgentUniverse(std::vector<std::string> names)
    : names_(std::move(names)) {
  if (names_.empty())
    throw std::invalid_argument("agent universe must be nonempty");
  if (static_cast<int>(names_.size()) > kMaxAgents)
    throw std::invalid_argument("agent universe is capped at 16 agents");
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j])
        throw std::invalid_argument("duplicate agent name: " + names_[i]);
}

int AgentUniverse::id_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

std::string AgentUniverse::coalition_name(Coalition c) const {
  std::vector<std::string> parts;
  for (int a : c.agents()) parts.push_back(names_[a]);
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += parts[i];
  }
  return out;
}

std::vector<Coalition> AgentUniverse::supersets_of(Coalition c) const {
  const std::uint32_t base = c.bits();
  const std::uint32_t free = full().bits() & ~base;
  std::vector<Coalition> out;
  // Enumerate subsets of the complement, OR them onto the base.
  std::uint32_t sub = 0;
  while (true) {
    out.push_back(Coalition(base | sub));
    if (sub == free) break;
    sub = (sub - free) & free;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Coalition> AgentUniverse::all_coalitions() const {
  std::vector<Coalition> out;
  const std::uint32_t top = full().bits();
  for (std::uint32_t b = 1; b <= top; ++b) out.push_back(Coalition(b));
  return out;
}

}  // namespace epitab
