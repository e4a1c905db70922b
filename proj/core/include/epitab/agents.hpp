#ifndef EPITAB_AGENTS_HPP
#define EPITAB_AGENTS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace epitab {

// Nonempty subset of the declared agent universe, kept as a bitmask over
// agent ids. Universes are capped at 16 agents, so 32 bits is plenty.
class Coalition {
 public:
  Coalition() = default;
  explicit Coalition(std::uint32_t bits) : bits_(bits) {}

  static Coalition singleton(int agent) { return Coalition(1u << agent); }

  bool empty() const { return bits_ == 0; }
  bool contains(int agent) const { return (bits_ >> agent) & 1u; }
  bool subset_of(Coalition other) const { return (bits_ & ~other.bits_) == 0; }

  Coalition unite(Coalition o) const { return Coalition(bits_ | o.bits_); }
  Coalition intersect(Coalition o) const { return Coalition(bits_ & o.bits_); }

  int count() const { return __builtin_popcount(bits_); }
  std::uint32_t bits() const { return bits_; }

  std::vector<int> agents() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b; b &= b - 1)
      out.push_back(__builtin_ctz(b));
    return out;
  }

  bool operator==(const Coalition&) const = default;
  bool operator<(const Coalition& o) const { return bits_ < o.bits_; }

 private:
  std::uint32_t bits_ = 0;
};

// The declared agent set Σ, fixed for the lifetime of a solver run.
class AgentUniverse {
 public:
  static constexpr int kMaxAgents = 16;

  explicit AgentUniverse(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int id) const { return names_[id]; }

  // -1 when unknown.
  int id_of(std::string_view name) const;

  Coalition full() const { return Coalition((1u << names_.size()) - 1u); }

  // Comma-joined names in lexicographic name order; used for display and
  // as the coalition key in model JSON.
  std::string coalition_name(Coalition c) const;

  // Every B with c ⊆ B ⊆ Σ, in increasing bitmask order.
  std::vector<Coalition> supersets_of(Coalition c) const;

  // Every nonempty B ⊆ Σ, in increasing bitmask order.
  std::vector<Coalition> all_coalitions() const;

 private:
  std::vector<std::string> names_;
};

}  // namespace epitab

#endif
