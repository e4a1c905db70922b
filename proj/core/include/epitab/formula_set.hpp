#ifndef EPITAB_FORMULA_SET_HPP
#define EPITAB_FORMULA_SET_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "epitab/formula.hpp"

namespace epitab {

// Canonical finite set of formulas: a sorted, duplicate-free id vector.
// Two sets with equal elements compare equal and hash equal, which makes
// them usable directly as tableau node keys.
class FormulaSet {
 public:
  FormulaSet() = default;
  FormulaSet(std::initializer_list<FormulaId> fs) {
    for (FormulaId f : fs) insert(f);
  }
  explicit FormulaSet(std::vector<FormulaId> fs) : items_(std::move(fs)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  }

  bool contains(FormulaId f) const {
    return std::binary_search(items_.begin(), items_.end(), f);
  }

  // Returns true if the element was new.
  bool insert(FormulaId f) {
    auto it = std::lower_bound(items_.begin(), items_.end(), f);
    if (it != items_.end() && *it == f) return false;
    items_.insert(it, f);
    return true;
  }

  bool insert_all(const FormulaSet& other) {
    bool changed = false;
    for (FormulaId f : other.items_) changed |= insert(f);
    return changed;
  }

  bool subset_of(const FormulaSet& other) const {
    return std::includes(other.items_.begin(), other.items_.end(),
                         items_.begin(), items_.end());
  }

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }

  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  const std::vector<FormulaId>& items() const { return items_; }

  bool operator==(const FormulaSet&) const = default;
  bool operator<(const FormulaSet& o) const { return items_ < o.items_; }

 private:
  std::vector<FormulaId> items_;
};

struct FormulaSetHash {
  std::size_t operator()(const FormulaSet& s) const {
    std::size_t h = 0x2545f4914f6cdd1dull;
    for (FormulaId f : s)
      h ^= f + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace epitab

#endif
