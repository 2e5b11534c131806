#pragma once

#include <algorithm>
#include <vector>

#include "fincat/category.hpp"

namespace fincat {

/// Per-object sets of "positive" Hermitian fixed points, each sorted by
/// morphism identifier. Validation lives with the Hermitian completion.
struct PositivityNotion {
  std::vector<std::vector<MorId>> sets;

  bool contains(ObjId c, MorId h) const { return std::binary_search(sets[c].begin(), sets[c].end(), h); }
  std::size_t total() const {
    std::size_t n = 0;
    for (const auto& s : sets) n += s.size();
    return n;
  }
  friend bool operator==(const PositivityNotion&, const PositivityNotion&) = default;
};

}  // namespace fincat
