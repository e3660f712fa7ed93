#pragma once

#include "staircase/graph.hpp"

#include <map>

namespace staircase {

/// Word counts split by first column, s_k(G, i, j).
struct RefinedTable {
  int k = 0;
  std::map<ColumnState, BigInt> entries;

  BigInt total() const {
    BigInt sum = 0;
    for (const auto& [state, count] : entries) sum += count;
    return sum;
  }

  /// Zero for (i, j) outside the state set, so recurrences can index past the border.
  BigInt at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? BigInt(0) : it->second;
  }

  bool operator==(const RefinedTable&) const = default;
};

}  // namespace staircase
