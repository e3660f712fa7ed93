#pragma once

#include "staircase/graph.hpp"
#include "staircase/refined_table.hpp"

#include <cstdint>
#include <stdexcept>

namespace staircase {

inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

/// Raised when exhaustive enumeration would visit more words than allowed.
class OracleOutOfRange : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// s_k(G) by backtracking over the vertices of build_graph(spec), pruning on
/// every edge whose endpoints are both assigned. Works from the graph's edge
/// list only; nothing here knows about column transitions.
BigInt enumerate_count(const FamilySpec& spec, int k, std::uint64_t budget = kDefaultOracleBudget);

/// s_k(G, i, j) for every column state. Two-row families only.
RefinedTable refined_oracle(const FamilySpec& spec, int k, std::uint64_t budget = kDefaultOracleBudget);

}  // namespace staircase
