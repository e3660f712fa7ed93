#pragma once

#include "staircase/numeric.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace staircase {

enum class Family { Path, Cycle, Grid2xN, RT2xN, KG2xN };

inline constexpr Family kLadderFamilies[] = {Family::Grid2xN, Family::RT2xN, Family::KG2xN};

/// Short CLI name: path, cycle, grid, rt, kg.
std::string_view family_name(Family f);
/// Conventional notation, e.g. "P_2 x P_n".
std::string_view family_notation(Family f);
std::optional<Family> parse_family(std::string_view name);

/// True for the three two-row families.
constexpr bool is_ladder(Family f) { return f == Family::Grid2xN || f == Family::RT2xN || f == Family::KG2xN; }
constexpr int row_count(Family f) { return is_ladder(f) ? 2 : 1; }

struct FamilySpec {
  Family family;
  int n;

  /// Throws std::invalid_argument when n is out of range for the family.
  void validate() const;
};

/// 1-based (row, col); row is always 1 for Path and Cycle.
struct Vertex {
  int row;
  int col;
  auto operator<=>(const Vertex&) const = default;
};

struct Edge {
  Vertex a;
  Vertex b;
  auto operator<=>(const Edge&) const = default;
};

class GraphInstance {
 public:
  GraphInstance(FamilySpec spec, std::vector<Vertex> vertices, std::vector<Edge> edges);

  const FamilySpec& spec() const { return spec_; }
  int rows() const { return row_count(spec_.family); }
  int columns() const { return spec_.n; }
  /// Row-major by column: (1,1),(2,1),(1,2),(2,2),...
  const std::vector<Vertex>& vertices() const { return vertices_; }
  /// Sorted, each unordered pair stored once with a < b.
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(Vertex a, Vertex b) const;
  /// Position of v in vertices(); throws if v is not a vertex.
  std::size_t index_of(Vertex v) const;

 private:
  FamilySpec spec_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
};

/// A (G,k)-word stored as a rows x n grid; entry (r-1, c-1) is w((r,c)).
struct WordAssignment {
  int k;
  Eigen::MatrixXi values;

  int at(Vertex v) const { return values(v.row - 1, v.col - 1); }
  /// Same grid with every value v replaced by k+1-v.
  WordAssignment reflected() const;
};

/// Column of a two-row word, top over bottom.
struct ColumnState {
  int top;
  int bottom;
  auto operator<=>(const ColumnState&) const = default;
};

std::string to_string(ColumnState s);

GraphInstance build_graph(const FamilySpec& spec);

/// True iff |w(x) - w(y)| <= 1 on every edge. Throws std::invalid_argument
/// when the grid shape or the value range does not match the graph.
bool staircase_check(const GraphInstance& g, const WordAssignment& w);

/// All (top, bottom) in [k]^2 with |top - bottom| <= 1, lexicographic.
std::vector<ColumnState> column_states(int k);

}  // namespace staircase
