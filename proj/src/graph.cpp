#include "staircase/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace staircase {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Grid2xN: return "grid";
    case Family::RT2xN: return "rt";
    case Family::KG2xN: return "kg";
  }
  return "?";
}

std::string_view family_notation(Family f) {
  switch (f) {
    case Family::Path: return "P_n";
    case Family::Cycle: return "C_n";
    case Family::Grid2xN: return "P_2 x P_n";
    case Family::RT2xN: return "RT_{2,n}";
    case Family::KG2xN: return "KG_{2,n}";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::Path, Family::Cycle, Family::Grid2xN, Family::RT2xN, Family::KG2xN}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

void FamilySpec::validate() const {
  if (n < 1) throw std::invalid_argument("n must be at least 1, got " + std::to_string(n));
  if (family == Family::Cycle && n < 3)
    throw std::invalid_argument("a cycle needs at least 3 vertices, got n = " + std::to_string(n));
}

GraphInstance::GraphInstance(FamilySpec spec, std::vector<Vertex> vertices, std::vector<Edge> edges)
    : spec_(spec), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (auto& e : edges_) {
    if (e.b < e.a) std::swap(e.a, e.b);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool GraphInstance::has_edge(Vertex a, Vertex b) const {
  if (b < a) std::swap(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
}

std::size_t GraphInstance::index_of(Vertex v) const {
  // vertices are column-major over (col, row)
  if (v.col < 1 || v.col > columns() || v.row < 1 || v.row > rows())
    throw std::out_of_range("vertex not in graph");
  return static_cast<std::size_t>((v.col - 1) * rows() + (v.row - 1));
}

WordAssignment WordAssignment::reflected() const {
  WordAssignment r{k, values};
  r.values = Eigen::MatrixXi::Constant(values.rows(), values.cols(), k + 1) - values;
  return r;
}

std::string to_string(ColumnState s) { return std::to_string(s.top) + std::to_string(s.bottom); }

GraphInstance build_graph(const FamilySpec& spec) {
  spec.validate();
  const int n = spec.n;
  const int rows = row_count(spec.family);

  std::vector<Vertex> vertices;
  vertices.reserve(static_cast<std::size_t>(rows * n));
  for (int c = 1; c <= n; ++c)
    for (int r = 1; r <= rows; ++r) vertices.push_back({r, c});

  std::vector<Edge> edges;
  if (!is_ladder(spec.family)) {
    for (int c = 1; c < n; ++c) edges.push_back({{1, c}, {1, c + 1}});
    if (spec.family == Family::Cycle) edges.push_back({{1, 1}, {1, n}});
    return GraphInstance(spec, std::move(vertices), std::move(edges));
  }

  // |i1-i2| + |j1-j2| = 1
  for (int c = 1; c <= n; ++c) {
    edges.push_back({{1, c}, {2, c}});
    if (c < n) {
      edges.push_back({{1, c}, {1, c + 1}});
      edges.push_back({{2, c}, {2, c + 1}});
    }
  }
  for (int c = 1; c < n; ++c) {
    // RT: i1 = 1, i2 = 2, j2 = j1 + 1 (its mirror clause names the same edge)
    if (spec.family == Family::RT2xN || spec.family == Family::KG2xN) edges.push_back({{1, c}, {2, c + 1}});
    // KG: the other diagonal of the cell
    if (spec.family == Family::KG2xN) edges.push_back({{2, c}, {1, c + 1}});
  }
  return GraphInstance(spec, std::move(vertices), std::move(edges));
}

bool staircase_check(const GraphInstance& g, const WordAssignment& w) {
  if (w.values.rows() != g.rows() || w.values.cols() != g.columns())
    throw std::invalid_argument("word shape " + std::to_string(w.values.rows()) + "x" +
                                std::to_string(w.values.cols()) + " does not match graph " +
                                std::to_string(g.rows()) + "x" + std::to_string(g.columns()));
  if (w.k < 1) throw std::invalid_argument("alphabet size must be positive");
  if (w.values.size() > 0 && (w.values.minCoeff() < 1 || w.values.maxCoeff() > w.k))
    throw std::invalid_argument("word values must lie in 1.." + std::to_string(w.k));
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return std::abs(w.at(e.a) - w.at(e.b)) <= 1; });
}

std::vector<ColumnState> column_states(int k) {
  if (k < 1) throw std::invalid_argument("alphabet size must be positive");
  std::vector<ColumnState> states;
  states.reserve(static_cast<std::size_t>(3 * k - 2));
  for (int t = 1; t <= k; ++t)
    for (int b = std::max(1, t - 1); b <= std::min(k, t + 1); ++b) states.push_back({t, b});
  return states;
}

}  // namespace staircase
