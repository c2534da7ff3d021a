#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ddom {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr int kUnreachable = -1;

/// Immutable undirected simple graph on vertices 0..n-1, stored as CSR with
/// sorted neighbour lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  /// Throws InputError on self-loops, duplicate edges or endpoints >= n.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t num_vertices() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const noexcept;
  std::size_t min_degree() const noexcept;
  bool has_edge(Vertex u, Vertex v) const;

  /// Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  /// Copy in which vertex order[i] is renamed i. `order` must be a
  /// permutation of the vertices. O(n + m).
  Graph relabeled(std::span<const Vertex> order) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
};

/// Sorted, duplicate-free set of vertices.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs) : VertexSet(std::vector<Vertex>(vs)) {}
  explicit VertexSet(std::vector<Vertex> vs);

  static VertexSet from_mask(const std::vector<bool>& mask);

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Vertex v) const;
  const std::vector<Vertex>& members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  void insert(Vertex v);
  void erase(Vertex v);

  std::vector<bool> mask(std::size_t n) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

std::string to_string(const VertexSet& s);

VertexSet neighbors_closed(const Graph& g, Vertex v);

/// Vertices at hop distance exactly two from v.
VertexSet second_neighborhood(const Graph& g, Vertex v);

/// Hop distances from `source`; kUnreachable for other components.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// All-pairs hop distances, built by one BFS per source. O(n(n+m)) time and
/// O(n^2) memory; intended for small graphs and reference algorithms.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& g);

  int operator()(Vertex u, Vertex v) const { return dist_[static_cast<std::size_t>(u) * n_ + v]; }
  std::size_t size() const noexcept { return n_; }

 private:
  std::size_t n_ = 0;
  std::vector<int> dist_;
};

bool is_connected(const Graph& g);

/// Component label per vertex (labels 0..k-1 in order of smallest member).
std::vector<std::size_t> connected_components(const Graph& g, std::size_t* count = nullptr);

bool is_bipartite(const Graph& g);

/// Induced subgraph on `keep` (sorted); vertex i of the result is keep[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

// Verifiers. All throw InputError if a member of the set is >= n.

bool is_disjunctive_dominating(const Graph& g, const VertexSet& d, int b = 2);
bool is_dominating(const Graph& g, const VertexSet& s);
bool is_two_dominating(const Graph& g, const VertexSet& s);
bool is_vertex_cover(const Graph& g, const VertexSet& s);

// Edge-list text format:
//   # comment
//   p <n> <m>
//   e <u> <v>      (m lines, 0-based)

Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

}  // namespace ddom
