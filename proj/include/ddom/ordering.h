#pragma once

#include <span>
#include <vector>

#include "ddom/graph.h"

namespace ddom {

/// A permutation of the vertices together with its inverse.
class VertexOrdering {
 public:
  VertexOrdering() = default;
  /// Throws InputError unless `order` is a permutation of 0..order.size()-1.
  explicit VertexOrdering(std::vector<Vertex> order);

  std::size_t size() const noexcept { return order_.size(); }
  /// Vertex at position i.
  Vertex operator[](std::size_t i) const { return order_[i]; }
  std::size_t position(Vertex v) const { return position_[v]; }
  const std::vector<Vertex>& order() const noexcept { return order_; }

  VertexOrdering reversed() const;

  friend bool operator==(const VertexOrdering& a, const VertexOrdering& b) { return a.order_ == b.order_; }

 private:
  std::vector<Vertex> order_;
  std::vector<std::size_t> position_;
};

bool is_peo(const Graph& g, const VertexOrdering& ord);
bool is_bco(const Graph& g, const VertexOrdering& ord);

/// True iff every closed neighbourhood occupies a contiguous block of positions.
bool has_contiguous_neighborhoods(const Graph& g, const VertexOrdering& ord);

/// Lexicographic breadth-first search. Ties go to the vertex that comes first
/// in `initial` (a permutation of the vertices). Runs in O(n + m).
VertexOrdering lex_bfs(const Graph& g, std::span<const Vertex> initial);

/// LBFS+ : ties go to the vertex that comes last in `previous`.
VertexOrdering lex_bfs_plus(const Graph& g, const VertexOrdering& previous);

/// Bi-compatible elimination ordering of a connected proper interval graph.
/// Throws NotConnected or NotProperInterval.
VertexOrdering compute_bco(const Graph& g);

}  // namespace ddom
