#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "ddom/graph.h"

namespace ddom {

/// What a vertex of a transformed graph stands for.
struct Role {
  enum class Kind { kOriginal, kPendantW, kPendantZ, kApexP, kApexQ, kGadget };

  Kind kind = Kind::kOriginal;
  /// Source vertex (original / pendants) or source edge index (gadget).
  std::size_t index = 0;
  /// Gadget vertex name, one of "wxyzabcdf"; unused otherwise.
  char name = 0;

  friend bool operator==(const Role&, const Role&) = default;
};

/// e.g. "original(3)", "pendant_w(0)", "apex_p", "gadget(2,y)".
std::string to_string(const Role& r);

struct TransformResult {
  Graph h;
  std::vector<Role> role;

  /// `role <index> <tag>` lines, one per vertex of h.
  std::string role_map_text() const;
};

/// Attaches a pendant w_i to every vertex v_i. Originals keep their indices,
/// w_i = n + i.
TransformResult gc_transform(const Graph& g);

/// Chains v_i - w_i - z_i - p for every vertex plus the pendant q on p.
/// Layout: originals, then w_0..w_{n-1}, then z_0..z_{n-1}, then p, q.
TransformResult domination_hardness_transform(const Graph& g);

/// Dominating set of g with at most |dd| vertices, read off a disjunctive
/// dominating set of domination_hardness_transform(g). Throws
/// InvalidCertificate if dd does not disjunctively dominate tr.h.
VertexSet extract_dominating(const Graph& g, const TransformResult& tr, const VertexSet& dd);

/// Optimal dominating set if gamma(g) <= l, otherwise the dominating set
/// extracted from the greedy disjunctive solution on the hardness graph.
VertexSet approx_domination(const Graph& g, std::size_t l);

/// Gadget vertex order within each per-edge block.
inline constexpr std::array<char, 9> kGadgetNames = {'w', 'x', 'y', 'z', 'a', 'b', 'c', 'd', 'f'};

/// Replaces every edge e_i = v_r v_s (r < s, edges in sorted order) by the
/// 9-vertex gadget
///   v_r-x  v_s-z  x-w  z-w  x-y  z-y  y-a  a-b  b-c  c-d  d-f
/// appended as block n + 9i in kGadgetNames order. The result is bipartite
/// with maximum degree max(3, D(g)). Throws MinDegreeTooLow if some vertex
/// has degree below 2.
TransformResult apx_gadget_transform(const Graph& g);

/// Index of gadget vertex `name` for edge `edge` in apx_gadget_transform(g).
Vertex gadget_vertex(const Graph& g, std::size_t edge, char name);

/// Vertex cover of g with at most |dd| - 2m vertices, obtained by normalising
/// a disjunctive dominating set of apx_gadget_transform(g): f -> d, then
/// {a, b, c} -> y, then {w, x, z} -> an endpoint of the edge. Throws
/// InvalidCertificate if dd does not disjunctively dominate tr.h.
VertexSet extract_vertex_cover(const Graph& g, const TransformResult& tr, const VertexSet& dd);

}  // namespace ddom
