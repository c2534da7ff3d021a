#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ddom/graph.h"

namespace ddom {

/// Constrained multiset multicover instance: cover every element x of the
/// ground set at least requirement[x] times using each multiset at most once.
struct MulticoverInstance {
  /// (element, multiplicity) pairs, sorted by element.
  using Multiset = std::vector<std::pair<std::size_t, std::size_t>>;

  std::vector<std::size_t> requirement;
  std::vector<Multiset> family;
  /// Source vertex of each multiset.
  std::vector<Vertex> origin;

  std::size_t num_elements() const noexcept { return requirement.size(); }
  /// Total multiplicity of the largest multiset.
  std::size_t max_multiset_size() const;

  /// Debug dump: `elem req` lines, then `set idx: elem:mult ...` lines.
  std::string to_text() const;
};

/// One multiset per vertex v: b copies of every vertex in N[v] and one copy of
/// every vertex at distance two; every requirement is b.
MulticoverInstance build_cmsmc(const Graph& g, int b = 2);

/// Greedy multicover: repeatedly takes the unused multiset with the largest
/// residual benefit sum_x min(mult(x), residual(x)), lowest index on ties.
/// Returns the chosen indices in selection order. Throws Uncoverable.
std::vector<std::size_t> greedy_multicover(const MulticoverInstance& inst);

/// True iff the multisets at `chosen` cover every requirement.
bool is_multicover(const MulticoverInstance& inst, const std::vector<std::size_t>& chosen);

/// Greedy approximation of a minimum b-disjunctive dominating set. For b = 2
/// the result is within ln(D^2 + D + 2) + 1 of optimal, D the maximum degree.
VertexSet approx_disjunctive(const Graph& g, int b = 2);

/// The guaranteed ratio ln(D^2 + D + 2) + 1 for maximum degree D.
double approx_ratio_bound(std::size_t max_degree);

}  // namespace ddom
