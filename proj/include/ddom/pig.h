#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "ddom/graph.h"
#include "ddom/ordering.h"

namespace ddom {

/// Called after each position of the elimination ordering has been processed,
/// with the position index and the current solution as a membership mask over
/// original vertex ids.
using PigObserver = std::function<void(std::size_t position, const std::vector<bool>& in_solution)>;

/// Minimum disjunctive dominating set (b = 2) of a connected proper interval
/// graph, scanning `ord` with an all-pairs distance matrix. O(n^3) time,
/// O(n^2) memory. Throws NotBco if `ord` is not a bi-compatible elimination
/// ordering, NotConnected on disconnected input.
VertexSet solve_pig_reference(const Graph& g, const VertexOrdering& ord, const PigObserver& observer = {});

/// Same result cardinality as solve_pig_reference in O(n + m): computes the
/// ordering itself and keeps per-vertex dominator counts and dominator lists
/// instead of distances. Throws NotProperInterval or NotConnected.
VertexSet solve_pig_linear(const Graph& g, const PigObserver& observer = {});

}  // namespace ddom
