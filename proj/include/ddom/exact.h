#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "ddom/graph.h"

namespace ddom {

enum class Problem { kDisjunctive, kDomination, kTwoDomination, kVertexCover };

/// Parses "ddp", "dom", "2dom" or "vc"; throws InputError otherwise.
Problem parse_problem(std::string_view name);
std::string_view problem_name(Problem p);

/// Runs the verifier matching `p` (b is only used by kDisjunctive).
bool verify_solution(const Graph& g, Problem p, const VertexSet& s, int b = 2);

enum class Strategy { kExhaustive, kBranchAndBound };

struct SearchConfig {
  Strategy strategy = Strategy::kBranchAndBound;
  std::size_t node_budget = 100'000'000;
  int b = 2;
};

/// Minimum-cardinality solution of `p`. Components are solved independently.
///
/// kExhaustive tries subsets by increasing size in lexicographic order, so it
/// returns the lexicographically least optimum. kBranchAndBound returns the
/// first optimum met by its (deterministic) depth-first search. Both throw
/// BudgetExceeded once more than cfg.node_budget nodes were visited.
VertexSet exact_solve(const Graph& g, Problem p, const SearchConfig& cfg = {});

/// Like exact_solve, but only looks for solutions with at most `max_size`
/// vertices; nullopt if none exists.
std::optional<VertexSet> exact_solve_capped(const Graph& g, Problem p, std::size_t max_size,
                                            const SearchConfig& cfg = {});

VertexSet exact_disjunctive(const Graph& g, int b, SearchConfig cfg = {});
VertexSet exact_domination(const Graph& g, const SearchConfig& cfg = {});
VertexSet exact_two_domination(const Graph& g, const SearchConfig& cfg = {});
VertexSet exact_vertex_cover(const Graph& g, const SearchConfig& cfg = {});

}  // namespace ddom
