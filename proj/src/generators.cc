#include "ddom/generators.h"

#include <algorithm>
#include <numeric>

#include "ddom/errors.h"

namespace ddom {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw InputError("Rng::below needs a positive bound");
  const std::uint64_t reject = (0 - bound) % bound;  // 2^64 mod bound
  std::uint64_t x = engine_();
  while (x < reject) x = engine_();
  return x % bound;
}

double Rng::unit() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

Family parse_family(const std::string& name) {
  if (name == "proper_interval") return Family::kProperInterval;
  if (name == "gnp_connected") return Family::kGnpConnected;
  if (name == "tree") return Family::kTree;
  if (name == "cubic") return Family::kCubic;
  if (name == "named") return Family::kNamed;
  throw InputError("unknown family '" + name + "'");
}

Graph generate(const GenSpec& spec) {
  switch (spec.family) {
    case Family::kProperInterval: return gen_proper_interval(spec.n, spec.seed, spec.spread);
    case Family::kGnpConnected: return gen_connected(spec.n, spec.p, spec.seed);
    case Family::kTree: return gen_tree(spec.n, spec.seed);
    case Family::kCubic: return gen_cubic(spec.n, spec.seed);
    case Family::kNamed: return named_graph(spec.name, spec.n);
  }
  throw InputError("unknown family");
}

Graph relabel(const Graph& g, Rng& rng) {
  std::vector<Vertex> perm(g.num_vertices());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  rng.shuffle(perm);
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph::from_edges(g.num_vertices(), edges);
}

Graph gen_proper_interval(std::size_t n, std::uint64_t seed, double spread) {
  if (n < 1) throw InputError("proper interval generator needs n >= 1");
  if (!(spread > 0.0 && spread <= 1.0)) throw InputError("spread must lie in (0, 1]");
  Rng rng(seed);
  std::vector<double> left(n, 0.0);
  for (std::size_t i = 1; i < n; ++i) left[i] = left[i - 1] + spread * rng.unit();
  // [l_i, l_i + 1] meets [l_j, l_j + 1] iff |l_i - l_j| <= 1; left is sorted.
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n && left[j] - left[i] <= 1.0; ++j) {
      edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return relabel(Graph::from_edges(n, edges), rng);
}

Graph gen_connected(std::size_t n, double p, std::uint64_t seed) {
  if (n < 1) throw InputError("gnp generator needs n >= 1");
  if (!(p > 0.0 && p <= 1.0)) throw InputError("edge probability must lie in (0, 1]");
  Rng rng(seed);
  constexpr int kAttempts = 100000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (rng.unit() < p) edges.emplace_back(u, v);
      }
    }
    Graph g = Graph::from_edges(n, edges);
    if (is_connected(g)) return g;
  }
  throw InputError("no connected G(n,p) sample found; raise p");
}

Graph gen_tree(std::size_t n, std::uint64_t seed) {
  if (n < 1) throw InputError("tree generator needs n >= 1");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) {
    edges.emplace_back(static_cast<Vertex>(rng.below(v)), static_cast<Vertex>(v));
  }
  return relabel(Graph::from_edges(n, edges), rng);
}

Graph gen_cubic(std::size_t n, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0) throw InputError("cubic generator needs an even n >= 4");
  Rng rng(seed);
  std::vector<Vertex> points(3 * n);
  constexpr int kAttempts = 1000000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<Vertex>(i / 3);
    rng.shuffle(points);
    std::vector<Edge> edges;
    bool simple = true;
    for (std::size_t i = 0; i < points.size() && simple; i += 2) {
      auto [u, v] = std::minmax(points[i], points[i + 1]);
      if (u == v) simple = false;
      edges.emplace_back(u, v);
    }
    if (!simple) continue;
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
    Graph g = Graph::from_edges(n, edges);
    if (is_connected(g)) return g;
  }
  throw InputError("pairing model did not produce a simple connected cubic graph");
}

Graph named_graph(const std::string& name, std::size_t n) {
  std::vector<Edge> edges;
  if (name == "path") {
    for (std::size_t i = 1; i < n; ++i) edges.emplace_back(static_cast<Vertex>(i - 1), static_cast<Vertex>(i));
  } else if (name == "cycle") {
    if (n < 3) throw InputError("cycle needs n >= 3");
    for (std::size_t i = 0; i < n; ++i) {
      edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
    }
  } else if (name == "complete") {
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
  } else if (name == "star") {
    for (std::size_t i = 1; i < n; ++i) edges.emplace_back(Vertex{0}, static_cast<Vertex>(i));
  } else {
    throw InputError("unknown named graph '" + name + "' (path, cycle, complete, star)");
  }
  return Graph::from_edges(n, edges);
}

}  // namespace ddom
