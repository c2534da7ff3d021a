#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ddom/graph.h"

namespace ddom {

/// Seeded random source with a portable output stream.
///
/// Engine: std::mt19937_64 seeded with the 64-bit seed directly. Derived
/// values do not go through std distributions (their output is
/// implementation-defined):
///   below(k):  draw x, reject while x < (2^64 mod k), return x mod k
///   unit():    (x >> 11) * 2^-53, in [0, 1)
///   shuffle:   Fisher-Yates from the back, j = below(i + 1)
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  std::uint64_t below(std::uint64_t bound);
  double unit();

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

enum class Family { kProperInterval, kGnpConnected, kTree, kCubic, kNamed };

Family parse_family(const std::string& name);

struct GenSpec {
  Family family = Family::kProperInterval;
  std::size_t n = 1;
  std::uint64_t seed = 0;
  /// Edge probability for kGnpConnected, in (0, 1].
  double p = 0.5;
  /// Largest gap between consecutive unit intervals for kProperInterval, in
  /// (0, 1]. Smaller values give denser graphs.
  double spread = 1.0;
  /// For kNamed: path, cycle, complete, star.
  std::string name;
};

Graph generate(const GenSpec& spec);

/// Intersection graph of n unit intervals with random gaps below `spread`
/// between consecutive left endpoints (so it is connected), randomly relabelled.
Graph gen_proper_interval(std::size_t n, std::uint64_t seed, double spread = 1.0);

/// G(n, p) conditioned on connectivity by rejection sampling.
Graph gen_connected(std::size_t n, double p, std::uint64_t seed);

/// Random recursive tree, randomly relabelled.
Graph gen_tree(std::size_t n, std::uint64_t seed);

/// Random connected 3-regular graph from the pairing model; n even, n >= 4.
Graph gen_cubic(std::size_t n, std::uint64_t seed);

Graph named_graph(const std::string& name, std::size_t n);

/// Relabels g by a uniformly random permutation.
Graph relabel(const Graph& g, Rng& rng);

}  // namespace ddom
