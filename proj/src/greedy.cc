#include "ddom/greedy.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ddom/errors.h"

namespace ddom {

std::size_t MulticoverInstance::max_multiset_size() const {
  std::size_t best = 0;
  for (const auto& set : family) {
    std::size_t total = 0;
    for (auto [x, mult] : set) total += mult;
    best = std::max(best, total);
  }
  return best;
}

std::string MulticoverInstance::to_text() const {
  std::ostringstream out;
  for (std::size_t x = 0; x < requirement.size(); ++x) out << x << ' ' << requirement[x] << '\n';
  for (std::size_t i = 0; i < family.size(); ++i) {
    out << "set " << i << ':';
    for (auto [x, mult] : family[i]) out << ' ' << x << ':' << mult;
    out << '\n';
  }
  return out.str();
}

MulticoverInstance build_cmsmc(const Graph& g, int b) {
  if (b < 1) throw InputError("disjunctive parameter b must be >= 1");
  const std::size_t n = g.num_vertices();
  const auto weight = static_cast<std::size_t>(b);
  MulticoverInstance inst;
  inst.requirement.assign(n, weight);
  inst.family.resize(n);
  inst.origin.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    auto& set = inst.family[v];
    for (Vertex u : neighbors_closed(g, v)) set.emplace_back(u, weight);
    for (Vertex u : second_neighborhood(g, v)) set.emplace_back(u, 1);
    std::sort(set.begin(), set.end());
    inst.origin[v] = v;
  }
  return inst;
}

std::vector<std::size_t> greedy_multicover(const MulticoverInstance& inst) {
  std::vector<std::size_t> residual = inst.requirement;
  {
    std::vector<std::size_t> available(inst.num_elements(), 0);
    for (const auto& set : inst.family) {
      for (auto [x, mult] : set) available[x] += mult;
    }
    for (std::size_t x = 0; x < residual.size(); ++x) {
      if (available[x] < residual[x]) throw Uncoverable();
    }
  }
  std::size_t outstanding = 0;
  for (std::size_t r : residual) outstanding += r;

  std::vector<bool> used(inst.family.size(), false);
  std::vector<std::size_t> chosen;
  while (outstanding > 0) {
    std::size_t best = inst.family.size();
    std::size_t best_gain = 0;
    for (std::size_t i = 0; i < inst.family.size(); ++i) {
      if (used[i]) continue;
      std::size_t gain = 0;
      for (auto [x, mult] : inst.family[i]) gain += std::min(mult, residual[x]);
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    // Coverability was checked up front, so some set still helps.
    if (best == inst.family.size()) throw Uncoverable();
    used[best] = true;
    chosen.push_back(best);
    for (auto [x, mult] : inst.family[best]) {
      const std::size_t take = std::min(mult, residual[x]);
      residual[x] -= take;
      outstanding -= take;
    }
  }
  return chosen;
}

bool is_multicover(const MulticoverInstance& inst, const std::vector<std::size_t>& chosen) {
  std::vector<std::size_t> got(inst.num_elements(), 0);
  std::vector<bool> seen(inst.family.size(), false);
  for (std::size_t i : chosen) {
    if (i >= inst.family.size() || seen[i]) return false;
    seen[i] = true;
    for (auto [x, mult] : inst.family[i]) got[x] += mult;
  }
  for (std::size_t x = 0; x < got.size(); ++x) {
    if (got[x] < inst.requirement[x]) return false;
  }
  return true;
}

VertexSet approx_disjunctive(const Graph& g, int b) {
  const auto inst = build_cmsmc(g, b);
  std::vector<Vertex> out;
  for (std::size_t i : greedy_multicover(inst)) out.push_back(inst.origin[i]);
  return VertexSet(std::move(out));
}

double approx_ratio_bound(std::size_t max_degree) {
  const double d = static_cast<double>(max_degree);
  return std::log(d * d + d + 2.0) + 1.0;
}

}  // namespace ddom
