#include "ddom/pig.h"

#include <algorithm>
#include <stdexcept>

#include "ddom/errors.h"

namespace ddom {

namespace {

// Lowest and highest position in each closed neighbourhood, indexed by
// position. In a BCO of a connected graph N[v] is exactly that interval.
struct Extents {
  std::vector<std::size_t> min_of;
  std::vector<std::size_t> max_of;
};

Extents closed_extents(const Graph& g, const VertexOrdering& ord) {
  const std::size_t n = g.num_vertices();
  Extents e{std::vector<std::size_t>(n), std::vector<std::size_t>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t lo = i, hi = i;
    for (Vertex u : g.neighbors(ord[i])) {
      lo = std::min(lo, ord.position(u));
      hi = std::max(hi, ord.position(u));
    }
    e.min_of[i] = lo;
    e.max_of[i] = hi;
  }
  return e;
}

}  // namespace

VertexSet solve_pig_reference(const Graph& g, const VertexOrdering& ord, const PigObserver& observer) {
  const std::size_t n = g.num_vertices();
  if (n == 0) throw InputError("graph has no vertices");
  if (ord.size() != n) throw InputError("ordering size does not match graph");
  if (!is_connected(g)) throw NotConnected();
  if (!is_bco(g, ord)) throw NotBco();
  if (n == 1) return VertexSet{0};

  const DistanceMatrix dist(g);
  const Extents ext = closed_extents(g, ord);
  auto d = [&](std::size_t p, std::size_t q) { return dist(ord[p], ord[q]); };

  std::vector<bool> in_d(n, false);       // by position
  std::vector<bool> in_d_vertex(n, false);  // by vertex id, for the observer
  std::vector<std::size_t> members;       // positions
  auto add = [&](std::size_t p) {
    if (in_d[p]) throw std::logic_error("reference solver: position already in solution");
    in_d[p] = true;
    in_d_vertex[ord[p]] = true;
    members.push_back(p);
  };

  for (std::size_t i = 0; i < n; ++i) {
    std::size_t close = 0, far = 0, far_member = 0;
    for (std::size_t p : members) {
      const int dp = d(i, p);
      if (dp <= 1) ++close;
      if (dp == 2) {
        ++far;
        far_member = p;
      }
    }

    if (close > 0 || far >= 2) {
      // Case 1: already disjunctively dominated.
    } else if (far == 0) {
      add(ext.max_of[i]);  // Case 2
    } else {
      // Case 3: exactly one solution vertex r at distance two.
      const std::size_t r = far_member;
      const std::size_t j = ext.max_of[i];
      const std::size_t k = ext.max_of[j];
      bool all_fine = true;
      for (std::size_t s = i + 1; s < j; ++s) {
        if (!(d(s, k) <= 1 || d(s, r) == 2)) {
          all_fine = false;
          break;
        }
      }
      if (all_fine) {
        add(k);  // Subcase 3.1
      } else {
        std::size_t chosen = n;
        for (std::size_t s = i + 1; s < j; ++s) {
          if (d(s, k) == 2 && d(s, r) > 2) {
            chosen = s;
            break;
          }
        }
        if (chosen == n) throw std::logic_error("reference solver: no subcase applies");
        add(ext.max_of[chosen]);  // Subcase 3.2
      }
    }
    if (observer) observer(i, in_d_vertex);
  }

  std::vector<Vertex> out;
  out.reserve(members.size());
  for (std::size_t p : members) out.push_back(ord[p]);
  return VertexSet(std::move(out));
}

namespace {

/// Solution under construction, all indices are BCO positions.
struct PigState {
  explicit PigState(std::size_t n) : d_set(n, false), d_count(n, 0), first_dominator(n, n) {}

  std::vector<bool> d_set;
  std::vector<std::size_t> d_count;  // |N[v] ∩ D|
  // Earliest-added member of N[v] ∩ D. Case 3 only reads the dominator list
  // when it holds a single entry, so the head of the list is all we keep.
  std::vector<std::size_t> first_dominator;
  std::vector<std::size_t> members;
};

}  // namespace

VertexSet solve_pig_linear(const Graph& g, const PigObserver& observer) {
  const std::size_t n = g.num_vertices();
  if (n == 0) throw InputError("graph has no vertices");
  const VertexOrdering ord = compute_bco(g);
  if (n == 1) return VertexSet{0};

  const Extents ext = closed_extents(g, ord);
  const auto& min_of = ext.min_of;
  const auto& max_of = ext.max_of;
  PigState st(n);
  std::vector<bool> in_d_vertex(observer ? n : 0, false);

  auto add = [&](std::size_t p) {
    if (st.d_set[p]) throw std::logic_error("linear solver: position already in solution");
    st.d_set[p] = true;
    st.members.push_back(p);
    if (observer) in_d_vertex[ord[p]] = true;
    // N[p] is the position interval [min_of[p], max_of[p]].
    for (std::size_t q = min_of[p]; q <= max_of[p]; ++q) {
      if (st.d_count[q]++ == 0) st.first_dominator[q] = p;
    }
  };

  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t at_max = st.d_count[max_of[i]];
    const std::size_t at_min = st.d_count[min_of[i]];
    if (st.d_count[i] != 0 || at_max + at_min >= 2) {
      // covered
    } else if (at_max + at_min == 0) {
      add(max_of[i]);
    } else {
      const std::size_t t = min_of[i];
      const std::size_t j = max_of[i];
      const std::size_t k = max_of[j];
      if (at_max != 0 || st.d_count[t] != 1) {
        throw std::logic_error("linear solver: dominator list of Min[v_i] does not hold exactly one vertex");
      }
      const std::size_t r = st.first_dominator[t];
      const std::size_t a = min_of[k];
      const std::size_t b = max_of[r];
      std::size_t s = i + 1;
      for (; s < j; ++s) {
        // s not adjacent to v_k, and s beyond the reach of N[v_r].
        if (s < a && b < min_of[s]) {
          add(max_of[s]);
          break;
        }
      }
      if (s >= j) add(k);
    }
    if (observer) observer(i, in_d_vertex);
  }

  std::vector<Vertex> out;
  out.reserve(st.members.size());
  for (std::size_t p : st.members) out.push_back(ord[p]);
  return VertexSet(std::move(out));
}

}  // namespace ddom
