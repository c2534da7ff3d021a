#include "ddom/ordering.h"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "ddom/errors.h"

namespace ddom {

VertexOrdering::VertexOrdering(std::vector<Vertex> order)
    : order_(std::move(order)), position_(order_.size(), order_.size()) {
  for (std::size_t i = 0; i < order_.size(); ++i) {
    Vertex v = order_[i];
    if (v >= order_.size() || position_[v] != order_.size()) {
      throw InputError("ordering is not a permutation of 0.." + std::to_string(order_.size()));
    }
    position_[v] = i;
  }
}

VertexOrdering VertexOrdering::reversed() const {
  return VertexOrdering(std::vector<Vertex>(order_.rbegin(), order_.rend()));
}

namespace {

void check_size(const Graph& g, const VertexOrdering& ord) {
  if (ord.size() != g.num_vertices()) {
    throw InputError("ordering has " + std::to_string(ord.size()) + " entries for a graph on " +
                     std::to_string(g.num_vertices()) + " vertices");
  }
}

}  // namespace

bool is_peo(const Graph& g, const VertexOrdering& ord) {
  check_size(g, ord);
  const std::size_t n = g.num_vertices();
  // For each v, the earliest later neighbour p must be adjacent to all other
  // later neighbours of v. Requirements are bucketed per p and checked with
  // one marking pass, giving O(n + m).
  constexpr Vertex kNone = static_cast<Vertex>(-1);
  std::vector<Vertex> parent(n, kNone);
  std::vector<std::size_t> start(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t pv = ord.position(v);
    std::size_t best = n, later = 0;
    for (Vertex u : g.neighbors(v)) {
      const std::size_t pu = ord.position(u);
      if (pu <= pv) continue;
      ++later;
      if (pu < best) {
        best = pu;
        parent[v] = u;
      }
    }
    if (later > 1) start[parent[v] + 1] += later - 1;
  }
  for (Vertex p = 0; p < n; ++p) start[p + 1] += start[p];
  std::vector<Vertex> required(start[n]);
  std::vector<std::size_t> fill(start.begin(), start.end() - 1);
  for (Vertex v = 0; v < n; ++v) {
    const Vertex p = parent[v];
    if (p == kNone) continue;
    const std::size_t pv = ord.position(v);
    for (Vertex u : g.neighbors(v)) {
      if (u != p && ord.position(u) > pv) required[fill[p]++] = u;
    }
  }
  std::vector<Vertex> mark(n, kNone);
  for (Vertex p = 0; p < n; ++p) {
    if (start[p] == start[p + 1]) continue;
    for (Vertex w : g.neighbors(p)) mark[w] = p;
    for (std::size_t i = start[p]; i < start[p + 1]; ++i) {
      if (mark[required[i]] != p) return false;
    }
  }
  return true;
}

bool is_bco(const Graph& g, const VertexOrdering& ord) {
  return is_peo(g, ord) && is_peo(g, ord.reversed());
}

bool has_contiguous_neighborhoods(const Graph& g, const VertexOrdering& ord) {
  check_size(g, ord);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    std::size_t lo = ord.position(v), hi = lo;
    for (Vertex u : g.neighbors(v)) {
      lo = std::min(lo, ord.position(u));
      hi = std::max(hi, ord.position(u));
    }
    if (hi - lo != g.degree(v)) return false;
  }
  return true;
}

namespace {

using Index = std::uint32_t;
constexpr Index kNil = static_cast<Index>(-1);

/// Partition refinement over doubly linked classes of doubly linked vertices.
/// Neighbour lists are pre-sorted by rank in the initial order and each class
/// only ever loses members or receives appends in that same rank order, so
/// every class stays sorted by initial rank. The head of the first class is
/// therefore the tie-break winner.
class LexBfsRunner {
 public:
  LexBfsRunner(const Graph& g, std::span<const Vertex> initial) : n_(static_cast<Index>(g.num_vertices())) {
    // Adjacency sorted by rank: scatter in rank order.
    offsets_.assign(n_ + 1, 0);
    for (Vertex v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + g.degree(v);
    adj_.resize(offsets_[n_]);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (Vertex u : initial) {
      for (Vertex w : g.neighbors(u)) adj_[fill[w]++] = u;
    }

    cls_of_.assign(n_, 0);
    vprev_.assign(n_, kNil);
    vnext_.assign(n_, kNil);
    visited_.assign(n_, false);
    if (n_ == 0) return;
    classes_.push_back({kNil, kNil, kNil, kNil, kNil, kNil, 0});
    for (Vertex v : initial) append(0, v);
    first_class_ = 0;
  }

  std::vector<Vertex> run() {
    std::vector<Vertex> out;
    out.reserve(n_);
    for (Index step = 0; step < n_; ++step) {
      const Index c = first_class_;
      const Vertex pivot = static_cast<Vertex>(classes_[c].head);
      unlink(pivot);
      visited_[pivot] = true;
      out.push_back(pivot);
      for (std::size_t i = offsets_[pivot]; i < offsets_[pivot + 1]; ++i) {
        const Vertex w = adj_[i];
        if (visited_[w]) continue;
        const Index old = cls_of_[w];
        if (classes_[old].split_pivot != pivot) {
          const Index child = new_class_before(old);
          classes_[old].split_pivot = pivot;
          classes_[old].split_child = child;
        }
        const Index child = classes_[old].split_child;
        unlink(w);
        append(child, w);
      }
    }
    return out;
  }

 private:
  struct Class {
    Index prev, next;
    Index head, tail;
    Index split_pivot, split_child;
    Index size;
  };

  void append(Index c, Vertex v) {
    auto& cl = classes_[c];
    cls_of_[v] = c;
    vprev_[v] = cl.tail;
    vnext_[v] = kNil;
    if (cl.tail != kNil) vnext_[cl.tail] = v; else cl.head = v;
    cl.tail = v;
    ++cl.size;
  }

  void unlink(Vertex v) {
    const Index c = cls_of_[v];
    auto& cl = classes_[c];
    if (vprev_[v] != kNil) vnext_[vprev_[v]] = vnext_[v]; else cl.head = vnext_[v];
    if (vnext_[v] != kNil) vprev_[vnext_[v]] = vprev_[v]; else cl.tail = vprev_[v];
    if (--cl.size == 0) drop_class(c);
  }

  Index new_class_before(Index c) {
    const auto id = static_cast<Index>(classes_.size());
    const Index before = classes_[c].prev;
    classes_.push_back({before, c, kNil, kNil, kNil, kNil, 0});
    classes_[c].prev = id;
    if (before != kNil) classes_[before].next = id; else first_class_ = id;
    return id;
  }

  void drop_class(Index c) {
    auto& cl = classes_[c];
    if (cl.prev != kNil) classes_[cl.prev].next = cl.next; else first_class_ = cl.next;
    if (cl.next != kNil) classes_[cl.next].prev = cl.prev;
  }

  Index n_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adj_;
  std::vector<Class> classes_;
  Index first_class_ = kNil;
  std::vector<Index> cls_of_, vprev_, vnext_;
  std::vector<bool> visited_;
};

}  // namespace

VertexOrdering lex_bfs(const Graph& g, std::span<const Vertex> initial) {
  if (initial.size() != g.num_vertices()) throw InputError("initial order has wrong size");
  // Validates that `initial` is a permutation.
  (void)VertexOrdering(std::vector<Vertex>(initial.begin(), initial.end()));
  return VertexOrdering(LexBfsRunner(g, initial).run());
}

VertexOrdering lex_bfs_plus(const Graph& g, const VertexOrdering& previous) {
  std::vector<Vertex> initial(previous.order().rbegin(), previous.order().rend());
  return lex_bfs(g, initial);
}

VertexOrdering compute_bco(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0) throw InputError("compute_bco needs at least one vertex");
  // Renumber by plain BFS first so the sweeps below touch memory in roughly
  // increasing order. BFS also settles connectivity.
  std::vector<Vertex> bfs{0};
  bfs.reserve(n);
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    for (Vertex w : g.neighbors(bfs[head])) {
      if (!seen[w]) {
        seen[w] = true;
        bfs.push_back(w);
      }
    }
  }
  if (bfs.size() != n) throw NotConnected();
  const Graph h = g.relabeled(bfs);

  // Three sweeps recognise unit interval graphs: the last one is a proper
  // interval ordering whenever one exists.
  std::vector<Vertex> identity(n);
  std::iota(identity.begin(), identity.end(), Vertex{0});
  VertexOrdering sweep = lex_bfs(h, identity);
  sweep = lex_bfs_plus(h, sweep);
  sweep = lex_bfs_plus(h, sweep);
  if (!has_contiguous_neighborhoods(h, sweep) || !is_bco(h, sweep)) throw NotProperInterval();
  std::vector<Vertex> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = bfs[sweep[i]];
  return VertexOrdering(std::move(order));
}

}  // namespace ddom
