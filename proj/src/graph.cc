#include "ddom/graph.h"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "ddom/errors.h"

namespace ddom {

namespace {

void check_vertex(const Graph& g, Vertex v) {
  if (v >= g.num_vertices()) {
    throw InputError("vertex " + std::to_string(v) + " out of range for n=" +
                     std::to_string(g.num_vertices()));
  }
}

void check_set(const Graph& g, const VertexSet& s) {
  if (!s.empty()) check_vertex(g, s.members().back());
}

}  // namespace

Graph::Graph(std::size_t n) : offsets_(n + 1, 0) {}

Graph Graph::relabeled(std::span<const Vertex> order) const {
  const std::size_t n = num_vertices();
  if (order.size() != n) throw InputError("relabeling order has wrong size");
  std::vector<Vertex> new_id(n, static_cast<Vertex>(-1));
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || new_id[order[i]] != static_cast<Vertex>(-1)) {
      throw InputError("relabeling order is not a permutation");
    }
    new_id[order[i]] = static_cast<Vertex>(i);
  }
  Graph h;
  h.offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) h.offsets_[i + 1] = h.offsets_[i] + degree(order[i]);
  h.targets_.resize(targets_.size());
  // Visiting new ids in increasing order leaves every list sorted.
  std::vector<std::size_t> fill(h.offsets_.begin(), h.offsets_.end() - 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (Vertex w : neighbors(order[i])) h.targets_[fill[new_id[w]]++] = static_cast<Vertex>(i);
  }
  return h;
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an endpoint >= n=" + std::to_string(n));
    }
    if (u == v) throw InputError("self-loop on vertex " + std::to_string(u));
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.targets_.resize(2 * edges.size());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : edges) {
    g.targets_[fill[u]++] = v;
    g.targets_[fill[v]++] = u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto first = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    if (auto dup = std::adjacent_find(first, last); dup != last) {
      throw InputError("duplicate edge (" + std::to_string(std::min<std::size_t>(v, *dup)) + "," +
                       std::to_string(std::max<std::size_t>(v, *dup)) + ")");
    }
  }
  return g;
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (Vertex v = 0; v < num_vertices(); ++v) best = std::max(best, degree(v));
  return best;
}

std::size_t Graph::min_degree() const noexcept {
  if (num_vertices() == 0) return 0;
  std::size_t best = degree(0);
  for (Vertex v = 1; v < num_vertices(); ++v) best = std::min(best, degree(v));
  return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= num_vertices() || v >= num_vertices()) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexSet::VertexSet(std::vector<Vertex> vs) : members_(std::move(vs)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::from_mask(const std::vector<bool>& mask) {
  VertexSet s;
  for (std::size_t v = 0; v < mask.size(); ++v) {
    if (mask[v]) s.members_.push_back(static_cast<Vertex>(v));
  }
  return s;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::insert(Vertex v) {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it == members_.end() || *it != v) members_.insert(it, v);
}

void VertexSet::erase(Vertex v) {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it != members_.end() && *it == v) members_.erase(it);
}

std::vector<bool> VertexSet::mask(std::size_t n) const {
  std::vector<bool> m(n, false);
  for (Vertex v : members_) {
    if (v >= n) throw InputError("set member " + std::to_string(v) + " out of range");
    m[v] = true;
  }
  return m;
}

std::string to_string(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.members()[i]);
  }
  return out + "}";
}

VertexSet neighbors_closed(const Graph& g, Vertex v) {
  check_vertex(g, v);
  auto nb = g.neighbors(v);
  std::vector<Vertex> out(nb.begin(), nb.end());
  out.push_back(v);
  return VertexSet(std::move(out));
}

VertexSet second_neighborhood(const Graph& g, Vertex v) {
  check_vertex(g, v);
  std::vector<bool> near(g.num_vertices(), false);
  near[v] = true;
  for (Vertex u : g.neighbors(v)) near[u] = true;
  std::vector<Vertex> out;
  for (Vertex u : g.neighbors(v)) {
    for (Vertex w : g.neighbors(u)) {
      if (!near[w]) {
        near[w] = true;
        out.push_back(w);
      }
    }
  }
  return VertexSet(std::move(out));
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  check_vertex(g, source);
  std::vector<int> dist(g.num_vertices(), kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(g.num_vertices());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.num_vertices()), dist_(n_ * n_) {
  for (Vertex s = 0; s < n_; ++s) {
    auto row = bfs_distances(g, s);
    std::copy(row.begin(), row.end(), dist_.begin() + static_cast<std::ptrdiff_t>(s * n_));
  }
}

std::vector<std::size_t> connected_components(const Graph& g, std::size_t* count) {
  constexpr auto kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(g.num_vertices(), kNone);
  std::size_t next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (label[s] != kNone) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (label[w] == kNone) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return label;
}

bool is_connected(const Graph& g) {
  std::size_t count = 0;
  connected_components(g, &count);
  return count <= 1;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.num_vertices(), -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (side[w] == -1) {
          side[w] = 1 - side[u];
          stack.push_back(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<Vertex> index(g.num_vertices(), static_cast<Vertex>(-1));
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (Vertex w : g.neighbors(keep[i])) {
      if (index[w] != static_cast<Vertex>(-1) && i < index[w]) {
        edges.emplace_back(static_cast<Vertex>(i), index[w]);
      }
    }
  }
  return Graph::from_edges(keep.size(), edges);
}

bool is_disjunctive_dominating(const Graph& g, const VertexSet& d, int b) {
  if (b < 1) throw InputError("disjunctive parameter b must be >= 1");
  check_set(g, d);
  const std::size_t n = g.num_vertices();
  auto in_d = d.mask(n);
  // stamp[w] == v marks w as already seen while scanning around v.
  std::vector<Vertex> stamp(n, static_cast<Vertex>(-1));
  for (Vertex v = 0; v < n; ++v) {
    if (in_d[v]) continue;
    auto nb = g.neighbors(v);
    if (std::any_of(nb.begin(), nb.end(), [&](Vertex u) { return in_d[u]; })) continue;
    stamp[v] = v;
    for (Vertex u : nb) stamp[u] = v;
    int credit = 0;
    for (Vertex u : nb) {
      for (Vertex w : g.neighbors(u)) {
        if (stamp[w] == v) continue;
        stamp[w] = v;
        if (in_d[w]) ++credit;
      }
      if (credit >= b) break;
    }
    if (credit < b) return false;
  }
  return true;
}

bool is_dominating(const Graph& g, const VertexSet& s) {
  check_set(g, s);
  auto in = s.mask(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (in[v]) continue;
    auto nb = g.neighbors(v);
    if (std::none_of(nb.begin(), nb.end(), [&](Vertex u) { return in[u]; })) return false;
  }
  return true;
}

bool is_two_dominating(const Graph& g, const VertexSet& s) {
  check_set(g, s);
  auto in = s.mask(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (in[v]) continue;
    auto nb = g.neighbors(v);
    if (std::count_if(nb.begin(), nb.end(), [&](Vertex u) { return in[u]; }) < 2) return false;
  }
  return true;
}

bool is_vertex_cover(const Graph& g, const VertexSet& s) {
  check_set(g, s);
  auto in = s.mask(g.num_vertices());
  for (auto [u, v] : g.edges()) {
    if (!in[u] && !in[v]) return false;
  }
  return true;
}

namespace {

template <typename T>
T parse_number(std::string_view token, std::size_t line, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  bool have_header = false;
  std::size_t n = 0, m = 0;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_line;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    auto tok = split_ws(line);
    if (tok.empty() || tok[0].front() == '#') continue;
    if (tok[0] == "p") {
      if (have_header) throw ParseError(line_no, "duplicate header");
      if (tok.size() != 3) throw ParseError(line_no, "header must be 'p <n> <m>'");
      n = parse_number<std::size_t>(tok[1], line_no, "vertex count");
      m = parse_number<std::size_t>(tok[2], line_no, "edge count");
      have_header = true;
    } else if (tok[0] == "e") {
      if (!have_header) throw ParseError(line_no, "edge before header");
      if (tok.size() != 3) throw ParseError(line_no, "edge must be 'e <u> <v>'");
      auto u = parse_number<std::uint64_t>(tok[1], line_no, "vertex index");
      auto v = parse_number<std::uint64_t>(tok[2], line_no, "vertex index");
      if (u >= n || v >= n) throw ParseError(line_no, "vertex index out of range (n=" + std::to_string(n) + ")");
      if (u == v) throw ParseError(line_no, "self-loop");
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
      edge_line.push_back(line_no);
    } else {
      throw ParseError(line_no, "unknown record '" + std::string(tok[0]) + "'");
    }
  }
  if (!have_header) throw ParseError(line_no, "missing header 'p <n> <m>'");
  if (edges.size() != m) {
    throw ParseError(line_no, "header declares " + std::to_string(m) + " edges, found " +
                                  std::to_string(edges.size()));
  }
  // Duplicate detection with line numbers.
  std::vector<std::size_t> idx(edges.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  auto key = [&](std::size_t i) {
    auto [u, v] = edges[i];
    return Edge{std::min(u, v), std::max(u, v)};
  };
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
  for (std::size_t i = 1; i < idx.size(); ++i) {
    if (key(idx[i]) == key(idx[i - 1])) throw ParseError(edge_line[idx[i]], "duplicate edge");
  }
  return Graph::from_edges(n, edges);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace ddom
