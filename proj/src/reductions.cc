#include "ddom/reductions.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ddom/errors.h"
#include "ddom/exact.h"
#include "ddom/greedy.h"

namespace ddom {

std::string to_string(const Role& r) {
  switch (r.kind) {
    case Role::Kind::kOriginal: return "original(" + std::to_string(r.index) + ")";
    case Role::Kind::kPendantW: return "pendant_w(" + std::to_string(r.index) + ")";
    case Role::Kind::kPendantZ: return "pendant_z(" + std::to_string(r.index) + ")";
    case Role::Kind::kApexP: return "apex_p";
    case Role::Kind::kApexQ: return "apex_q";
    case Role::Kind::kGadget: return "gadget(" + std::to_string(r.index) + "," + std::string(1, r.name) + ")";
  }
  return "?";
}

std::string TransformResult::role_map_text() const {
  std::ostringstream out;
  for (std::size_t v = 0; v < role.size(); ++v) out << "role " << v << ' ' << to_string(role[v]) << '\n';
  return out.str();
}

namespace {

std::vector<Role> original_roles(std::size_t n) {
  std::vector<Role> roles(n);
  for (std::size_t v = 0; v < n; ++v) roles[v] = {Role::Kind::kOriginal, v, 0};
  return roles;
}

void require_certificate(const TransformResult& tr, const VertexSet& dd) {
  if (!dd.empty() && dd.members().back() >= tr.h.num_vertices()) {
    throw InvalidCertificate("certificate names a vertex outside the transformed graph");
  }
  if (!is_disjunctive_dominating(tr.h, dd, 2)) {
    throw InvalidCertificate("certificate is not a disjunctive dominating set of the transformed graph");
  }
}

}  // namespace

TransformResult gc_transform(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<Edge> edges = g.edges();
  TransformResult tr;
  tr.role = original_roles(n);
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(n + i));
    tr.role.push_back({Role::Kind::kPendantW, i, 0});
  }
  tr.h = Graph::from_edges(2 * n, edges);
  return tr;
}

TransformResult domination_hardness_transform(const Graph& g) {
  const std::size_t n = g.num_vertices();
  const auto p = static_cast<Vertex>(3 * n);
  const auto q = static_cast<Vertex>(3 * n + 1);
  std::vector<Edge> edges = g.edges();
  TransformResult tr;
  tr.role = original_roles(n);
  for (std::size_t i = 0; i < n; ++i) tr.role.push_back({Role::Kind::kPendantW, i, 0});
  for (std::size_t i = 0; i < n; ++i) tr.role.push_back({Role::Kind::kPendantZ, i, 0});
  tr.role.push_back({Role::Kind::kApexP, 0, 0});
  tr.role.push_back({Role::Kind::kApexQ, 0, 0});
  for (std::size_t i = 0; i < n; ++i) {
    const auto v = static_cast<Vertex>(i);
    const auto w = static_cast<Vertex>(n + i);
    const auto z = static_cast<Vertex>(2 * n + i);
    edges.emplace_back(v, w);
    edges.emplace_back(w, z);
    edges.emplace_back(z, p);
  }
  edges.emplace_back(p, q);
  tr.h = Graph::from_edges(3 * n + 2, edges);
  return tr;
}

VertexSet extract_dominating(const Graph& g, const TransformResult& tr, const VertexSet& dd) {
  const std::size_t n = g.num_vertices();
  if (tr.h.num_vertices() != 3 * n + 2) throw InputError("transform does not match the source graph");
  require_certificate(tr, dd);
  auto in = dd.mask(tr.h.num_vertices());
  for (std::size_t i = 0; i < n; ++i) {
    if (in[n + i] || in[2 * n + i]) {
      in[n + i] = false;
      in[2 * n + i] = false;
      in[i] = true;
    }
  }
  in.resize(n);
  return VertexSet::from_mask(in);
}

VertexSet approx_domination(const Graph& g, std::size_t l) {
  if (l < 1) throw InputError("approx_domination needs l >= 1");
  if (auto small = exact_solve_capped(g, Problem::kDomination, l)) return *small;
  const TransformResult tr = domination_hardness_transform(g);
  return extract_dominating(g, tr, approx_disjunctive(tr.h, 2));
}

Vertex gadget_vertex(const Graph& g, std::size_t edge, char name) {
  auto it = std::find(kGadgetNames.begin(), kGadgetNames.end(), name);
  if (it == kGadgetNames.end()) throw InputError(std::string("unknown gadget vertex '") + name + "'");
  return static_cast<Vertex>(g.num_vertices() + 9 * edge +
                             static_cast<std::size_t>(it - kGadgetNames.begin()));
}

TransformResult apx_gadget_transform(const Graph& g) {
  if (g.num_vertices() == 0 || g.min_degree() < 2) throw MinDegreeTooLow();
  const std::size_t n = g.num_vertices();
  const auto source_edges = g.edges();
  TransformResult tr;
  tr.role = original_roles(n);
  std::vector<Edge> edges;
  edges.reserve(11 * source_edges.size());
  for (std::size_t i = 0; i < source_edges.size(); ++i) {
    for (char name : kGadgetNames) tr.role.push_back({Role::Kind::kGadget, i, name});
    auto at = [&](char name) { return gadget_vertex(g, i, name); };
    auto [r, s] = source_edges[i];
    edges.insert(edges.end(), {{r, at('x')},
                               {s, at('z')},
                               {at('x'), at('w')},
                               {at('z'), at('w')},
                               {at('x'), at('y')},
                               {at('z'), at('y')},
                               {at('y'), at('a')},
                               {at('a'), at('b')},
                               {at('b'), at('c')},
                               {at('c'), at('d')},
                               {at('d'), at('f')}});
  }
  tr.h = Graph::from_edges(n + 9 * source_edges.size(), edges);
  return tr;
}

VertexSet extract_vertex_cover(const Graph& g, const TransformResult& tr, const VertexSet& dd) {
  const std::size_t n = g.num_vertices();
  const auto source_edges = g.edges();
  const std::size_t m = source_edges.size();
  if (tr.h.num_vertices() != n + 9 * m) throw InputError("transform does not match the source graph");
  require_certificate(tr, dd);
  auto in = dd.mask(tr.h.num_vertices());
  auto at = [&](std::size_t i, char name) { return gadget_vertex(g, i, name); };

  for (std::size_t i = 0; i < m; ++i) {
    if (in[at(i, 'f')]) {
      in[at(i, 'f')] = false;
      in[at(i, 'd')] = true;
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (in[at(i, 'y')]) continue;
    for (char name : {'a', 'b', 'c'}) {
      if (in[at(i, name)]) {
        in[at(i, name)] = false;
        in[at(i, 'y')] = true;
        break;
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    bool moved = false;
    for (char name : {'w', 'x', 'z'}) {
      if (in[at(i, name)]) {
        in[at(i, name)] = false;
        moved = true;
      }
    }
    auto [r, s] = source_edges[i];
    if (moved && !in[r] && !in[s]) in[r] = true;
  }

  in.resize(n);
  VertexSet cover = VertexSet::from_mask(in);
  if (!is_vertex_cover(g, cover)) throw std::logic_error("normalised certificate does not cover every edge");
  return cover;
}

}  // namespace ddom
