#include "ddom/reductions.h"

#include <gtest/gtest.h>

#include "ddom/errors.h"
#include "ddom/exact.h"
#include "ddom/generators.h"
#include "ddom/greedy.h"
#include "ddom/ordering.h"
#include "oracle.h"

namespace ddom {
namespace {

using oracle::Kind;

TEST(GcTransformTest, SmallCases) {
  TransformResult k2 = gc_transform(named_graph("complete", 2));
  EXPECT_EQ(serialize_graph(k2.h), "p 4 3\ne 0 1\ne 0 2\ne 1 3\n");
  EXPECT_EQ(to_string(k2.role[3]), "pendant_w(1)");
  EXPECT_EQ(k2.role_map_text(), "role 0 original(0)\nrole 1 original(1)\nrole 2 pendant_w(0)\nrole 3 pendant_w(1)\n");

  TransformResult net = gc_transform(named_graph("complete", 3));
  EXPECT_EQ(net.h.num_vertices(), 6u);
  EXPECT_EQ(net.h.num_edges(), 6u);
}

TEST(GcTransformTest, ChordalStaysChordal) {
  // A chordal graph has a PEO; attaching pendants first keeps one.
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = gen_proper_interval(3 + seed % 8, seed, 0.6);
    TransformResult tr = gc_transform(g);
    std::vector<Vertex> order;
    for (std::size_t i = 0; i < g.num_vertices(); ++i) order.push_back(static_cast<Vertex>(g.num_vertices() + i));
    const VertexOrdering peo = compute_bco(g).reversed();
    for (Vertex v : peo.order()) order.push_back(v);
    EXPECT_TRUE(is_peo(tr.h, VertexOrdering(order)));
  }
}

TEST(GcTransformProperty, MatchesTwoDomination) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = gen_connected(2 + seed % 6, 0.45, seed);
    EXPECT_EQ(exact_disjunctive(gc_transform(g).h, 2).size(), oracle::minimum(g, Kind::kTwoDomination)) << seed;
  }
}

TEST(HardnessTransformTest, Layout) {
  TransformResult tr = domination_hardness_transform(named_graph("complete", 2));
  EXPECT_EQ(tr.h.num_vertices(), 8u);
  EXPECT_EQ(tr.h.num_edges(), 8u);  // the K2 edge is kept
  EXPECT_TRUE(tr.h.has_edge(0, 2));  // v0 - w0
  EXPECT_TRUE(tr.h.has_edge(2, 4));  // w0 - z0
  EXPECT_TRUE(tr.h.has_edge(4, 6));  // z0 - p
  EXPECT_TRUE(tr.h.has_edge(6, 7));  // p - q
  EXPECT_EQ(to_string(tr.role[6]), "apex_p");
  EXPECT_EQ(to_string(tr.role[5]), "pendant_z(1)");
  EXPECT_EQ(exact_disjunctive(tr.h, 2).size(), 2u);
  EXPECT_TRUE(is_disjunctive_dominating(tr.h, VertexSet{0, 6}));

  TransformResult one = domination_hardness_transform(Graph(1));
  EXPECT_EQ(one.h.num_vertices(), 5u);
  EXPECT_EQ(one.h.num_edges(), 4u);
}

TEST(HardnessTransformTest, Extraction) {
  Graph k2 = named_graph("complete", 2);
  TransformResult tr = domination_hardness_transform(k2);
  EXPECT_EQ(extract_dominating(k2, tr, VertexSet{0, 6}), (VertexSet{0}));
  EXPECT_THROW(extract_dominating(k2, tr, VertexSet{0}), InvalidCertificate);
  EXPECT_THROW(extract_dominating(k2, tr, VertexSet{0, 9}), InvalidCertificate);

  Graph p3 = named_graph("path", 3);
  TransformResult h3 = domination_hardness_transform(p3);
  // All three w's plus p; each w_i is rewritten to v_i.
  VertexSet dd{3, 4, 5, 9};
  ASSERT_TRUE(is_disjunctive_dominating(h3.h, dd));
  EXPECT_EQ(extract_dominating(p3, h3, dd), (VertexSet{0, 1, 2}));
}

TEST(HardnessTransformTest, ApproxDomination) {
  EXPECT_EQ(approx_domination(named_graph("path", 3), 1), (VertexSet{1}));
  EXPECT_EQ(approx_domination(named_graph("complete", 2), 3).size(), 1u);
  Graph c5 = named_graph("cycle", 5);
  EXPECT_TRUE(is_dominating(c5, approx_domination(c5, 1)));
  EXPECT_THROW(approx_domination(c5, 0), InputError);
}

TEST(HardnessTransformProperty, Sandwich) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = gen_connected(1 + seed % 7, 0.4, seed);
    TransformResult tr = domination_hardness_transform(g);
    const std::size_t gamma = oracle::minimum(g, Kind::kDomination);
    const VertexSet opt = exact_disjunctive(tr.h, 2);
    EXPECT_LE(opt.size(), gamma + 1);
    for (const VertexSet& dd : {opt, approx_disjunctive(tr.h, 2)}) {
      VertexSet d = extract_dominating(g, tr, dd);
      EXPECT_TRUE(is_dominating(g, d));
      EXPECT_LE(d.size(), dd.size());
    }
    EXPECT_TRUE(is_dominating(g, approx_domination(g, 1)));
  }
}

TEST(ApxTransformTest, Shapes) {
  TransformResult c3 = apx_gadget_transform(named_graph("cycle", 3));
  EXPECT_EQ(c3.h.num_vertices(), 30u);
  EXPECT_EQ(c3.h.num_edges(), 33u);
  EXPECT_TRUE(is_bipartite(c3.h));
  EXPECT_EQ(to_string(c3.role[3 + 9 + 2]), "gadget(1,y)");

  Graph k4 = named_graph("complete", 4);
  TransformResult h = apx_gadget_transform(k4);
  EXPECT_EQ(h.h.num_vertices(), 58u);
  EXPECT_TRUE(is_bipartite(h.h));
  EXPECT_EQ(h.h.max_degree(), 3u);

  EXPECT_THROW(apx_gadget_transform(named_graph("path", 3)), MinDegreeTooLow);
  EXPECT_THROW(apx_gadget_transform(Graph(0)), MinDegreeTooLow);
  EXPECT_THROW(gadget_vertex(k4, 0, 'q'), InputError);
}

VertexSet canonical_certificate(const Graph& g, const VertexSet& cover) {
  VertexSet dd = cover;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    dd.insert(gadget_vertex(g, i, 'y'));
    dd.insert(gadget_vertex(g, i, 'd'));
  }
  return dd;
}

TEST(ApxTransformTest, CycleThreeOptimum) {
  Graph c3 = named_graph("cycle", 3);
  TransformResult tr = apx_gadget_transform(c3);
  EXPECT_EQ(exact_disjunctive(tr.h, 2).size(), 8u);

  VertexSet dd = canonical_certificate(c3, VertexSet{0, 1});
  ASSERT_TRUE(is_disjunctive_dominating(tr.h, dd));
  EXPECT_EQ(extract_vertex_cover(c3, tr, dd), (VertexSet{0, 1}));
}

TEST(ApxTransformTest, NormalisationSwaps) {
  Graph c3 = named_graph("cycle", 3);
  TransformResult tr = apx_gadget_transform(c3);
  VertexSet dd = canonical_certificate(c3, VertexSet{0, 1});
  // f instead of d, and a instead of y, in the first gadget.
  dd.erase(gadget_vertex(c3, 0, 'd'));
  dd.insert(gadget_vertex(c3, 0, 'f'));
  dd.erase(gadget_vertex(c3, 0, 'y'));
  dd.insert(gadget_vertex(c3, 0, 'a'));
  if (is_disjunctive_dominating(tr.h, dd)) {
    VertexSet vc = extract_vertex_cover(c3, tr, dd);
    EXPECT_TRUE(is_vertex_cover(c3, vc));
    EXPECT_LE(vc.size(), dd.size() - 6);
  }
  // Replacing an original by a gadget w keeps a valid certificate when the
  // other endpoint is picked; extraction lands back on an endpoint.
  VertexSet with_w = canonical_certificate(c3, VertexSet{0, 1});
  with_w.insert(gadget_vertex(c3, 2, 'w'));
  ASSERT_TRUE(is_disjunctive_dominating(tr.h, with_w));
  VertexSet vc = extract_vertex_cover(c3, tr, with_w);
  EXPECT_TRUE(is_vertex_cover(c3, vc));
  EXPECT_THROW(extract_vertex_cover(c3, tr, VertexSet{0, 1}), InvalidCertificate);
}

TEST(ApxTransformProperty, ExtractionOnRandomCertificates) {
  Rng rng(41);
  Graph k4 = named_graph("complete", 4);
  TransformResult tr = apx_gadget_transform(k4);
  const std::size_t m = k4.num_edges();
  for (int trial = 0; trial < 200; ++trial) {
    // Greedy certificate plus random noise stays valid under supersets.
    VertexSet dd = approx_disjunctive(tr.h, 2);
    for (int extra = 0; extra < 3; ++extra) dd.insert(static_cast<Vertex>(rng.below(tr.h.num_vertices())));
    VertexSet vc = extract_vertex_cover(k4, tr, dd);
    EXPECT_TRUE(is_vertex_cover(k4, vc));
    EXPECT_LE(vc.size() + 2 * m, dd.size());
  }
}

TEST(TransformProperty, Deterministic) {
  Graph g = gen_cubic(8, 2);
  EXPECT_EQ(serialize_graph(apx_gadget_transform(g).h), serialize_graph(apx_gadget_transform(g).h));
  EXPECT_EQ(serialize_graph(gc_transform(g).h), serialize_graph(gc_transform(g).h));
  EXPECT_EQ(domination_hardness_transform(g).role_map_text(), domination_hardness_transform(g).role_map_text());
}

}  // namespace
}  // namespace ddom
