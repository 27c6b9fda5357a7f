#include <random>

#include "doctest.h"
#include "enumkern/graph.hpp"
#include "test_helpers.hpp"

using namespace enumkern;
using namespace enumkern::testing;

TEST_CASE("induced subgraph of a triangle edge pair") {
  Graph g = complete_graph(3);
  auto [sub, map] = g.induced_subgraph(VertexSet{0, 1});
  CHECK(sub.vertex_count() == 2);
  CHECK(sub.edge_count() == 1);
  CHECK(map.at(0) == 0);
  CHECK(map.at(1) == 1);
}

TEST_CASE("induced subgraph identity case") {
  std::mt19937_64 rng(7);
  Graph g = random_graph(6, 0.5, rng);
  auto [sub, map] = g.induced_subgraph(VertexSet::range(6));
  CHECK(sub == g);
}

TEST_CASE("induced subgraph drops middle of a path") {
  Graph g = path_graph(3);
  auto [sub, _] = g.induced_subgraph(VertexSet{0, 2});
  // Checked against a brute edge scan of the definition: no edge survives.
  CHECK(sub.vertex_count() == 2);
  CHECK(sub.edge_count() == 0);
}

TEST_CASE("vertex and edge edits") {
  Graph g = Graph::build(3, {Edge(1, 2)});  // K1 u K2
  Graph d = g.delete_vertices(VertexSet{0});
  CHECK(d.vertex_count() == 2);
  CHECK(d.edge_count() == 1);

  Graph g2 = complete_graph(3);
  Graph same = g2.add_edges(EdgeSet({Edge(0, 1)}));
  CHECK(same == g2);

  Graph p3 = cycle_graph(3).delete_edges(EdgeSet({Edge(0, 1)}));
  CHECK(p3.edge_count() == 2);
  CHECK(p3.is_forest());
  CHECK(p3.connected_components().size() == 1);

  CHECK_THROWS_AS(g2.add_edges(EdgeSet({Edge(1, 1)})), std::invalid_argument);
  CHECK_THROWS_AS(g2.delete_vertices(VertexSet{5}), std::out_of_range);
}

TEST_CASE("identify merges neighborhoods") {
  // P3 a-b-c, identify a into c: single edge remains.
  Graph p3 = path_graph(3);
  Graph r = p3.identify(2, 0);
  CHECK(r.vertex_count() == 2);
  CHECK(r.edge_count() == 1);
  CHECK(r.has_label(2));
  CHECK(!r.has_label(0));

  Graph k3 = complete_graph(3);
  Graph k2 = k3.identify(0, 1);
  CHECK(k2.vertex_count() == 2);
  CHECK(k2.edge_count() == 1);

  Graph iso = edgeless_graph(2).identify(1, 0);
  CHECK(iso.vertex_count() == 1);
  CHECK(iso.edge_count() == 0);
  CHECK_THROWS_AS(p3.identify(1, 1), std::invalid_argument);
}

TEST_CASE("identify edge-count bounds") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_graph(7, 0.4, rng);
    std::uniform_int_distribution<int> pick(0, 6);
    int keep = pick(rng), merge = pick(rng);
    if (keep == merge) continue;
    long long m = g.edge_count();
    int dm = g.degree(merge);
    bool adjacent = g.has_edge(keep, merge);
    int common = set_intersect(VertexSet(g.neighbors(keep)),
                               VertexSet(g.neighbors(merge))).size();
    Graph r = g.identify(keep, merge);
    r.audit_simple();
    CHECK(r.edge_count() >= m - dm);
    if (adjacent || common > 0) CHECK(r.edge_count() <= m - 1);
    else CHECK(r.edge_count() == m);
  }
}

TEST_CASE("connected components") {
  CHECK(edgeless_graph(0).connected_components().empty());
  Graph g = Graph::build(3, {Edge(0, 1)});
  CHECK(g.connected_components().size() == 2);
  CHECK(cycle_graph(4).connected_components().size() == 1);
}

TEST_CASE("bridges") {
  std::mt19937_64 rng(3);
  Graph tree = random_forest(8, rng);
  CHECK(tree.bridges().size() == tree.edge_count());
  CHECK(cycle_graph(4).bridges().empty());

  // Two triangles joined by one edge: exactly the joining edge, verified by
  // the removal test on every edge.
  std::vector<Edge> es{Edge(0, 1), Edge(1, 2), Edge(0, 2),
                       Edge(3, 4), Edge(4, 5), Edge(3, 5), Edge(2, 3)};
  Graph g = Graph::build(6, es);
  EdgeSet br = g.bridges();
  for (const Edge& e : es) {
    size_t before = g.connected_components().size();
    size_t after = g.delete_edges(EdgeSet({e})).connected_components().size();
    CHECK(br.contains(e) == (after > before));
  }
  CHECK(br.size() == 1);
  CHECK(br.contains(Edge(2, 3)));
}

TEST_CASE("contract bridges") {
  std::mt19937_64 rng(5);
  Graph tree = random_forest(5, rng);
  if (tree.is_connected()) {
    auto [cb, pre] = tree.contract_bridges();
    CHECK(cb.vertex_count() == 1);
    CHECK(pre[0].size() == 5);
  }

  auto [cb4, pre4] = cycle_graph(4).contract_bridges();
  CHECK(cb4.vertex_count() == 4);
  CHECK(cb4.edge_count() == 4);

  // Triangle with a pendant path of length 2: one contracted vertex has a
  // three-vertex preimage (the attachment vertex plus the path).
  Graph g = Graph::build(5, {Edge(0, 1), Edge(1, 2), Edge(0, 2),
                             Edge(2, 3), Edge(3, 4)});
  auto [cb, pre] = g.contract_bridges();
  CHECK(cb.vertex_count() == 3);
  bool found = false;
  for (const auto& p : pre)
    if (p.size() == 3 && p.contains(2) && p.contains(3) && p.contains(4))
      found = true;
  CHECK(found);
}

TEST_CASE("contract bridges is a fixpoint") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 80; ++trial) {
    Graph g = random_graph(8, 0.25, rng);
    auto [cb, pre] = g.contract_bridges();
    cb.audit_simple();
    CHECK(cb.bridges().empty());
    auto [cb2, pre2] = cb.contract_bridges();
    CHECK(cb2.vertex_count() == cb.vertex_count());
    // Preimages partition V and induce trees of bridges.
    int total = 0;
    EdgeSet host_bridges = g.bridges();
    for (const auto& p : pre) {
      total += p.size();
      Graph sub = g.induced_subgraph(p).first;
      CHECK(sub.is_forest());
      CHECK(sub.is_connected());
      for (const Edge& e : sub.edges())
        CHECK(host_bridges.contains(Edge(g.id_of_label(sub.label(e.u)),
                                         g.id_of_label(sub.label(e.v)))));
    }
    CHECK(total == g.vertex_count());
  }
}

TEST_CASE("edits keep graphs simple") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_graph(7, 0.35, rng);
    g.audit_simple();
    g.delete_vertices(VertexSet{0, 3}).audit_simple();
    if (g.edge_count() > 0) {
      Edge e = g.edges()[0];
      g.delete_edges(EdgeSet({e})).audit_simple();
    }
    g.add_edges(EdgeSet({Edge(0, 6)})).audit_simple();
    g.identify(0, 5).audit_simple();
  }
}
