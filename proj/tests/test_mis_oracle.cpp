#include <random>

#include "doctest.h"
#include "enumkern/mis_oracle.hpp"
#include "test_helpers.hpp"

using namespace enumkern;
using namespace enumkern::testing;

TEST_CASE("alpha on forests") {
  CHECK(alpha_forest(path_graph(3)) == 2);
  CHECK(alpha_forest(edgeless_graph(1)) == 1);
  // Star K1,4: 4, pinned by brute force over all 2^5 subsets.
  Graph star = star_graph(4);
  CHECK(alpha_brute(star) == 4);
  CHECK(alpha_forest(star) == 4);
  CHECK_THROWS_AS(alpha_forest(cycle_graph(3)), std::invalid_argument);
}

TEST_CASE("alpha exact matches brute force") {
  MisOracle oracle;
  CHECK(oracle.alpha(complete_graph(3)) == 1);
  CHECK(alpha_brute(cycle_graph(5)) == 2);
  CHECK(oracle.alpha(cycle_graph(5)) == 2);
  CHECK(oracle.alpha(path_graph(3)) == alpha_forest(path_graph(3)));

  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 1 + (int)(rng() % 14);
    Graph g = random_graph(n, 0.1 + 0.6 * (trial % 7) / 7.0, rng);
    CHECK(oracle.alpha(g) == alpha_brute(g));
  }
}

TEST_CASE("alpha exact cap is enforced") {
  MisOracle small(5);
  CHECK_THROWS_AS(small.alpha(edgeless_graph(6)), ResourceCapError);
  CHECK(small.alpha(edgeless_graph(5)) == 5);
}

TEST_CASE("alpha forest equals alpha exact on random forests") {
  MisOracle oracle;
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    Graph f = random_forest(2 + (int)(rng() % 11), rng);
    CHECK(alpha_forest(f) == oracle.alpha(f));
  }
}

TEST_CASE("is_extension") {
  MisOracle oracle;
  Graph p3 = path_graph(3);
  // Brute: no independent superset of {b} reaches size 2.
  CHECK(!oracle.is_extension(p3, VertexSet{1}, {}, 2));
  CHECK(oracle.is_extension(p3, {}, {}, 0));
  // Brute: {a} with c avoided cannot reach 2 either.
  CHECK(!oracle.is_extension(p3, VertexSet{0}, VertexSet{2}, 2));
  CHECK(oracle.is_extension(p3, VertexSet{0}, {}, 2));
  CHECK_THROWS_AS(oracle.is_extension(p3, VertexSet{0}, VertexSet{0}, 1),
                  std::invalid_argument);
}

TEST_CASE("conflicts") {
  MisOracle oracle;
  // Region P3 on ids 0-1-2, probe vertex 3.
  Graph mid = Graph::build(4, {Edge(0, 1), Edge(1, 2), Edge(3, 1)});
  CHECK(conflicts(mid, VertexSet{0, 1, 2}, VertexSet{3}, oracle) == 0);

  Graph none = Graph::build(4, {Edge(0, 1), Edge(1, 2)});
  CHECK(conflicts(none, VertexSet{0, 1, 2}, VertexSet{3}, oracle) == 0);

  Graph ends = Graph::build(4, {Edge(0, 1), Edge(1, 2), Edge(3, 0), Edge(3, 2)});
  CHECK(conflicts(ends, VertexSet{0, 1, 2}, VertexSet{3}, oracle) == 1);

  CHECK_THROWS_AS(conflicts(mid, VertexSet{0, 1}, VertexSet{1}, oracle),
                  std::invalid_argument);
}

TEST_CASE("conflicts bounds") {
  MisOracle oracle;
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_graph(9, 0.3, rng);
    VertexSet region{0, 1, 2, 3, 4};
    VertexSet probe{6, 7};
    int c = conflicts(g, region, probe, oracle);
    CHECK(c >= 0);
    CHECK(c <= region.size());
    if (disjoint(g.open_neighborhood(probe), region)) CHECK(c == 0);
  }
}

TEST_CASE("enumerate_chunks") {
  Graph pair = Graph::build(2, {Edge(0, 1)});
  auto chunks = enumerate_chunks(pair, VertexSet{0, 1}, 2, {});
  CHECK(chunks.size() == 3);  // {}, {a}, {b}

  Graph three = edgeless_graph(3);
  CHECK(enumerate_chunks(three, VertexSet{0, 1, 2}, 2, {}).size() == 7);

  Graph two = edgeless_graph(2);
  auto excl = enumerate_chunks(two, VertexSet{0, 1}, 2, {VertexSet{0, 1}});
  CHECK(excl.size() == 3);

  // Brute-force filter: every reported chunk is independent, within the size
  // bound, forbidden-free; nothing valid is missing.
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(6, 0.4, rng);
    VertexSet x{0, 1, 2, 3};
    std::vector<VertexSet> forbidden{VertexSet{0, 2}};
    auto got = enumerate_chunks(g, x, 2, forbidden);
    std::vector<VertexSet> want;
    for (unsigned mask = 0; mask < 16; ++mask) {
      std::vector<int> ids;
      for (int b = 0; b < 4; ++b)
        if (mask & (1u << b)) ids.push_back(x.items()[b]);
      VertexSet s(std::move(ids));
      if (s.size() > 2 || !g.is_independent(s)) continue;
      bool bad = false;
      for (const auto& f : forbidden)
        if (is_subset(f, s)) bad = true;
      if (!bad) want.push_back(s);
    }
    std::sort(want.begin(), want.end());
    std::vector<VertexSet> got_sorted = got;
    std::sort(got_sorted.begin(), got_sorted.end());
    CHECK(got_sorted == want);
  }
}

TEST_CASE("chunk degree and freeness") {
  MisOracle oracle;
  // Two components; probe 4 adjacent to both ends of the first path only.
  Graph g = Graph::build(5, {Edge(0, 1), Edge(1, 2), Edge(4, 0), Edge(4, 2)});
  std::vector<VertexSet> comps{VertexSet{0, 1, 2}, VertexSet{3}};
  CHECK(chunk_degree(g, comps, VertexSet{}, oracle) == 0);
  CHECK(chunk_degree(g, comps, VertexSet{4}, oracle) == 1);

  auto chunks = enumerate_chunks(g, VertexSet{4}, 2, {});
  CHECK(!is_free(g, chunks, VertexSet{0, 1, 2}, oracle));
  CHECK(is_free(g, chunks, VertexSet{3}, oracle));
  CHECK(is_free(g, {}, VertexSet{0, 1, 2, 3}, oracle));
  // y = 0 bound is vacuous.
  CHECK(is_almost_free(g, chunks, VertexSet{0, 1, 2}, VertexSet{0, 1, 2, 3}, 0,
                       oracle));
  CHECK(!is_almost_free(g, chunks, VertexSet{0, 1, 2}, VertexSet{0, 1, 2, 3}, 2,
                        oracle));
}
