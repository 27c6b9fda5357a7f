#include <random>

#include "doctest.h"
#include "enumkern/brute.hpp"
#include "enumkern/kernel_vc_size.hpp"
#include "test_helpers.hpp"

using namespace enumkern;
using namespace enumkern::testing;

TEST_CASE("isolated vertex rule") {
  EnumInstance mix = make_vc_instance(Graph::build(3, {Edge(1, 2)}), 1);
  EnumInstance out = rule_vc_isolated(mix);
  CHECK(out.graph.vertex_count() == 2);
  CHECK(out.graph.edge_count() == 1);
  CHECK(*out.budget_k == 1);

  EnumInstance p3 = make_vc_instance(path_graph(3), 1);
  CHECK(rule_vc_isolated(p3).graph.vertex_count() == 3);

  EnumInstance edgeless = make_vc_instance(edgeless_graph(3), 0);
  EnumInstance empty = rule_vc_isolated(edgeless);
  CHECK(empty.graph.vertex_count() == 0);
  CHECK(brute_solutions(empty).size() == 1);  // exactly the empty cover
}

TEST_CASE("unmatched crown rule on the star") {
  EnumInstance star = make_vc_instance(star_graph(4), 1);
  auto res = heavy_crown_or_matching(star.graph, 1);
  REQUIRE(std::holds_alternative<HeavyCrown>(res));
  EnumInstance out = rule_vc_unmatched_crown(star, std::get<HeavyCrown>(res));
  CHECK(out.graph.vertex_count() == 2);
  CHECK(out.graph.edge_count() == 1);
  CHECK(*out.budget_k == 1);
}

TEST_CASE("unmatched crown rule keeps solution-nonemptiness") {
  std::mt19937_64 rng(131);
  int done = 0;
  while (done < 30) {
    int k = 1 + (int)(rng() % 3);
    Graph g = random_graph(3 * k + 2 + (int)(rng() % 4), 0.2, rng);
    EnumInstance inst = make_vc_instance(g, k);
    EnumInstance noiso = rule_vc_isolated(inst);
    if (noiso.graph.vertex_count() <= 3 * k) continue;
    auto res = heavy_crown_or_matching(noiso.graph, k);
    if (!std::holds_alternative<HeavyCrown>(res)) continue;
    ++done;
    EnumInstance out =
        rule_vc_unmatched_crown(noiso, std::get<HeavyCrown>(res));
    CHECK(brute_solutions(inst).empty() == brute_solutions(out).empty());
  }
}

TEST_CASE("compression size gate and trivial no") {
  VcSizeKernel kernel;

  KernelResult small = kernel.compress(make_vc_instance(path_graph(3), 1));
  CHECK(small.compressed.graph.vertex_count() == 3);
  CHECK(small.log.entries.empty());

  std::vector<Edge> es;
  for (int i = 0; i < 4; ++i) es.emplace_back(2 * i, 2 * i + 1);
  KernelResult no = kernel.compress(make_vc_instance(Graph::build(8, es), 2));
  CHECK(no.trivial_no);
  CHECK(brute_solutions(no.compressed).empty());

  KernelResult star = kernel.compress(make_vc_instance(star_graph(4), 1));
  CHECK(!star.trivial_no);
  CHECK(star.compressed.graph.vertex_count() <= 3);
}

TEST_CASE("choose and lift on the star") {
  VcSizeKernel kernel;
  KernelResult r = kernel.compress(make_vc_instance(star_graph(4), 1));
  REQUIRE(r.compressed.graph.vertex_count() == 2);
  // The compressed instance is one edge: center label 0 plus one leaf.
  VertexSet leaf_sol, center_sol{0};
  for (int l : r.compressed.graph.labels())
    if (l != 0) leaf_sol.insert(l);

  CHECK(kernel.canonical_check(r, center_sol));
  CHECK(VcSizeKernel::closure(r, center_sol) == center_sol);
  CHECK(!kernel.canonical_check(r, leaf_sol));
  CHECK(VcSizeKernel::closure(r, leaf_sol).size() == 4);

  auto lifted = drain(*kernel.lift(r, center_sol, make_step_counter()));
  CHECK(lifted == std::vector<VertexSet>{VertexSet{0}});

  auto all = drain(*run_pd_kernel(kernel, make_vc_instance(star_graph(4), 1)));
  CHECK(all == std::vector<VertexSet>{VertexSet{0}});
}

TEST_CASE("lift with slack enumerates free subsets") {
  VcSizeKernel kernel;
  // Star plus generous budget: closure of the center leaves free leaves.
  EnumInstance inst = make_vc_instance(star_graph(6), 3);
  KernelResult r = kernel.compress(inst);
  auto out = drain(*run_pd_kernel(kernel, inst));
  auto want = brute_solutions(inst);
  std::sort(out.begin(), out.end());
  std::sort(want.begin(), want.end());
  CHECK(out == want);
}

TEST_CASE("vc kernel equals brute force on random instances") {
  VcSizeKernel kernel;
  std::mt19937_64 rng(137);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 1 + (int)(rng() % 12);
    Graph g = random_graph(n, 0.1 + 0.5 * (trial % 4) / 4.0, rng);
    int k = (int)(rng() % 6);
    EnumInstance inst = make_vc_instance(g, k);
    auto got = drain(*run_pd_kernel(kernel, inst));
    auto want = brute_solutions(inst);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    REQUIRE(got == want);
  }
}

TEST_CASE("vc kernel satisfies the partition property") {
  VcSizeKernel kernel;
  std::mt19937_64 rng(139);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = random_graph(2 + (int)(rng() % 10), 0.3, rng);
    EnumInstance inst = make_vc_instance(g, (int)(rng() % 6));
    PartitionReport rep = verify_partition(kernel, inst);
    if (!rep.pass())
      for (const auto& f : rep.failures) MESSAGE(f);
    REQUIRE(rep.pass());
  }
}

TEST_CASE("vc kernel log replays to the compressed instance") {
  VcSizeKernel kernel;
  std::mt19937_64 rng(149);
  for (int trial = 0; trial < 25; ++trial) {
    Graph g = random_graph(3 + (int)(rng() % 9), 0.25, rng);
    EnumInstance inst = make_vc_instance(g, (int)(rng() % 5));
    KernelResult r = kernel.compress(inst);
    RuleLog round = RuleLog::from_jsonl(r.log.to_jsonl());
    EnumInstance replayed = replay_rule_log(inst, round);
    CHECK(serialize_instance(replayed) == serialize_instance(r.compressed));
    // Determinism of compression.
    KernelResult r2 = kernel.compress(inst);
    CHECK(r.log.to_jsonl() == r2.log.to_jsonl());
  }
}
