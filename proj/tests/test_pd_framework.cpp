#include <random>

#include "doctest.h"
#include "enumkern/brute.hpp"
#include "enumkern/flashlight.hpp"
#include "enumkern/mis_oracle.hpp"
#include "enumkern/pd_kernel.hpp"
#include "test_helpers.hpp"

using namespace enumkern;
using namespace enumkern::testing;

namespace {

// Degenerate kernel: compression is the identity, the core is everything,
// every compressed solution is its own canonical class.
class IdentityKernel : public PdKernel {
 public:
  std::string name() const override { return "identity"; }

  KernelResult compress(const EnumInstance& inst) const override {
    KernelResult r;
    r.original = inst;
    r.compressed = inst;
    r.core = CoreMap::identity(inst.graph.label_set());
    r.log.kernel = name();
    return r;
  }

  bool is_good_trace(const KernelResult& r,
                     const VertexSet& trace) const override {
    auto sols = brute_solutions(r.original);
    return std::find(sols.begin(), sols.end(), trace) != sols.end();
  }

  bool canonical_check(const KernelResult&, const VertexSet&) const override {
    return true;
  }

  std::unique_ptr<SolutionStream> lift(
      const KernelResult&, const VertexSet& sol,
      std::shared_ptr<StepCounter> counter) const override {
    return std::make_unique<VectorStream>(std::vector<VertexSet>{sol},
                                          std::move(counter));
  }
};

// Negative control: lifts every class twice.
class DoubleLiftKernel : public IdentityKernel {
 public:
  std::unique_ptr<SolutionStream> lift(
      const KernelResult&, const VertexSet& sol,
      std::shared_ptr<StepCounter> counter) const override {
    return std::make_unique<VectorStream>(std::vector<VertexSet>{sol, sol},
                                          std::move(counter));
  }
};

}  // namespace

TEST_CASE("identity kernel passes the partition verifier") {
  IdentityKernel kernel;
  std::mt19937_64 rng(151);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_graph(2 + (int)(rng() % 7), 0.3, rng);
    EnumInstance inst = make_is_instance(g, (int)(rng() % 3));
    PartitionReport rep = verify_partition(kernel, inst);
    REQUIRE(rep.pass());

    // The kernel stream equals direct flashlight output as a set.
    auto got = drain(*run_pd_kernel(kernel, inst));
    auto want = brute_solutions(inst);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);
  }
}

TEST_CASE("double lifting is flagged as a disjointness failure") {
  DoubleLiftKernel kernel;
  EnumInstance inst = make_is_instance(path_graph(3), 1);
  PartitionReport rep = verify_partition(kernel, inst);
  CHECK(!rep.pass());
  CHECK(!rep.disjoint);
}

TEST_CASE("empty solution sets give empty streams") {
  IdentityKernel kernel;
  EnumInstance no = make_is_instance(complete_graph(3), 3);
  auto got = drain(*run_pd_kernel(kernel, no));
  CHECK(got.empty());
  PartitionReport rep = verify_partition(kernel, no);
  CHECK(rep.pass());
}

TEST_CASE("identity eppt composition preserves behavior") {
  auto inner = std::make_shared<IdentityKernel>();
  auto composed =
      eppt_compose(std::make_shared<IdentityEppt>(), inner,
                   std::make_shared<IdentityEppt>(), "identity-composed");
  std::mt19937_64 rng(157);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = random_graph(5, 0.4, rng);
    EnumInstance inst = make_is_instance(g, 1);
    auto got = drain(*run_pd_kernel(*composed, inst));
    auto want = drain(*run_pd_kernel(*inner, inst));
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);
    CHECK(verify_partition(*composed, inst).pass());
  }
}

TEST_CASE("enumerate_solutions understands all three problems") {
  Graph g = path_graph(4);
  EnumInstance vc = make_vc_instance(g, 2);
  auto vcs = drain(*enumerate_solutions(vc, nullptr));
  auto vcw = brute_solutions(vc);
  std::sort(vcs.begin(), vcs.end());
  std::sort(vcw.begin(), vcw.end());
  CHECK(vcs == vcw);

  EnumInstance ais = make_ais_instance(edgeless_graph(2), 2, VertexSet{0, 1},
                                       {VertexSet{0, 1}});
  CHECK(drain(*enumerate_solutions(ais, nullptr)).empty());

  EnumInstance is0 = make_is_instance(path_graph(3), 0);
  auto sols = drain(*enumerate_solutions(is0, nullptr));
  CHECK(sols.front() == VertexSet{});
  CHECK(sols.size() == 5);  // {}, {0}, {0,2}, {1}, {2}
}

TEST_CASE("rule log json round trip") {
  RuleLog log;
  log.kernel = "demo";
  RuleLogEntry e;
  e.rule = "r1";
  e.ops.push_back({GraphOp::Kind::RemoveVertex, 3, 0});
  e.ops.push_back({GraphOp::Kind::AddEdge, 1, 2});
  e.param_delta = -1;
  e.modulator_add = {5};
  e.meta["note"] = "x";
  log.entries.push_back(e);
  RuleLog back = RuleLog::from_jsonl(log.to_jsonl());
  CHECK(back.kernel == "demo");
  REQUIRE(back.entries.size() == 1);
  CHECK(back.entries[0].rule == "r1");
  CHECK(back.entries[0].ops.size() == 2);
  CHECK(back.entries[0].param_delta == -1);
  CHECK(back.to_jsonl() == log.to_jsonl());
}

TEST_CASE("apply_entry performs ops in order") {
  EnumInstance inst = make_is_instance(path_graph(3), 1, VertexSet{0});
  RuleLogEntry e;
  e.rule = "demo";
  e.ops.push_back({GraphOp::Kind::AddEdge, 0, 2});
  e.ops.push_back({GraphOp::Kind::RemoveVertex, 1, 0});
  e.param_delta = -1;
  EnumInstance out = apply_entry(inst, e);
  CHECK(out.graph.vertex_count() == 2);
  CHECK(out.graph.edge_count() == 1);
  CHECK(*out.target_t == 0);
  CHECK(out.modulator == VertexSet{0});
}
