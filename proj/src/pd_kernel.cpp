#include "enumkern/pd_kernel.hpp"

#include <algorithm>

#include "enumkern/brute.hpp"
#include "enumkern/flashlight.hpp"
#include "enumkern/mis_oracle.hpp"

namespace enumkern {

using nlohmann::json;

VertexSet CoreMap::core_in_original() const {
  std::vector<int> out;
  for (int l : core_in_compressed) out.push_back(lambda.at(l));
  return VertexSet(std::move(out));
}

VertexSet CoreMap::trace_of_compressed(const VertexSet& sol) const {
  std::vector<int> out;
  for (int l : set_intersect(sol, core_in_compressed)) out.push_back(lambda.at(l));
  return VertexSet(std::move(out));
}

VertexSet CoreMap::trace_of_original(const VertexSet& sol) const {
  return set_intersect(sol, core_in_original());
}

CoreMap CoreMap::identity(const VertexSet& core) {
  CoreMap cm;
  cm.core_in_compressed = core;
  for (int l : core) cm.lambda[l] = l;
  return cm;
}

json CoreMap::to_json() const {
  json j;
  j["core"] = core_in_compressed.items();
  json lam = json::array();
  for (const auto& [from, to] : lambda) lam.push_back({from, to});
  j["lambda"] = std::move(lam);
  return j;
}

CoreMap CoreMap::from_json(const json& j) {
  CoreMap cm;
  cm.core_in_compressed = VertexSet(j.at("core").get<std::vector<int>>());
  for (const auto& pair : j.at("lambda"))
    cm.lambda[pair.at(0).get<int>()] = pair.at(1).get<int>();
  return cm;
}

namespace {

class LabelStream : public SolutionStream {
 public:
  LabelStream(std::unique_ptr<SolutionStream> ids, Graph g)
      : SolutionStream(ids->counter()), ids_(std::move(ids)), g_(std::move(g)) {}

 private:
  std::optional<VertexSet> advance() override {
    auto s = ids_->next();
    if (!s) return std::nullopt;
    return g_.labels_of_ids(*s);
  }
  std::unique_ptr<SolutionStream> ids_;
  Graph g_;
};

}  // namespace

std::unique_ptr<SolutionStream> enumerate_solutions(
    const EnumInstance& inst, std::shared_ptr<StepCounter> counter) {
  if (!counter) counter = make_step_counter();
  switch (inst.problem) {
    case Problem::IS: {
      if (*inst.target_t == 0 && inst.graph.vertex_count() <= 20)
        return std::make_unique<VectorStream>(brute_solutions(inst), counter);
      auto oracle = std::make_shared<MisOracle>(64);
      AlphaFn alpha = [oracle](const Graph& g, const VertexSet& keep) {
        return oracle->alpha_induced(g, keep);
      };
      auto ids = enum_is_lex(inst.graph, *inst.target_t,
                             VertexOrder::by_label(inst.graph), alpha, {}, {},
                             counter);
      return std::make_unique<LabelStream>(std::move(ids), inst.graph);
    }
    case Problem::VC: {
      EnumInstance clamped = inst;
      // Sol(G,k) equals Sol(G,n) as a set whenever k exceeds n.
      clamped.budget_k =
          std::min(*inst.budget_k, inst.graph.vertex_count());
      auto dual_stream = enumerate_solutions(dualize(clamped), counter);
      VertexSet all = inst.graph.label_set();
      return std::make_unique<MapStream>(
          std::move(dual_stream),
          [all](const VertexSet& s) { return set_minus(all, s); });
    }
    case Problem::AIS:
      return std::make_unique<VectorStream>(brute_solutions(inst), counter);
  }
  throw std::logic_error("unreachable");
}

std::unique_ptr<SolutionStream> PdKernel::enumerate_compressed(
    const KernelResult& r, std::shared_ptr<StepCounter> counter) const {
  return enumerate_solutions(r.compressed, std::move(counter));
}

namespace {

class KernelStream : public SolutionStream {
 public:
  KernelStream(const PdKernel& kernel, std::shared_ptr<KernelResult> result,
               std::shared_ptr<StepCounter> counter)
      : SolutionStream(std::move(counter)), kernel_(kernel),
        result_(std::move(result)) {
    compressed_ = kernel_.enumerate_compressed(*result_, counter_);
  }

 private:
  std::optional<VertexSet> advance() override {
    while (true) {
      if (lift_) {
        if (auto s = lift_->next()) return s;
        lift_.reset();
      }
      auto sol = compressed_->next();
      if (!sol) return std::nullopt;
      counter_->tick();
      if (kernel_.canonical_check(*result_, *sol))
        lift_ = kernel_.lift(*result_, *sol, counter_);
    }
  }

  const PdKernel& kernel_;
  std::shared_ptr<KernelResult> result_;
  std::unique_ptr<SolutionStream> compressed_;
  std::unique_ptr<SolutionStream> lift_;
};

}  // namespace

std::unique_ptr<SolutionStream> run_pd_kernel(const PdKernel& kernel,
                                              const EnumInstance& inst,
                                              std::shared_ptr<StepCounter> c) {
  return run_pd_kernel(kernel, kernel.compress(inst), std::move(c));
}

std::unique_ptr<SolutionStream> run_pd_kernel(const PdKernel& kernel,
                                              KernelResult result,
                                              std::shared_ptr<StepCounter> c) {
  if (!c) c = make_step_counter();
  return std::make_unique<KernelStream>(
      kernel, std::make_shared<KernelResult>(std::move(result)), std::move(c));
}

PartitionReport verify_partition(const PdKernel& kernel,
                                 const EnumInstance& inst) {
  PartitionReport rep;
  auto fail = [&rep](const std::string& msg) { rep.failures.push_back(msg); };

  std::vector<VertexSet> want = brute_solutions(inst);
  KernelResult result = kernel.compress(inst);

  // Solution set of the compressed instance, independently when feasible.
  std::vector<VertexSet> csols;
  if (result.compressed.graph.vertex_count() <= 20) {
    csols = brute_solutions(result.compressed);
    auto streamed = drain(*kernel.enumerate_compressed(result, nullptr));
    std::sort(streamed.begin(), streamed.end());
    auto sorted = csols;
    std::sort(sorted.begin(), sorted.end());
    if (streamed != sorted)
      fail("compressed enumeration differs from brute force");
  } else {
    csols = drain(*kernel.enumerate_compressed(result, nullptr));
  }

  rep.equivalence = want.empty() == csols.empty();
  if (!rep.equivalence) fail("Sol(x) nonempty iff Sol(y) nonempty violated");

  // Good traces of the core and the class of each trace.
  std::map<VertexSet, std::vector<VertexSet>> classes;
  for (const VertexSet& s : want)
    classes[result.core.trace_of_original(s)].push_back(s);

  std::map<VertexSet, int> accepted_per_trace;
  std::vector<VertexSet> all_lifted;
  rep.condition3 = true;
  std::map<VertexSet, int> compressed_trace_seen;
  for (const VertexSet& sol : csols) {
    VertexSet trace = result.core.trace_of_compressed(sol);
    ++compressed_trace_seen[trace];
    if (!kernel.canonical_check(result, sol)) continue;
    ++accepted_per_trace[trace];
    auto lifted = drain(*kernel.lift(result, sol, make_step_counter()));
    for (auto& s : lifted) all_lifted.push_back(s);
    // Condition 3: the lifted set is exactly the class of the trace.
    std::vector<VertexSet> cls;
    auto it = classes.find(trace);
    if (it != classes.end()) cls = it->second;
    auto lifted_sorted = lifted;
    std::sort(lifted_sorted.begin(), lifted_sorted.end());
    std::sort(cls.begin(), cls.end());
    if (lifted_sorted != cls) {
      rep.condition3 = false;
      fail("lift of an accepted solution differs from its trace class");
    }
  }

  // Union and disjointness against brute force.
  std::vector<VertexSet> got = all_lifted;
  std::sort(got.begin(), got.end());
  rep.disjoint = std::adjacent_find(got.begin(), got.end()) == got.end();
  if (!rep.disjoint) fail("a solution was lifted twice");
  auto want_sorted = want;
  std::sort(want_sorted.begin(), want_sorted.end());
  rep.union_matches = got == want_sorted;
  if (!rep.union_matches) fail("union of lifted sets differs from Sol(x)");

  // Condition 1: every original trace appears among compressed traces.
  rep.condition1 = true;
  for (const auto& [trace, cls] : classes) {
    if (!compressed_trace_seen.count(trace)) {
      rep.condition1 = false;
      fail("good trace lost by compression");
    }
  }

  // Condition 2: exactly one accepted solution per good trace, none for
  // other traces.
  rep.canonical_per_trace = true;
  for (const auto& [trace, cls] : classes) {
    int got_count = accepted_per_trace.count(trace)
                        ? accepted_per_trace.at(trace) : 0;
    if (got_count != 1) {
      rep.canonical_per_trace = false;
      fail("good trace with " + std::to_string(got_count) +
           " canonical solutions");
    }
  }
  for (const auto& [trace, count] : accepted_per_trace) {
    if (!classes.count(trace)) {
      rep.canonical_per_trace = false;
      fail("canonical solution accepted for a non-good trace");
    }
  }
  return rep;
}

EnumInstance IdentityEppt::map_instance(const EnumInstance& inst) const {
  return inst;
}

std::optional<VertexSet> IdentityEppt::lift_solution(
    const EnumInstance&, const EnumInstance&, const VertexSet& sol) const {
  return sol;
}

CoreMap IdentityEppt::transport_core(const EnumInstance&, const EnumInstance&,
                                     const CoreMap& core) const {
  return core;
}

namespace {

// Applies the forward lifting (which never rejects) to every inner output.
class ForwardLiftStream : public SolutionStream {
 public:
  ForwardLiftStream(std::unique_ptr<SolutionStream> inner,
                    std::shared_ptr<const Eppt> forward, EnumInstance source,
                    EnumInstance mapped)
      : SolutionStream(inner->counter()), inner_(std::move(inner)),
        forward_(std::move(forward)), source_(std::move(source)),
        mapped_(std::move(mapped)) {}

 private:
  std::optional<VertexSet> advance() override {
    while (auto s = inner_->next()) {
      auto lifted = forward_->lift_solution(source_, mapped_, *s);
      if (lifted) return *lifted;
    }
    return std::nullopt;
  }
  std::unique_ptr<SolutionStream> inner_;
  std::shared_ptr<const Eppt> forward_;
  EnumInstance source_, mapped_;
};

class ComposedKernel : public PdKernel {
 public:
  ComposedKernel(std::shared_ptr<const Eppt> forward,
                 std::shared_ptr<const PdKernel> inner,
                 std::shared_ptr<const Eppt> backward, std::string name)
      : forward_(std::move(forward)), inner_(std::move(inner)),
        backward_(std::move(backward)), name_(std::move(name)) {}

  std::string name() const override { return name_; }

  KernelResult compress(const EnumInstance& inst) const override {
    KernelResult r;
    r.original = inst;
    EnumInstance mapped = forward_->map_instance(inst);
    auto ir = std::make_shared<KernelResult>(inner_->compress(mapped));
    r.compressed = backward_->map_instance(ir->compressed);
    r.core = backward_->transport_core(ir->compressed, r.compressed, ir->core);
    r.degenerate = ir->degenerate;
    r.trivial_no = ir->trivial_no;

    r.log.kernel = name_;
    RuleLogEntry fwd;
    fwd.rule = "eppt-forward:" + forward_->name();
    fwd.replaces_instance = true;
    fwd.replacement = instance_to_json(mapped);
    r.log.entries.push_back(std::move(fwd));
    for (const auto& e : ir->log.entries) r.log.entries.push_back(e);
    RuleLogEntry bwd;
    bwd.rule = "eppt-backward:" + backward_->name();
    bwd.replaces_instance = true;
    bwd.replacement = instance_to_json(r.compressed);
    r.log.entries.push_back(std::move(bwd));
    r.log.header["core"] = r.core.to_json();

    r.meta["forward_mapped"] = instance_to_json(mapped);
    r.inner = std::move(ir);
    return r;
  }

  bool is_good_trace(const KernelResult& r,
                     const VertexSet& trace) const override {
    // Both transformations preserve the solution sets they lift between, so
    // goodness coincides with the inner kernel's notion.
    return inner_->is_good_trace(*r.inner, trace);
  }

  bool canonical_check(const KernelResult& r,
                       const VertexSet& sol) const override {
    auto z = backward_->lift_solution(r.inner->compressed, r.compressed, sol);
    if (!z) return false;
    return inner_->canonical_check(*r.inner, *z);
  }

  std::unique_ptr<SolutionStream> lift(
      const KernelResult& r, const VertexSet& sol,
      std::shared_ptr<StepCounter> counter) const override {
    auto z = backward_->lift_solution(r.inner->compressed, r.compressed, sol);
    if (!z) throw std::logic_error("lift called on a rejected solution");
    auto inner_stream = inner_->lift(*r.inner, *z, std::move(counter));
    EnumInstance mapped = instance_from_json(r.meta.at("forward_mapped"));
    return std::make_unique<ForwardLiftStream>(std::move(inner_stream),
                                               forward_, r.original, mapped);
  }

 private:
  std::shared_ptr<const Eppt> forward_;
  std::shared_ptr<const PdKernel> inner_;
  std::shared_ptr<const Eppt> backward_;
  std::string name_;
};

}  // namespace

std::unique_ptr<PdKernel> eppt_compose(std::shared_ptr<const Eppt> forward,
                                       std::shared_ptr<const PdKernel> inner,
                                       std::shared_ptr<const Eppt> backward,
                                       std::string composed_name) {
  return std::make_unique<ComposedKernel>(std::move(forward), std::move(inner),
                                          std::move(backward),
                                          std::move(composed_name));
}

}  // namespace enumkern
