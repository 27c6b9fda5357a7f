#include "enumkern/kernel_vc_size.hpp"

#include <algorithm>

#include "enumkern/flashlight.hpp"

namespace enumkern {

using nlohmann::json;

EnumInstance rule_vc_isolated(const EnumInstance& inst,
                              std::vector<RuleLogEntry>* log) {
  EnumInstance cur = inst;
  while (true) {
    int victim = -1;
    for (int v = 0; v < cur.graph.vertex_count(); ++v)
      if (cur.graph.degree(v) == 0) {
        victim = v;
        break;
      }
    if (victim == -1) break;
    RuleLogEntry e;
    e.rule = "vcvc1";
    e.ops.push_back({GraphOp::Kind::RemoveVertex, cur.graph.label(victim), 0});
    cur = apply_entry(cur, e);
    if (log) log->push_back(std::move(e));
  }
  return cur;
}

EnumInstance rule_vc_unmatched_crown(const EnumInstance& inst,
                                     const HeavyCrown& hc,
                                     std::vector<RuleLogEntry>* log) {
  const Graph& g = inst.graph;
  hc.base.audit(g);
  VertexSet unmatched = set_minus(hc.base.crown, hc.base.saturating.saturated());
  // Rule precondition audit: the removed set is independent with all its
  // neighbors in the head.
  if (!g.is_independent(unmatched))
    throw std::logic_error("unmatched crown vertices not independent");
  if (!is_subset(g.open_neighborhood(unmatched), hc.base.head))
    throw std::logic_error("unmatched crown vertex with a neighbor outside H");

  RuleLogEntry e;
  e.rule = "vcvc2";
  for (int v : unmatched)
    e.ops.push_back({GraphOp::Kind::RemoveVertex, g.label(v), 0});
  e.meta["crown"] = g.labels_of_ids(hc.base.crown).items();
  e.meta["head"] = g.labels_of_ids(hc.base.head).items();
  e.meta["body"] = g.labels_of_ids(hc.base.body).items();
  EnumInstance out = apply_entry(inst, e);
  if (log) log->push_back(std::move(e));
  return out;
}

KernelResult VcSizeKernel::compress(const EnumInstance& inst) const {
  if (inst.problem != Problem::VC)
    throw std::invalid_argument("vc-size kernel expects a vc instance");
  KernelResult r;
  r.original = inst;
  r.log.kernel = name();
  int k = *inst.budget_k;

  EnumInstance cur = rule_vc_isolated(inst, &r.log.entries);

  if (cur.graph.vertex_count() > 3 * k) {
    auto res = heavy_crown_or_matching(cur.graph, k);
    if (std::holds_alternative<Matching>(res)) {
      // A matching of size k+1 certifies a no-instance; emit the canonical
      // trivial one (single edge, budget zero).
      const Matching& m = std::get<Matching>(res);
      RuleLogEntry e;
      e.rule = "vcvc-trivial-no";
      e.replaces_instance = true;
      e.replacement = instance_to_json(
          make_vc_instance(Graph::build(2, {Edge(0, 1)}), 0));
      json witness = json::array();
      for (const Edge& me : m.edges)
        witness.push_back({cur.graph.label(me.u), cur.graph.label(me.v)});
      e.meta["matching"] = std::move(witness);
      cur = apply_entry(cur, e);
      r.log.entries.push_back(std::move(e));
      r.trivial_no = true;
    } else {
      cur = rule_vc_unmatched_crown(cur, std::get<HeavyCrown>(res),
                                    &r.log.entries);
      if (cur.graph.vertex_count() > 3 * k)
        throw std::logic_error("compressed vc instance exceeds 3k vertices");
    }
  }

  r.compressed = std::move(cur);
  r.core = r.trivial_no ? CoreMap{} : CoreMap::identity(r.compressed.graph.label_set());
  r.log.header["core"] = r.core.to_json();
  return r;
}

VertexSet VcSizeKernel::removed_set(const KernelResult& r) {
  return set_minus(r.original.graph.label_set(),
                   r.compressed.graph.label_set());
}

VertexSet VcSizeKernel::closure(const KernelResult& r, const VertexSet& sol) {
  const Graph& g = r.original.graph;
  VertexSet uncovered_side =
      set_minus(r.compressed.graph.label_set(), sol);
  VertexSet forced = set_intersect(
      removed_set(r),
      g.labels_of_ids(g.open_neighborhood(g.ids_of_labels(uncovered_side))));
  return set_union(sol, forced);
}

bool VcSizeKernel::is_good_trace(const KernelResult& r,
                                 const VertexSet& trace) const {
  if (r.trivial_no) return false;
  // The trace must cover the compressed graph and close within budget.
  const Graph& h = r.compressed.graph;
  for (const Edge& e : h.edges())
    if (!trace.contains(h.label(e.u)) && !trace.contains(h.label(e.v)))
      return false;
  if (trace.size() > *r.compressed.budget_k) return false;
  return closure(r, trace).size() <= *r.original.budget_k;
}

bool VcSizeKernel::canonical_check(const KernelResult& r,
                                   const VertexSet& sol) const {
  if (r.trivial_no) return false;
  return closure(r, sol).size() <= *r.original.budget_k;
}

std::unique_ptr<SolutionStream> VcSizeKernel::lift(
    const KernelResult& r, const VertexSet& sol,
    std::shared_ptr<StepCounter> counter) const {
  VertexSet y = closure(r, sol);
  VertexSet free = set_minus(removed_set(r), y);
  int slack = *r.original.budget_k - y.size();
  int max_label = 0;
  for (int l : r.original.graph.labels()) max_label = std::max(max_label, l);
  auto subsets = enum_subsets_le(free, slack,
                                 VertexOrder::identity(max_label + 1),
                                 std::move(counter));
  return std::make_unique<MapStream>(
      std::move(subsets),
      [y](const VertexSet& j) { return set_union(y, j); });
}

}  // namespace enumkern
