#pragma once

#include "enumkern/matching_crown.hpp"
#include "enumkern/pd_kernel.hpp"

namespace enumkern {

// 3k-vertex kernel for Enum Vertex Cover parameterized by the solution size:
// drop isolated vertices, then remove the unmatched crown vertices of one
// heavy-crown decomposition. The core is the whole compressed vertex set, so
// compressed solutions are their own traces; the choosing test closes a
// compressed cover against the removed independent set L and accepts when
// the closure still fits the budget, and lifting enumerates free subsets of
// the untouched part of L.
class VcSizeKernel : public PdKernel {
 public:
  std::string name() const override { return "vc-size"; }
  KernelResult compress(const EnumInstance& inst) const override;
  bool is_good_trace(const KernelResult& r,
                     const VertexSet& trace) const override;
  bool canonical_check(const KernelResult& r,
                       const VertexSet& sol) const override;
  std::unique_ptr<SolutionStream> lift(
      const KernelResult& r, const VertexSet& sol,
      std::shared_ptr<StepCounter> counter) const override;

  // The removed independent set L (labels) and the mandatory closure of a
  // compressed cover: sol plus the removed vertices incident to edges it
  // leaves uncovered.
  static VertexSet removed_set(const KernelResult& r);
  static VertexSet closure(const KernelResult& r, const VertexSet& sol);
};

// Exhaustive isolated-vertex removal (budget unchanged); exposed for tests.
EnumInstance rule_vc_isolated(const EnumInstance& inst,
                              std::vector<RuleLogEntry>* log = nullptr);
// Removal of the unsaturated crown vertices of a heavy crown.
EnumInstance rule_vc_unmatched_crown(const EnumInstance& inst,
                                     const HeavyCrown& hc,
                                     std::vector<RuleLogEntry>* log = nullptr);

}  // namespace enumkern
