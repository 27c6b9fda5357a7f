#pragma once

#include <map>
#include <memory>
#include <string>

#include "enumkern/instance.hpp"
#include "enumkern/rule_log.hpp"
#include "enumkern/stream.hpp"

namespace enumkern {

// Core of a kernel: vertices of the compressed instance injectively mapped
// onto original vertices, along which solution traces are preserved.
struct CoreMap {
  VertexSet core_in_compressed;   // labels of the compressed instance
  std::map<int, int> lambda;      // compressed label -> original label

  VertexSet core_in_original() const;
  // lambda(sol n core), in original labels.
  VertexSet trace_of_compressed(const VertexSet& sol) const;
  // sol n lambda(core), in original labels.
  VertexSet trace_of_original(const VertexSet& sol) const;

  static CoreMap identity(const VertexSet& core);
  nlohmann::json to_json() const;
  static CoreMap from_json(const nlohmann::json& j);
};

struct KernelResult {
  EnumInstance original;
  EnumInstance compressed;
  CoreMap core;
  RuleLog log;
  bool degenerate = false;   // easy-rule output of the (G[X], X, 0) shape
  bool trivial_no = false;   // canonical no-instance
  nlohmann::json meta;       // kernel-specific lifting context
  std::shared_ptr<KernelResult> inner;          // set by composed kernels
  std::vector<std::string> audit_failures;      // structural audits, if run
};

// A polynomial-delay enumeration kernel: a compression algorithm plus a
// choosing test selecting one canonical compressed solution per good trace
// and a lifting enumerator for the class of that trace.
class PdKernel {
 public:
  virtual ~PdKernel() = default;
  virtual std::string name() const = 0;

  virtual KernelResult compress(const EnumInstance& inst) const = 0;

  // Is some original solution's trace equal to this (original-label) set?
  virtual bool is_good_trace(const KernelResult& r,
                             const VertexSet& trace) const = 0;

  // Accept exactly one compressed solution per good trace.
  virtual bool canonical_check(const KernelResult& r,
                               const VertexSet& compressed_sol) const = 0;

  // Stream (in original labels) the original solutions attributed to the
  // accepted compressed solution.
  virtual std::unique_ptr<SolutionStream> lift(
      const KernelResult& r, const VertexSet& compressed_sol,
      std::shared_ptr<StepCounter> counter) const = 0;

  // Total enumeration of Sol(compressed); the default understands VC, IS and
  // AIS instances.
  virtual std::unique_ptr<SolutionStream> enumerate_compressed(
      const KernelResult& r, std::shared_ptr<StepCounter> counter) const;
};

// Default total enumeration of an instance's solution set (VC via the dual
// complement, IS by flashlight, AIS by subset scan under a size gate).
std::unique_ptr<SolutionStream> enumerate_solutions(
    const EnumInstance& inst, std::shared_ptr<StepCounter> counter);

// Compress, enumerate compressed solutions, filter by the choosing test and
// chain the lifts. The output is exactly Sol(inst), duplicate-free.
std::unique_ptr<SolutionStream> run_pd_kernel(
    const PdKernel& kernel, const EnumInstance& inst,
    std::shared_ptr<StepCounter> counter = nullptr);
std::unique_ptr<SolutionStream> run_pd_kernel(
    const PdKernel& kernel, KernelResult result,
    std::shared_ptr<StepCounter> counter = nullptr);

struct PartitionReport {
  bool union_matches = false;       // union of lifted sets == brute Sol
  bool disjoint = false;            // no solution lifted twice
  bool equivalence = false;         // Sol(x) nonempty iff Sol(y) nonempty
  bool canonical_per_trace = false; // one accepted per good trace, none else
  bool condition1 = false;          // every original trace survives
  bool condition3 = false;          // lift(Y) == class of Y
  std::vector<std::string> failures;

  bool pass() const {
    return union_matches && disjoint && equivalence && canonical_per_trace &&
           condition1 && condition3;
  }
};

// Brute-force check of the partition property on a small instance.
PartitionReport verify_partition(const PdKernel& kernel,
                                 const EnumInstance& inst);

// Instance transformation with per-solution lifting that may reject.
class Eppt {
 public:
  virtual ~Eppt() = default;
  virtual std::string name() const = 0;
  virtual EnumInstance map_instance(const EnumInstance& inst) const = 0;
  // Lift one solution of the mapped instance; nullopt = rejected.
  virtual std::optional<VertexSet> lift_solution(
      const EnumInstance& source, const EnumInstance& mapped,
      const VertexSet& sol) const = 0;
  // Carry a core over source labels onto the mapped instance.
  virtual CoreMap transport_core(const EnumInstance& source,
                                 const EnumInstance& mapped,
                                 const CoreMap& core) const = 0;
};

class IdentityEppt : public Eppt {
 public:
  std::string name() const override { return "identity"; }
  EnumInstance map_instance(const EnumInstance& inst) const override;
  std::optional<VertexSet> lift_solution(const EnumInstance&,
                                         const EnumInstance&,
                                         const VertexSet& sol) const override;
  CoreMap transport_core(const EnumInstance&, const EnumInstance&,
                         const CoreMap& core) const override;
};

// forward maps the input problem into the inner kernel's problem (never
// rejecting a solution), backward maps the compressed instance out again
// (rejections allowed, unboundedly many). The result is again a PD kernel.
std::unique_ptr<PdKernel> eppt_compose(std::shared_ptr<const Eppt> forward,
                                       std::shared_ptr<const PdKernel> inner,
                                       std::shared_ptr<const Eppt> backward,
                                       std::string composed_name);

}  // namespace enumkern
