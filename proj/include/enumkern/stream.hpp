#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "enumkern/vertex_set.hpp"

namespace enumkern {

struct StepCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Machine-independent work counter shared by a stream and everything nested
// inside it. One tick per extension-oracle call and per branching-tree node.
struct StepCounter {
  std::uint64_t steps = 0;
  std::uint64_t cap = 0;  // 0 = unlimited

  void tick(std::uint64_t k = 1) {
    steps += k;
    if (cap != 0 && steps > cap)
      throw StepCapExceeded("step cap exceeded (" + std::to_string(cap) + ")");
  }
};

// Reads ENUMKERN_STEP_CAP; 0 when unset.
std::uint64_t env_step_cap();
std::shared_ptr<StepCounter> make_step_counter();

struct StreamStats {
  std::uint64_t outputs = 0;
  std::uint64_t precalc_steps = 0;          // steps before the first output
  std::vector<std::uint64_t> delays;        // steps between consecutive outputs
  std::uint64_t max_delay() const;
  double mean_delay() const;
};

// Pull-based stream of vertex sets. Exhaustion is final; output sets are
// duplicate-free over the stream's lifetime (producers guarantee this).
class SolutionStream {
 public:
  explicit SolutionStream(std::shared_ptr<StepCounter> counter);
  virtual ~SolutionStream() = default;

  std::optional<VertexSet> next();
  const StreamStats& stats() const { return stats_; }
  const std::shared_ptr<StepCounter>& counter() const { return counter_; }

 protected:
  std::shared_ptr<StepCounter> counter_;

 private:
  virtual std::optional<VertexSet> advance() = 0;
  StreamStats stats_;
  std::uint64_t steps_at_last_output_ = 0;
  bool exhausted_ = false;
};

// Stream over a fixed list.
class VectorStream : public SolutionStream {
 public:
  VectorStream(std::vector<VertexSet> items, std::shared_ptr<StepCounter> c);

 private:
  std::optional<VertexSet> advance() override;
  std::vector<VertexSet> items_;
  size_t pos_ = 0;
};

// Applies a transformation to every output of an inner stream.
class MapStream : public SolutionStream {
 public:
  using Fn = std::function<VertexSet(const VertexSet&)>;
  MapStream(std::unique_ptr<SolutionStream> inner, Fn fn);

 private:
  std::optional<VertexSet> advance() override;
  std::unique_ptr<SolutionStream> inner_;
  Fn fn_;
};

std::vector<VertexSet> drain(SolutionStream& s);

}  // namespace enumkern
