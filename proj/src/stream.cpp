#include "enumkern/stream.hpp"

#include <algorithm>
#include <cstdlib>

namespace enumkern {

std::uint64_t env_step_cap() {
  const char* s = std::getenv("ENUMKERN_STEP_CAP");
  if (!s || !*s) return 0;
  return std::strtoull(s, nullptr, 10);
}

std::shared_ptr<StepCounter> make_step_counter() {
  auto c = std::make_shared<StepCounter>();
  c->cap = env_step_cap();
  return c;
}

std::uint64_t StreamStats::max_delay() const {
  std::uint64_t m = 0;
  for (auto d : delays) m = std::max(m, d);
  return m;
}

double StreamStats::mean_delay() const {
  if (delays.empty()) return 0.0;
  std::uint64_t sum = 0;
  for (auto d : delays) sum += d;
  return static_cast<double>(sum) / static_cast<double>(delays.size());
}

SolutionStream::SolutionStream(std::shared_ptr<StepCounter> counter)
    : counter_(std::move(counter)) {
  if (!counter_) counter_ = make_step_counter();
  steps_at_last_output_ = counter_->steps;
}

std::optional<VertexSet> SolutionStream::next() {
  if (exhausted_) return std::nullopt;
  auto out = advance();
  if (!out) {
    exhausted_ = true;
    return std::nullopt;
  }
  std::uint64_t now = counter_->steps;
  if (stats_.outputs == 0)
    stats_.precalc_steps = now - steps_at_last_output_;
  else
    stats_.delays.push_back(now - steps_at_last_output_);
  steps_at_last_output_ = now;
  ++stats_.outputs;
  return out;
}

VectorStream::VectorStream(std::vector<VertexSet> items,
                           std::shared_ptr<StepCounter> c)
    : SolutionStream(std::move(c)), items_(std::move(items)) {}

std::optional<VertexSet> VectorStream::advance() {
  counter_->tick();
  if (pos_ >= items_.size()) return std::nullopt;
  return items_[pos_++];
}

MapStream::MapStream(std::unique_ptr<SolutionStream> inner, Fn fn)
    : SolutionStream(inner->counter()), inner_(std::move(inner)),
      fn_(std::move(fn)) {}

std::optional<VertexSet> MapStream::advance() {
  auto x = inner_->next();
  if (!x) return std::nullopt;
  return fn_(*x);
}

std::vector<VertexSet> drain(SolutionStream& s) {
  std::vector<VertexSet> out;
  while (auto x = s.next()) out.push_back(*x);
  return out;
}

}  // namespace enumkern
