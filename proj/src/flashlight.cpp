#include "enumkern/flashlight.hpp"

#include <algorithm>

#include "enumkern/mis_oracle.hpp"

namespace enumkern {

VertexOrder VertexOrder::by_label(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(),
            [&](int a, int b) { return g.label(a) < g.label(b); });
  VertexOrder ord;
  ord.rank.assign(n, 0);
  for (int r = 0; r < n; ++r) ord.rank[idx[r]] = r;
  return ord;
}

VertexOrder VertexOrder::identity(int n) {
  VertexOrder ord;
  ord.rank.assign(n, 0);
  for (int i = 0; i < n; ++i) ord.rank[i] = i;
  return ord;
}

int lex_compare(const VertexSet& a, const VertexSet& b, const VertexOrder& ord) {
  if (a == b) return 0;
  auto min_rank = [&](const VertexSet& s) {
    int best = -1;
    for (int v : s)
      if (best == -1 || ord.of(v) < ord.of(best)) best = v;
    return best;
  };
  auto max_rank = [&](const VertexSet& s) {
    int best = -1;
    for (int v : s)
      if (best == -1 || ord.of(v) > ord.of(best)) best = v;
    return best;
  };
  // Case (i): a proper subset whose new elements all come after max(a).
  if (is_subset(a, b)) {
    int m = min_rank(set_minus(b, a));
    if (a.empty() || ord.of(m) > ord.of(max_rank(a))) return -1;
  }
  if (is_subset(b, a)) {
    int m = min_rank(set_minus(a, b));
    if (b.empty() || ord.of(m) > ord.of(max_rank(b))) return 1;
  }
  // Case (ii): owner of the smallest element of the symmetric difference.
  VertexSet sym = set_union(set_minus(a, b), set_minus(b, a));
  int m = min_rank(sym);
  return a.contains(m) ? -1 : 1;
}

AlphaFn alpha_fn_forest() {
  return [](const Graph& g, const VertexSet& keep) {
    return alpha_forest_induced(g, keep);
  };
}

AlphaFn alpha_fn_exact(const MisOracle& oracle) {
  const MisOracle* p = &oracle;
  return [p](const Graph& g, const VertexSet& keep) {
    return p->alpha_induced(g, keep);
  };
}

namespace {

// Branching per the extension-oracle recursion: at each node pick the free
// vertex of minimum rank, explore the include-branch first, and emit a set
// exactly when a vertex is added and the partial solution reaches size t.
class LexIsStream : public SolutionStream {
 public:
  LexIsStream(Graph g, int t, VertexOrder ord, AlphaFn alpha, VertexSet avoid,
              VertexSet require, std::shared_ptr<StepCounter> counter)
      : SolutionStream(std::move(counter)), g_(std::move(g)), t_(t),
        ord_(std::move(ord)), alpha_(std::move(alpha)),
        avoid_(std::move(avoid)), require_(std::move(require)) {
    if (!disjoint(require_, avoid_))
      throw std::invalid_argument("require and avoid overlap");
    if (!g_.is_independent(require_))
      throw std::invalid_argument("require set is not independent");
  }

 private:
  struct Frame {
    VertexSet m, p;
    int v = -1;
    int stage = 0;  // 0 fresh, 1 include-branch done, 2 done
  };

  Graph g_;
  int t_;
  VertexOrder ord_;
  AlphaFn alpha_;
  VertexSet avoid_, require_;
  std::vector<Frame> stack_;
  bool primed_ = false;

  bool extendable(const VertexSet& m, const VertexSet& p) {
    counter_->tick();  // one oracle call
    if (m.size() >= t_) return true;
    VertexSet blocked = set_union(g_.closed_neighborhood(m), p);
    VertexSet free = set_minus(VertexSet::range(g_.vertex_count()), blocked);
    return alpha_(g_, free) >= t_ - m.size();
  }

  std::optional<int> min_free(const VertexSet& m, const VertexSet& p) {
    VertexSet blocked = set_union(g_.closed_neighborhood(m), p);
    std::optional<int> best;
    for (int v = 0; v < g_.vertex_count(); ++v) {
      if (blocked.contains(v)) continue;
      if (!best || ord_.of(v) < ord_.of(*best)) best = v;
    }
    return best;
  }

  std::optional<VertexSet> advance() override {
    if (!primed_) {
      primed_ = true;
      if (!extendable(require_, avoid_)) return std::nullopt;
      stack_.push_back({require_, avoid_, -1, 0});
      if (require_.size() >= t_) return require_;
    }
    while (!stack_.empty()) {
      Frame& f = stack_.back();
      if (f.stage == 0) {
        counter_->tick();  // node visit
        auto v = min_free(f.m, f.p);
        if (!v) {
          stack_.pop_back();
          continue;
        }
        f.v = *v;
        f.stage = 1;
        VertexSet mv = f.m;
        mv.insert(f.v);
        if (extendable(mv, f.p)) {
          bool emit = mv.size() >= t_;
          stack_.push_back({std::move(mv), f.p, -1, 0});
          if (emit) return stack_.back().m;
        }
      } else if (f.stage == 1) {
        f.stage = 2;
        VertexSet pv = f.p;
        pv.insert(f.v);
        if (extendable(f.m, pv)) {
          stack_.push_back({f.m, std::move(pv), -1, 0});
        }
      } else {
        stack_.pop_back();
      }
    }
    return std::nullopt;
  }
};

class SubsetStream : public SolutionStream {
 public:
  SubsetStream(VertexSet ground, int r, const VertexOrder& ord,
               std::shared_ptr<StepCounter> counter)
      : SolutionStream(std::move(counter)), r_(r) {
    if (r < 0) throw std::invalid_argument("negative subset size bound");
    pool_ = ground.items();
    std::sort(pool_.begin(), pool_.end(),
              [&](int a, int b) { return ord.of(a) < ord.of(b); });
  }

 private:
  struct Frame {
    VertexSet s;
    size_t next;
  };

  int r_;
  std::vector<int> pool_;
  std::vector<Frame> stack_;
  bool primed_ = false;

  std::optional<VertexSet> advance() override {
    counter_->tick();
    if (!primed_) {
      primed_ = true;
      stack_.push_back({VertexSet{}, 0});
      return VertexSet{};
    }
    while (!stack_.empty()) {
      Frame& f = stack_.back();
      if (f.s.size() >= r_ || f.next >= pool_.size()) {
        stack_.pop_back();
        continue;
      }
      int v = pool_[f.next++];
      VertexSet child = f.s;
      child.insert(v);
      size_t from = f.next;
      stack_.push_back({child, from});
      return child;
    }
    return std::nullopt;
  }
};

}  // namespace

std::unique_ptr<SolutionStream> enum_is_lex(const Graph& g, int t,
                                            const VertexOrder& ord,
                                            AlphaFn alpha,
                                            const VertexSet& avoid,
                                            const VertexSet& require,
                                            std::shared_ptr<StepCounter> counter) {
  return std::make_unique<LexIsStream>(g, t, ord, std::move(alpha), avoid,
                                       require, std::move(counter));
}

std::optional<VertexSet> first_is_lex(const Graph& g, int t,
                                      const VertexOrder& ord, AlphaFn alpha,
                                      const VertexSet& avoid,
                                      const VertexSet& require) {
  auto s = enum_is_lex(g, t, ord, std::move(alpha), avoid, require);
  return s->next();
}

std::unique_ptr<SolutionStream> enum_subsets_le(
    const VertexSet& ground, int r, const VertexOrder& ord,
    std::shared_ptr<StepCounter> counter) {
  return std::make_unique<SubsetStream>(ground, r, ord, std::move(counter));
}

}  // namespace enumkern
