#include "enumkern/vertex_set.hpp"

#include <algorithm>

namespace enumkern {

void VertexSet::normalize() {
  std::sort(v_.begin(), v_.end());
  v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
}

VertexSet VertexSet::range(int n) {
  std::vector<int> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = i;
  return VertexSet(std::move(xs));
}

bool VertexSet::contains(int x) const {
  return std::binary_search(v_.begin(), v_.end(), x);
}

void VertexSet::insert(int x) {
  auto it = std::lower_bound(v_.begin(), v_.end(), x);
  if (it == v_.end() || *it != x) v_.insert(it, x);
}

void VertexSet::erase(int x) {
  auto it = std::lower_bound(v_.begin(), v_.end(), x);
  if (it != v_.end() && *it == x) v_.erase(it);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet set_intersect(const VertexSet& a, const VertexSet& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return VertexSet(std::move(out));
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool disjoint(const VertexSet& a, const VertexSet& b) {
  return set_intersect(a, b).empty();
}

std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
  os << '{';
  bool first = true;
  for (int x : s) {
    if (!first) os << ',';
    os << x;
    first = false;
  }
  return os << '}';
}

void EdgeSet::normalize() {
  std::sort(e_.begin(), e_.end());
  e_.erase(std::unique(e_.begin(), e_.end()), e_.end());
}

bool EdgeSet::contains(const Edge& e) const {
  return std::binary_search(e_.begin(), e_.end(), e);
}

void EdgeSet::insert(const Edge& e) {
  auto it = std::lower_bound(e_.begin(), e_.end(), e);
  if (it == e_.end() || !(*it == e)) e_.insert(it, e);
}

}  // namespace enumkern
