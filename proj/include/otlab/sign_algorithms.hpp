#pragma once

// Algorithms that only need a triple-sign oracle: s.size() and s.sign(a, b, c).

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

#include "otlab/errors.hpp"

namespace otlab {

template <class S>
concept TripleSigns = requires(const S& s, int a) {
  { s.size() } -> std::convertible_to<std::size_t>;
  { s.sign(a, a, a) } -> std::convertible_to<int>;
};

// Restriction of a sign oracle to a list of indices; local index t stands for idx[t].
template <TripleSigns S>
class SubsetView {
 public:
  SubsetView(const S& base, std::span<const int> idx) : base_(&base), idx_(idx) {}
  std::size_t size() const { return idx_.size(); }
  int sign(int a, int b, int c) const {
    return base_->sign(idx_[static_cast<std::size_t>(a)], idx_[static_cast<std::size_t>(b)],
                       idx_[static_cast<std::size_t>(c)]);
  }

 private:
  const S* base_;
  std::span<const int> idx_;
};

namespace detail {

// Most clockwise point seen from u: the successor of u along the hull when u is extreme.
template <TripleSigns S>
int clockwise_most(const S& s, int u) {
  const int n = static_cast<int>(s.size());
  int v = (u == 0) ? 1 : 0;
  for (int r = 0; r < n; ++r)
    if (r != u && r != v && s.sign(u, v, r) < 0) v = r;
  return v;
}

template <TripleSigns S>
bool is_positive_edge(const S& s, int u, int v) {
  const int n = static_cast<int>(s.size());
  for (int r = 0; r < n; ++r)
    if (r != u && r != v && s.sign(u, v, r) <= 0) return false;
  return true;
}

}  // namespace detail

// Extreme points in counterclockwise order (gift wrapping on signs).  Throws NotAffine when the
// points admit no positive extreme edge.
template <TripleSigns S>
std::vector<int> hull_ccw(const S& s) {
  const int n = static_cast<int>(s.size());
  if (n <= 2) {
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  int start = -1;
  int next = -1;
  for (int u = 0; u < n && start < 0; ++u) {
    const int v = detail::clockwise_most(s, u);
    if (detail::is_positive_edge(s, u, v)) {
      start = u;
      next = v;
    }
  }
  if (start < 0) throw NotAffine("point set has no positive extreme edge");
  std::vector<int> hull{start};
  for (int cur = next; cur != start; cur = detail::clockwise_most(s, cur)) {
    hull.push_back(cur);
    if (hull.size() > static_cast<std::size_t>(n)) throw NotAffine("hull walk did not close");
  }
  return hull;
}

// p first, then the other points in counterclockwise radial order around the extreme point p.
template <TripleSigns S>
std::vector<int> radial_labeling(const S& s, int p) {
  const int n = static_cast<int>(s.size());
  std::vector<int> rest;
  rest.reserve(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r)
    if (r != p) rest.push_back(r);
  std::sort(rest.begin(), rest.end(), [&](int a, int b) { return s.sign(p, a, b) > 0; });
  rest.insert(rest.begin(), p);
  return rest;
}

// Onion layers as lists of local indices, outermost first.
template <TripleSigns S>
std::vector<std::vector<int>> peel_layers(const S& s) {
  std::vector<int> remaining(s.size());
  std::iota(remaining.begin(), remaining.end(), 0);
  std::vector<std::vector<int>> layers;
  while (!remaining.empty()) {
    SubsetView<S> view(s, remaining);
    std::vector<int> local = hull_ccw(view);
    std::vector<int> layer;
    layer.reserve(local.size());
    for (int t : local) layer.push_back(remaining[static_cast<std::size_t>(t)]);
    std::vector<int> rest;
    std::vector<char> on_layer(s.size(), 0);
    for (int v : layer) on_layer[static_cast<std::size_t>(v)] = 1;
    for (int v : remaining)
      if (!on_layer[static_cast<std::size_t>(v)]) rest.push_back(v);
    layers.push_back(std::move(layer));
    remaining = std::move(rest);
  }
  return layers;
}

}  // namespace otlab
