#include <algorithm>
#include <string_view>

#include "otlab/hemisets.hpp"
#include "otlab/sign_algorithms.hpp"

namespace otlab {

Hemiset::Hemiset(std::vector<std::int8_t> sides, Anchor anchor)
    : sides_(std::move(sides)), anchor_(anchor) {
  for (auto v : sides_)
    if (v < -1 || v > 1) throw InvalidArgument("hemiset side must be -1, 0 or +1");
}

bool Hemiset::contains(int point) const {
  const int s = sides_[static_cast<std::size_t>(point >> 1)];
  return s == 0 || s == ((point & 1) ? -1 : 1);
}

std::vector<int> Hemiset::members() const {
  std::vector<int> out;
  out.reserve(sides_.size() + 2);
  for (std::size_t k = 0; k < sides_.size(); ++k) {
    const int base = static_cast<int>(2 * k);
    if (sides_[k] >= 0) out.push_back(base);
    if (sides_[k] <= 0) out.push_back(base + 1);
  }
  return out;
}

std::size_t Hemiset::size() const {
  return sides_.size() + static_cast<std::size_t>(std::count(sides_.begin(), sides_.end(), 0));
}

std::vector<int> Hemiset::boundary_pairs() const {
  std::vector<int> out;
  for (std::size_t k = 0; k < sides_.size(); ++k)
    if (sides_[k] == 0) out.push_back(static_cast<int>(k));
  return out;
}

Hemiset Hemiset::antipodal() const {
  std::vector<std::int8_t> s(sides_.size());
  std::transform(sides_.begin(), sides_.end(), s.begin(), [](std::int8_t v) { return static_cast<std::int8_t>(-v); });
  Anchor a = anchor_;
  std::swap(a.i, a.j);
  std::swap(a.sigma_i, a.sigma_j);
  return Hemiset(std::move(s), a);
}

std::string Hemiset::key() const {
  return std::string(reinterpret_cast<const char*>(sides_.data()), sides_.size());
}

std::size_t HemisetHash::operator()(const Hemiset& h) const {
  return std::hash<std::string_view>{}(
      std::string_view(reinterpret_cast<const char*>(h.sides().data()), h.sides().size()));
}

Hemiset apply(const Permutation& g, const Hemiset& b) {
  if (g.size() != 2 * b.pair_count()) throw SizeMismatch("permutation does not act on this hemiset");
  std::vector<std::int8_t> s(b.pair_count(), 0);
  std::vector<char> hit(g.size(), 0);
  for (int a : b.members()) hit[static_cast<std::size_t>(g(a))] = 1;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const bool plus = hit[2 * k];
    const bool minus = hit[2 * k + 1];
    if (!plus && !minus) throw InvalidArgument("image misses an antipodal pair; not a symmetry");
    s[k] = plus && minus ? 0 : (plus ? 1 : -1);
  }
  return Hemiset(std::move(s));
}

Hemiset hemiset_from_anchor(const ProjectiveOrder& order, int i, int j, int sigma_i, int sigma_j) {
  const int n = static_cast<int>(order.pair_count());
  if (i < 0 || j < 0 || i >= n || j >= n || i == j)
    throw DegenerateAnchor("anchor pairs must be two distinct antipodal pairs");
  if (std::abs(sigma_i) > 1 || std::abs(sigma_j) > 1) throw InvalidArgument("tie-break sign out of range");
  const Chirotope& reps = order.representatives();
  std::vector<std::int8_t> sides(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r)
    if (r != i && r != j) sides[static_cast<std::size_t>(r)] = static_cast<std::int8_t>(reps.sign(i, j, r));
  sides[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(sigma_i);
  sides[static_cast<std::size_t>(j)] = static_cast<std::int8_t>(sigma_j);
  return Hemiset(std::move(sides), Anchor{i, j, sigma_i, sigma_j});
}

Hemiset hemiset_from_anchor(const ProjectiveConfig& cfg, int i, int j, int sigma_i, int sigma_j) {
  return hemiset_from_anchor(ProjectiveOrder::of(cfg), i, j, sigma_i, sigma_j);
}

Chirotope hemiset_chirotope(const ProjectiveOrder& order, const Hemiset& a) {
  if (!a.is_affine()) throw NotAffine("hemiset contains an antipodal pair");
  const std::vector<int> m = a.members();
  return Chirotope::from_function(m.size(), Flavor::Affine, [&](int x, int y, int z) {
    return order.sign(m[static_cast<std::size_t>(x)], m[static_cast<std::size_t>(y)],
                      m[static_cast<std::size_t>(z)]);
  });
}

namespace {

HullSummary summarize(std::vector<std::vector<int>> layers) {
  HullSummary s;
  if (!layers.empty()) s.extreme = layers.front();
  for (const auto& l : layers) s.layer_sizes.push_back(static_cast<int>(l.size()));
  if (!layers.empty() && layers.back().size() == 1) s.lonely = layers.back().front();
  s.layers = std::move(layers);
  return s;
}

template <class S>
HullSummary peel(const S& signs, std::span<const int> labels) {
  auto layers = peel_layers(signs);
  for (auto& l : layers)
    for (auto& v : l) v = labels[static_cast<std::size_t>(v)];
  return summarize(std::move(layers));
}

std::vector<int> iota_labels(std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i);
  return v;
}

}  // namespace

HullSummary onion_layers(const ProjectiveOrder& order, const Hemiset& a) {
  if (!a.is_affine()) throw NotAffine("hemiset contains an antipodal pair");
  const std::vector<int> m = a.members();
  return peel(SubsetView<ProjectiveOrder>(order, m), m);
}

HullSummary onion_layers(const Chirotope& affine) {
  return peel(affine, iota_labels(affine.size()));
}

HullSummary onion_layers(const AffineConfig& cfg) {
  std::vector<int> remaining = iota_labels(cfg.size());
  std::vector<std::vector<int>> layers;
  while (!remaining.empty()) {
    std::vector<SpherePoint> pts;
    for (int v : remaining) pts.push_back(cfg[static_cast<std::size_t>(v)]);
    auto local = chart_hull(pts, cfg.center());
    if (!local) throw NotGeneralPosition("degenerate triple during hull peeling", {0, 0, 0});
    std::vector<int> layer;
    std::vector<char> on(cfg.size(), 0);
    for (int t : *local) {
      layer.push_back(remaining[static_cast<std::size_t>(t)]);
      on[static_cast<std::size_t>(layer.back())] = 1;
    }
    std::vector<int> rest;
    for (int v : remaining)
      if (!on[static_cast<std::size_t>(v)]) rest.push_back(v);
    layers.push_back(std::move(layer));
    remaining = std::move(rest);
  }
  return summarize(std::move(layers));
}

HullSummary extreme_points(const ProjectiveOrder& order, const Hemiset& a) { return onion_layers(order, a); }
HullSummary extreme_points(const Chirotope& affine) { return onion_layers(affine); }
HullSummary extreme_points(const AffineConfig& cfg) { return onion_layers(cfg); }

std::optional<std::vector<int>> chart_hull(std::span<const SpherePoint> pts,
                                           const std::array<BigInt, 3>& center) {
  const std::size_t n = pts.size();
  if (n <= 2) return iota_labels(n);
  // Orthogonal basis u, v of the plane normal to the center.
  std::array<BigInt, 3> axis{0, 0, 0};
  axis[(center[0] == 0 && center[1] == 0) ? 0 : 2] = 1;
  auto cross = [](const std::array<BigInt, 3>& a, const std::array<BigInt, 3>& b) {
    return std::array<BigInt, 3>{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                                 a[0] * b[1] - a[1] * b[0]};
  };
  const auto u = cross(center, axis);
  const auto v = cross(center, u);
  auto dot3 = [](const SpherePoint& p, const std::array<BigInt, 3>& w) {
    return BigInt(p.x() * w[0] + p.y() * w[1] + p.z() * w[2]);
  };
  struct Key {
    BigInt du, dv, dc;
  };
  std::vector<Key> keys(n);
  for (std::size_t i = 0; i < n; ++i) {
    keys[i] = {dot3(pts[i], u), dot3(pts[i], v), dot3(pts[i], center)};
    if (keys[i].dc <= 0) return std::nullopt;
  }
  bool tie = false;
  std::vector<int> order = iota_labels(n);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Key& ka = keys[static_cast<std::size_t>(a)];
    const Key& kb = keys[static_cast<std::size_t>(b)];
    const int cx = cmp(ka.du * kb.dc, kb.du * ka.dc);
    if (cx != 0) return cx < 0;
    const int cy = cmp(ka.dv * kb.dc, kb.dv * ka.dc);
    if (cy == 0) tie = true;
    return cy < 0;
  });
  if (tie) return std::nullopt;
  bool degenerate = false;
  auto turn = [&](int a, int b, int c) {
    const int s = orient(pts[static_cast<std::size_t>(a)], pts[static_cast<std::size_t>(b)],
                         pts[static_cast<std::size_t>(c)]);
    if (s == 0) degenerate = true;
    return s;
  };
  std::vector<int> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && turn(hull[k - 2], hull[k - 1], order[i]) <= 0) --k;
    hull[k++] = order[i];
  }
  for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && turn(hull[k - 2], hull[k - 1], order[i]) <= 0) --k;
    hull[k++] = order[i];
  }
  hull.resize(k - 1);
  if (degenerate) return std::nullopt;
  return hull;
}

}  // namespace otlab
