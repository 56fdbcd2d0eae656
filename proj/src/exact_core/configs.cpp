#include <algorithm>

#include "otlab/exact_core.hpp"

namespace otlab {

std::vector<std::int8_t> triple_signs(std::span<const SpherePoint> pts) {
  const std::size_t n = pts.size();
  std::vector<std::int8_t> out;
  if (n >= 3) out.reserve(n * (n - 1) * (n - 2) / 6);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        out.push_back(static_cast<std::int8_t>(orient(pts[i], pts[j], pts[k])));
  return out;
}

namespace {

std::optional<std::array<std::size_t, 3>> first_zero(std::span<const std::int8_t> signs,
                                                     std::size_t n) {
  auto it = std::find(signs.begin(), signs.end(), 0);
  if (it == signs.end()) return std::nullopt;
  auto idx = static_cast<std::size_t>(it - signs.begin());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (idx-- == 0) return std::array<std::size_t, 3>{i, j, k};
  return std::nullopt;
}

std::optional<std::array<std::size_t, 2>> parallel_pair(std::span<const SpherePoint> pts) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (parallel(pts[i], pts[j])) return std::array<std::size_t, 2>{i, j};
  return std::nullopt;
}

std::string triple_text(const std::array<std::size_t, 3>& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

bool all_positive(std::span<const SpherePoint> pts, const std::array<BigInt, 3>& c) {
  return std::all_of(pts.begin(), pts.end(), [&](const SpherePoint& p) { return dot_sign(p, c) > 0; });
}

// Center built from a positive extreme edge (p,q): every other point r has orient(p,q,r) > 0.
std::array<BigInt, 3> center_from_edge(std::span<const SpherePoint> pts, std::size_t ip,
                                       std::size_t iq) {
  const SpherePoint& p = pts[ip];
  const SpherePoint& q = pts[iq];
  const BigInt pq = dot(p, q);
  BigRational t = 1;
  if (pq < 0) {
    // <p, p+tq> > 0 and <q, p+tq> > 0 hold strictly between these bounds.
    BigRational lo = make_rational(-pq, dot(q, q));
    BigRational hi = make_rational(dot(p, p), -pq);
    t = (lo + hi) / 2;
  }
  const SpherePoint nrm = cross_dir(p, q);
  std::array<BigRational, 3> d;
  for (std::size_t a = 0; a < 3; ++a) d[a] = BigRational(p.coords()[a]) + t * BigRational(q.coords()[a]);
  BigRational k = 0;
  for (std::size_t r = 0; r < pts.size(); ++r) {
    if (r == ip || r == iq) continue;
    const BigInt rn = dot(pts[r], nrm);
    BigRational rd = 0;
    for (std::size_t a = 0; a < 3; ++a) rd += BigRational(pts[r].coords()[a]) * d[a];
    BigRational need = -rd / BigRational(rn);
    if (need >= k) k = need + 1;
  }
  std::array<BigRational, 3> c;
  for (std::size_t a = 0; a < 3; ++a) c[a] = k * BigRational(nrm.coords()[a]) + d[a];
  SpherePoint cp = SpherePoint::from_rationals(c[0], c[1], c[2]);
  return cp.coords();
}

}  // namespace

std::optional<std::array<BigInt, 3>> open_hemisphere_center(std::span<const SpherePoint> pts) {
  if (pts.empty()) return std::array<BigInt, 3>{0, 0, 1};
  for (std::size_t axis = 0; axis < 3; ++axis)
    for (int s : {1, -1}) {
      std::array<BigInt, 3> c{0, 0, 0};
      c[axis] = s;
      if (all_positive(pts, c)) return c;
    }
  if (pts.size() == 1) return pts[0].coords();
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || parallel(pts[i], pts[j])) continue;
      bool extreme = true;
      for (std::size_t r = 0; r < n && extreme; ++r)
        if (r != i && r != j && orient(pts[i], pts[j], pts[r]) <= 0) extreme = false;
      if (extreme) {
        auto c = center_from_edge(pts, i, j);
        if (!all_positive(pts, c)) throw std::logic_error("hemisphere center certificate failed");
        return c;
      }
    }
  return std::nullopt;
}

GeneralPositionReport check_affine_general_position(std::span<const SpherePoint> pts) {
  GeneralPositionReport rep;
  if (auto pp = parallel_pair(pts); pp && pts.size() < 3 && pts[(*pp)[0]] == pts[(*pp)[1]]) {
    rep.ok = false;
    rep.witness = std::array<std::size_t, 3>{(*pp)[0], (*pp)[1], (*pp)[1]};
    return rep;
  }
  auto signs = triple_signs(pts);
  if (auto w = first_zero(signs, pts.size())) {
    rep.ok = false;
    rep.witness = w;
  }
  return rep;
}

GeneralPositionReport check_projective_general_position(std::span<const SpherePoint> reps) {
  GeneralPositionReport rep;
  std::vector<SpherePoint> all;
  all.reserve(2 * reps.size());
  for (const auto& p : reps) {
    all.push_back(p);
    all.push_back(antipode(p));
  }
  const std::size_t m = all.size();
  if (reps.size() < 3) {
    if (auto pp = parallel_pair(reps)) {
      rep.ok = false;
      rep.witness = std::array<std::size_t, 3>{2 * (*pp)[0], 2 * (*pp)[1], 2 * (*pp)[1]};
    }
    return rep;
  }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      for (std::size_t c = b + 1; c < m; ++c) {
        if (orient(all[a], all[b], all[c]) != 0) continue;
        const bool antipodal = all[a] == antipode(all[b]) || all[a] == antipode(all[c]) ||
                               all[b] == antipode(all[c]);
        if (!antipodal) {
          rep.ok = false;
          rep.witness = std::array<std::size_t, 3>{a, b, c};
          return rep;
        }
      }
  return rep;
}

AffineConfig AffineConfig::create(std::vector<SpherePoint> points) {
  AffineConfig cfg;
  const std::size_t n = points.size();
  if (n < 3) {
    if (auto pp = parallel_pair(points)) {
      if (points[(*pp)[0]] == points[(*pp)[1]])
        throw InvalidArgument("repeated direction at indices " + std::to_string((*pp)[0]) + "," +
                              std::to_string((*pp)[1]));
      throw NotAffine("antipodal points do not fit in an open hemisphere");
    }
  }
  cfg.signs_ = triple_signs(points);
  if (auto w = first_zero(cfg.signs_, n))
    throw NotGeneralPosition("points " + triple_text(*w) + " are coplanar with the origin", *w);
  auto c = open_hemisphere_center(points);
  if (!c) throw NotAffine("points are not contained in an open hemisphere");
  cfg.center_ = *c;
  cfg.points_ = std::move(points);
  return cfg;
}

AffineConfig AffineConfig::from_planar(std::span<const std::array<BigRational, 2>> xy) {
  std::vector<SpherePoint> pts;
  pts.reserve(xy.size());
  for (const auto& p : xy) pts.push_back(lift_planar(p[0], p[1]));
  return create(std::move(pts));
}

ProjectiveConfig ProjectiveConfig::create(std::vector<SpherePoint> reps) {
  ProjectiveConfig cfg;
  if (reps.size() < 3) {
    if (auto pp = parallel_pair(reps))
      throw NotGeneralPosition("representatives " + std::to_string((*pp)[0]) + " and " +
                                   std::to_string((*pp)[1]) + " are parallel",
                               {2 * (*pp)[0], 2 * (*pp)[1], 2 * (*pp)[1]});
  }
  cfg.signs_ = triple_signs(reps);
  if (auto w = first_zero(cfg.signs_, reps.size())) {
    std::array<std::size_t, 3> pw{2 * (*w)[0], 2 * (*w)[1], 2 * (*w)[2]};
    throw NotGeneralPosition("points " + triple_text(pw) + " are coplanar with the origin", pw);
  }
  cfg.reps_ = std::move(reps);
  return cfg;
}

SpherePoint ProjectiveConfig::point(std::size_t a) const {
  const SpherePoint& p = reps_.at(a / 2);
  return (a % 2 == 0) ? p : antipode(p);
}

std::vector<SpherePoint> ProjectiveConfig::all_points() const {
  std::vector<SpherePoint> out;
  out.reserve(point_count());
  for (const auto& p : reps_) {
    out.push_back(p);
    out.push_back(antipode(p));
  }
  return out;
}

ProjectiveConfig projective_completion(const AffineConfig& a) {
  return ProjectiveConfig::create(std::vector<SpherePoint>(a.points().begin(), a.points().end()));
}

}  // namespace otlab
