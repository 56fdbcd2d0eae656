#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "otlab/catalog.hpp"

namespace otlab {

namespace {

using Params = std::map<std::string, int>;
using Planar = std::vector<std::array<BigRational, 2>>;

int param(const Params& p, const std::string& key, int fallback) {
  auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

GroupClass cyclic(int m) { return {GroupClass::Kind::Cyclic, m}; }
GroupClass dihedral(int m) { return {GroupClass::Kind::Dihedral, m}; }

AffineConfig affine_from(const Planar& xy) {
  try {
    return AffineConfig::from_planar(xy);
  } catch (const NotGeneralPosition& e) {
    throw ConstructionDegenerate(e.what());
  }
}

ProjectiveConfig projective_from(std::vector<SpherePoint> reps) {
  try {
    return ProjectiveConfig::create(std::move(reps));
  } catch (const NotGeneralPosition& e) {
    throw ConstructionDegenerate(e.what());
  }
}

Planar integer_points(std::initializer_list<std::pair<long, long>> pts) {
  Planar out;
  for (auto [x, y] : pts) out.push_back({BigRational(x), BigRational(y)});
  return out;
}

NamedConstruction make(std::string name, Params params, Configuration cfg, Expectation e) {
  return {std::move(name), std::move(params), std::move(cfg), std::move(e), std::nullopt};
}

NamedConstruction crosspolytope(const Params& p) {
  Expectation e;
  e.group = GroupClass{GroupClass::Kind::S4, 0};
  e.orbit_type = std::vector<int>{6, 8, 12};
  e.distribution = std::vector<std::pair<int, int>>{{3, 8}};
  e.type_extremes = std::vector<int>{3};
  return make("crosspolytope", p, projective_from({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), e);
}

NamedConstruction cube(const Params& p) {
  Expectation e;
  e.group = GroupClass{GroupClass::Kind::S4, 0};
  e.orbit_type = std::vector<int>{6, 8, 12};
  e.distribution = std::vector<std::pair<int, int>>{{3, 8}, {4, 6}};
  e.type_extremes = std::vector<int>{4, 3};
  return make("cube", p, projective_from({{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}), e);
}

// Points on a parabola are in convex position, so every k-gon order type is realized exactly.
NamedConstruction convex_kgon(const Params& p, std::string name = "convex_kgon") {
  const int k = param(p, "k", 5);
  if (k < 3) throw InvalidArgument("convex_kgon needs k >= 3");
  Planar xy;
  for (long i = 0; i < k; ++i) xy.push_back({BigRational(i), BigRational(i * i)});
  Expectation e;
  if (k <= 4) {
    e.group = GroupClass{GroupClass::Kind::S4, 0};
    e.orbit_type = std::vector<int>{6, 8, 12};
  } else {
    e.group = dihedral(k);
    e.orbit_type = std::vector<int>{2, k, k};
  }
  e.affine_symmetry_divides = k;
  return make(std::move(name), {{"k", k}}, affine_from(xy), e);
}

NamedConstruction pentagon(const Params&) {
  NamedConstruction c = convex_kgon({{"k", 5}}, "pentagon");
  c.expected.distribution = std::vector<std::pair<int, int>>{{1, 10}, {1, 10}, {5, 2}};
  c.expected.type_extremes = std::vector<int>{5, 4, 3};
  return c;
}

NamedConstruction hexagon(const Params&) {
  NamedConstruction c = convex_kgon({{"k", 6}}, "hexagon");
  c.expected.distribution = std::vector<std::pair<int, int>>{{1, 12}, {1, 12}, {2, 6}, {6, 2}};
  c.expected.type_extremes = std::vector<int>{6, 4, 4, 3};
  return c;
}

// Two flat chains bent towards each other, swapped by the point reflection through the origin.
NamedConstruction double_chain(const Params& p) {
  const int k = param(p, "k", 4);
  if (k < 2) throw InvalidArgument("double_chain needs k >= 2");
  const long height = 8L * k * k * k;
  Planar xy;
  for (long i = 0; i < k; ++i) {
    const long x = 2 * i - (k - 1);
    xy.push_back({BigRational(x), BigRational(-height - x * x)});
  }
  for (long i = 0; i < k; ++i) {
    const long x = 2 * i - (k - 1);
    xy.push_back({BigRational(-x), BigRational(height + x * x)});
  }
  Expectation e;
  e.affine_symmetry_divides = 2;
  return make("double_chain", {{"k", k}}, affine_from(xy), e);
}

// Rotation of order k acting on planar rationals.  Exact for k in {1,2,3,4,6} via lattice
// coordinates of the square or hexagonal lattice (an affine image preserves the order type);
// otherwise a rational point on the unit circle approximates the angle.
std::function<std::array<BigRational, 2>(const std::array<BigRational, 2>&)> rotation(int k) {
  using V = std::array<BigRational, 2>;
  auto integer = [](long a, long b, long c, long d) {
    return [=](const V& v) -> V { return {a * v[0] + b * v[1], c * v[0] + d * v[1]}; };
  };
  switch (k) {
    case 1: return integer(1, 0, 0, 1);
    case 2: return integer(-1, 0, 0, -1);
    case 3: return integer(0, -1, 1, -1);
    case 4: return integer(0, -1, 1, 0);
    case 6: return integer(1, -1, 1, 0);
    default: break;
  }
  // tan of half the angle, rounded to a rational with denominator 1000.
  const long q = 1000;
  const long t = std::lround(std::tan(3.14159265358979323846 / k) * q);
  const BigRational den(q * q + t * t);
  const BigRational c = BigRational(q * q - t * t) / den;
  const BigRational s = BigRational(2 * q * t) / den;
  return [=](const V& v) -> V { return {c * v[0] - s * v[1], s * v[0] + c * v[1]}; };
}

NamedConstruction stacked_kgons(const Params& p) {
  const int k = param(p, "k", 3);
  const int layers = param(p, "layers", 3);
  if (k < 3 || layers < 1) throw InvalidArgument("stacked_kgons needs k >= 3 and layers >= 1");
  const auto rot = rotation(k);
  Planar xy;
  long scale = 1;
  for (int r = 0; r < layers; ++r, scale *= 4 * k) {
    std::array<BigRational, 2> v{BigRational(scale), BigRational(r)};
    for (int j = 0; j < k; ++j) {
      xy.push_back(v);
      v = rot(v);
    }
  }
  Expectation e;
  e.affine_symmetry_divides = k;
  return make("stacked_kgons", {{"k", k}, {"layers", layers}}, affine_from(xy), e);
}

// The twelve rotations of the tetrahedron with vertices (1,1,1), (1,-1,-1), (-1,1,-1), (-1,-1,1):
// cyclic coordinate shifts composed with an even number of sign flips.
std::vector<std::array<std::array<long, 3>, 3>> tetrahedral_rotations() {
  std::vector<std::array<std::array<long, 3>, 3>> out;
  const std::array<std::array<long, 3>, 4> flips{{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}};
  for (int shift = 0; shift < 3; ++shift)
    for (const auto& f : flips) {
      std::array<std::array<long, 3>, 3> m{};
      for (int row = 0; row < 3; ++row) m[row][(row + shift) % 3] = f[row];
      out.push_back(m);
    }
  return out;
}

NamedConstruction tetra_A4(const Params& p) {
  const std::array<long, 3> p1{1, 1, 1}, p2{1, -1, -1};
  const std::array<long, 3> w{0, 1, -1};  // normal of the p1 p2 great circle
  std::array<long, 3> sat{};
  for (int i = 0; i < 3; ++i) sat[i] = 109 * p1[i] + 3 * (p2[i] - p1[i]) + w[i];
  std::vector<SpherePoint> reps{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  for (const auto& m : tetrahedral_rotations()) {
    std::array<std::int64_t, 3> img{};
    for (int r = 0; r < 3; ++r) img[r] = m[r][0] * sat[0] + m[r][1] * sat[1] + m[r][2] * sat[2];
    reps.emplace_back(img[0], img[1], img[2]);
  }
  Expectation e;
  e.group = GroupClass{GroupClass::Kind::A4, 0};
  e.orbit_type = std::vector<int>{4, 4, 6};
  e.pole_layers = std::vector<int>{3, 6, 3, 3, 1};
  NamedConstruction c = make("tetra_A4", p, projective_from(std::move(reps)), e);
  c.pole_center = std::array<BigInt, 3>{1, 1, 1};
  return c;
}

// Hexagon in hexagonal-lattice coordinates plus a point just inside one edge, on the axis of the
// reflection that swaps that edge's endpoints.
NamedConstruction seven_point_Z2(const Params& p) {
  Planar xy = integer_points({{200, 0}, {200, 200}, {0, 200}, {-200, 0}, {-200, -200}, {0, -200}, {198, 99}});
  Expectation e;
  e.group = cyclic(2);
  e.orbit_type = std::vector<int>{1, 1};
  return make("seven_point_Z2", p, affine_from(xy), e);
}

// Convex heptagon with two interior points placed without any symmetry.
NamedConstruction nine_point_Z1(const Params& p) {
  Planar xy = integer_points({{-3, 9}, {-2, 4}, {-1, 1}, {0, 0}, {1, 1}, {2, 4}, {3, 9}, {-1, 6}, {0, 5}});
  Expectation e;
  e.group = cyclic(1);
  return make("nine_point_Z1", p, affine_from(xy), e);
}

// Grid witnesses of the n = 6 projective classes found by census_small_n(6).
NamedConstruction icosahedral(const Params& p) {
  Expectation e;
  e.group = GroupClass{GroupClass::Kind::A5, 0};
  e.orbit_type = std::vector<int>{12, 20, 30};
  e.distribution = std::vector<std::pair<int, int>>{{3, 20}, {5, 12}};
  e.type_extremes = std::vector<int>{5, 3};
  return make("icosahedral", p, affine_from(integer_points({{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 3}, {3, 2}})), e);
}

NamedConstruction d3_witness(const Params& p) {
  Expectation e;
  e.group = dihedral(3);
  e.orbit_type = std::vector<int>{2, 3, 3};
  e.distribution = std::vector<std::pair<int, int>>{{1, 6}, {1, 6}, {1, 6}, {1, 6}, {1, 6}, {3, 2}};
  return make("D3_witness", p, affine_from(integer_points({{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 3}, {2, 4}})), e);
}

NamedConstruction z4_witness(const Params& p) {
  Expectation e;
  e.group = cyclic(4);
  e.orbit_type = std::vector<int>{1, 1};
  e.distribution = std::vector<std::pair<int, int>>(8, {1, 4});
  return make("Z4_witness", p, affine_from(integer_points({{0, 0}, {0, 1}, {1, 0}, {1, 3}, {2, 2}, {3, 2}})), e);
}

const std::map<std::string, NamedConstruction (*)(const Params&)>& registry() {
  static const std::map<std::string, NamedConstruction (*)(const Params&)> r{
      {"crosspolytope", crosspolytope},
      {"cube", cube},
      {"convex_kgon", [](const Params& p) { return convex_kgon(p); }},
      {"pentagon", pentagon},
      {"hexagon", hexagon},
      {"double_chain", double_chain},
      {"stacked_kgons", stacked_kgons},
      {"tetra_A4", tetra_A4},
      {"seven_point_Z2", seven_point_Z2},
      {"nine_point_Z1", nine_point_Z1},
      {"icosahedral", icosahedral},
      {"D3_witness", d3_witness},
      {"Z4_witness", z4_witness},
  };
  return r;
}

}  // namespace

NamedConstruction build_named(const std::string& name, const Params& params) {
  const auto& r = registry();
  auto it = r.find(name);
  if (it == r.end()) throw UnknownName("no construction named '" + name + "'");
  return it->second(params);
}

std::vector<std::string> construction_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

ProjectiveConfig projective_of(const Configuration& c) {
  if (const auto* a = std::get_if<AffineConfig>(&c)) return projective_completion(*a);
  return std::get<ProjectiveConfig>(c);
}

}  // namespace otlab
