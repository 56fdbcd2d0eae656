#include <doctest.h>

#include "oracles.hpp"
#include "otlab/exact_core.hpp"
#include "otlab/point_io.hpp"

using namespace otlab;

TEST_CASE("sphere points are stored in primitive form") {
  CHECK(SpherePoint(2, 4, 6) == SpherePoint(1, 2, 3));
  CHECK(SpherePoint(-3, 0, 9) == SpherePoint(-1, 0, 3));
  CHECK_FALSE(SpherePoint(1, 2, 3) == SpherePoint(-1, -2, -3));
  CHECK_THROWS_AS(SpherePoint(0, 0, 0), InvalidArgument);
  CHECK(SpherePoint::from_rationals(BigRational(1, 2), BigRational(1, 3), 1) == SpherePoint(3, 2, 6));
}

TEST_CASE("lifting planar rationals clears denominators") {
  CHECK(lift_planar(BigRational(1, 2), BigRational(3, 4)) == SpherePoint(2, 3, 4));
  CHECK(lift_planar(0, 0) == SpherePoint(0, 0, 1));
}

TEST_CASE("orient agrees with a cofactor determinant on small and huge coordinates") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto pts = oracle::random_sphere_points(3, seed);
    CHECK(orient(pts[0], pts[1], pts[2]) == oracle::orient(pts[0], pts[1], pts[2]));
  }
  const BigInt big("123456789012345678901234567890");
  const SpherePoint a(big, 1, 2), b(3, big + 1, 5), c(7, 11, big - 3);
  CHECK(orient(a, b, c) == oracle::orient(a, b, c));
  const SpherePoint p(1, 2, 3), q(4, 5, 7), r(-2, 1, 1);
  CHECK(orient(p, q, r) == -orient(q, p, r));
  CHECK(orient(p, q, r) == orient(q, r, p));
  CHECK(orient(p, q, antipode(r)) == -orient(p, q, r));
  CHECK(orient(p, q, p) == 0);
}

TEST_CASE("three points on a parabola are counterclockwise") {
  const auto a = lift_planar(0, 0), b = lift_planar(1, 1), c = lift_planar(2, 4);
  CHECK(orient(a, b, c) == 1);
  CHECK(orient(b, a, c) == -1);
}

TEST_CASE("affine configurations reject collinear triples with a witness") {
  std::vector<std::array<BigRational, 2>> xy{{0, 0}, {1, 1}, {5, 0}, {2, 2}};
  try {
    AffineConfig::from_planar(xy);
    FAIL("expected NotGeneralPosition");
  } catch (const NotGeneralPosition& e) {
    auto w = e.witness();
    std::sort(w.begin(), w.end());
    CHECK(w == std::array<std::size_t, 3>{0, 1, 3});
  }
}

TEST_CASE("affine configurations carry a certifying center") {
  std::vector<SpherePoint> pts{{1, 0, 1}, {0, 1, 1}, {-1, -1, 1}, {5, -3, 1}};
  const AffineConfig cfg = AffineConfig::create(pts);
  for (const auto& p : cfg.points()) CHECK(dot_sign(p, cfg.center()) > 0);
  // A set on the sphere that only fits a tilted hemisphere.
  std::vector<SpherePoint> tilted{{1, 0, 0}, {1, 2, -1}, {1, -1, 3}, {2, 1, 1}};
  const AffineConfig t = AffineConfig::create(tilted);
  for (const auto& p : t.points()) CHECK(dot_sign(p, t.center()) > 0);
  std::vector<SpherePoint> around{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}};
  CHECK_THROWS_AS(AffineConfig::create(around), NotAffine);
}

TEST_CASE("projective general position ignores antipodal pairs") {
  std::vector<SpherePoint> reps{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK(check_projective_general_position(reps).ok);
  std::vector<SpherePoint> flat{{1, 0, 0}, {0, 1, 0}, {1, 1, 0}};
  CHECK_FALSE(check_projective_general_position(flat).ok);
  CHECK_THROWS_AS(ProjectiveConfig::create(flat), NotGeneralPosition);
  std::vector<SpherePoint> twice{{1, 0, 0}, {0, 1, 0}, {-1, 0, 0}};
  CHECK_FALSE(check_projective_general_position(twice).ok);
}

TEST_CASE("projective completion doubles the point count") {
  std::vector<std::array<BigRational, 2>> xy{{0, 0}, {1, 0}, {0, 1}, {1, 3}};
  const ProjectiveConfig p = projective_completion(AffineConfig::from_planar(xy));
  CHECK(p.pair_count() == 4);
  CHECK(p.point_count() == 8);
  CHECK(p.point(1) == antipode(p.point(0)));
}

TEST_CASE("triple signs are listed in lexicographic order") {
  std::vector<SpherePoint> pts{lift_planar(0, 0), lift_planar(1, 0), lift_planar(0, 1), lift_planar(3, 3)};
  const auto s = triple_signs(pts);
  REQUIRE(s.size() == 4);
  CHECK(s[0] == oracle::orient(pts[0], pts[1], pts[2]));
  CHECK(s[1] == oracle::orient(pts[0], pts[1], pts[3]));
  CHECK(s[2] == oracle::orient(pts[0], pts[2], pts[3]));
  CHECK(s[3] == oracle::orient(pts[1], pts[2], pts[3]));
}

TEST_CASE("rationals parse and print canonically") {
  CHECK(parse_rational("6/8") == BigRational(3, 4));
  CHECK(to_string(parse_rational("-10/4")) == "-5/2");
  CHECK(to_string(parse_rational("7")) == "7");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("point files round trip through JSON") {
  const PointFile f = parse_point_json(R"({"kind":"affine2d","points":[[["1","2"],["3","4"]],["5", 6]]})");
  REQUIRE(f.coords.size() == 2);
  CHECK(f.coords[0][0] == BigRational(1, 2));
  CHECK(f.coords[0][1] == BigRational(3, 4));
  CHECK(f.coords[1][1] == 6);
  const auto pts = to_sphere_points(f);
  const PointFile back = parse_point_json(point_json(PointKind::Affine2d, pts));
  CHECK(to_sphere_points(back) == pts);

  CHECK_THROWS_AS(parse_point_json(""), ParseError);
  CHECK_THROWS_AS(parse_point_json(R"({"kind":"torus","points":[]})"), ParseError);
  CHECK_THROWS_AS(parse_point_json(R"({"kind":"affine2d","points":[[1]]})"), ParseError);
  CHECK_THROWS_AS(parse_point_json(R"({"kind":"affine2d","points":[[["1","0"],"2"]]})"), ParseError);
}
