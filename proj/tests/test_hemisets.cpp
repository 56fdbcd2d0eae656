#include <doctest.h>

#include "oracles.hpp"
#include "otlab/hemisets.hpp"
#include "otlab/sampling.hpp"

using namespace otlab;

namespace {

ProjectiveConfig random_projective(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return sample_projective(n, rng);
}

std::vector<SpherePoint> reps_of(const ProjectiveConfig& cfg) {
  return {cfg.representatives().begin(), cfg.representatives().end()};
}

}  // namespace

TEST_CASE("face counts and Euler characteristic") {
  for (std::size_t n = 3; n <= 9; ++n) {
    const Arrangement faces = enumerate_faces(random_projective(n, n));
    const FaceCensus c = faces.census();
    const std::size_t pairs = n * (n - 1) / 2;
    CHECK(c.cell_count == 2 * pairs + 2);
    CHECK(c.edge_count == 4 * pairs);
    CHECK(c.vertex_count == 2 * pairs);
    CHECK(static_cast<long>(c.vertex_count) - static_cast<long>(c.edge_count) + static_cast<long>(c.cell_count) == 2);
  }
  CHECK_THROWS_AS(enumerate_faces(ProjectiveOrder(Chirotope(1, {}, Flavor::Spherical))), TooSmall);
}

TEST_CASE("cells are affine hemisets closed under the antipodal map") {
  const Arrangement faces = enumerate_faces(random_projective(6, 1));
  for (const auto& cell : faces.cells()) {
    CHECK(cell.is_affine());
    CHECK(cell.size() == 6);
    CHECK(faces.cell_index(cell.antipodal()) >= 0);
  }
  for (const auto& e : faces.edges()) CHECK(e.boundary_pairs().size() == 1);
  for (const auto& v : faces.vertices()) CHECK(v.boundary_pairs().size() == 2);
}

TEST_CASE("every hemisphere cut by a random direction is an enumerated cell") {
  const ProjectiveConfig cfg = random_projective(7, 5);
  const auto reps = reps_of(cfg);
  const Arrangement faces = enumerate_faces(cfg);
  Rng rng(77);
  for (const auto& dir : draw_points(Distribution::SphereUniform, 3000, rng)) {
    const auto sides = oracle::sides_towards(reps, dir);
    if (std::find(sides.begin(), sides.end(), 0) != sides.end()) continue;
    CHECK(faces.cell_index(Hemiset(sides)) >= 0);
  }
}

TEST_CASE("cell edge counts equal hull sizes of the hemisets") {
  const ProjectiveConfig cfg = random_projective(7, 9);
  const ProjectiveOrder order = ProjectiveOrder::of(cfg);
  const Arrangement faces = enumerate_faces(order);
  const auto reps = reps_of(cfg);
  for (std::size_t c = 0; c < faces.cells().size(); ++c) {
    const Hemiset& cell = faces.cells()[c];
    const Chirotope chi = oracle::hemiset_chirotope(reps, cell.sides());
    CHECK(hemiset_chirotope(order, cell) == chi);
    const auto brute = oracle::extreme_points(chi);
    CHECK(extreme_points(order, cell).h() == brute.size());
    CHECK(faces.cell_edge_counts()[c] == static_cast<int>(brute.size()));
  }
}

TEST_CASE("cell averages of edge counts are exact") {
  for (std::size_t n = 3; n <= 12; ++n) {
    const Arrangement faces = enumerate_faces(random_projective(n, 100 + n));
    BigInt sum = 0;
    for (int e : faces.cell_edge_counts()) sum += e;
    const long ln = static_cast<long>(n);
    CHECK(make_rational(sum, static_cast<long>(faces.cells().size())) == 4 - make_rational(8, ln * ln - ln + 2));
  }
}

TEST_CASE("zones of great circles") {
  for (std::size_t n = 3; n <= 14; ++n) {
    const ProjectiveConfig cfg = random_projective(n, 200 + n);
    const Arrangement faces = enumerate_faces(cfg);
    for (int i = 0; i < static_cast<int>(n); ++i) {
      CHECK(faces.zone_cell_count(i) == static_cast<int>(4 * (n - 1)));
      CHECK(faces.zone_edge_sum(i) <= 19 * (static_cast<int>(n) - 1) - 10);
      CHECK(zone_edge_sum(cfg, i) == faces.zone_edge_sum(i));
    }
  }
}

TEST_CASE("hemisets from anchors") {
  const ProjectiveConfig cfg = random_projective(6, 3);
  const Arrangement faces = enumerate_faces(cfg);
  for (int si : {-1, 1})
    for (int sj : {-1, 1}) {
      const Hemiset h = hemiset_from_anchor(cfg, 0, 1, si, sj);
      CHECK(faces.cell_index(h) >= 0);
      CHECK(h.anchor().i == 0);
    }
  const Hemiset boundary = hemiset_from_anchor(cfg, 2, 4, 0, 0);
  CHECK(boundary.boundary_pairs() == std::vector<int>{2, 4});
  CHECK(faces.face_index(boundary) >= 0);
  CHECK_THROWS_AS(hemiset_from_anchor(cfg, 1, 1, 1, 1), DegenerateAnchor);
}

TEST_CASE("hulls and onion layers of affine sets") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    SamplerConfig sc;
    sc.n = 5 + seed % 8;
    sc.seed = seed;
    const AffineConfig cfg = sample_config(sc);
    const Chirotope chi = chirotope_of(cfg);
    auto brute = oracle::extreme_points(chi);
    auto hull = extreme_points(cfg).extreme;
    std::sort(hull.begin(), hull.end());
    CHECK(hull == brute);
    const HullSummary layers = onion_layers(chi);
    std::size_t total = 0;
    for (int s : layers.layer_sizes) total += static_cast<std::size_t>(s);
    CHECK(total == sc.n);
    CHECK(layers.layers.front().size() == brute.size());
    for (std::size_t l = 0; l < layers.layers.size(); ++l)
      CHECK(static_cast<int>(layers.layers[l].size()) == layers.layer_sizes[l]);
    CHECK(layers.lonely.has_value() == (layers.layer_sizes.back() == 1));
  }
  const std::vector<SpherePoint> tri{{0, 0, 1}, {6, 0, 1}, {0, 6, 1}, {1, 1, 1}};
  const HullSummary s = onion_layers(chirotope_of(tri, Flavor::Affine));
  CHECK(s.layer_sizes == std::vector<int>{3, 1});
  CHECK(s.lonely == 3);
}

TEST_CASE("the chart hull agrees with the sign hull") {
  SamplerConfig sc;
  sc.n = 30;
  sc.seed = 4;
  const AffineConfig cfg = sample_config(sc);
  auto chart = chart_hull(cfg.points(), cfg.center());
  REQUIRE(chart.has_value());
  auto signs = extreme_points(chirotope_of(cfg)).extreme;
  std::sort(chart->begin(), chart->end());
  std::sort(signs.begin(), signs.end());
  CHECK(*chart == signs);
  const std::vector<SpherePoint> line{{0, 0, 1}, {1, 1, 1}, {2, 2, 1}, {0, 5, 1}};
  CHECK_FALSE(chart_hull(line, {0, 0, 1}).has_value());
}

TEST_CASE("hemiset census of a convex pentagon") {
  const std::vector<SpherePoint> pts{{0, 0, 1}, {1, 1, 1}, {2, 4, 1}, {3, 9, 1}, {4, 16, 1}};
  const ProjectiveOrder order = ProjectiveOrder::completion_of(chirotope_of(pts, Flavor::Affine));
  const HemisetCensus c = hemiset_census(order);
  CHECK(c.cell_count == 22);
  REQUIRE(c.types.size() == 3);
  CHECK(c.types[0].h == 5);
  CHECK(c.types[0].multiplicity == 2);
  CHECK(c.types[1].multiplicity == 10);
  CHECK(c.types[2].multiplicity == 10);
  CHECK(c.type_average_h == 4);
  CHECK(c.cell_average_h == make_rational(40, 11));
}

TEST_CASE("pattern templates and the pattern checker") {
  for (int k : {3, 4, 5, 6}) {
    const PatternSpec spec = make_pattern(k);
    CHECK(spec.k == k);
    CHECK(oracle::extreme_points(spec.templ).size() == 3);
  }
  const std::vector<SpherePoint> convex{{0, 0, 1}, {1, 1, 1}, {2, 4, 1}, {3, 9, 1}, {4, 16, 1}, {5, 25, 1}};
  CHECK_FALSE(contains_pattern(chirotope_of(convex, Flavor::Affine), make_pattern(4)));
  const std::vector<SpherePoint> four{{0, 0, 1}, {2, 0, 1}, {2, 2, 1}, {0, 2, 1}};
  CHECK_THROWS_AS(make_pattern(chirotope_of(four, Flavor::Affine)), ConstructionDegenerate);
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    SamplerConfig sc;
    sc.n = 7;
    sc.seed = seed;
    const Chirotope chi = chirotope_of(sample_config(sc));
    for (int k : {4, 5}) {
      const PatternSpec spec = make_pattern(k);
      CHECK(contains_pattern(chi, spec) == oracle::contains_pattern(chi, spec.templ));
    }
  }
}
