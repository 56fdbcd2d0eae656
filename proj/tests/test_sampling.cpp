#include <doctest.h>

#include <cmath>
#include <set>

#include "oracles.hpp"
#include "otlab/sampling.hpp"
#include "otlab/symmetry.hpp"

using namespace otlab;

namespace {

ProjectiveOrder pentagon_order() {
  std::vector<SpherePoint> pts;
  for (long x = 0; x < 5; ++x) pts.emplace_back(x, x * x, 1);
  return ProjectiveOrder::completion_of(chirotope_of(pts, Flavor::Affine));
}

ProjectiveOrder cube_order() {
  return ProjectiveOrder::of(ProjectiveConfig::create({{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}));
}

}  // namespace

TEST_CASE("streams are deterministic and distinct") {
  CHECK(stream_seed(5, 1) == stream_seed(5, 1));
  CHECK(stream_seed(5, 1) != stream_seed(5, 2));
  CHECK(stream_seed(5, 1) != stream_seed(6, 1));
  Rng a(9), b(9);
  for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
  Rng r(1);
  for (int i = 0; i < 1000; ++i) CHECK(r.below(7) < 7);
  auto p = r.permutation(8);
  std::sort(p.begin(), p.end());
  CHECK(p == oracle::iota(8));
}

TEST_CASE("exact Bernoulli acceptance has the right frequency") {
  Rng r(2);
  int hits = 0;
  const int trials = 200000;
  for (int i = 0; i < trials; ++i) hits += r.accept(3, 10);
  const double sigma = std::sqrt(0.3 * 0.7 / trials);
  CHECK(std::abs(hits / double(trials) - 0.3) < 4 * sigma);
}

TEST_CASE("configuration sampling is reproducible and valid") {
  for (Distribution d : {Distribution::UniformSquare, Distribution::UniformDisk, Distribution::Gaussian,
                         Distribution::SphereUniform}) {
    SamplerConfig sc;
    sc.distribution = d;
    sc.n = 12;
    sc.seed = 42;
    const AffineConfig a = sample_config(sc);
    const AffineConfig b = sample_config(sc);
    CHECK(std::equal(a.points().begin(), a.points().end(), b.points().begin(), b.points().end()));
    CHECK(a.size() == 12);
    CHECK(parse_distribution(to_string(d)) == d);
  }
  CHECK_THROWS_AS(parse_distribution("torus"), InvalidArgument);
}

TEST_CASE("labeled samples are realized by their cell") {
  const ProjectiveOrder order = pentagon_order();
  const UniformLabeledSampler sampler(order);
  CHECK(sampler.cell_count() == 22);
  Rng rng(4);
  for (int t = 0; t < 50; ++t) {
    const auto s = sampler.draw(rng);
    CHECK(s.chirotope == sampler.labeled(s.cell, s.labeling).chirotope);
    CHECK(s.chirotope.size() == 5);
  }
  CHECK_THROWS_AS(sampler.labeled(0, Permutation::identity(4)), SizeMismatch);
  CHECK_THROWS_AS(UniformLabeledSampler(ProjectiveOrder(Chirotope(2, {}, Flavor::Spherical))), TooSmall);
}

TEST_CASE("labeled supports have the expected size") {
  // |support| = cells * n! / |G| for the pentagon and the cube.
  const auto pent = labeled_support(pentagon_order());
  CHECK(pent.size() == 22 * 120 / 10);
  const auto cube = labeled_support(cube_order());
  CHECK(cube.size() == 14 * 24 / 24);
  const std::set<std::string> distinct(pent.begin(), pent.end());
  CHECK(distinct.size() == pent.size());
  CHECK_THROWS_AS(labeled_support(pentagon_order(), 100), SupportTooLarge);
}

TEST_CASE("chi-square verdicts") {
  std::map<std::string, long> flat{{"a", 250}, {"b", 250}, {"c", 250}, {"d", 250}};
  const auto ok = chi_square(flat, 4, 1000);
  CHECK(ok.pass);
  CHECK(ok.chi2 == doctest::Approx(0.0));
  CHECK(ok.critical == doctest::Approx(11.3449).epsilon(1e-3));
  std::map<std::string, long> skewed{{"a", 700}, {"b", 100}, {"c", 100}, {"d", 100}};
  CHECK_FALSE(chi_square(skewed, 4, 1000).pass);
  std::map<std::string, long> outside{{"a", 500}, {"b", 499}, {"c", 1}};
  CHECK_THROWS_AS(chi_square(outside, 2, 1000), InvalidArgument);
  CHECK_THROWS_AS(chi_square(flat, 1, 1000), InvalidArgument);
}

TEST_CASE("uniform labeled sampling passes and a biased sampler fails") {
  const ProjectiveOrder order = pentagon_order();
  CHECK(uniformity_test(order, 20000, 7).pass);
  const UniformLabeledSampler sampler(order);
  const auto biased = [&](Rng& rng) {
    if (rng.accept(1, 2)) return sampler.labeled(0, Permutation(rng.permutation(5))).chirotope;
    return sampler.draw(rng).chirotope;
  };
  CHECK_FALSE(uniformity_test(order, biased, 20000, 7).pass);
}

TEST_CASE("rejection rounds produce valid outcomes") {
  const ProjectiveOrder order = pentagon_order();
  const ProjectiveSource fixed = [&](Rng&) { return order; };
  Rng rng(8);
  int accepted = 0;
  for (int i = 0; i < 2000; ++i)
    if (auto s = rejection_projective_to_labeled(fixed, rng)) {
      ++accepted;
      CHECK(s->chirotope.size() == 5);
    }
  const double sigma = std::sqrt(0.1 * 0.9 / 2000);
  CHECK(std::abs(accepted / 2000.0 - 0.1) < 4 * sigma);
  CHECK(projective_to_labeled(fixed, rng).chirotope.size() == 5);

  const UniformLabeledSampler sampler(order);
  const LabeledSource labeled = [&](Rng& r) { return sampler.draw(r).chirotope; };
  for (int i = 0; i < 200; ++i)
    if (auto c = rejection_labeled_to_unlabeled(labeled, rng)) CHECK(*c == affine_canonical_form(*c).form);

  std::vector<SpherePoint> quad{{0, 0, 1}, {2, 0, 1}, {2, 2, 1}, {0, 2, 1}};
  const Chirotope square = chirotope_of(quad, Flavor::Affine);
  const AffineSource affine = [&](Rng&) { return square; };
  for (int i = 0; i < 50; ++i)
    if (auto p = rejection_affine_to_projective(affine, rng)) CHECK(p->pair_count() == 4);
}

TEST_CASE("projection samples and trials") {
  const Chirotope g = geometric_projection_sample(8, 3);
  CHECK(g.size() == 8);
  CHECK(geometric_projection_sample(8, 3) == g);
  const Chirotope c = combinatorial_projection_sample(8, 3);
  CHECK(c.size() == 8);
  CHECK(c.flavor() == Flavor::Affine);

  const auto rep = extremes_statistics(planar_trial(Distribution::UniformSquare, 20, true), 200, 1);
  CHECK(rep.trials == 200);
  CHECK(rep.rows.size() == 200);
  long total = 0;
  for (const auto& [h, count] : rep.histogram) {
    CHECK(h >= 3);
    CHECK(h <= 20);
    total += count;
  }
  CHECK(total == 200);
  CHECK(rep.rows[0].type_hash.has_value());
  const auto again = extremes_statistics(planar_trial(Distribution::UniformSquare, 20, true), 200, 1);
  CHECK(again.extreme_mean == rep.extreme_mean);
  CHECK(rep.extreme_variance.has_value());

  // Every h of a combinatorial projection trial is a hull size of some cell.
  const auto comb = extremes_statistics(combinatorial_projection_trial(6), 300, 2);
  for (const auto& [h, count] : comb.histogram) CHECK((h >= 3 && h <= 6));
  CHECK(comb.extreme_mean > 3);
  CHECK(comb.extreme_mean < 5);
}

TEST_CASE("serial and parallel runs agree") {
  const Trial trial = geometric_projection_trial(15);
  setenv("ORDERTYPE_LAB_THREADS", "1", 1);
  const auto serial = extremes_statistics(trial, 100, 5);
  setenv("ORDERTYPE_LAB_THREADS", "3", 1);
  const auto parallel = extremes_statistics(trial, 100, 5);
  unsetenv("ORDERTYPE_LAB_THREADS");
  CHECK(serial.extreme_mean == parallel.extreme_mean);
  CHECK(serial.histogram == parallel.histogram);
}
