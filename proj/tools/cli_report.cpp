#include "cli_report.hpp"

#include <map>

#include "otlab/hemisets.hpp"
#include "otlab/sampling.hpp"
#include "otlab/symmetry.hpp"

namespace otlab::cli {

using nlohmann::json;

namespace {

std::string str(std::size_t v) { return std::to_string(v); }
std::string str(int v) { return std::to_string(v); }

json int_list(const std::vector<int>& v) {
  json a = json::array();
  for (int x : v) a.push_back(str(x));
  return a;
}

std::string group_name(const SymmetryGroup& g) {
  try {
    return classify(g).name();
  } catch (const UnclassifiableGroup&) {
    return "unclassified";
  }
}

ProjectiveConfig random_projective(std::size_t n, std::uint64_t seed, std::size_t index) {
  Rng rng = Rng::for_stream(seed, (static_cast<std::uint64_t>(n) << 32) | index);
  return sample_projective(n, rng);
}

// Cell count, edge count and squared edge count of the cells of one random configuration.
struct CellSums {
  std::size_t cells = 0, edges = 0, vertices = 0;
  BigInt sum = 0, sum_sq = 0;
};

CellSums cell_sums(const Arrangement& faces) {
  CellSums s;
  const FaceCensus c = faces.census();
  s.cells = c.cell_count;
  s.edges = c.edge_count;
  s.vertices = c.vertex_count;
  for (int e : faces.cell_edge_counts()) {
    s.sum += e;
    s.sum_sq += BigInt(e) * e;
  }
  return s;
}

SuiteResult suite_avgl(const SuiteOptions& o) {
  const int lo = o.n_lo.value_or(3), hi = o.n_hi.value_or(25);
  const std::size_t per_n = o.trials.value_or(10);
  SuiteResult r{json::object(), true};
  json rows = json::array();
  for (int n = lo; n <= hi; ++n) {
    const long pairs = static_cast<long>(n) * (n - 1) / 2;
    const BigRational mean_target(4 - make_rational(8, n * n - n + 2));
    const BigRational sq_bound = make_rational(19L * n * (n - 1) - 10L * n, static_cast<long>(n) * (n - 1) + 2);
    std::size_t failures = 0;
    for (std::size_t i = 0; i < per_n; ++i) {
      const ProjectiveOrder order = ProjectiveOrder::of(random_projective(static_cast<std::size_t>(n), o.seed, i));
      const CellSums s = cell_sums(enumerate_faces(order));
      const bool counts = s.cells == static_cast<std::size_t>(2 * pairs + 2) &&
                          s.edges == static_cast<std::size_t>(4 * pairs) &&
                          s.vertices == static_cast<std::size_t>(2 * pairs);
      const BigInt cells(static_cast<unsigned long>(s.cells));
      const bool mean_ok = make_rational(s.sum, cells) == mean_target;
      const bool sq_ok = make_rational(s.sum_sq, cells) <= sq_bound;
      if (!(counts && mean_ok && sq_ok)) ++failures;
    }
    rows.push_back({{"n", str(n)}, {"configs", str(per_n)}, {"failures", str(failures)},
                    {"mean_target", to_string(mean_target)}, {"square_bound", to_string(sq_bound)}});
    if (failures) r.pass = false;
  }
  r.report = {{"suite", "avgl"}, {"seed", std::to_string(o.seed)}, {"rows", rows}, {"pass", r.pass}};
  return r;
}

SuiteResult suite_zone(const SuiteOptions& o) {
  const int lo = o.n_lo.value_or(3), hi = o.n_hi.value_or(40);
  const std::size_t per_n = o.trials.value_or(10);
  SuiteResult r{json::object(), true};
  json rows = json::array();
  for (int n = lo; n <= hi; ++n) {
    const int bound = 19 * (n - 1) - 10;
    int worst = 0;
    std::size_t failures = 0;
    for (std::size_t i = 0; i < per_n; ++i) {
      const Arrangement faces =
          enumerate_faces(ProjectiveOrder::of(random_projective(static_cast<std::size_t>(n), o.seed, i)));
      for (int c = 0; c < n; ++c) {
        const int z = faces.zone_edge_sum(c);
        worst = std::max(worst, z);
        if (z > bound) ++failures;
      }
    }
    rows.push_back({{"n", str(n)}, {"bound", str(bound)}, {"max_zone", str(worst)}, {"failures", str(failures)}});
    if (failures) r.pass = false;
  }
  r.report = {{"suite", "zone"}, {"seed", std::to_string(o.seed)}, {"rows", rows}, {"pass", r.pass}};
  return r;
}

SuiteResult suite_poles(const SuiteOptions& o) {
  SuiteResult r{json::object(), true};
  json rows = json::array();
  for (const std::string name : {"crosspolytope", "cube", "pentagon", "hexagon", "icosahedral", "D3_witness",
                                 "Z4_witness", "tetra_A4", "seven_point_Z2"}) {
    const NamedConstruction c = build_named(name);
    const ProjectiveOrder order = ProjectiveOrder::of(projective_of(c.config));
    const Arrangement faces = enumerate_faces(order);
    const SymmetryGroup g = spherical_symmetries(order);
    const PoleStructureReport rep = verify_pole_structure(order, faces, g);
    json failures = json::array();
    for (const auto& f : rep.failures) failures.push_back(f);
    rows.push_back({{"construction", name}, {"group_order", str(g.order())}, {"poles", str(rep.poles.size())},
                    {"orbit_type", rep.orbit_type.to_string()}, {"failures", failures}});
    if (!rep.ok()) r.pass = false;
  }
  r.report = {{"suite", "poles"}, {"seed", std::to_string(o.seed)}, {"rows", rows}, {"pass", r.pass}};
  return r;
}

SuiteResult suite_census(const SuiteOptions& o) {
  // Known counts of affine and projective order types and unlabeled average extremes.
  const std::map<int, std::pair<std::size_t, std::size_t>> known{{3, {1, 1}}, {4, {2, 1}}, {5, {3, 1}}, {6, {20, 4}}};
  const std::map<int, BigRational> known_avg{{3, BigRational(3)}, {4, BigRational(7, 2)}, {5, BigRational(4)}};
  const int lo = o.n_lo.value_or(3), hi = o.n_hi.value_or(6);
  SuiteResult r{json::object(), true};
  json rows = json::array();
  for (int n = lo; n <= hi; ++n) {
    const CensusResult c = census_small_n(n, o.grid, o.seed, o.trials.value_or(10000));
    json row{{"n", str(n)},
             {"affine_types", str(c.affine.size())},
             {"projective_types", str(c.projective.size())},
             {"average_h", to_string(c.average_h)},
             {"grid_subsets", str(c.grid_subsets)}};
    json classes = json::array();
    for (const auto& p : c.projective)
      classes.push_back({{"group_order", str(p.group_order)}, {"group", p.group_class},
                         {"affine_types", str(p.affine_type_count)}});
    row["projective"] = classes;
    json types = json::array();
    for (const auto& t : c.affine)
      types.push_back({{"canonical_form", t.canonical.sign_string()}, {"h", str(t.h)},
                       {"sym_order", str(t.sym_order)}, {"projective_class", str(t.projective_class)}});
    row["types"] = types;
    bool ok = true;
    if (auto it = known.find(n); it != known.end())
      ok = c.affine.size() == it->second.first && c.projective.size() == it->second.second;
    if (auto it = known_avg.find(n); it != known_avg.end()) ok = ok && c.average_h == it->second;
    row["pass"] = ok;
    rows.push_back(row);
    if (!ok) r.pass = false;
  }
  r.report = {{"suite", "census"}, {"seed", std::to_string(o.seed)}, {"grid", str(o.grid)}, {"rows", rows},
              {"pass", r.pass}};
  return r;
}

json uniformity_json(const UniformityResult& u) {
  return {{"support", str(u.support)}, {"trials", str(u.trials)}, {"chi2", std::to_string(u.chi2)},
          {"critical", std::to_string(u.critical)}, {"p_value", std::to_string(u.p_value)}, {"pass", u.pass}};
}

SuiteResult suite_uniformity(const SuiteOptions& o) {
  const std::size_t trials = o.trials.value_or(100000);
  const ProjectiveOrder order = ProjectiveOrder::of(projective_of(build_named("pentagon").config));
  const UniformityResult u = uniformity_test(order, trials, o.seed);
  // Negative control: the sampler stuck on a single cell must be rejected.
  const UniformLabeledSampler sampler(order);
  const UniformityResult biased = uniformity_test(
      order,
      [&](Rng& rng) { return sampler.labeled(0, Permutation(rng.permutation(order.pair_count()))).chirotope; },
      trials, o.seed);
  SuiteResult r{json::object(), u.pass && !biased.pass};
  r.report = {{"suite", "uniformity"}, {"seed", std::to_string(o.seed)}, {"sampler", uniformity_json(u)},
              {"biased_control", uniformity_json(biased)}, {"pass", r.pass}};
  return r;
}

}  // namespace

json gallery_json(const GalleryReport& rep) {
  json entries = json::array();
  for (const auto& e : rep.entries)
    entries.push_back({{"construction", e.construction}, {"check", e.check}, {"expected", e.expected},
                       {"actual", e.actual}, {"pass", e.pass}});
  return {{"entries", entries}, {"pass", rep.ok()}};
}

SuiteResult run_suite(const std::string& suite, const SuiteOptions& opts) {
  if (suite == "avgl") return suite_avgl(opts);
  if (suite == "zone") return suite_zone(opts);
  if (suite == "poles") return suite_poles(opts);
  if (suite == "census") return suite_census(opts);
  if (suite == "uniformity") return suite_uniformity(opts);
  if (suite == "gallery") {
    const GalleryReport rep = gallery_verify();
    json j = gallery_json(rep);
    j["suite"] = "gallery";
    return {j, rep.ok()};
  }
  throw UnknownSuite("unknown suite '" + suite + "'");
}

json analyze_json(const PointFile& file) {
  const std::vector<SpherePoint> pts = to_sphere_points(file);
  if (file.kind == PointKind::Affine2d) {
    const AffineConfig cfg = AffineConfig::create(pts);
    const Chirotope chi = chirotope_of(cfg);
    const HullSummary hull = onion_layers(cfg);
    const SymmetryGroup f = affine_symmetries(chi);
    json layers = json::array();
    for (const auto& l : hull.layers) layers.push_back(int_list(l));
    return {{"kind", "affine2d"},
            {"n", str(cfg.size())},
            {"chirotope_hash", std::to_string(chi.hash())},
            {"signs", chi.sign_string()},
            {"h", str(hull.h())},
            {"hull_ccw", int_list(hull.extreme)},
            {"layers", layers},
            {"lonely", hull.lonely ? json(str(*hull.lonely)) : json(nullptr)},
            {"symmetry_order", str(f.order())},
            {"symmetry_class", "Z" + str(f.order())},
            {"reversing_symmetries", str(reversing_symmetries(chi).size())}};
  }
  const ProjectiveConfig cfg = ProjectiveConfig::create(pts);
  const ProjectiveOrder order = ProjectiveOrder::of(cfg);
  const SymmetryGroup g = spherical_symmetries(order);
  json out{{"kind", "sphere"},
           {"pairs", str(cfg.pair_count())},
           {"chirotope_hash", std::to_string(order.representatives().hash())},
           {"group_order", str(g.order())},
           {"group_class", group_name(g)}};
  if (g.order() > 1) out["orbit_type"] = orbit_type(order, g).to_string();
  return out;
}

json enumerate_json(const PointFile& file) {
  const std::vector<SpherePoint> pts = to_sphere_points(file);
  const ProjectiveConfig cfg = file.kind == PointKind::Affine2d ? projective_completion(AffineConfig::create(pts))
                                                                : ProjectiveConfig::create(pts);
  const ProjectiveOrder order = ProjectiveOrder::of(cfg);
  const Arrangement faces = enumerate_faces(order);
  const FaceCensus c = faces.census();
  const SymmetryGroup g = spherical_symmetries(order);
  const HemisetCensus hc = hemiset_census(order, faces, &g);
  json types = json::array();
  for (const auto& t : hc.types)
    types.push_back({{"signs", t.canonical.sign_string()}, {"h", str(t.h)}, {"multiplicity", str(t.multiplicity)},
                     {"symmetry_order", str(t.sym_order)}});
  json zones = json::array();
  for (int i = 0; i < static_cast<int>(order.pair_count()); ++i) zones.push_back(str(faces.zone_edge_sum(i)));
  return {{"pairs", str(order.pair_count())},
          {"cells", str(c.cell_count)},
          {"edges", str(c.edge_count)},
          {"vertices", str(c.vertex_count)},
          {"cell_average_h", to_string(hc.cell_average_h)},
          {"type_average_h", to_string(hc.type_average_h)},
          {"group_order", str(g.order())},
          {"group_class", group_name(g)},
          {"hemiset_types", types},
          {"zone_edge_sums", zones}};
}

}  // namespace otlab::cli
