#include "cli_app.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cli_report.hpp"
#include "otlab/sampling.hpp"

namespace otlab::cli {

namespace {

constexpr const char* kCsvVersion = "# ordertype-lab sample csv v1: seed,n,trial,h,canonical_form_hash";
// Canonical forms cost O(h n^2) per sample; beyond this size the hash column is left empty.
constexpr std::size_t kTypeHashMaxN = 24;

struct Options {
  std::string input;
  std::string output;
  std::string format = "json";
  std::uint64_t seed = 1;
  std::optional<std::size_t> trials;
  std::string n;
  std::string dist = "square";
  std::string proj;
  std::string suite;
  int grid = 5;
};

// Writes to a sibling temporary file and renames it, so readers never see partial output.
void write_atomic(const std::string& path, const std::string& text) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw InvalidArgument("cannot write " + tmp.string());
    f << text;
    if (!f) throw InvalidArgument("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.output.empty())
    out << text;
  else
    write_atomic(o.output, text);
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::pair<int, int> parse_range(const std::string& s) {
  try {
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
      const int v = std::stoi(s);
      return {v, v};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw InvalidArgument("--n expects N or A..B, got '" + s + "'");
  }
}

PointFile load_input(const Options& o) {
  if (o.input.empty()) throw InvalidArgument("--input is required");
  return read_point_file(o.input);
}

int cmd_analyze(const Options& o, std::ostream& out) {
  emit(o, dump(analyze_json(load_input(o))), out);
  return kOk;
}

int cmd_complete(const Options& o, std::ostream& out) {
  const PointFile f = load_input(o);
  if (f.kind != PointKind::Affine2d) throw InvalidArgument("complete expects an affine2d point file");
  const ProjectiveConfig cfg = projective_completion(AffineConfig::create(to_sphere_points(f)));
  const auto all = cfg.all_points();
  emit(o, point_json(PointKind::Sphere, all), out);
  return kOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  emit(o, dump(enumerate_json(load_input(o))), out);
  return kOk;
}

int cmd_sample(const Options& o, std::ostream& out) {
  if (o.n.empty()) throw InvalidArgument("--n is required");
  const auto [n_lo, n_hi] = parse_range(o.n);
  if (n_lo != n_hi) throw InvalidArgument("sample takes a single --n");
  if (n_lo < 3) throw InvalidArgument("--n must be at least 3");
  const auto n = static_cast<std::size_t>(n_lo);
  const std::size_t trials = o.trials.value_or(1000);
  if (trials < 1) throw InvalidArgument("--trials must be at least 1");
  if (o.format != "json" && o.format != "csv") throw InvalidArgument("--format is json or csv");
  const Distribution dist = parse_distribution(o.dist);
  const bool with_type = n <= kTypeHashMaxN;

  Trial trial;
  if (o.proj.empty()) {
    trial = planar_trial(dist, n, with_type);
  } else {
    if (dist != Distribution::SphereUniform) throw InvalidArgument("--proj needs --dist sphere");
    if (o.proj == "geometric")
      trial = geometric_projection_trial(n, with_type);
    else if (o.proj == "combinatorial")
      trial = combinatorial_projection_trial(n, with_type);
    else
      throw InvalidArgument("--proj is geometric or combinatorial");
  }
  const SampleReport rep = extremes_statistics(trial, trials, o.seed);

  nlohmann::json summary{{"dist", o.dist},
                         {"proj", o.proj.empty() ? nlohmann::json(nullptr) : nlohmann::json(o.proj)},
                         {"n", std::to_string(n)},
                         {"trials", std::to_string(trials)},
                         {"seed", std::to_string(o.seed)},
                         {"mean", to_string(rep.extreme_mean)},
                         {"mean_decimal", std::to_string(rep.extreme_mean.get_d())}};
  if (rep.extreme_variance) {
    summary["variance"] = to_string(*rep.extreme_variance);
    summary["variance_decimal"] = std::to_string(rep.extreme_variance->get_d());
  } else {
    summary["variance"] = nullptr;
  }
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [h, count] : rep.histogram) hist[std::to_string(h)] = std::to_string(count);
  summary["histogram"] = hist;
  if (with_type) summary["distinct_types"] = std::to_string(rep.type_frequencies.size());

  if (o.format == "json") {
    emit(o, dump(summary), out);
    return kOk;
  }
  std::ostringstream csv;
  csv << kCsvVersion << "\n" << "seed,n,trial,h,canonical_form_hash\n";
  for (std::size_t t = 0; t < rep.rows.size(); ++t) {
    const auto& r = rep.rows[t];
    csv << o.seed << ',' << n << ',' << t << ',' << r.h << ',';
    if (r.type_hash) csv << *r.type_hash;
    csv << '\n';
  }
  csv << "# summary " << summary.dump() << "\n";
  emit(o, csv.str(), out);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  SuiteOptions so;
  so.seed = o.seed;
  so.trials = o.trials;
  so.grid = o.grid;
  if (!o.n.empty()) {
    const auto [lo, hi] = parse_range(o.n);
    if (lo < 3 || hi < lo) throw InvalidArgument("--n range must satisfy 3 <= A <= B");
    so.n_lo = lo;
    so.n_hi = hi;
  }
  const SuiteResult r = run_suite(o.suite, so);
  emit(o, dump(r.report), out);
  return r.pass ? kOk : kAssertionFailed;
}

int cmd_gallery(const Options& o, std::ostream& out) {
  const GalleryReport rep = gallery_verify();
  emit(o, dump(gallery_json(rep)), out);
  return rep.ok() ? kOk : kAssertionFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Order types of planar and projective point sets", "ordertype-lab"};
  app.require_subcommand(1);
  Options o;

  auto add_output = [&](CLI::App* c) {
    c->add_option("--output", o.output, "Write to this file instead of stdout");
  };
  auto add_input = [&](CLI::App* c) {
    c->add_option("--input", o.input, "Point file (JSON)")->required();
  };

  auto* analyze = app.add_subcommand("analyze", "Chirotope, hull, layers and symmetry of a point file");
  add_input(analyze);
  add_output(analyze);
  auto* complete = app.add_subcommand("complete", "Projective completion of an affine point file");
  add_input(complete);
  add_output(complete);
  auto* enumerate = app.add_subcommand("enumerate", "Faces and affine hemisets of the completion");
  add_input(enumerate);
  add_output(enumerate);

  auto* sample = app.add_subcommand("sample", "Extreme-point statistics of random samples");
  sample->add_option("--n", o.n, "Point count")->required();
  sample->add_option("--trials", o.trials, "Number of samples (default 1000)");
  sample->add_option("--seed", o.seed, "Master seed (default 1)");
  sample->add_option("--dist", o.dist, "square, disk, gaussian or sphere")
      ->check(CLI::IsMember({"square", "disk", "gaussian", "sphere"}));
  sample->add_option("--proj", o.proj, "geometric or combinatorial (sphere only)")
      ->check(CLI::IsMember({"geometric", "combinatorial"}));
  sample->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  add_output(sample);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", o.suite, "avgl, zone, poles, gallery, census or uniformity")->required();
  verify->add_option("--n", o.n, "Size or range A..B");
  verify->add_option("--seed", o.seed, "Master seed (default 1)");
  verify->add_option("--trials", o.trials, "Configurations per size or samples, suite dependent");
  verify->add_option("--grid", o.grid, "Census grid side (default 5)");
  add_output(verify);

  auto* gallery = app.add_subcommand("gallery", "Verify every named construction");
  add_output(gallery);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(o, out);
    if (complete->parsed()) return cmd_complete(o, out);
    if (enumerate->parsed()) return cmd_enumerate(o, out);
    if (sample->parsed()) return cmd_sample(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (gallery->parsed()) return cmd_gallery(o, out);
  } catch (const NotGeneralPosition& e) {
    const auto& w = e.witness();
    err << "degenerate input: " << e.what() << " (points " << w[0] << ' ' << w[1] << ' ' << w[2] << ")\n";
    return kDegenerate;
  } catch (const NotAffine& e) {
    err << "degenerate input: " << e.what() << "\n";
    return kDegenerate;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnknownSuite& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    // Anything else the library raises is a failed run rather than bad usage.
    err << "error: " << e.what() << "\n";
    return kAssertionFailed;
  }
  return kUsage;
}

}  // namespace otlab::cli
