#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli_app.hpp"

using otlab::cli::run_cli;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "ordertype-lab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string data(const std::string& name) { return std::string(OTLAB_TEST_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("analyze a convex pentagon") {
  const Run r = cli({"analyze", "--input", data("convex_pentagon.json")});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["h"] == "5");
  CHECK(j["symmetry_class"] == "Z5");
  CHECK(j["reversing_symmetries"] == "5");
  CHECK(j["layers"].size() == 1);
}

TEST_CASE("analyze a spherical set") {
  const Run r = cli({"analyze", "--input", data("crosspolytope.json")});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["group_class"] == "S4");
  CHECK(j["orbit_type"] == "[6,8,12]");
}

TEST_CASE("exit codes for bad input") {
  const Run collinear = cli({"analyze", "--input", data("collinear.json")});
  CHECK(collinear.code == 3);
  CHECK(collinear.err.find("0") != std::string::npos);
  CHECK(cli({"analyze", "--input", data("empty.json")}).code == 2);
  CHECK(cli({"analyze", "--input", data("truncated.json")}).code == 2);
  CHECK(cli({"analyze", "--input", data("missing.json")}).code == 2);
  CHECK(cli({"analyze"}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"verify", "--suite", "nonsense"}).code == 2);
  CHECK(cli({"sample", "--n", "5", "--dist", "square", "--proj", "geometric"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("complete and enumerate") {
  const Run c = cli({"complete", "--input", data("convex_pentagon.json")});
  REQUIRE(c.code == 0);
  CHECK(nlohmann::json::parse(c.out)["points"].size() == 10);
  const Run e = cli({"enumerate", "--input", data("convex_pentagon.json")});
  REQUIRE(e.code == 0);
  const auto j = nlohmann::json::parse(e.out);
  CHECK(j["cells"] == "22");
  CHECK(j["edges"] == "40");
  CHECK(j["vertices"] == "20");
  CHECK(j["group_class"] == "D5");
  CHECK(j["hemiset_types"].size() == 3);
  CHECK(j["cell_average_h"] == "40/11");
}

TEST_CASE("sampling is reproducible and writes csv atomically") {
  const auto dir = std::filesystem::temp_directory_path() / "otlab_cli_test";
  std::filesystem::create_directories(dir);
  const std::string a = (dir / "a.csv").string(), b = (dir / "b.csv").string();
  for (const auto& path : {a, b})
    REQUIRE(cli({"sample", "--n", "12", "--trials", "50", "--seed", "9", "--format", "csv", "--output", path}).code == 0);
  auto slurp = [](const std::string& p) {
    std::ifstream f(p);
    return std::string(std::istreambuf_iterator<char>(f), {});
  };
  const std::string text = slurp(a);
  CHECK(text == slurp(b));
  CHECK(text.rfind("# ordertype-lab sample csv v1", 0) == 0);
  CHECK(text.find("# summary ") != std::string::npos);
  CHECK_FALSE(std::filesystem::exists(a + ".tmp"));
  std::filesystem::remove_all(dir);

  const Run j = cli({"sample", "--n", "8", "--trials", "40", "--dist", "sphere", "--proj", "combinatorial"});
  REQUIRE(j.code == 0);
  CHECK(nlohmann::json::parse(j.out)["trials"] == "40");
}

TEST_CASE("verification suites") {
  CHECK(cli({"verify", "--suite", "avgl", "--n", "3..8", "--trials", "3"}).code == 0);
  CHECK(cli({"verify", "--suite", "zone", "--n", "3..10"}).code == 0);
  CHECK(cli({"verify", "--suite", "poles"}).code == 0);
  CHECK(cli({"verify", "--suite", "census", "--n", "3..5"}).code == 0);
  CHECK(cli({"verify", "--suite", "uniformity", "--trials", "20000"}).code == 0);
  const Run g = cli({"gallery"});
  CHECK(g.code == 0);
  CHECK(nlohmann::json::parse(g.out).contains("entries"));
}
