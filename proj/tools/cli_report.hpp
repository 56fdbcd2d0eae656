#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "otlab/catalog.hpp"
#include "otlab/errors.hpp"
#include "otlab/point_io.hpp"

namespace otlab::cli {

class UnknownSuite : public Error {
 public:
  using Error::Error;
};

struct SuiteOptions {
  std::optional<int> n_lo, n_hi;
  std::uint64_t seed = 1;
  std::optional<std::size_t> trials;
  int grid = 5;
};

struct SuiteResult {
  nlohmann::json report;
  bool pass = false;
};

// avgl, zone, poles, gallery, census, uniformity.  Throws UnknownSuite.
SuiteResult run_suite(const std::string& suite, const SuiteOptions& opts);

nlohmann::json analyze_json(const PointFile& file);
nlohmann::json enumerate_json(const PointFile& file);
nlohmann::json gallery_json(const GalleryReport& rep);

}  // namespace otlab::cli
