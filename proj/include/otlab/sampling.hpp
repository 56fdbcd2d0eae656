#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "otlab/chirotope.hpp"
#include "otlab/exact_core.hpp"
#include "otlab/hemisets.hpp"

namespace otlab {

std::uint64_t splitmix64(std::uint64_t x);
// Independent stream number `stream` derived from a master seed.
std::uint64_t stream_seed(std::uint64_t master, std::uint64_t stream);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  static Rng for_stream(std::uint64_t master, std::uint64_t stream) { return Rng(stream_seed(master, stream)); }

  std::uint64_t next() { return engine_(); }
  // Uniform on [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound);
  // True with probability num/den exactly.
  bool accept(std::uint64_t num, std::uint64_t den) { return below(den) < num; }
  // Uniform double on [0,1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  std::vector<int> permutation(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

enum class Distribution { UniformSquare, UniformDisk, Gaussian, SphereUniform };

std::string to_string(Distribution d);
Distribution parse_distribution(const std::string& name);  // square, disk, gaussian, sphere

struct SamplerConfig {
  Distribution distribution = Distribution::UniformSquare;
  std::size_t n = 3;
  std::uint64_t seed = 1;
  int max_retries = 100;
};

// n raw draws, no validation.  Planar distributions are lifted to z > 0; sphere draws are
// unnormalized integer vectors uniform in direction.
std::vector<SpherePoint> draw_points(Distribution d, std::size_t n, Rng& rng);
// Sphere draws flipped into the upper hemisphere so that (0,0,1) certifies affinity.
std::vector<SpherePoint> draw_affine_points(Distribution d, std::size_t n, Rng& rng);

// Validated configuration; the whole draw is repeated on a degenerate outcome.  `rejected`
// receives the number of discarded draws.
AffineConfig sample_config(const SamplerConfig& cfg, int* rejected = nullptr);
ProjectiveConfig sample_projective(std::size_t n, Rng& rng, int max_retries = 100);

struct LabeledOrderTypeSample {
  Chirotope chirotope;
  std::string source;   // identifier of the projective set
  int cell = -1;        // index into the source's cells
  Permutation labeling; // label t is the member at position labeling(t) of the cell
};

class UniformLabeledSampler {
 public:
  explicit UniformLabeledSampler(ProjectiveOrder order, std::string source = "P");
  LabeledOrderTypeSample draw(Rng& rng) const;
  LabeledOrderTypeSample labeled(int cell, const Permutation& labeling) const;
  std::size_t cell_count() const noexcept { return cells_.size(); }
  const ProjectiveOrder& order() const noexcept { return order_; }

 private:
  ProjectiveOrder order_;
  std::string source_;
  std::vector<std::vector<int>> cells_;  // member point indices per cell
};

LabeledOrderTypeSample uniform_labeled_from(const ProjectiveConfig& cfg, std::uint64_t seed);

// One projective order type drawn by the caller's source.
using ProjectiveSource = std::function<ProjectiveOrder(Rng&)>;
using LabeledSource = std::function<Chirotope(Rng&)>;
using AffineSource = std::function<Chirotope(Rng&)>;

// Single rejection rounds; nullopt is the failure outcome of a round.
std::optional<LabeledOrderTypeSample> rejection_projective_to_labeled(const ProjectiveSource& src, Rng& rng);
std::optional<Chirotope> rejection_labeled_to_unlabeled(const LabeledSource& src, Rng& rng);
std::optional<ProjectiveOrder> rejection_affine_to_projective(const AffineSource& src, Rng& rng);
// Repeats rounds until one succeeds; throws RetriesExhausted after max_rounds.
LabeledOrderTypeSample projective_to_labeled(const ProjectiveSource& src, Rng& rng, int max_rounds = 100000);

Chirotope geometric_projection_sample(std::size_t n, std::uint64_t seed);
Chirotope combinatorial_projection_sample(std::size_t n, std::uint64_t seed);

struct TrialResult {
  int h = 0;
  std::optional<std::uint64_t> type_hash;  // hash of the canonical form when computed
};
using Trial = std::function<TrialResult(Rng&)>;

// Trials for the extreme-point experiments.  With `with_type` the canonical form hash is computed.
Trial planar_trial(Distribution d, std::size_t n, bool with_type = false, int max_retries = 100);
Trial geometric_projection_trial(std::size_t n, bool with_type = false, int max_retries = 100);
Trial combinatorial_projection_trial(std::size_t n, bool with_type = false, int max_retries = 1000);

struct SampleReport {
  std::size_t trials = 0;
  BigRational extreme_mean;
  std::optional<BigRational> extreme_variance;  // unbiased; absent for a single trial
  std::map<int, long> histogram;
  std::map<std::uint64_t, long> type_frequencies;
  std::vector<TrialResult> rows;  // per trial, in trial order
};

// Trial t uses Rng::for_stream(seed, t); parallel and serial runs agree.
SampleReport extremes_statistics(const Trial& trial, std::size_t trials, std::uint64_t seed);

struct UniformityResult {
  std::size_t support = 0;
  std::size_t trials = 0;
  double chi2 = 0;
  double critical = 0;  // upper 1% point of chi-square with support-1 degrees of freedom
  double p_value = 1;
  bool pass = false;
};

// Labeled order types reachable from P: cells times labelings, deduplicated by sign string.
// Throws SupportTooLarge above max_support.
std::vector<std::string> labeled_support(const ProjectiveOrder& order, std::size_t max_support = 10000);
UniformityResult uniformity_test(const ProjectiveOrder& order, std::size_t trials, std::uint64_t seed);
// Same test against an arbitrary draw function (used for negative controls).
UniformityResult uniformity_test(const ProjectiveOrder& order,
                                 const std::function<Chirotope(Rng&)>& draw, std::size_t trials,
                                 std::uint64_t seed);
UniformityResult chi_square(const std::map<std::string, long>& counts, std::size_t support, std::size_t trials);

// Worker count: ORDERTYPE_LAB_THREADS if set, else hardware concurrency.
unsigned worker_count();
// Calls fn(i) for i in [0, count) on worker_count() threads.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace otlab
