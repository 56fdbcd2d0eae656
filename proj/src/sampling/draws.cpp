#include <cmath>
#include <numbers>

#include "otlab/sampling.hpp"

namespace otlab {

namespace {

constexpr std::int64_t kScale = std::int64_t{1} << 53;

BigInt big(std::int64_t v) { return BigInt(static_cast<long>(v)); }

std::int64_t coord53(Rng& rng) { return static_cast<std::int64_t>(rng.next() >> 11); }

SpherePoint square_point(Rng& rng) {
  return SpherePoint(big(coord53(rng)), big(coord53(rng)), big(kScale));
}

SpherePoint disk_point(Rng& rng) {
  while (true) {
    const std::int64_t x = 2 * coord53(rng) - kScale;
    const std::int64_t y = 2 * coord53(rng) - kScale;
    const __int128 r2 = static_cast<__int128>(x) * x + static_cast<__int128>(y) * y;
    if (r2 < static_cast<__int128>(kScale) * kScale) return SpherePoint(big(x), big(y), big(kScale));
  }
}

SpherePoint gaussian_point(Rng& rng) {
  // Box-Muller on doubles, then the exact dyadic value of each double.
  const double u1 = 1.0 - rng.unit();
  const double u2 = rng.unit();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * std::numbers::pi * u2;
  return lift_planar(BigRational(r * std::cos(t)), BigRational(r * std::sin(t)));
}

SpherePoint sphere_point(Rng& rng) {
  constexpr std::int64_t half = std::int64_t{1} << 52;
  while (true) {
    const std::int64_t x = coord53(rng) - half;
    const std::int64_t y = coord53(rng) - half;
    const std::int64_t z = coord53(rng) - half;
    const __int128 r2 = static_cast<__int128>(x) * x + static_cast<__int128>(y) * y + static_cast<__int128>(z) * z;
    if (r2 > 0 && r2 <= static_cast<__int128>(half) * half) return SpherePoint(big(x), big(y), big(z));
  }
}

}  // namespace

std::string to_string(Distribution d) {
  switch (d) {
    case Distribution::UniformSquare: return "square";
    case Distribution::UniformDisk: return "disk";
    case Distribution::Gaussian: return "gaussian";
    case Distribution::SphereUniform: return "sphere";
  }
  return "?";
}

Distribution parse_distribution(const std::string& name) {
  if (name == "square") return Distribution::UniformSquare;
  if (name == "disk") return Distribution::UniformDisk;
  if (name == "gaussian") return Distribution::Gaussian;
  if (name == "sphere") return Distribution::SphereUniform;
  throw InvalidArgument("unknown distribution '" + name + "'");
}

std::vector<SpherePoint> draw_points(Distribution d, std::size_t n, Rng& rng) {
  std::vector<SpherePoint> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    switch (d) {
      case Distribution::UniformSquare: pts.push_back(square_point(rng)); break;
      case Distribution::UniformDisk: pts.push_back(disk_point(rng)); break;
      case Distribution::Gaussian: pts.push_back(gaussian_point(rng)); break;
      case Distribution::SphereUniform: pts.push_back(sphere_point(rng)); break;
    }
  }
  return pts;
}

std::vector<SpherePoint> draw_affine_points(Distribution d, std::size_t n, Rng& rng) {
  if (d != Distribution::SphereUniform) return draw_points(d, n, rng);
  std::vector<SpherePoint> pts;
  pts.reserve(n);
  while (pts.size() < n) {
    SpherePoint p = sphere_point(rng);
    if (p.z() == 0) continue;
    pts.push_back(p.z() > 0 ? p : antipode(p));
  }
  return pts;
}

AffineConfig sample_config(const SamplerConfig& cfg, int* rejected) {
  if (cfg.n < 3) throw InvalidArgument("sampler needs n >= 3");
  if (cfg.max_retries < 1) throw InvalidArgument("max_retries must be at least 1");
  int failures = 0;
  for (int attempt = 0; attempt < cfg.max_retries; ++attempt) {
    Rng rng = Rng::for_stream(cfg.seed, static_cast<std::uint64_t>(attempt));
    try {
      AffineConfig a = AffineConfig::create(draw_affine_points(cfg.distribution, cfg.n, rng));
      if (rejected) *rejected = failures;
      return a;
    } catch (const NotGeneralPosition&) {
      ++failures;
    } catch (const InvalidArgument&) {
      ++failures;
    }
  }
  if (rejected) *rejected = failures;
  throw RetriesExhausted("no general-position draw after " + std::to_string(cfg.max_retries) + " attempts");
}

ProjectiveConfig sample_projective(std::size_t n, Rng& rng, int max_retries) {
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    try {
      return ProjectiveConfig::create(draw_points(Distribution::SphereUniform, n, rng));
    } catch (const NotGeneralPosition&) {
    }
  }
  throw RetriesExhausted("no general-position projective draw");
}

}  // namespace otlab
