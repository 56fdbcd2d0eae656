#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "otlab/errors.hpp"

namespace otlab {

using BigInt = mpz_class;
// mpq_class keeps a positive denominator and a reduced fraction once canonicalized;
// make_rational does that for every value it hands out.
using BigRational = mpq_class;

BigRational make_rational(const BigInt& num, const BigInt& den);
BigRational parse_rational(std::string_view text);  // "7", "-3/4"
std::string to_string(const BigInt& v);
std::string to_string(const BigRational& v);

// A direction in R^3 in primitive integer form; positive multiples are the same point.
class SpherePoint {
 public:
  SpherePoint(BigInt x, BigInt y, BigInt z);
  SpherePoint(std::int64_t x, std::int64_t y, std::int64_t z)
      : SpherePoint(BigInt(static_cast<long>(x)), BigInt(static_cast<long>(y)),
                    BigInt(static_cast<long>(z))) {}

  static SpherePoint from_rationals(const BigRational& x, const BigRational& y,
                                    const BigRational& z);

  const BigInt& x() const noexcept { return c_[0]; }
  const BigInt& y() const noexcept { return c_[1]; }
  const BigInt& z() const noexcept { return c_[2]; }
  const std::array<BigInt, 3>& coords() const noexcept { return c_; }

  // All coordinates below 2^40 in magnitude; orient then runs in 128-bit integers.
  bool is_small() const noexcept { return small_; }
  const std::array<std::int64_t, 3>& small_coords() const noexcept { return s_; }

  bool operator==(const SpherePoint& o) const { return c_ == o.c_; }
  std::string to_string() const;

 private:
  std::array<BigInt, 3> c_;
  std::array<std::int64_t, 3> s_{};
  bool small_ = false;
};

int orient(const SpherePoint& p, const SpherePoint& q, const SpherePoint& r);
int dot_sign(const SpherePoint& p, const std::array<BigInt, 3>& v);
BigInt dot(const SpherePoint& p, const SpherePoint& q);

SpherePoint lift_planar(const BigRational& x, const BigRational& y);
SpherePoint antipode(const SpherePoint& p);
bool parallel(const SpherePoint& p, const SpherePoint& q);
// Throws DegenerateAnchor when p and q are equal or antipodal.
SpherePoint cross_dir(const SpherePoint& p, const SpherePoint& q);

struct GeneralPositionReport {
  bool ok = true;
  std::optional<std::array<std::size_t, 3>> witness;
};

// Affine rule: no triple with orient 0, no repeated direction.
GeneralPositionReport check_affine_general_position(std::span<const SpherePoint> pts);
// Projective rule over the 2n points (2i = +p_i, 2i+1 = -p_i): every zero triple contains
// an antipodal pair.  The witness uses the 2n-point indexing.
GeneralPositionReport check_projective_general_position(std::span<const SpherePoint> reps);

// Signs of all triples i<j<k in row-major lexicographic order.
std::vector<std::int8_t> triple_signs(std::span<const SpherePoint> pts);

class AffineConfig {
 public:
  // Validates open-hemisphere containment and general position.
  static AffineConfig create(std::vector<SpherePoint> points);
  static AffineConfig from_planar(std::span<const std::array<BigRational, 2>> xy);

  std::size_t size() const noexcept { return points_.size(); }
  const SpherePoint& operator[](std::size_t i) const { return points_[i]; }
  std::span<const SpherePoint> points() const noexcept { return points_; }
  // <p, center> > 0 for every point.
  const std::array<BigInt, 3>& center() const noexcept { return center_; }
  std::span<const std::int8_t> signs() const noexcept { return signs_; }

 private:
  AffineConfig() = default;
  std::vector<SpherePoint> points_;
  std::array<BigInt, 3> center_;
  std::vector<std::int8_t> signs_;
};

class ProjectiveConfig {
 public:
  static ProjectiveConfig create(std::vector<SpherePoint> reps);

  std::size_t pair_count() const noexcept { return reps_.size(); }
  std::size_t point_count() const noexcept { return 2 * reps_.size(); }
  std::span<const SpherePoint> representatives() const noexcept { return reps_; }
  // Point a of the 2n-point list: 2i is p_i, 2i+1 is -p_i.
  SpherePoint point(std::size_t a) const;
  std::vector<SpherePoint> all_points() const;
  std::span<const std::int8_t> signs() const noexcept { return signs_; }

 private:
  ProjectiveConfig() = default;
  std::vector<SpherePoint> reps_;
  std::vector<std::int8_t> signs_;
};

ProjectiveConfig projective_completion(const AffineConfig& a);

// A direction c with <p,c> > 0 for all p, or nullopt when none exists.
std::optional<std::array<BigInt, 3>> open_hemisphere_center(std::span<const SpherePoint> pts);

}  // namespace otlab
