#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "otlab/exact_core.hpp"

namespace otlab {

enum class PointKind { Affine2d, Sphere };

struct PointFile {
  PointKind kind = PointKind::Affine2d;
  std::vector<std::vector<BigRational>> coords;  // 2 or 3 coordinates per point
};

// {"kind": "affine2d"|"sphere", "points": [[[num,den], [num,den](, [num,den])], ...]}
// A coordinate may also be a single decimal string such as "3/4" or a JSON integer.
PointFile parse_point_json(std::string_view text);
PointFile read_point_file(const std::string& path);

std::vector<SpherePoint> to_sphere_points(const PointFile& f);
std::string point_json(PointKind kind, std::span<const SpherePoint> pts);

}  // namespace otlab
