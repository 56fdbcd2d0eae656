#include "otlab/point_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace otlab {

namespace {

using nlohmann::json;

BigRational coord_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return make_rational(BigInt(j.dump()), 1);
  if (j.is_array() && j.size() == 2) {
    auto part = [](const json& v) -> BigInt {
      if (v.is_string()) {
        BigRational r = parse_rational(v.get<std::string>());
        if (r.get_den() != 1) throw ParseError("fraction part must be an integer");
        return r.get_num();
      }
      if (v.is_number_integer()) return BigInt(v.dump());
      throw ParseError("fraction part must be an integer string");
    };
    BigInt den = part(j[1]);
    if (den == 0) throw ParseError("zero denominator");
    return make_rational(part(j[0]), den);
  }
  throw ParseError("coordinate must be [numerator, denominator] or a decimal string");
}

}  // namespace

PointFile parse_point_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("point file must be a JSON object");
  PointFile out;
  const std::string kind = doc.value("kind", std::string("affine2d"));
  if (kind == "affine2d")
    out.kind = PointKind::Affine2d;
  else if (kind == "sphere")
    out.kind = PointKind::Sphere;
  else
    throw ParseError("unknown kind '" + kind + "'");
  if (!doc.contains("points") || !doc["points"].is_array())
    throw ParseError("missing 'points' array");
  const std::size_t dim = out.kind == PointKind::Affine2d ? 2 : 3;
  for (const auto& pt : doc["points"]) {
    if (!pt.is_array() || pt.size() != dim)
      throw ParseError("each point needs " + std::to_string(dim) + " coordinates");
    std::vector<BigRational> c;
    for (const auto& v : pt) c.push_back(coord_from_json(v));
    out.coords.push_back(std::move(c));
  }
  return out;
}

PointFile read_point_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_point_json(ss.str());
}

std::vector<SpherePoint> to_sphere_points(const PointFile& f) {
  std::vector<SpherePoint> out;
  out.reserve(f.coords.size());
  for (const auto& c : f.coords) {
    if (f.kind == PointKind::Affine2d)
      out.push_back(lift_planar(c[0], c[1]));
    else
      out.push_back(SpherePoint::from_rationals(c[0], c[1], c[2]));
  }
  return out;
}

std::string point_json(PointKind kind, std::span<const SpherePoint> pts) {
  json doc;
  doc["kind"] = kind == PointKind::Affine2d ? "affine2d" : "sphere";
  json arr = json::array();
  for (const auto& p : pts) {
    json pt = json::array();
    if (kind == PointKind::Affine2d) {
      if (p.z() <= 0) throw InvalidArgument("point " + p.to_string() + " has no planar chart image");
      pt.push_back({p.x().get_str(), p.z().get_str()});
      pt.push_back({p.y().get_str(), p.z().get_str()});
    } else {
      for (const auto& c : p.coords()) pt.push_back({c.get_str(), "1"});
    }
    arr.push_back(std::move(pt));
  }
  doc["points"] = std::move(arr);
  return doc.dump(2);
}

}  // namespace otlab
