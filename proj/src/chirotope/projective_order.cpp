#include "otlab/chirotope.hpp"
#include "chirotope/spherical_search.hpp"

namespace otlab {

ProjectiveOrder::ProjectiveOrder(Chirotope representatives)
    : reps_(representatives.with_flavor(Flavor::Spherical)) {}

ProjectiveOrder ProjectiveOrder::of(const ProjectiveConfig& cfg) {
  return ProjectiveOrder(Chirotope(cfg.pair_count(),
                                   std::vector<std::int8_t>(cfg.signs().begin(), cfg.signs().end()),
                                   Flavor::Spherical));
}

ProjectiveOrder ProjectiveOrder::completion_of(const Chirotope& affine) { return ProjectiveOrder(affine); }

SymmetryGroup spherical_symmetries(const ProjectiveOrder& order) {
  if (order.pair_count() < 3) throw TooSmall("spherical symmetries need at least 3 antipodal pairs");
  return SymmetryGroup(detail::anchored_maps(order, order, 1, false));
}

SymmetryGroup spherical_symmetries(const ProjectiveConfig& cfg) {
  return spherical_symmetries(ProjectiveOrder::of(cfg));
}

std::vector<Permutation> spherical_reversing_symmetries(const ProjectiveOrder& order) {
  if (order.pair_count() < 3) throw TooSmall("spherical symmetries need at least 3 antipodal pairs");
  auto out = detail::anchored_maps(order, order, -1, false);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Bijection> projective_isomorphic(const ProjectiveOrder& a, const ProjectiveOrder& b) {
  if (a.size() != b.size()) return std::nullopt;
  auto maps = detail::anchored_maps(a, b, 1, true);
  if (maps.empty()) return std::nullopt;
  return maps.front();
}

std::optional<Bijection> projective_isomorphic(const ProjectiveConfig& a, const ProjectiveConfig& b) {
  return projective_isomorphic(ProjectiveOrder::of(a), ProjectiveOrder::of(b));
}

SymmetryGroup spherical_symmetries(const Chirotope& spherical) {
  return SymmetryGroup(detail::anchored_maps(spherical, spherical, 1, false));
}

}  // namespace otlab
