#include <algorithm>
#include <map>
#include <unordered_map>

#include "otlab/symmetry.hpp"

namespace otlab {

namespace {

std::vector<int> fixed_faces(const std::vector<Hemiset>& faces, const Permutation& g) {
  std::vector<int> out;
  for (std::size_t f = 0; f < faces.size(); ++f)
    if (apply(g, faces[f]) == faces[f]) out.push_back(static_cast<int>(f));
  return out;
}

}  // namespace

std::pair<Hemiset, Hemiset> poles_of(const Arrangement& faces, const Permutation& g) {
  if (g.is_identity()) throw InvalidArgument("the identity fixes every hemiset; poles need g != id");
  const std::vector<Hemiset> all = faces.all_faces();
  const std::vector<int> fixed = fixed_faces(all, g);
  if (fixed.size() != 2)
    throw PoleCountViolation("symmetry fixes " + std::to_string(fixed.size()) + " hemisets, expected 2");
  const Hemiset& a = all[static_cast<std::size_t>(fixed[0])];
  const Hemiset& b = all[static_cast<std::size_t>(fixed[1])];
  if (!(a.antipodal() == b)) throw PoleCountViolation("the two fixed hemisets are not antipodal");
  return {a, b};
}

std::pair<Hemiset, Hemiset> poles_of(const ProjectiveOrder& order, const Permutation& g) {
  return poles_of(enumerate_faces(order), g);
}

std::vector<Pole> all_poles(const Arrangement& faces, const SymmetryGroup& group) {
  if (group.order() < 2) throw TrivialGroup("a trivial group has no poles");
  std::vector<Pole> poles;
  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t gi = 1; gi < group.order(); ++gi) {
    auto [a, b] = poles_of(faces, group[gi]);
    for (Hemiset* h : {&a, &b}) {
      auto [it, fresh] = seen.try_emplace(h->key(), poles.size());
      if (fresh) poles.push_back({*h, {0}, 0});
      poles[it->second].fixed_by.push_back(static_cast<int>(gi));
    }
  }
  for (auto& p : poles) p.stabilizer_order = static_cast<int>(p.fixed_by.size());
  return poles;
}

std::vector<Pole> all_poles(const ProjectiveOrder& order, const SymmetryGroup& group) {
  return all_poles(enumerate_faces(order), group);
}

std::vector<HemisetOrbit> orbits_and_stabilizers(const SymmetryGroup& group,
                                                 std::span<const Hemiset> hemisets) {
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < hemisets.size(); ++i) index.emplace(hemisets[i].key(), static_cast<int>(i));
  std::vector<char> done(hemisets.size(), 0);
  std::vector<HemisetOrbit> out;
  for (std::size_t i = 0; i < hemisets.size(); ++i) {
    if (done[i]) continue;
    HemisetOrbit orbit;
    int stab = 0;
    for (const auto& g : group.elements()) {
      const Hemiset img = apply(g, hemisets[i]);
      auto it = index.find(img.key());
      if (it == index.end()) throw InvalidArgument("hemiset list is not closed under the group");
      if (it->second == static_cast<int>(i)) ++stab;
      if (!done[static_cast<std::size_t>(it->second)]) {
        done[static_cast<std::size_t>(it->second)] = 1;
        orbit.members.push_back(it->second);
      }
    }
    std::sort(orbit.members.begin(), orbit.members.end());
    orbit.stabilizer_order = stab;
    if (orbit.members.size() * static_cast<std::size_t>(stab) != group.order())
      throw std::logic_error("orbit-stabilizer identity failed");
    out.push_back(std::move(orbit));
  }
  return out;
}

OrbitType orbit_type(const SymmetryGroup& group, std::span<const Pole> poles) {
  std::vector<Hemiset> hs;
  hs.reserve(poles.size());
  for (const auto& p : poles) hs.push_back(p.hemiset);
  OrbitType t;
  for (const auto& o : orbits_and_stabilizers(group, hs)) t.sizes.push_back(static_cast<int>(o.members.size()));
  std::sort(t.sizes.begin(), t.sizes.end());
  return t;
}

OrbitType orbit_type(const ProjectiveOrder& order, const SymmetryGroup& group) {
  const auto poles = all_poles(order, group);
  return orbit_type(group, poles);
}

PoleStructureReport verify_pole_structure(const ProjectiveOrder& order, const Arrangement& faces,
                                          const SymmetryGroup& group) {
  (void)order;
  PoleStructureReport rep;
  const int n_group = static_cast<int>(group.order());
  if (n_group < 2) return rep;
  try {
    rep.poles = all_poles(faces, group);
  } catch (const PoleCountViolation& e) {
    rep.failures.push_back(e.what());
    return rep;
  }

  long double_count = 0;
  for (const auto& p : rep.poles) double_count += p.stabilizer_order - 1;
  if (double_count != 2L * (n_group - 1))
    rep.failures.push_back("double count: sum of (stabilizer-1) is " + std::to_string(double_count) +
                           ", expected " + std::to_string(2 * (n_group - 1)));

  std::unordered_map<std::string, int> pole_stab;
  for (const auto& p : rep.poles) pole_stab[p.hemiset.key()] = p.stabilizer_order;
  for (const auto& p : rep.poles) {
    auto it = pole_stab.find(p.hemiset.antipodal().key());
    if (it == pole_stab.end() || it->second != p.stabilizer_order)
      rep.failures.push_back("antipode of a pole is not a pole with the same stabilizer");
  }

  const auto mcs = maximal_cyclic_subgroups(group);
  for (const auto& p : rep.poles)
    if (std::find(mcs.begin(), mcs.end(), p.fixed_by) == mcs.end())
      rep.failures.push_back("pole stabilizer is not a maximal cyclic subgroup");

  const std::vector<Hemiset> all = faces.all_faces();
  for (const auto& c : mcs) {
    if (c.size() < 2) continue;
    std::vector<int> fixed;
    for (std::size_t f = 0; f < all.size(); ++f) {
      bool stable = true;
      for (int gi : c)
        if (!(apply(group[static_cast<std::size_t>(gi)], all[f]) == all[f])) {
          stable = false;
          break;
        }
      if (stable) fixed.push_back(static_cast<int>(f));
    }
    if (fixed.size() != 2 ||
        !(all[static_cast<std::size_t>(fixed[0])].antipodal() == all[static_cast<std::size_t>(fixed[1])]))
      rep.failures.push_back("a maximal cyclic subgroup does not stabilize exactly two antipodal hemisets");
  }
  for (std::size_t a = 0; a < mcs.size(); ++a)
    for (std::size_t b = a + 1; b < mcs.size(); ++b) {
      std::vector<int> common;
      std::set_intersection(mcs[a].begin(), mcs[a].end(), mcs[b].begin(), mcs[b].end(),
                            std::back_inserter(common));
      if (common != std::vector<int>{0}) rep.failures.push_back("maximal cyclic subgroups intersect nontrivially");
    }

  rep.orbit_type = orbit_type(group, rep.poles);
  if (n_group > 2 && !orbit_type_allowed(rep.orbit_type, group.order()))
    rep.failures.push_back("orbit type " + rep.orbit_type.to_string() + " not allowed for |G|=" +
                           std::to_string(n_group));

  // Orbits of size |G|/i number (2i/|G|) * mcs_i.
  const McsStats stats = mcs_stats(group);
  std::map<int, int> orbit_sizes;
  for (int s : rep.orbit_type.sizes) orbit_sizes[s] += 1;
  std::size_t predicted = 0;
  for (const auto& [i, count] : stats.counts) {
    if (i < 2) continue;
    const int want_num = 2 * i * count;
    if (want_num % n_group != 0) {
      rep.failures.push_back("mcs count not compatible with group order");
      continue;
    }
    const int want = want_num / n_group;
    predicted += static_cast<std::size_t>(want);
    const int got = orbit_sizes.count(n_group / i) ? orbit_sizes[n_group / i] : 0;
    if (got != want)
      rep.failures.push_back("orbits of size " + std::to_string(n_group / i) + ": " + std::to_string(got) +
                             ", expected " + std::to_string(want));
  }
  if (predicted != rep.orbit_type.sizes.size())
    rep.failures.push_back("pole orbits not accounted for by maximal cyclic subgroups");
  return rep;
}

}  // namespace otlab
