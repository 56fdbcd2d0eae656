#include <algorithm>

#include "otlab/catalog.hpp"
#include "otlab/hemisets.hpp"
#include "otlab/symmetry.hpp"

namespace otlab {

namespace {

std::string join(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

std::string join(const std::vector<std::pair<int, int>>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? " " : "") + std::to_string(v[i].second) + "x|F|=" + std::to_string(v[i].first);
  return s;
}

std::string join(const McsStats& m) {
  std::string s;
  for (const auto& [order, count] : m.counts) s += (s.empty() ? "" : " ") + std::to_string(order) + ":" + std::to_string(count);
  return s.empty() ? "-" : s;
}

class Checks {
 public:
  explicit Checks(std::string name) : name_(std::move(name)) {}
  void add(std::string check, std::string expected, std::string actual) {
    const bool pass = expected == actual;
    entries_.push_back({name_, std::move(check), std::move(expected), std::move(actual), pass});
  }
  void fail(std::string check, std::string expected, std::string why) {
    entries_.push_back({name_, std::move(check), std::move(expected), std::move(why), false});
  }
  std::vector<GalleryEntry> take() { return std::move(entries_); }

 private:
  std::string name_;
  std::vector<GalleryEntry> entries_;
};

}  // namespace

bool GalleryReport::ok() const {
  return std::all_of(entries.begin(), entries.end(), [](const GalleryEntry& e) { return e.pass; });
}

std::vector<GalleryEntry> verify_construction(const NamedConstruction& c) {
  Checks out(c.name);
  const ProjectiveConfig cfg = projective_of(c.config);
  const ProjectiveOrder order = ProjectiveOrder::of(cfg);
  const std::size_t n = order.pair_count();
  const Arrangement faces = enumerate_faces(order);
  out.add("cells", std::to_string(n * (n - 1) + 2), std::to_string(faces.cells().size()));

  const SymmetryGroup group = spherical_symmetries(order);
  const Expectation& e = c.expected;
  if (e.group) {
    out.add("|G|", std::to_string(e.group->order()), std::to_string(group.order()));
    try {
      const GroupClass cls = classify(group);
      out.add("class", e.group->name(), cls.name());
      out.add("mcs statistics", join(expected_mcs(*e.group)), join(mcs_stats(group)));
    } catch (const UnclassifiableGroup& ex) {
      out.fail("class", e.group->name(), ex.what());
    }
  }

  if (group.order() > 1) {
    const PoleStructureReport poles = verify_pole_structure(order, faces, group);
    std::string failures;
    for (const auto& f : poles.failures) failures += (failures.empty() ? "" : "; ") + f;
    out.add("pole structure", "ok", poles.ok() ? "ok" : failures);
    if (e.orbit_type) out.add("orbit type", join(*e.orbit_type), poles.orbit_type.to_string());
  } else if (e.orbit_type) {
    out.fail("orbit type", join(*e.orbit_type), "trivial group has no poles");
  }

  if (e.distribution || e.type_extremes) {
    const HemisetCensus hc = hemiset_census(order, faces, &group);
    out.add("multiplicity times |F| equals |G|", "true", hc.multiplicities_match_group ? "true" : "false");
    if (e.distribution) {
      std::vector<std::pair<int, int>> got;
      for (const auto& t : hc.types) got.emplace_back(t.sym_order, t.multiplicity);
      std::sort(got.begin(), got.end());
      out.add("hemiset distribution", join(*e.distribution), join(got));
    }
    if (e.type_extremes) {
      std::vector<int> got;
      for (const auto& t : hc.types) got.push_back(t.h);
      out.add("extremes per type", join(*e.type_extremes), join(got));
    }
  }

  if (e.pole_layers && c.pole_center) {
    std::vector<SpherePoint> members;
    for (const auto& p : cfg.representatives()) members.push_back(dot_sign(p, *c.pole_center) > 0 ? p : antipode(p));
    const HullSummary layers = onion_layers(chirotope_of(members, Flavor::Affine));
    out.add("pole layers", join(*e.pole_layers), join(layers.layer_sizes));
  }

  if (e.affine_symmetry_divides) {
    if (const auto* a = std::get_if<AffineConfig>(&c.config)) {
      const Chirotope chi = chirotope_of(*a);
      const std::size_t f = affine_symmetries(chi).order();
      const HullSummary layers = onion_layers(chi);
      bool divides = *e.affine_symmetry_divides % static_cast<int>(f) == 0;
      for (int s : layers.layer_sizes)
        if (s % static_cast<int>(f) != 0 && !(s == 1 && layers.lonely)) divides = false;
      out.add("|F| divides " + std::to_string(*e.affine_symmetry_divides) + " and the layer sizes", "true",
              divides ? "true" : "false (|F|=" + std::to_string(f) + ", layers " + join(layers.layer_sizes) + ")");
    }
  }
  return out.take();
}

GalleryReport gallery_verify() {
  GalleryReport rep;
  const std::vector<std::pair<std::string, std::map<std::string, int>>> items{
      {"crosspolytope", {}},
      {"cube", {}},
      {"pentagon", {}},
      {"hexagon", {}},
      {"icosahedral", {}},
      {"D3_witness", {}},
      {"Z4_witness", {}},
      {"tetra_A4", {}},
      {"seven_point_Z2", {}},
      {"nine_point_Z1", {}},
      {"stacked_kgons", {{"k", 3}, {"layers", 3}}},
      {"double_chain", {{"k", 4}}},
  };
  for (const auto& [name, params] : items) {
    try {
      auto entries = verify_construction(build_named(name, params));
      rep.entries.insert(rep.entries.end(), entries.begin(), entries.end());
    } catch (const Error& ex) {
      rep.entries.push_back({name, "build", "ok", ex.what(), false});
    }
  }
  return rep;
}

}  // namespace otlab
