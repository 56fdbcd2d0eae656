#include <algorithm>
#include <map>

#include "otlab/hemisets.hpp"
#include "otlab/sign_algorithms.hpp"

namespace otlab {

HemisetCensus hemiset_census(const ProjectiveOrder& order, const SymmetryGroup* group) {
  return hemiset_census(order, enumerate_faces(order), group);
}

HemisetCensus hemiset_census(const ProjectiveOrder& order, const Arrangement& faces,
                             const SymmetryGroup* group) {
  if (order.pair_count() < 3) throw TooSmall("hemiset census needs at least 3 pairs");
  HemisetCensus out;
  out.cell_count = faces.cells().size();
  std::map<std::string, std::size_t> by_form;
  long h_total = 0;
  for (std::size_t c = 0; c < faces.cells().size(); ++c) {
    const Chirotope chi = hemiset_chirotope(order, faces.cells()[c]);
    CanonicalForm cf = affine_canonical_form(chi);
    const int h = static_cast<int>(hull_ccw(chi).size());
    h_total += h;
    auto [it, fresh] = by_form.try_emplace(cf.form.sign_string(), out.types.size());
    if (fresh)
      out.types.push_back({cf.form, h, 0, static_cast<int>(cf.anchors.size()), {}});
    HemisetType& t = out.types[it->second];
    t.multiplicity += 1;
    t.cells.push_back(static_cast<int>(c));
  }
  std::sort(out.types.begin(), out.types.end(), [](const HemisetType& a, const HemisetType& b) {
    if (a.h != b.h) return a.h > b.h;
    return a.canonical.sign_string() < b.canonical.sign_string();
  });
  long type_h = 0;
  for (const auto& t : out.types) type_h += t.h;
  out.type_average_h = make_rational(type_h, static_cast<long>(out.types.size()));
  out.cell_average_h = make_rational(h_total, static_cast<long>(out.cell_count));
  if (group) {
    out.group_order = group->order();
    for (const auto& t : out.types)
      if (static_cast<std::size_t>(t.multiplicity) * static_cast<std::size_t>(t.sym_order) != group->order())
        out.multiplicities_match_group = false;
  }
  return out;
}

}  // namespace otlab
