#include <algorithm>

#include "otlab/chirotope.hpp"
#include "otlab/sign_algorithms.hpp"
#include "chirotope/spherical_search.hpp"

namespace otlab {

namespace {

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i);
  std::vector<Permutation> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace

CanonicalForm affine_canonical_form(const Chirotope& chi) {
  const std::size_t n = chi.size();
  if (n < 3) return {chi.with_flavor(Flavor::Affine), all_permutations(n)};

  const std::vector<int> hull = hull_ccw(chi);
  const std::size_t count = Chirotope::triple_count(n);
  std::vector<std::int8_t> best;
  std::vector<std::int8_t> cand(count);
  std::vector<Permutation> anchors;
  const int m = static_cast<int>(n);
  for (int p : hull) {
    const std::vector<int> lab = radial_labeling(chi, p);
    // 0: equal to best so far, -1: already smaller, +1: larger (abandon)
    int state = best.empty() ? -1 : 0;
    std::size_t t = 0;
    for (int i = 0; i < m && state <= 0; ++i)
      for (int j = i + 1; j < m && state <= 0; ++j)
        for (int k = j + 1; k < m; ++k, ++t) {
          const auto v = static_cast<std::int8_t>(chi.sign(lab[static_cast<std::size_t>(i)],
                                                           lab[static_cast<std::size_t>(j)],
                                                           lab[static_cast<std::size_t>(k)]));
          cand[t] = v;
          if (state == 0 && v != best[t]) {
            state = v < best[t] ? -1 : 1;
            if (state > 0) break;
          }
        }
    if (state > 0) continue;
    if (state < 0) {
      best = cand;
      anchors.clear();
    }
    anchors.emplace_back(lab);
  }
  return {Chirotope(n, std::move(best), Flavor::Affine), std::move(anchors)};
}

std::optional<Bijection> affine_isomorphic(const Chirotope& chi1, const Chirotope& chi2) {
  if (chi1.size() != chi2.size()) return std::nullopt;
  const CanonicalForm a = affine_canonical_form(chi1);
  const CanonicalForm b = affine_canonical_form(chi2);
  if (!(a.form == b.form)) return std::nullopt;
  return compose(b.anchors.front(), a.anchors.front().inverse());
}

SymmetryGroup affine_symmetries(const Chirotope& chi) {
  const CanonicalForm cf = affine_canonical_form(chi);
  const Permutation base_inv = cf.anchors.front().inverse();
  std::vector<Permutation> elems;
  elems.reserve(cf.anchors.size());
  for (const auto& a : cf.anchors) elems.push_back(compose(a, base_inv));
  SymmetryGroup g(std::move(elems));
  const bool cyclic = std::any_of(g.elements().begin(), g.elements().end(), [&](const Permutation& e) {
    return static_cast<std::size_t>(e.order()) == g.order();
  });
  if (!cyclic) throw std::logic_error("affine symmetry group is not cyclic");
  return g;
}

std::vector<Permutation> reversing_symmetries(const Chirotope& chi) {
  std::vector<Permutation> out;
  if (chi.flavor() == Flavor::Spherical && chi.size() >= 3) {
    out = detail::anchored_maps(chi, chi, -1, false);
  } else {
    const CanonicalForm a = affine_canonical_form(chi);
    const CanonicalForm b = affine_canonical_form(chi.negated());
    if (!(a.form == b.form)) return out;
    const Permutation base_inv = a.anchors.front().inverse();
    for (const auto& mu : b.anchors) out.push_back(compose(mu, base_inv));
    std::sort(out.begin(), out.end());
  }
  for (const auto& f : out)
    if (!compose(f, f).is_identity()) throw std::logic_error("reversing symmetry is not an involution");
  return out;
}

}  // namespace otlab
