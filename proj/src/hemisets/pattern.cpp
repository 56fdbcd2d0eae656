#include <algorithm>

#include "otlab/hemisets.hpp"
#include "otlab/sign_algorithms.hpp"

namespace otlab {

PatternSpec make_pattern(const Chirotope& templ) {
  const int k = static_cast<int>(templ.size());
  if (k < 3) throw ConstructionDegenerate("pattern needs at least 3 points");
  const std::vector<int> hull = hull_ccw(templ);
  if (hull.size() != 3) throw ConstructionDegenerate("pattern template must have 3 extreme points");
  std::vector<int> inner;
  for (int v = 0; v < k; ++v)
    if (std::find(hull.begin(), hull.end(), v) == hull.end()) inner.push_back(v);
  bool chain_ok = false;
  for (std::size_t e = 0; e < 3 && !chain_ok; ++e) {
    std::vector<int> sub = inner;
    sub.push_back(hull[e]);
    sub.push_back(hull[(e + 1) % 3]);
    chain_ok = hull_ccw(SubsetView<Chirotope>(templ, sub)).size() == sub.size();
  }
  if (!chain_ok)
    throw ConstructionDegenerate("interior points do not form a convex chain with a hull edge");
  return PatternSpec{k, templ, affine_canonical_form(templ).form};
}

PatternSpec make_pattern(int k) {
  if (k < 3) throw ConstructionDegenerate("pattern needs k >= 3");
  std::vector<std::array<BigRational, 2>> xy{
      {BigRational(-10 * k), BigRational(0)}, {BigRational(10 * k), BigRational(0)}, {BigRational(0), BigRational(10 * k)}};
  for (int i = 1; i <= k - 3; ++i) xy.push_back({BigRational(i), BigRational(i * i + 1)});
  try {
    return make_pattern(chirotope_of(AffineConfig::from_planar(xy)));
  } catch (const NotGeneralPosition& e) {
    throw ConstructionDegenerate(std::string("pattern template degenerate: ") + e.what());
  }
}

bool contains_pattern(const Chirotope& affine, const PatternSpec& spec) {
  const int n = static_cast<int>(affine.size());
  const int k = spec.k;
  if (n < k) return false;
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  while (true) {
    SubsetView<Chirotope> view(affine, pick);
    if (hull_ccw(view).size() == 3) {
      const Chirotope sub = Chirotope::from_function(static_cast<std::size_t>(k), Flavor::Affine,
                                                     [&](int a, int b, int c) { return view.sign(a, b, c); });
      if (affine_canonical_form(sub).form == spec.canonical) return true;
    }
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return false;
}

}  // namespace otlab
