#pragma once

#include <algorithm>
#include <vector>

#include "otlab/errors.hpp"
#include "otlab/group.hpp"

namespace otlab::detail {

// All maps f with dst.sign(f a, f b, f c) = s * src.sign(a, b, c) that also carry antipodes to
// antipodes.  A map is pinned by the images of one non-antipodal anchor pair (p, q): the points
// on each side of the great circle through p and q are matched in radial order around p.
template <class Src, class Dst>
std::vector<Permutation> anchored_maps(const Src& src, const Dst& dst, int s, bool first_only) {
  std::vector<Permutation> found;
  const int m = static_cast<int>(src.size());
  if (static_cast<int>(dst.size()) != m) return found;

  auto antipodes_ok = [&](const std::vector<int>& f) {
    for (int a = 0; a < m; ++a) {
      const int sa = src.antipode(a);
      const int da = dst.antipode(f[static_cast<std::size_t>(a)]);
      if (sa < 0 ? da >= 0 : da != f[static_cast<std::size_t>(sa)]) return false;
    }
    return true;
  };
  auto signs_ok = [&](const std::vector<int>& f) {
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        for (int c = b + 1; c < m; ++c)
          if (dst.sign(f[static_cast<std::size_t>(a)], f[static_cast<std::size_t>(b)],
                       f[static_cast<std::size_t>(c)]) != s * src.sign(a, b, c))
            return false;
    return true;
  };

  if (m < 3) {
    std::vector<int> f(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) f[static_cast<std::size_t>(i)] = i;
    do {
      if (antipodes_ok(f)) {
        found.emplace_back(f);
        if (first_only) break;
      }
    } while (std::next_permutation(f.begin(), f.end()));
    return found;
  }

  const int p = 0;
  int q = 1;
  while (q < m && q == src.antipode(p)) ++q;
  if (q >= m) return found;
  const int ap = src.antipode(p);
  const int aq = src.antipode(q);

  auto split = [](const auto& sys, int u, int v, int sgn, std::vector<int>& plus,
                  std::vector<int>& minus, int& zeros) {
    const int n = static_cast<int>(sys.size());
    plus.clear();
    minus.clear();
    zeros = 0;
    for (int r = 0; r < n; ++r) {
      if (r == u || r == v) continue;
      const int v3 = sgn * sys.sign(u, v, r);
      if (v3 > 0)
        plus.push_back(r);
      else if (v3 < 0)
        minus.push_back(r);
      else
        ++zeros;
    }
    auto radial = [&](int a, int b) { return sgn * sys.sign(u, a, b) > 0; };
    std::sort(plus.begin(), plus.end(), radial);
    std::sort(minus.begin(), minus.end(), radial);
  };

  std::vector<int> plus, minus;
  int zeros = 0;
  split(src, p, q, 1, plus, minus, zeros);
  const int expected_zeros = (ap >= 0) + (aq >= 0);
  if (zeros != expected_zeros) throw NotGeneralPosition("symmetry search on a degenerate set", {0, 0, 0});

  std::vector<int> plus2, minus2, f(static_cast<std::size_t>(m));
  for (int p2 = 0; p2 < m; ++p2) {
    const int ap2 = dst.antipode(p2);
    if ((ap >= 0) != (ap2 >= 0)) continue;
    for (int q2 = 0; q2 < m; ++q2) {
      if (q2 == p2 || q2 == ap2) continue;
      const int aq2 = dst.antipode(q2);
      if ((aq >= 0) != (aq2 >= 0)) continue;
      int zeros2 = 0;
      split(dst, p2, q2, s, plus2, minus2, zeros2);
      if (plus2.size() != plus.size() || minus2.size() != minus.size() || zeros2 != zeros) continue;
      std::fill(f.begin(), f.end(), -1);
      f[static_cast<std::size_t>(p)] = p2;
      f[static_cast<std::size_t>(q)] = q2;
      if (ap >= 0) f[static_cast<std::size_t>(ap)] = ap2;
      if (aq >= 0) f[static_cast<std::size_t>(aq)] = aq2;
      for (std::size_t t = 0; t < plus.size(); ++t) f[static_cast<std::size_t>(plus[t])] = plus2[t];
      for (std::size_t t = 0; t < minus.size(); ++t) f[static_cast<std::size_t>(minus[t])] = minus2[t];
      if (std::count(f.begin(), f.end(), -1) != 0) continue;
      std::vector<int> sorted = f;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
      if (!antipodes_ok(f) || !signs_ok(f)) continue;
      found.emplace_back(f);
      if (first_only) return found;
    }
  }
  return found;
}

}  // namespace otlab::detail
