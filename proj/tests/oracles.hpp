#pragma once

// Brute-force reference implementations used to cross-check the library.  They favour obviously
// correct enumeration over speed and only touch the library's data types, never its algorithms.

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "otlab/chirotope.hpp"
#include "otlab/exact_core.hpp"
#include "otlab/sampling.hpp"

namespace oracle {

using otlab::BigInt;
using otlab::Chirotope;
using otlab::ProjectiveOrder;
using otlab::SpherePoint;

// 3x3 determinant by cofactor expansion along the first row.
inline int orient(const SpherePoint& a, const SpherePoint& b, const SpherePoint& c) {
  const BigInt d = a.x() * (b.y() * c.z() - b.z() * c.y()) - a.y() * (b.x() * c.z() - b.z() * c.x()) +
                   a.z() * (b.x() * c.y() - b.y() * c.x());
  return sgn(d);
}

inline std::vector<int> iota(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

// Labeled sign string of chi relabeled by f: position t holds chi(f(a), f(b), f(c)).
inline std::string relabeled_string(const Chirotope& chi, const std::vector<int>& f) {
  const int n = static_cast<int>(chi.size());
  std::string s;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) s.push_back(chi.sign(f[a], f[b], f[c]) > 0 ? '+' : '-');
  return s;
}

inline std::size_t affine_symmetry_count(const Chirotope& chi) {
  const std::string base = relabeled_string(chi, iota(chi.size()));
  std::vector<int> f = iota(chi.size());
  std::size_t count = 0;
  do count += relabeled_string(chi, f) == base;
  while (std::next_permutation(f.begin(), f.end()));
  return count;
}

inline bool affine_isomorphic(const Chirotope& a, const Chirotope& b) {
  if (a.size() != b.size()) return false;
  const std::string target = relabeled_string(a, iota(a.size()));
  std::vector<int> f = iota(b.size());
  do
    if (relabeled_string(b, f) == target) return true;
  while (std::next_permutation(f.begin(), f.end()));
  return false;
}

// Distinct labeled order types obtained by relabeling chi.
inline std::size_t labeled_count(const Chirotope& chi) {
  std::set<std::string> seen;
  std::vector<int> f = iota(chi.size());
  do seen.insert(relabeled_string(chi, f));
  while (std::next_permutation(f.begin(), f.end()));
  return seen.size();
}

// Orientation-preserving maps of the 2n points that commute with the antipodal map.
inline std::size_t spherical_symmetry_count(const ProjectiveOrder& order) {
  const int n = static_cast<int>(order.pair_count());
  const int m = 2 * n;
  std::vector<int> pi = iota(static_cast<std::size_t>(n));
  std::size_t count = 0;
  do {
    for (unsigned flips = 0; flips < (1u << n); ++flips) {
      std::vector<int> g(static_cast<std::size_t>(m));
      for (int i = 0; i < n; ++i) {
        const int f = (flips >> i) & 1;
        g[2 * i] = 2 * pi[i] + f;
        g[2 * i + 1] = 2 * pi[i] + (1 - f);
      }
      bool ok = true;
      for (int a = 0; a < m && ok; ++a)
        for (int b = a + 1; b < m && ok; ++b)
          for (int c = b + 1; c < m && ok; ++c)
            ok = order.sign(a, b, c) == order.sign(g[a], g[b], g[c]);
      count += ok;
    }
  } while (std::next_permutation(pi.begin(), pi.end()));
  return count;
}

// A point is extreme iff it lies in no triangle of the others.
inline std::vector<int> extreme_points(const Chirotope& chi) {
  const int n = static_cast<int>(chi.size());
  std::vector<int> out;
  for (int p = 0; p < n; ++p) {
    bool inside = false;
    for (int a = 0; a < n && !inside; ++a)
      for (int b = a + 1; b < n && !inside; ++b)
        for (int c = b + 1; c < n && !inside; ++c) {
          if (p == a || p == b || p == c) continue;
          const int s1 = chi.sign(a, b, p), s2 = chi.sign(b, c, p), s3 = chi.sign(c, a, p);
          inside = s1 == s2 && s2 == s3;
        }
    if (!inside) out.push_back(p);
  }
  return out;
}

// Side vector of the hemisphere centred at direction c.
inline std::vector<std::int8_t> sides_towards(const std::vector<SpherePoint>& reps, const SpherePoint& c) {
  std::vector<std::int8_t> s;
  for (const auto& p : reps) {
    const BigInt d = p.x() * c.x() + p.y() * c.y() + p.z() * c.z();
    s.push_back(static_cast<std::int8_t>(sgn(d)));
  }
  return s;
}

// Chirotope of the members of an affine hemiset, labeled by pair index.
inline Chirotope hemiset_chirotope(const std::vector<SpherePoint>& reps, const std::vector<std::int8_t>& sides) {
  std::vector<SpherePoint> pts;
  for (std::size_t i = 0; i < reps.size(); ++i) pts.push_back(sides[i] > 0 ? reps[i] : otlab::antipode(reps[i]));
  const int n = static_cast<int>(pts.size());
  std::vector<std::int8_t> signs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) signs.push_back(static_cast<std::int8_t>(oracle::orient(pts[a], pts[b], pts[c])));
  return Chirotope(pts.size(), std::move(signs), otlab::Flavor::Affine);
}

// Occurrence of a template order type: some k-subset in some order reproduces it exactly.
inline bool contains_pattern(const Chirotope& chi, const Chirotope& templ) {
  const int n = static_cast<int>(chi.size());
  const int k = static_cast<int>(templ.size());
  const std::string target = relabeled_string(templ, iota(templ.size()));
  std::vector<char> pick(static_cast<std::size_t>(n), 0);
  std::fill(pick.begin(), pick.begin() + k, 1);
  do {
    std::vector<int> subset;
    for (int i = 0; i < n; ++i)
      if (pick[i]) subset.push_back(i);
    std::vector<int> order = subset;
    do {
      std::string s;
      for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
          for (int c = b + 1; c < k; ++c) s.push_back(chi.sign(order[a], order[b], order[c]) > 0 ? '+' : '-');
      if (s == target) return true;
    } while (std::next_permutation(order.begin(), order.end()));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

inline std::vector<SpherePoint> random_sphere_points(std::size_t n, std::uint64_t seed) {
  otlab::Rng rng(seed);
  return otlab::draw_points(otlab::Distribution::SphereUniform, n, rng);
}

}  // namespace oracle
