#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "otlab/exact_core.hpp"
#include "otlab/group.hpp"

namespace otlab {

enum class Flavor { Affine, Spherical };

// Signs of a simple labeled configuration, stored for i<j<k in row-major order.
class Chirotope {
 public:
  Chirotope(std::size_t n, std::vector<std::int8_t> lex_signs, Flavor flavor);
  template <class F>
    requires std::invocable<F, int, int, int>
  static Chirotope from_function(std::size_t n, Flavor flavor, F&& sign);

  std::size_t size() const noexcept { return n_; }
  Flavor flavor() const noexcept { return flavor_; }

  // Sign of an arbitrary triple by permutation parity; 0 when an index repeats.
  int sign(int i, int j, int k) const {
    if (i == j || j == k || i == k) return 0;
    int s = 1;
    if (i > j) std::swap(i, j), s = -s;
    if (j > k) std::swap(j, k), s = -s;
    if (i > j) std::swap(i, j), s = -s;
    return s * signs_[lex_index(i, j, k)];
  }
  int antipode(int) const { return -1; }

  std::span<const std::int8_t> lex_signs() const noexcept { return signs_; }
  std::string sign_string() const;  // '+' / '-' per stored triple
  std::uint64_t hash() const;       // FNV-1a of sign_string()
  Chirotope negated() const;
  Chirotope with_flavor(Flavor f) const;

  bool operator==(const Chirotope& o) const { return n_ == o.n_ && signs_ == o.signs_; }

  static std::size_t triple_count(std::size_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

 private:
  std::size_t lex_index(int i, int j, int k) const {
    auto c3 = [](std::size_t x) { return x < 3 ? 0 : x * (x - 1) * (x - 2) / 6; };
    auto c2 = [](std::size_t x) { return x < 2 ? 0 : x * (x - 1) / 2; };
    const std::size_t ui = static_cast<std::size_t>(i);
    const std::size_t m = n_ - ui - 1;
    const std::size_t jj = static_cast<std::size_t>(j) - ui - 1;
    const std::size_t kk = static_cast<std::size_t>(k) - ui - 1;
    return (c3(n_) - c3(n_ - ui)) + (c2(m) - c2(m - jj)) + (kk - jj - 1);
  }

  std::size_t n_ = 0;
  Flavor flavor_ = Flavor::Affine;
  std::vector<std::int8_t> signs_;
};

template <class F>
  requires std::invocable<F, int, int, int>
Chirotope Chirotope::from_function(std::size_t n, Flavor flavor, F&& sign) {
  std::vector<std::int8_t> v;
  v.reserve(triple_count(n));
  const int m = static_cast<int>(n);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k) v.push_back(static_cast<std::int8_t>(sign(i, j, k)));
  return Chirotope(n, std::move(v), flavor);
}

Chirotope chirotope_of(const AffineConfig& cfg);
// Throws NotGeneralPosition on a zero triple.
Chirotope chirotope_of(std::span<const SpherePoint> pts, Flavor flavor);

// result.sign(i,j,k) = chi.sign(s(i), s(j), s(k))
Chirotope relabel(const Chirotope& chi, const Permutation& s);

struct CanonicalForm {
  Chirotope form;
  // Labelings L (new position -> old index) with relabel(chi, L) == form.
  std::vector<Permutation> anchors;
};

CanonicalForm affine_canonical_form(const Chirotope& chi);
// f with chi2.sign(f a, f b, f c) = chi1.sign(a, b, c), or nullopt.
std::optional<Bijection> affine_isomorphic(const Chirotope& chi1, const Chirotope& chi2);
SymmetryGroup affine_symmetries(const Chirotope& chi);
std::vector<Permutation> reversing_symmetries(const Chirotope& chi);

// Orientation data of a projective set of 2n points, point 2i = +p_i and 2i+1 = -p_i.
class ProjectiveOrder {
 public:
  explicit ProjectiveOrder(Chirotope representatives);
  static ProjectiveOrder of(const ProjectiveConfig& cfg);
  // Completion A ∪ -A of an affine labeled order type.
  static ProjectiveOrder completion_of(const Chirotope& affine);

  std::size_t pair_count() const noexcept { return reps_.size(); }
  std::size_t size() const noexcept { return 2 * reps_.size(); }
  const Chirotope& representatives() const noexcept { return reps_; }

  int sign(int a, int b, int c) const {
    const int s = ((a ^ b ^ c) & 1) ? -1 : 1;
    return s * reps_.sign(a >> 1, b >> 1, c >> 1);
  }
  static int antipode(int a) { return a ^ 1; }
  static int pair_of(int a) { return a >> 1; }

 private:
  Chirotope reps_;
};

// Symmetries act on the 2n points.
SymmetryGroup spherical_symmetries(const ProjectiveOrder& order);
SymmetryGroup spherical_symmetries(const ProjectiveConfig& cfg);
std::vector<Permutation> spherical_reversing_symmetries(const ProjectiveOrder& order);
std::optional<Bijection> projective_isomorphic(const ProjectiveOrder& a, const ProjectiveOrder& b);
std::optional<Bijection> projective_isomorphic(const ProjectiveConfig& a, const ProjectiveConfig& b);
// Symmetries of an arbitrary spherical point set without antipodal pairs.
SymmetryGroup spherical_symmetries(const Chirotope& spherical);

}  // namespace otlab
