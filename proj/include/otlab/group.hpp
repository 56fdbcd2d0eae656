#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace otlab {

class Permutation {
 public:
  Permutation() = default;
  // Throws InvalidArgument unless images is a bijection on {0..size-1}.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return images_.size(); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  int order() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

// (a ∘ b)(x) = a(b(x))
Permutation compose(const Permutation& a, const Permutation& b);

// An orientation-preserving map between two equally sized configurations.
using Bijection = Permutation;

struct GroupClass {
  enum class Kind { Cyclic, Dihedral, A4, S4, A5 };
  Kind kind = Kind::Cyclic;
  int m = 1;  // parameter of Cyclic(m) and Dihedral(m)

  int order() const;
  std::string name() const;  // "Z5", "D3", "A4", ...
  bool operator==(const GroupClass&) const = default;
};

struct McsStats {
  std::map<int, int> counts;  // order -> number of maximal cyclic subgroups of that order
  bool operator==(const McsStats&) const = default;
};

class SymmetryGroup {
 public:
  // Elements are sorted with the identity first; closure, identity and inverses are verified.
  explicit SymmetryGroup(std::vector<Permutation> elements);
  static SymmetryGroup trivial(std::size_t degree);

  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const Permutation& operator[](std::size_t i) const { return elements_[i]; }
  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t degree() const noexcept { return elements_.front().size(); }
  // Position of g in elements(), or -1.
  int index_of(const Permutation& g) const;
  bool contains(const Permutation& g) const { return index_of(g) >= 0; }

  GroupClass classification() const;

 private:
  std::vector<Permutation> elements_;
};

}  // namespace otlab
