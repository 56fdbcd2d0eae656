#include <algorithm>
#include <numeric>

#include "otlab/errors.hpp"
#include "otlab/group.hpp"

namespace otlab {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[static_cast<std::size_t>(v)])
      throw InvalidArgument("not a permutation");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  Permutation p;
  p.images_ = std::move(v);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

int Permutation::order() const {
  // lcm of cycle lengths
  std::vector<char> seen(images_.size(), 0);
  long result = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    long len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
      seen[j] = 1;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return static_cast<int>(result);
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw SizeMismatch("composing permutations of different sizes");
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a(b(static_cast<int>(i)));
  return Permutation(std::move(out));
}

SymmetryGroup::SymmetryGroup(std::vector<Permutation> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw InvalidArgument("a group needs at least the identity");
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  const std::size_t deg = elements_.front().size();
  for (const auto& g : elements_)
    if (g.size() != deg) throw SizeMismatch("group elements act on different sizes");
  // Sorted order puts the identity first when present.
  if (!elements_.front().is_identity()) throw InvalidArgument("group lacks the identity");
  for (const auto& g : elements_) {
    if (!contains(g.inverse())) throw InvalidArgument("group not closed under inverses");
    for (const auto& h : elements_)
      if (!contains(compose(g, h))) throw InvalidArgument("group not closed under composition");
  }
}

SymmetryGroup SymmetryGroup::trivial(std::size_t degree) {
  return SymmetryGroup({Permutation::identity(degree)});
}

int SymmetryGroup::index_of(const Permutation& g) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
  if (it == elements_.end() || !(*it == g)) return -1;
  return static_cast<int>(it - elements_.begin());
}

int GroupClass::order() const {
  switch (kind) {
    case Kind::Cyclic: return m;
    case Kind::Dihedral: return 2 * m;
    case Kind::A4: return 12;
    case Kind::S4: return 24;
    case Kind::A5: return 60;
  }
  return 0;
}

std::string GroupClass::name() const {
  switch (kind) {
    case Kind::Cyclic: return "Z" + std::to_string(m);
    case Kind::Dihedral: return "D" + std::to_string(m);
    case Kind::A4: return "A4";
    case Kind::S4: return "S4";
    case Kind::A5: return "A5";
  }
  return "?";
}

}  // namespace otlab
