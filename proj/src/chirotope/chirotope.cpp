#include <algorithm>

#include "otlab/chirotope.hpp"

namespace otlab {

Chirotope::Chirotope(std::size_t n, std::vector<std::int8_t> lex_signs, Flavor flavor)
    : n_(n), flavor_(flavor), signs_(std::move(lex_signs)) {
  if (signs_.size() != triple_count(n_))
    throw SizeMismatch("expected " + std::to_string(triple_count(n_)) + " signs, got " +
                       std::to_string(signs_.size()));
  for (auto v : signs_)
    if (v != 1 && v != -1) throw NotSimple("chirotope signs must be +1 or -1");
}

std::string Chirotope::sign_string() const {
  std::string s;
  s.reserve(signs_.size());
  for (auto v : signs_) s.push_back(v > 0 ? '+' : '-');
  return s;
}

std::uint64_t Chirotope::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto v : signs_) {
    h ^= static_cast<unsigned char>(v > 0 ? '+' : '-');
    h *= 1099511628211ULL;
  }
  return h;
}

Chirotope Chirotope::negated() const {
  std::vector<std::int8_t> v(signs_.size());
  std::transform(signs_.begin(), signs_.end(), v.begin(), [](std::int8_t x) { return static_cast<std::int8_t>(-x); });
  return Chirotope(n_, std::move(v), flavor_);
}

Chirotope Chirotope::with_flavor(Flavor f) const {
  Chirotope c = *this;
  c.flavor_ = f;
  return c;
}

Chirotope chirotope_of(const AffineConfig& cfg) {
  return Chirotope(cfg.size(), std::vector<std::int8_t>(cfg.signs().begin(), cfg.signs().end()),
                   Flavor::Affine);
}

Chirotope chirotope_of(std::span<const SpherePoint> pts, Flavor flavor) {
  auto report = check_affine_general_position(pts);
  if (!report.ok)
    throw NotGeneralPosition("configuration is not in general position", *report.witness);
  return Chirotope(pts.size(), triple_signs(pts), flavor);
}

Chirotope relabel(const Chirotope& chi, const Permutation& s) {
  if (s.size() != chi.size()) throw SizeMismatch("relabel: permutation size differs from chirotope");
  return Chirotope::from_function(chi.size(), chi.flavor(),
                                  [&](int i, int j, int k) { return chi.sign(s(i), s(j), s(k)); });
}

}  // namespace otlab
