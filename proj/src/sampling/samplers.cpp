#include "otlab/sampling.hpp"
#include "otlab/sign_algorithms.hpp"

namespace otlab {

UniformLabeledSampler::UniformLabeledSampler(ProjectiveOrder order, std::string source)
    : order_(std::move(order)), source_(std::move(source)) {
  if (order_.pair_count() < 3) throw TooSmall("uniform labeled sampling needs n >= 3");
  for (const Hemiset& c : enumerate_cells(order_)) cells_.push_back(c.members());
}

LabeledOrderTypeSample UniformLabeledSampler::labeled(int cell, const Permutation& labeling) const {
  const std::vector<int>& m = cells_.at(static_cast<std::size_t>(cell));
  if (labeling.size() != m.size()) throw SizeMismatch("labeling size differs from cell size");
  Chirotope chi = Chirotope::from_function(m.size(), Flavor::Affine, [&](int a, int b, int c) {
    return order_.sign(m[static_cast<std::size_t>(labeling(a))], m[static_cast<std::size_t>(labeling(b))],
                       m[static_cast<std::size_t>(labeling(c))]);
  });
  return {std::move(chi), source_, cell, labeling};
}

LabeledOrderTypeSample UniformLabeledSampler::draw(Rng& rng) const {
  const int cell = static_cast<int>(rng.below(cells_.size()));
  return labeled(cell, Permutation(rng.permutation(order_.pair_count())));
}

LabeledOrderTypeSample uniform_labeled_from(const ProjectiveConfig& cfg, std::uint64_t seed) {
  UniformLabeledSampler sampler(ProjectiveOrder::of(cfg));
  Rng rng(seed);
  return sampler.draw(rng);
}

namespace {

std::array<BigInt, 3> cross3(const SpherePoint& p, const SpherePoint& q) {
  return {p.y() * q.z() - p.z() * q.y(), p.z() * q.x() - p.x() * q.z(), p.x() * q.y() - p.y() * q.x()};
}

// Gift wrapping on explicit points from a known positive extreme edge (start, next).
// Returns the hull size, or nullopt when a zero orientation shows up.
std::optional<int> wrap_from_edge(const std::vector<SpherePoint>& pts, int start, int next) {
  const int n = static_cast<int>(pts.size());
  int count = 1;
  int cur = next;
  while (cur != start) {
    ++count;
    if (count > n) return std::nullopt;
    int cand = cur == 0 ? 1 : 0;
    for (int r = 0; r < n; ++r) {
      if (r == cur || r == cand) continue;
      const int s = orient(pts[static_cast<std::size_t>(cur)], pts[static_cast<std::size_t>(cand)],
                           pts[static_cast<std::size_t>(r)]);
      if (s == 0) return std::nullopt;
      if (s < 0) cand = r;
    }
    cur = cand;
  }
  return count;
}

std::uint64_t type_hash(const std::vector<SpherePoint>& pts) {
  return affine_canonical_form(chirotope_of(pts, Flavor::Affine)).form.hash();
}

struct Cut {
  std::vector<SpherePoint> members;
  int h = 0;
};

std::optional<Cut> geometric_cut(const std::vector<SpherePoint>& reps, Rng& rng) {
  const SpherePoint c = draw_points(Distribution::SphereUniform, 1, rng).front();
  Cut cut;
  cut.members.reserve(reps.size());
  for (const auto& p : reps) {
    const int s = dot_sign(p, c.coords());
    if (s == 0) return std::nullopt;
    cut.members.push_back(s > 0 ? p : antipode(p));
  }
  auto hull = chart_hull(cut.members, c.coords());
  if (!hull) return std::nullopt;
  cut.h = static_cast<int>(hull->size());
  return cut;
}

// One round of the equiprobable cell choice: a uniform (vertex, quadrant) incidence picks a cell
// with probability proportional to its edge count h, and acceptance with probability 3/h
// flattens that to uniform.
std::optional<Cut> combinatorial_round(const std::vector<SpherePoint>& reps, Rng& rng, bool& degenerate) {
  degenerate = false;
  const std::size_t n = reps.size();
  const int i = static_cast<int>(rng.below(n));
  int j = static_cast<int>(rng.below(n - 1));
  if (j >= i) ++j;
  const int si = (rng.next() >> 63) ? 1 : -1;
  const int sj = (rng.next() >> 63) ? 1 : -1;
  const auto nrm = cross3(reps[static_cast<std::size_t>(i)], reps[static_cast<std::size_t>(j)]);
  Cut cut;
  cut.members.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    int s;
    if (static_cast<int>(r) == i)
      s = si;
    else if (static_cast<int>(r) == j)
      s = sj;
    else
      s = dot_sign(reps[r], nrm);
    if (s == 0) {
      degenerate = true;
      return std::nullopt;
    }
    cut.members.push_back(s > 0 ? reps[r] : antipode(reps[r]));
  }
  const auto h = si * sj > 0 ? wrap_from_edge(cut.members, i, j) : wrap_from_edge(cut.members, j, i);
  if (!h) {
    degenerate = true;
    return std::nullopt;
  }
  cut.h = *h;
  if (!rng.accept(3, static_cast<std::uint64_t>(cut.h))) return std::nullopt;
  return cut;
}

}  // namespace

Chirotope geometric_projection_sample(std::size_t n, std::uint64_t seed) {
  if (n < 3) throw InvalidArgument("projection samples need n >= 3");
  Rng rng(seed);
  for (int attempt = 0; attempt < 100; ++attempt) {
    const ProjectiveConfig cfg = sample_projective(n, rng);
    const std::vector<SpherePoint> reps(cfg.representatives().begin(), cfg.representatives().end());
    if (auto cut = geometric_cut(reps, rng)) return chirotope_of(cut->members, Flavor::Affine);
  }
  throw RetriesExhausted("geometric projection kept hitting degenerate draws");
}

Chirotope combinatorial_projection_sample(std::size_t n, std::uint64_t seed) {
  if (n < 3) throw InvalidArgument("projection samples need n >= 3");
  Rng rng(seed);
  const ProjectiveOrder order = ProjectiveOrder::of(sample_projective(n, rng));
  const auto cells = enumerate_cells(order);
  return hemiset_chirotope(order, cells[rng.below(cells.size())]);
}

Trial planar_trial(Distribution d, std::size_t n, bool with_type, int max_retries) {
  if (n < 3) throw InvalidArgument("trials need n >= 3");
  return [=](Rng& rng) -> TrialResult {
    const std::array<BigInt, 3> up{0, 0, 1};
    for (int attempt = 0; attempt < max_retries; ++attempt) {
      const auto pts = draw_affine_points(d, n, rng);
      const auto hull = chart_hull(pts, up);
      if (!hull) continue;
      TrialResult r{static_cast<int>(hull->size()), std::nullopt};
      if (with_type) {
        try {
          r.type_hash = type_hash(pts);
        } catch (const NotGeneralPosition&) {
          continue;
        }
      }
      return r;
    }
    throw RetriesExhausted("planar draws kept degenerating");
  };
}

Trial geometric_projection_trial(std::size_t n, bool with_type, int max_retries) {
  if (n < 3) throw InvalidArgument("trials need n >= 3");
  return [=](Rng& rng) -> TrialResult {
    for (int attempt = 0; attempt < max_retries; ++attempt) {
      const auto reps = draw_points(Distribution::SphereUniform, n, rng);
      auto cut = geometric_cut(reps, rng);
      if (!cut) continue;
      TrialResult r{cut->h, std::nullopt};
      if (with_type) {
        try {
          r.type_hash = type_hash(cut->members);
        } catch (const NotGeneralPosition&) {
          continue;
        }
      }
      return r;
    }
    throw RetriesExhausted("geometric projection kept hitting degenerate draws");
  };
}

Trial combinatorial_projection_trial(std::size_t n, bool with_type, int max_retries) {
  if (n < 3) throw InvalidArgument("trials need n >= 3");
  return [=](Rng& rng) -> TrialResult {
    int degenerate_draws = 0;
    while (degenerate_draws < max_retries) {
      const auto reps = draw_points(Distribution::SphereUniform, n, rng);
      // Rounds for one fixed point set until a cell is accepted.
      for (int round = 0; round < max_retries; ++round) {
        bool degenerate = false;
        auto cut = combinatorial_round(reps, rng, degenerate);
        if (degenerate) break;
        if (!cut) continue;
        TrialResult r{cut->h, std::nullopt};
        if (with_type) {
          try {
            r.type_hash = type_hash(cut->members);
          } catch (const NotGeneralPosition&) {
            break;
          }
        }
        return r;
      }
      ++degenerate_draws;
    }
    throw RetriesExhausted("combinatorial projection kept hitting degenerate draws");
  };
}

}  // namespace otlab
