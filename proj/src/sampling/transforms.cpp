#include "otlab/sampling.hpp"

namespace otlab {

std::optional<LabeledOrderTypeSample> rejection_projective_to_labeled(const ProjectiveSource& src, Rng& rng) {
  ProjectiveOrder order = src(rng);
  const std::size_t group_order = spherical_symmetries(order).order();
  if (!rng.accept(1, group_order)) return std::nullopt;
  const UniformLabeledSampler sampler(std::move(order));
  return sampler.draw(rng);
}

std::optional<Chirotope> rejection_labeled_to_unlabeled(const LabeledSource& src, Rng& rng) {
  const Chirotope chi = src(rng);
  const std::size_t sym = affine_symmetries(chi).order();
  if (!rng.accept(sym, chi.size())) return std::nullopt;
  return affine_canonical_form(chi).form;
}

std::optional<ProjectiveOrder> rejection_affine_to_projective(const AffineSource& src, Rng& rng) {
  ProjectiveOrder order = ProjectiveOrder::completion_of(src(rng));
  const std::size_t affine_types = hemiset_census(order).types.size();
  if (!rng.accept(1, affine_types)) return std::nullopt;
  return order;
}

LabeledOrderTypeSample projective_to_labeled(const ProjectiveSource& src, Rng& rng, int max_rounds) {
  for (int round = 0; round < max_rounds; ++round)
    if (auto s = rejection_projective_to_labeled(src, rng)) return std::move(*s);
  throw RetriesExhausted("projective-to-labeled transform rejected " + std::to_string(max_rounds) + " rounds");
}

}  // namespace otlab
