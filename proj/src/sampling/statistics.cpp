#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include <boost/math/distributions/chi_squared.hpp>

#include "otlab/sampling.hpp"

namespace otlab {

SampleReport extremes_statistics(const Trial& trial, std::size_t trials, std::uint64_t seed) {
  if (trials < 1) throw InvalidArgument("trials must be at least 1");
  SampleReport rep;
  rep.trials = trials;
  rep.rows.resize(trials);
  parallel_for(trials, [&](std::size_t t) {
    Rng rng = Rng::for_stream(seed, t);
    rep.rows[t] = trial(rng);
  });

  BigInt sum = 0, sum_sq = 0;
  for (const auto& r : rep.rows) {
    sum += r.h;
    sum_sq += BigInt(r.h) * r.h;
    rep.histogram[r.h] += 1;
    if (r.type_hash) rep.type_frequencies[*r.type_hash] += 1;
  }
  const BigInt count(static_cast<unsigned long>(trials));
  rep.extreme_mean = make_rational(sum, count);
  if (trials > 1) {
    // (sum h^2 - (sum h)^2 / t) / (t - 1)
    BigRational v = make_rational(sum_sq * count - sum * sum, count * (count - 1));
    rep.extreme_variance = v;
  }
  return rep;
}

std::vector<std::string> labeled_support(const ProjectiveOrder& order, std::size_t max_support) {
  const std::size_t n = order.pair_count();
  // n! labelings per cell; beyond this the exact support is out of reach anyway.
  if (n > 8) throw SupportTooLarge("labeled support enumeration needs n <= 8");
  const UniformLabeledSampler sampler(order);
  std::set<std::string> support;
  std::vector<int> perm(n);
  for (std::size_t c = 0; c < sampler.cell_count(); ++c) {
    std::iota(perm.begin(), perm.end(), 0);
    do {
      support.insert(sampler.labeled(static_cast<int>(c), Permutation(perm)).chirotope.sign_string());
      if (support.size() > max_support)
        throw SupportTooLarge("labeled support exceeds " + std::to_string(max_support));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return {support.begin(), support.end()};
}

UniformityResult chi_square(const std::map<std::string, long>& counts, std::size_t support, std::size_t trials) {
  if (support < 2) throw InvalidArgument("chi-square needs a support of at least two outcomes");
  if (counts.size() > support) throw InvalidArgument("more observed outcomes than the support holds");
  UniformityResult r;
  r.support = support;
  r.trials = trials;
  const double expected = static_cast<double>(trials) / static_cast<double>(support);
  double chi2 = 0;
  for (const auto& [key, obs] : counts) {
    const double d = static_cast<double>(obs) - expected;
    chi2 += d * d / expected;
  }
  chi2 += static_cast<double>(support - counts.size()) * expected;
  r.chi2 = chi2;
  const boost::math::chi_squared dist(static_cast<double>(support - 1));
  r.critical = boost::math::quantile(boost::math::complement(dist, 0.01));
  r.p_value = boost::math::cdf(boost::math::complement(dist, chi2));
  r.pass = chi2 <= r.critical;
  return r;
}

UniformityResult uniformity_test(const ProjectiveOrder& order, const std::function<Chirotope(Rng&)>& draw,
                                 std::size_t trials, std::uint64_t seed) {
  if (trials < 1) throw InvalidArgument("trials must be at least 1");
  const std::vector<std::string> support = labeled_support(order);
  std::vector<std::string> outcomes(trials);
  parallel_for(trials, [&](std::size_t t) {
    Rng rng = Rng::for_stream(seed, t);
    outcomes[t] = draw(rng).sign_string();
  });
  std::map<std::string, long> counts;
  bool outside = false;
  for (auto& s : outcomes) {
    if (!std::binary_search(support.begin(), support.end(), s)) outside = true;
    counts[s] += 1;
  }
  if (outside) {
    UniformityResult r;
    r.support = support.size();
    r.trials = trials;
    r.chi2 = std::numeric_limits<double>::infinity();
    r.critical = boost::math::quantile(
        boost::math::complement(boost::math::chi_squared(static_cast<double>(support.size() - 1)), 0.01));
    r.p_value = 0;
    r.pass = false;
    return r;
  }
  return chi_square(counts, support.size(), trials);
}

UniformityResult uniformity_test(const ProjectiveOrder& order, std::size_t trials, std::uint64_t seed) {
  const UniformLabeledSampler sampler(order);
  return uniformity_test(order, [&](Rng& rng) { return sampler.draw(rng).chirotope; }, trials, seed);
}

}  // namespace otlab
