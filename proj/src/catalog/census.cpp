#include <algorithm>
#include <unordered_map>

#include "otlab/catalog.hpp"
#include "otlab/hemisets.hpp"
#include "otlab/sampling.hpp"
#include "otlab/symmetry.hpp"

namespace otlab {

namespace {

class TypeTable {
 public:
  explicit TypeTable(std::vector<AffineTypeInfo>& types) : types_(types) {}

  AffineTypeInfo& record(const Chirotope& labeled, const std::vector<SpherePoint>& pts) {
    Chirotope form = affine_canonical_form(labeled).form;
    std::string key = form.sign_string();
    auto [it, fresh] = index_.try_emplace(std::move(key), types_.size());
    if (fresh) {
      AffineTypeInfo info{std::move(form), 0, 0, 0, 0, pts, -1};
      types_.push_back(std::move(info));
    }
    return types_[it->second];
  }

 private:
  std::vector<AffineTypeInfo>& types_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Depth-first scan of grid subsets, pruning as soon as a collinear triple appears.
class GridScan {
 public:
  GridScan(int n, int grid, TypeTable& table) : n_(n), grid_(grid), table_(table) {
    const int cells = grid * grid;
    orient_.resize(static_cast<std::size_t>(cells) * cells * cells);
    for (int a = 0; a < cells; ++a)
      for (int b = 0; b < cells; ++b)
        for (int c = 0; c < cells; ++c) {
          const long ax = a / grid, ay = a % grid, bx = b / grid, by = b % grid, cx = c / grid, cy = c % grid;
          const long d = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
          orient_[idx(a, b, c)] = static_cast<std::int8_t>((d > 0) - (d < 0));
        }
  }

  std::size_t run() {
    chosen_.clear();
    extend(0);
    return scanned_;
  }

 private:
  std::size_t idx(int a, int b, int c) const {
    const std::size_t m = static_cast<std::size_t>(grid_) * grid_;
    return (static_cast<std::size_t>(a) * m + static_cast<std::size_t>(b)) * m + static_cast<std::size_t>(c);
  }

  void extend(int from) {
    if (static_cast<int>(chosen_.size()) == n_) {
      visit();
      return;
    }
    const int cells = grid_ * grid_;
    for (int p = from; p <= cells - (n_ - static_cast<int>(chosen_.size())); ++p) {
      bool ok = true;
      for (std::size_t i = 0; i < chosen_.size() && ok; ++i)
        for (std::size_t j = i + 1; j < chosen_.size(); ++j)
          if (orient_[idx(chosen_[i], chosen_[j], p)] == 0) {
            ok = false;
            break;
          }
      if (!ok) continue;
      chosen_.push_back(p);
      extend(p + 1);
      chosen_.pop_back();
    }
  }

  void visit() {
    ++scanned_;
    std::vector<std::int8_t> signs;
    signs.reserve(Chirotope::triple_count(static_cast<std::size_t>(n_)));
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        for (int k = j + 1; k < n_; ++k) signs.push_back(orient_[idx(chosen_[i], chosen_[j], chosen_[k])]);
    const Chirotope chi(static_cast<std::size_t>(n_), std::move(signs), Flavor::Affine);
    std::vector<SpherePoint> pts;
    pts.reserve(chosen_.size());
    for (int p : chosen_) pts.emplace_back(p / grid_, p % grid_, 1);
    table_.record(chi, pts).grid_hits += 1;
  }

  int n_;
  int grid_;
  TypeTable& table_;
  std::vector<std::int8_t> orient_;
  std::vector<int> chosen_;
  std::size_t scanned_ = 0;
};

}  // namespace

CensusResult census_small_n(int n, int grid, std::uint64_t seed, std::size_t random_configs) {
  if (n < 3 || n > 7) throw InvalidArgument("census needs 3 <= n <= 7");
  if (grid < 2) throw InvalidArgument("grid must be at least 2");
  CensusResult res;
  res.n = n;
  res.grid = grid;
  TypeTable table(res.affine);

  GridScan scan(n, grid, table);
  res.grid_subsets = scan.run();

  for (std::size_t t = 0; t < random_configs; ++t) {
    Rng rng = Rng::for_stream(seed, t);
    const auto pts = draw_affine_points(Distribution::UniformSquare, static_cast<std::size_t>(n), rng);
    if (!check_affine_general_position(pts).ok) continue;
    ++res.random_configs;
    table.record(chirotope_of(pts, Flavor::Affine), pts).random_hits += 1;
  }

  for (auto& t : res.affine) {
    t.h = static_cast<int>(extreme_points(t.canonical).h());
    t.sym_order = affine_symmetries(t.canonical).order();
  }
  std::sort(res.affine.begin(), res.affine.end(), [](const AffineTypeInfo& a, const AffineTypeInfo& b) {
    if (a.h != b.h) return a.h > b.h;
    return a.canonical.sign_string() < b.canonical.sign_string();
  });

  std::unordered_map<std::string, int> by_form;
  for (std::size_t i = 0; i < res.affine.size(); ++i)
    by_form.emplace(res.affine[i].canonical.sign_string(), static_cast<int>(i));

  // Every affine type lies in exactly one projective class: the class of its completion.
  for (std::size_t i = 0; i < res.affine.size(); ++i) {
    if (res.affine[i].projective_class >= 0) continue;
    const int cls = static_cast<int>(res.projective.size());
    const ProjectiveOrder order = ProjectiveOrder::completion_of(res.affine[i].canonical);
    const SymmetryGroup group = spherical_symmetries(order);
    const HemisetCensus hc = hemiset_census(order, &group);
    ProjectiveTypeInfo info;
    info.witness = res.affine[i].witness;
    info.group_order = group.order();
    info.group_class = classify(group).name();
    info.affine_type_count = hc.types.size();
    for (const auto& ht : hc.types) {
      auto it = by_form.find(ht.canonical.sign_string());
      if (it == by_form.end()) continue;
      res.affine[static_cast<std::size_t>(it->second)].projective_class = cls;
      info.affine_types.push_back(it->second);
    }
    std::sort(info.affine_types.begin(), info.affine_types.end());
    res.projective.push_back(std::move(info));
  }

  BigInt sum = 0;
  for (const auto& t : res.affine) sum += t.h;
  res.average_h = make_rational(sum, BigInt(static_cast<unsigned long>(res.affine.size())));
  return res;
}

}  // namespace otlab
