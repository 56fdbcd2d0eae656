#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "otlab/chirotope.hpp"
#include "otlab/exact_core.hpp"

namespace otlab {

// Pair indices i, j and the tie-break signs that resolved ±p_i and ±p_j.
struct Anchor {
  int i = -1;
  int j = -1;
  int sigma_i = 0;
  int sigma_j = 0;
};

// A hemiset of a projective set, stored per antipodal pair: +1 keeps only p_k, -1 only -p_k,
// 0 keeps both (a boundary pair).
class Hemiset {
 public:
  Hemiset(std::vector<std::int8_t> sides, Anchor anchor = {});

  std::size_t pair_count() const noexcept { return sides_.size(); }
  int side(std::size_t pair) const { return sides_[pair]; }
  const std::vector<std::int8_t>& sides() const noexcept { return sides_; }
  const Anchor& anchor() const noexcept { return anchor_; }

  bool contains(int point) const;
  std::vector<int> members() const;  // sorted point indices, 2k for p_k and 2k+1 for -p_k
  std::size_t size() const;
  std::vector<int> boundary_pairs() const;
  bool is_affine() const { return boundary_pairs().empty(); }
  Hemiset antipodal() const;
  // Byte string of the sides; two hemisets are equal iff their keys are equal.
  std::string key() const;

  bool operator==(const Hemiset& o) const { return sides_ == o.sides_; }

 private:
  std::vector<std::int8_t> sides_;
  Anchor anchor_;
};

struct HemisetHash {
  std::size_t operator()(const Hemiset& h) const;
};

// Image of a hemiset under a permutation of the 2n points.
Hemiset apply(const Permutation& g, const Hemiset& b);

// Throws DegenerateAnchor when i == j or an index is out of range.
Hemiset hemiset_from_anchor(const ProjectiveOrder& order, int i, int j, int sigma_i, int sigma_j);
Hemiset hemiset_from_anchor(const ProjectiveConfig& cfg, int i, int j, int sigma_i, int sigma_j);

struct FaceCensus {
  std::size_t cell_count = 0;
  std::size_t edge_count = 0;
  std::size_t vertex_count = 0;
  std::vector<int> per_cell_edge_counts;
};

// Faces of the dual great-circle arrangement, each as a hemiset.
class Arrangement {
 public:
  std::size_t pair_count() const noexcept { return n_; }
  const std::vector<Hemiset>& cells() const noexcept { return cells_; }
  const std::vector<Hemiset>& edges() const noexcept { return edges_; }
  const std::vector<Hemiset>& vertices() const noexcept { return vertices_; }
  // Number of edges of each cell and the pairs whose great circles carry them.
  const std::vector<int>& cell_edge_counts() const noexcept { return cell_edge_counts_; }
  const std::vector<std::vector<int>>& cell_circles() const noexcept { return cell_circles_; }
  // The two cells on either side of each edge.
  const std::vector<std::array<int, 2>>& edge_cells() const noexcept { return edge_cells_; }

  FaceCensus census() const;
  int cell_index(const Hemiset& h) const;
  int face_index(const Hemiset& h) const;  // index into all_faces(), or -1
  std::vector<Hemiset> all_faces() const;  // cells, then edges, then vertices
  int zone_edge_sum(int circle) const;
  int zone_cell_count(int circle) const;

 private:
  friend Arrangement enumerate_faces(const ProjectiveOrder& order);
  std::size_t n_ = 0;
  std::vector<Hemiset> cells_, edges_, vertices_;
  std::vector<int> cell_edge_counts_;
  std::vector<std::vector<int>> cell_circles_;
  std::vector<std::array<int, 2>> edge_cells_;
  std::unordered_map<std::string, int> cell_lookup_;
  std::unordered_map<std::string, int> face_lookup_;
};

// Throws TooSmall for fewer than 2 pairs.
Arrangement enumerate_faces(const ProjectiveOrder& order);
Arrangement enumerate_faces(const ProjectiveConfig& cfg);
std::vector<Hemiset> enumerate_cells(const ProjectiveOrder& order);
std::vector<Hemiset> enumerate_cells(const ProjectiveConfig& cfg);
int zone_edge_sum(const ProjectiveOrder& order, int circle);
int zone_edge_sum(const ProjectiveConfig& cfg, int circle);

struct HullSummary {
  std::vector<int> extreme;  // counterclockwise
  std::vector<int> layer_sizes;
  std::vector<std::vector<int>> layers;  // outermost first
  std::optional<int> lonely;
  std::size_t h() const noexcept { return extreme.size(); }
};

// Indices refer to the 2n points for a hemiset and to positions otherwise.
HullSummary extreme_points(const ProjectiveOrder& order, const Hemiset& a);
HullSummary extreme_points(const Chirotope& affine);
HullSummary extreme_points(const AffineConfig& cfg);
HullSummary onion_layers(const ProjectiveOrder& order, const Hemiset& a);
HullSummary onion_layers(const Chirotope& affine);
HullSummary onion_layers(const AffineConfig& cfg);

// Counterclockwise hull of points lying strictly on the positive side of `center`, computed by a
// monotone chain in the chart of that hemisphere.  Returns nullopt if a tested triple is
// degenerate, so callers can reject the draw.
std::optional<std::vector<int>> chart_hull(std::span<const SpherePoint> pts,
                                           const std::array<BigInt, 3>& center);

// Affine order type of the members of an affine hemiset, labeled by increasing pair index.
Chirotope hemiset_chirotope(const ProjectiveOrder& order, const Hemiset& a);

struct HemisetType {
  Chirotope canonical;
  int h = 0;
  int multiplicity = 0;  // number of affine hemisets of this type
  int sym_order = 0;     // |F| of the type
  std::vector<int> cells;
};

struct HemisetCensus {
  std::size_t cell_count = 0;
  std::vector<HemisetType> types;  // by decreasing h, then canonical sign string
  BigRational type_average_h;      // average of h over distinct types
  BigRational cell_average_h;      // average of h over all cells
  std::optional<std::size_t> group_order;
  bool multiplicities_match_group = true;  // multiplicity * |F| == |G| for every type
};

HemisetCensus hemiset_census(const ProjectiveOrder& order, const SymmetryGroup* group = nullptr);
HemisetCensus hemiset_census(const ProjectiveOrder& order, const Arrangement& faces,
                             const SymmetryGroup* group = nullptr);

struct PatternSpec {
  int k = 3;
  Chirotope templ;
  Chirotope canonical;
};

// Triangle with k-3 interior points that form a convex chain together with one hull edge.
// Throws ConstructionDegenerate if the integer template fails validation.
PatternSpec make_pattern(int k);
PatternSpec make_pattern(const Chirotope& templ);
bool contains_pattern(const Chirotope& affine, const PatternSpec& spec);

}  // namespace otlab
