#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "otlab/chirotope.hpp"
#include "otlab/exact_core.hpp"
#include "otlab/group.hpp"

namespace otlab {

// What a construction is supposed to produce; unset fields are not checked.
struct Expectation {
  std::optional<GroupClass> group;              // projective group of the completion
  std::optional<std::vector<int>> orbit_type;   // ascending pole orbit sizes
  // (|F|, multiplicity) per affine type among the affine hemisets, sorted.
  std::optional<std::vector<std::pair<int, int>>> distribution;
  std::optional<std::vector<int>> type_extremes;  // h per affine type, descending
  std::optional<std::vector<int>> pole_layers;    // onion layer sizes of a distinguished affine pole
  std::optional<int> affine_symmetry_divides;     // |F| of the affine set divides this
};

using Configuration = std::variant<AffineConfig, ProjectiveConfig>;

struct NamedConstruction {
  std::string name;
  std::map<std::string, int> params;
  Configuration config;
  Expectation expected;
  // Direction whose open hemisphere cuts out the pole named in pole_layers.
  std::optional<std::array<BigInt, 3>> pole_center;
};

// Registry names: crosspolytope, cube, convex_kgon (k), pentagon, hexagon, double_chain (k),
// stacked_kgons (k, layers), tetra_A4, seven_point_Z2, nine_point_Z1, icosahedral, D3_witness,
// Z4_witness.  Throws UnknownName or ConstructionDegenerate.
NamedConstruction build_named(const std::string& name, const std::map<std::string, int>& params = {});
std::vector<std::string> construction_names();

// Projective set of a construction (completion for affine ones).
ProjectiveConfig projective_of(const Configuration& c);

struct AffineTypeInfo {
  Chirotope canonical;
  int h = 0;
  std::size_t sym_order = 0;
  long grid_hits = 0;    // grid subsets realizing the type
  long random_hits = 0;  // random configurations realizing the type
  std::vector<SpherePoint> witness;
  int projective_class = -1;
};

struct ProjectiveTypeInfo {
  std::vector<SpherePoint> witness;  // affine witness; the class is its completion
  std::size_t group_order = 0;
  std::string group_class;
  std::size_t affine_type_count = 0;  // distinct affine types among its affine hemisets
  std::vector<int> affine_types;      // indices into CensusResult::affine
};

struct CensusResult {
  int n = 0;
  int grid = 0;
  std::size_t grid_subsets = 0;  // general-position subsets scanned
  std::size_t random_configs = 0;
  std::vector<AffineTypeInfo> affine;  // by decreasing h, then sign string
  std::vector<ProjectiveTypeInfo> projective;
  BigRational average_h;  // over distinct affine types
};

// Exhaustive grid scan plus seeded random supplement, 3 <= n <= 6 (n = 7 accepted but slow).
CensusResult census_small_n(int n, int grid = 5, std::uint64_t seed = 1, std::size_t random_configs = 10000);

struct GalleryEntry {
  std::string construction;
  std::string check;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct GalleryReport {
  std::vector<GalleryEntry> entries;
  bool ok() const;
};

GalleryReport gallery_verify();
// Checks for a single construction; used by gallery_verify.
std::vector<GalleryEntry> verify_construction(const NamedConstruction& c);

}  // namespace otlab
