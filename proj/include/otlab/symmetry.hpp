#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "otlab/chirotope.hpp"
#include "otlab/group.hpp"
#include "otlab/hemisets.hpp"

namespace otlab {

struct Pole {
  Hemiset hemiset;
  std::vector<int> fixed_by;  // indices into the group's elements, identity included
  int stabilizer_order = 0;
};

struct OrbitType {
  std::vector<int> sizes;  // ascending
  bool operator==(const OrbitType&) const = default;
  std::string to_string() const;  // "[2,5,5]"
};

struct HemisetOrbit {
  std::vector<int> members;  // indices into the hemiset list
  int stabilizer_order = 0;
};

// The two hemisets fixed by a non-identity symmetry g.  Throws InvalidArgument for the identity
// and PoleCountViolation unless exactly two antipodal fixed faces exist.
std::pair<Hemiset, Hemiset> poles_of(const Arrangement& faces, const Permutation& g);
std::pair<Hemiset, Hemiset> poles_of(const ProjectiveOrder& order, const Permutation& g);

// Throws TrivialGroup when |G| = 1.
std::vector<Pole> all_poles(const Arrangement& faces, const SymmetryGroup& group);
std::vector<Pole> all_poles(const ProjectiveOrder& order, const SymmetryGroup& group);

OrbitType orbit_type(const SymmetryGroup& group, std::span<const Pole> poles);
OrbitType orbit_type(const ProjectiveOrder& order, const SymmetryGroup& group);
// Membership in [1,1], [2,N/2,N/2], [4,4,6], [6,8,12], [12,20,30].
bool orbit_type_allowed(const OrbitType& t, std::size_t group_order);

// Throws InvalidArgument if the list is not closed under the group action.
std::vector<HemisetOrbit> orbits_and_stabilizers(const SymmetryGroup& group,
                                                 std::span<const Hemiset> hemisets);

// Maximal cyclic subgroups as sorted lists of element indices.
std::vector<std::vector<int>> maximal_cyclic_subgroups(const SymmetryGroup& group);
McsStats mcs_stats(const SymmetryGroup& group);
McsStats expected_mcs(const GroupClass& c);
// Throws UnclassifiableGroup when structure and statistics disagree with every rotation group.
GroupClass classify(const SymmetryGroup& group);

struct PoleStructureReport {
  std::vector<std::string> failures;
  std::vector<Pole> poles;
  OrbitType orbit_type;
  bool ok() const { return failures.empty(); }
};

// Checks the pole and stabilizer identities of a projective symmetry group.
PoleStructureReport verify_pole_structure(const ProjectiveOrder& order, const Arrangement& faces,
                                          const SymmetryGroup& group);

}  // namespace otlab
