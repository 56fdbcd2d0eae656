#include <doctest.h>

#include "oracles.hpp"
#include "otlab/catalog.hpp"
#include "otlab/hemisets.hpp"

using namespace otlab;

TEST_CASE("small-n census counts and averages") {
  const CensusResult c3 = census_small_n(3, 4, 1, 200);
  CHECK(c3.affine.size() == 1);
  CHECK(c3.projective.size() == 1);
  CHECK(c3.average_h == 3);

  const CensusResult c4 = census_small_n(4, 4, 1, 500);
  CHECK(c4.affine.size() == 2);
  CHECK(c4.projective.size() == 1);
  CHECK(c4.average_h == BigRational(7, 2));
  // No 4-point type has a symmetry group of order 2.
  for (const auto& t : c4.affine) CHECK(t.sym_order != 2);

  const CensusResult c5 = census_small_n(5, 5, 1, 2000);
  CHECK(c5.affine.size() == 3);
  REQUIRE(c5.projective.size() == 1);
  CHECK(c5.projective[0].group_class == "D5");
  CHECK(c5.average_h == 4);

  CHECK_THROWS_AS(census_small_n(2), InvalidArgument);
  CHECK_THROWS_AS(census_small_n(8), InvalidArgument);
}

TEST_CASE("census types are distinct and carry valid witnesses") {
  const CensusResult c = census_small_n(6);
  CHECK(c.affine.size() == 20);
  CHECK(c.projective.size() == 4);
  for (std::size_t i = 0; i < c.affine.size(); ++i) {
    const auto& t = c.affine[i];
    const Chirotope chi = chirotope_of(t.witness, Flavor::Affine);
    CHECK(affine_canonical_form(chi).form == t.canonical);
    CHECK(oracle::extreme_points(chi).size() == static_cast<std::size_t>(t.h));
    CHECK(oracle::affine_symmetry_count(chi) == t.sym_order);
    for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(c.affine[j].canonical == t.canonical);
  }
  std::size_t covered = 0;
  std::map<std::string, std::size_t> classes;
  for (const auto& p : c.projective) {
    covered += p.affine_type_count;
    classes[p.group_class] = p.affine_type_count;
  }
  CHECK(covered == 20);
  CHECK(classes == std::map<std::string, std::size_t>{{"A5", 2}, {"D3", 6}, {"D6", 4}, {"Z4", 8}});
}

TEST_CASE("named constructions") {
  const auto names = construction_names();
  CHECK(names.size() == 13);
  for (const auto& name : names) {
    const NamedConstruction c = build_named(name);
    CHECK(c.name == name);
    CHECK(projective_of(c.config).pair_count() >= 3);
  }
  CHECK_THROWS_AS(build_named("dodecahedron"), UnknownName);
  const NamedConstruction k7 = build_named("convex_kgon", {{"k", 7}});
  CHECK(std::get<AffineConfig>(k7.config).size() == 7);
  CHECK(k7.expected.group->name() == "D7");
}

TEST_CASE("every gallery construction verifies") {
  const GalleryReport rep = gallery_verify();
  for (const auto& e : rep.entries) {
    INFO(e.construction << " " << e.check << ": expected " << e.expected << ", got " << e.actual);
    CHECK(e.pass);
  }
  CHECK(rep.ok());
}

TEST_CASE("a wrong expectation is reported") {
  NamedConstruction c = build_named("pentagon");
  c.expected.group = GroupClass{GroupClass::Kind::Cyclic, 5};
  bool failed = false;
  for (const auto& e : verify_construction(c)) failed |= !e.pass;
  CHECK(failed);
}
