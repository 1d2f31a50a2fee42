#include <doctest.h>

#include "msl/cf_complex.hpp"
#include "msl/msl_assembly.hpp"

using namespace msl;

namespace {

FieldDescriptor C() { return FieldDescriptor::parse("c"); }
FieldDescriptor R() { return FieldDescriptor::parse("r"); }
FieldDescriptor Q1() { return FieldDescriptor::parse("fq1"); }
FieldDescriptor Q3() { return FieldDescriptor::parse("fq3"); }

}  // namespace

TEST_CASE("diagonal groups") {
  for (const auto& k : field_catalog()) CHECK(msl_diagonal(k, 0, 12).group == WittRing(k).gw());
  MSLAnswer r8 = msl_diagonal(R(), 8, 12);
  CHECK(r8.group == FGAbGroup::free(9));
  CHECK(r8.symbolic == "GW(k)^2 ⊕ Z^5");
  REQUIRE(r8.decomposition.size() == 2);
  CHECK(r8.decomposition[0].label == "ideal_part");
  CHECK(r8.decomposition[0].group == FGAbGroup::free(2));
  CHECK(r8.decomposition[1].group == FGAbGroup::free(7));
  CHECK(msl_diagonal(Q1(), 4, 12).group == FGAbGroup(2, {2}, {5}));
  CHECK(msl_diagonal(C(), 9, 12).symbolic == "Z^8 ⊕ (Z/2)^2");
  CHECK_THROWS_AS(msl_diagonal(C(), 99, 12), std::out_of_range);
  CHECK_THROWS_AS(msl_diagonal(C(), -1, 12), std::out_of_range);
  CHECK(r8.to_json()["group"]["free_rank"] == 9);
}

TEST_CASE("quadratically closed fields give MSU") {
  for (int n = 0; n <= 11; ++n) CHECK(msl_diagonal(C(), n, 12).group == msu_additive(n));
}

TEST_CASE("off-diagonal groups") {
  CHECK(msl_off_diagonal(R(), 4, 1) == FGAbGroup::free(1));
  for (const auto& k : field_catalog()) CHECK(msl_off_diagonal(k, 3, 2).is_trivial());
  CHECK(msl_off_diagonal(Q3(), 8, 5) == FGAbGroup(0, {4, 4}, {3}));
  CHECK_THROWS(msl_off_diagonal(R(), 4, 0));
}

TEST_CASE("ideal I_MSL and torsion") {
  CHECK(i_msl(R(), 8) == FGAbGroup::free(2));
  for (int n = 0; n <= 12; ++n) CHECK(i_msl(C(), n).is_trivial());
  for (const auto& k : field_catalog()) CHECK(i_msl(k, 6).is_trivial());
  CHECK(msl_torsion(Q3(), 4) == FGAbGroup::cyclic(2, {3}));
  for (const auto& k : field_catalog()) CHECK(msl_torsion(k, 9).invariant_factors() == std::vector<Integer>{2, 2});
  CHECK(msl_torsion(R(), 8).is_trivial());
  for (const auto& k : field_catalog())
    for (int n = 0; n <= 11; ++n) CHECK_NOTHROW(msl_torsion(k, n));
}

TEST_CASE("mod-eta quotient degrees") {
  auto rows = eta_quotient_degrees(R(), 12);
  CHECK(rows[8].monomials == std::vector<std::string>{"y8", "y4^2"});
  CHECK(rows[6].monomials.empty());
  CHECK(rows[0].monomials == std::vector<std::string>{"1"});
  CHECK(rows[0].group == FGAbGroup::free(1));
  CHECK(rows[12].monomials == std::vector<std::string>{"y12", "y8*y4", "y4^3"});
}

TEST_CASE("intro table rows") {
  auto rows = intro_table(C());
  REQUIRE(rows.size() == 10);
  CHECK(rows[1].group == FGAbGroup::cyclic(2));
  CHECK(rows[6].group == FGAbGroup::free(4));
  CHECK(rows[7].group == FGAbGroup::free(4));
  CHECK(rows[4].symbolic == "GW(k) ⊕ Z");
  CHECK(rows[0].symbolic == "GW(k)");
}

TEST_CASE("consistency checks") {
  for (const auto& k : field_catalog())
    for (int n = 0; n <= 11; ++n) {
      CHECK(msl_quotient_check(k, n).pass);
      CHECK(msl_away_from_two_check(k, n).pass);
      CHECK(msl_eta_extension_check(k, n).pass);
    }
}
