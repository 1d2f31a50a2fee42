#include <doctest.h>

#include "msl/witt.hpp"

using namespace msl;

namespace {

FieldDescriptor C() { return FieldDescriptor::parse("c"); }
FieldDescriptor R() { return FieldDescriptor::parse("r"); }
FieldDescriptor Q1() { return FieldDescriptor::parse("fq1"); }
FieldDescriptor Q3() { return FieldDescriptor::parse("fq3"); }

}  // namespace

TEST_CASE("field descriptors") {
  CHECK(Q1().e == 5);
  CHECK(Q3().e == 3);
  CHECK(FieldDescriptor::parse("fq3", 7).e == 7);
  CHECK(FieldDescriptor::parse("fq1", 3).kind == FieldKind::FiniteQ1);  // F_9
  CHECK_THROWS(FieldDescriptor::parse("fq3", 5));
  CHECK_THROWS(FieldDescriptor::parse("fq1", 2));
  CHECK_THROWS(FieldDescriptor::parse("q"));
  CHECK(FieldDescriptor::finite(9) == FieldDescriptor{FieldKind::FiniteQ1, 3});
  CHECK(FieldDescriptor::finite(7) == FieldDescriptor{FieldKind::FiniteQ3, 7});
  CHECK_THROWS(FieldDescriptor::finite(6));
  CHECK(C().inverted_primes().empty());
  CHECK(field_catalog().size() == 4);
}

TEST_CASE("Witt and Grothendieck-Witt groups of the catalog") {
  CHECK(witt_data(C()).w() == FGAbGroup::cyclic(2));
  CHECK(witt_data(C()).gw() == FGAbGroup::free(1));
  CHECK(witt_data(R()).w() == FGAbGroup::free(1));
  CHECK(witt_data(R()).gw() == FGAbGroup::free(2));
  CHECK(witt_data(Q1()).w() == FGAbGroup(0, {2, 2}, {5}));
  CHECK(witt_data(Q3()).w() == FGAbGroup(0, {4}, {3}));
  CHECK(witt_data(Q1()).gw() == FGAbGroup(1, {2}, {5}));
  CHECK(witt_data(Q3()).gw() == FGAbGroup(1, {2}, {3}));
}

TEST_CASE("fundamental ideal powers") {
  CHECK(fundamental_ideal_power(C(), 1).is_trivial());
  CHECK(fundamental_ideal_power(C(), 0) == FGAbGroup::cyclic(2));
  for (int m = 1; m <= 4; ++m) CHECK(fundamental_ideal_power(R(), m) == FGAbGroup::free(1));
  CHECK(fundamental_ideal_power(Q1(), 1) == FGAbGroup::cyclic(2, {5}));
  CHECK(fundamental_ideal_power(Q1(), 2).is_trivial());
  CHECK(fundamental_ideal_power(Q3(), 1) == FGAbGroup::cyclic(2, {3}));
  CHECK(fundamental_ideal_power(Q3(), 2).is_trivial());
  // In W(R) = Z the generator of I^m is the signature 2^m.
  WittRing W(R());
  for (int m = 1; m <= 3; ++m) {
    IntMatrix g = W.ideal_power_generators(m);
    Integer sig_gcd = 0;
    for (std::size_t j = 0; j < g.cols(); ++j) sig_gcd = gcd(sig_gcd, g(0, j) - g(1, j));
    CHECK(sig_gcd == (Integer(1) << m));
  }
  CHECK_THROWS(W.ideal_power_generators(-1));
}

TEST_CASE("two-primary torsion of the ideal") {
  CHECK(two_primary_torsion_of_ideal(R(), 1).is_trivial());
  CHECK(two_primary_torsion_of_ideal(Q3(), 1) == FGAbGroup::cyclic(2, {3}));
  CHECK(two_primary_torsion_of_ideal(C(), 1).is_trivial());
  CHECK_THROWS(two_primary_torsion_of_ideal(C(), 0));
}

TEST_CASE("rank splitting and W/I") {
  for (const auto& k : field_catalog()) {
    WittRing W(k);
    CHECK(W.gw() == W.gw_augmentation_ideal().direct_sum(FGAbGroup::free(1, k.inverted_primes())));
    CHECK(W.w_mod_ideal() == FGAbGroup::cyclic(2, k.inverted_primes()));
    // rank mod 2 kills I.
    IntMatrix I = W.ideal_power_generators(1);
    for (std::size_t j = 0; j < I.cols(); ++j) {
      Integer r = 0;
      for (std::size_t i = 0; i < W.generator_count(); ++i) r += W.rank_map()(0, i) * I(i, j);
      CHECK(r % 2 == 0);
    }
    // I^{m+1} lies in I^m.
    for (int m = 0; m <= 2; ++m) {
      IntMatrix big = W.ideal_power_generators(m), small = W.ideal_power_generators(m + 1);
      IntMatrix span = big.cols() ? W.w_relations().hconcat(big) : W.w_relations();
      for (std::size_t j = 0; j < small.cols(); ++j) CHECK(in_span(span, small.column(j)));
    }
    CHECK(W.multiply(W.one(), W.hyperbolic()) == W.hyperbolic());
  }
}

TEST_CASE("brute-force classification over small finite fields") {
  for (long q : {3L, 5L, 7L, 9L}) {
    WittOracleResult o = witt_oracle_finite(q);
    FieldDescriptor k = FieldDescriptor::finite(q);
    WittRing W(k);
    CHECK(o.class_count == 4);
    CHECK(o.w.localized(k.inverted_primes()) == W.w());
    CHECK(o.ideal.localized(k.inverted_primes()) == W.fundamental_ideal_power(1));
    CHECK(o.ideal_square.is_trivial());
    CHECK(o.gw == FGAbGroup(1, {2}));
  }
  CHECK(witt_oracle_finite(3).w == FGAbGroup::cyclic(4));
  CHECK(witt_oracle_finite(5).w == FGAbGroup(0, {2, 2}));
  CHECK_THROWS(witt_oracle_finite(11));
}

TEST_CASE("signature oracle over the reals") {
  RealOracleResult o = witt_oracle_real();
  CHECK(o.w == FGAbGroup::free(1));
  REQUIRE(o.ideal_power_index.size() == 3);
  CHECK(o.ideal_power_index[0] == 2);
  CHECK(o.ideal_power_index[1] == 4);
  CHECK(o.ideal_power_index[2] == 8);
}

TEST_CASE("json table") {
  auto j = WittRing(Q3()).to_json(2);
  CHECK(j["field"] == "fq3");
  CHECK(j["ideal_powers"].size() == 3);
  CHECK(j["ideal_powers"][1]["group_text"] == "Z/2");
  CHECK(j["w"] == FGAbGroup(0, {4}, {3}).to_json());
}
