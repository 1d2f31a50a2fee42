#include <doctest.h>

#include "msl/kq_ring.hpp"

using namespace msl;

namespace {

FieldDescriptor C() { return FieldDescriptor::parse("c"); }
FieldDescriptor R() { return FieldDescriptor::parse("r"); }
FieldDescriptor Q1() { return FieldDescriptor::parse("fq1"); }
FieldDescriptor Q3() { return FieldDescriptor::parse("fq3"); }

}  // namespace

TEST_CASE("diagonal table") {
  for (const auto& k : field_catalog()) {
    CHECK(kq_diagonal(k, 1) == FGAbGroup::cyclic(2, k.inverted_primes()));
    CHECK(kq_diagonal(k, 3).is_trivial());
    CHECK(kq_diagonal(k, 2) == FGAbGroup::free(1, k.inverted_primes()));
  }
  CHECK(kq_diagonal(Q1(), 8) == FGAbGroup(1, {2}, {5}));
  CHECK(kq_diagonal(R(), -4) == FGAbGroup::free(2));
  CHECK(kq_diagonal(R(), -4, true).is_trivial());
  CHECK(kw_diagonal(R(), 0) == FGAbGroup::free(1));
  for (const auto& k : field_catalog()) CHECK(kw_diagonal(k, 2).is_trivial());
  CHECK(kw_diagonal(Q3(), 4) == FGAbGroup::cyclic(4, {3}));
}

TEST_CASE("rewriting rules") {
  KQPresentation P(R());
  KQElement H = P.generator(KQBase::H, 0), ee = P.generator(KQBase::EtaEta, 0);
  KQElement H2 = P.multiply(H, H);
  REQUIRE(H2.terms.size() == 1);
  CHECK(H2.terms.begin()->first == KQMonomial{KQBase::One, 1});
  // 2h = 2<1> + 2<-1> over R.
  CHECK(H2.terms.begin()->second == std::vector<Integer>{2, 2});
  CHECK(P.multiply(ee, ee).terms.empty());
  CHECK(P.multiply(ee, H).terms.empty());
  CHECK(P.is_zero(P.scale(ee, {2, 0})));
  CHECK_FALSE(P.is_zero(ee));
  // <1> - <-1> lies in I and kills etaeta and H.
  CHECK(P.is_zero(P.scale(ee, {1, -1})));
  CHECK(P.is_zero(P.scale(H, {1, -1})));
  CHECK_FALSE(P.is_zero(P.scale(H, {1, 1})));
  CHECK(KQMonomial{KQBase::H, 2}.to_string() == "H*beta^2");
  CHECK(KQMonomial{KQBase::H, 2}.degree() == 10);
}

TEST_CASE("relation check passes for every catalog field") {
  for (const auto& k : field_catalog())
    for (bool ve : {false, true}) {
      KQReport r = kq_relation_check(k, 16, ve);
      CHECK(r.pass);
      CHECK(r.failures.empty());
    }
}

TEST_CASE("degree groups match the table and are 4-periodic") {
  for (const auto& k : field_catalog()) {
    KQPresentation P(k);
    for (int n = -16; n <= 16; ++n) {
      CHECK(P.degree_group(n) == kq_diagonal(k, n));
      CHECK(P.degree_group(n) == P.degree_group(n + 4));
    }
  }
}

TEST_CASE("eta_top on the 8n+1 slot is rank mod 2") {
  EtaTopReport c = eta_top_square_check(C());
  CHECK(c.isomorphism);
  CHECK(c.kernel.is_trivial());
  EtaTopReport r = eta_top_square_check(R());
  CHECK(r.surjective);
  CHECK_FALSE(r.isomorphism);
  CHECK(r.kernel == FGAbGroup::free(1));
  for (const auto& k : field_catalog()) {
    EtaTopReport e = eta_top_square_check(k);
    CHECK(e.well_defined);
    CHECK(e.kernel_is_ideal);
    CHECK(e.kernel == fundamental_ideal_power(k, 1));
  }
  CHECK_FALSE(eta_top_square_check(Q3()).isomorphism);
}
