#include <doctest.h>

#include "msl/fgl.hpp"

using namespace msl;

namespace {

Integer binomial(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// Sets b_1 = 1 and every other b_i = 0.
GradedPoly specialize_b1(const GradedPoly& p) {
  GradedPoly out = p;
  const RingPtr& R = p.ring();
  for (std::size_t i = 0; i < R->size(); ++i) {
    const std::string& name = R->name(i);
    if (name.size() > 1 && name[0] == 'b')
      out = out.substitute(i, GradedPoly::constant(R, name == "b1" ? 1 : 0));
  }
  return out;
}

Monomial at(const RingPtr& R, std::initializer_list<std::pair<const char*, int>> e) {
  Monomial m(R->size(), 0);
  for (const auto& [n, k] : e) m[R->require(n)] = static_cast<std::uint16_t>(k);
  return m;
}

}  // namespace

TEST_CASE("log coefficients by Lagrange inversion") {
  FGLContext ctx(6);
  CHECK(ctx.log_coefficient(0) == PartitionPoly::one());
  CHECK(ctx.log_coefficient(1) == PartitionPoly::generator(1).scale(-1));
  CHECK(ctx.log_coefficient(2) == PartitionPoly::monomial(Partition{1, 1}, 2) - PartitionPoly::generator(2));
  CHECK(ctx.log_coefficient(3) == PartitionPoly::monomial(Partition{1, 1, 1}, -5) +
                                      PartitionPoly::monomial(Partition{2, 1}, 5) - PartitionPoly::generator(3));
  for (int n = 0; n <= 6; ++n) CHECK(ctx.log_coefficient(n).is_homogeneous(n));
  CHECK(compose_series(ctx.exp(), ctx.log(), 0) == GradedPoly::generator(ctx.exp().ring(), 0));
}

TEST_CASE("formal group law axioms") {
  FGLContext ctx(6);
  const GradedPoly& F = ctx.formal_group();
  const RingPtr& R = F.ring();
  const std::size_t x = R->require("x"), y = R->require("y");
  CHECK(F.swap_generators(x, y) == F);
  CHECK(F.substitute(y, GradedPoly(R)) == GradedPoly::generator(R, x));
  CHECK(F.is_integral());
  // xy coefficient: +2 b_1, matching a_{1,1} = -[CP^1] = 2 b_1.
  CHECK(F.coefficient(at(R, {{"x", 1}, {"y", 1}, {"b1", 1}})) == 2);
  CHECK(F.coefficient(at(R, {{"x", 1}, {"y", 1}})) == 0);
  // Associativity: the log-based triple sum equals the nested one.
  CHECK(ctx.formal_sum(3) == ctx.formal_sum_nested(3));
}

TEST_CASE("formal inverse") {
  FGLContext ctx(6);
  const GradedPoly& chi = ctx.formal_inverse();
  const RingPtr& R1 = chi.ring();
  CHECK(chi.coefficient(at(R1, {{"x", 1}})) == -1);
  CHECK(chi.coefficient(at(R1, {{"x", 2}, {"b1", 1}})) == 2);
  const GradedPoly& F = ctx.formal_group();
  GradedPoly chi2 = chi.map_to(F.ring());
  CHECK(F.substitute(F.ring()->require("y"), chi2).is_zero());
}

TEST_CASE("specialization b_1 = 1: F(x, y) = x + y + 2 L(x) L(y) with L the Catalan series") {
  FGLContext ctx(7);
  GradedPoly F = specialize_b1(ctx.formal_group());
  const RingPtr& R = F.ring();
  // L(x) = sum_{n >= 1} (-1)^{n-1} C_{n-1} x^n inverts x + x^2.
  auto Lcoef = [](int n) -> Integer { return binomial(2 * (n - 1), n - 1) / n * ((n % 2) ? 1 : -1); };
  GradedPoly Lx(R), Ly(R);
  for (int n = 1; n <= 8; ++n) {
    Lx += GradedPoly::generator(R, "x").pow(n).scale(Rational(Lcoef(n)));
    Ly += GradedPoly::generator(R, "y").pow(n).scale(Rational(Lcoef(n)));
  }
  GradedPoly want = GradedPoly::generator(R, "x") + GradedPoly::generator(R, "y") + (Lx * Ly).scale(2);
  CHECK(F == want);
}

TEST_CASE("c_1 of the determinant from roots and from the stable formula") {
  FGLContext ctx(5);
  for (bool dual : {false, true}) {
    GradedPoly roots = ctx.c1_determinant_class(3, dual);
    GradedPoly stable = ctx.stable_determinant_class(dual, 3);
    // With three roots, c_4 and higher vanish; compare up to c-weight 3.
    CHECK(roots.map_to(stable.ring()) == stable.map_to(stable.ring()));
  }
  GradedPoly two = ctx.c1_determinant_class(2, false);
  const RingPtr& R = two.ring();
  CHECK(two.coefficient(at(R, {{"c1", 1}})) == 1);
  CHECK(two.coefficient(at(R, {{"c2", 1}, {"b1", 1}})) == 2);
  GradedPoly twod = ctx.c1_determinant_class(2, true);
  CHECK(twod.coefficient(at(twod.ring(), {{"c1", 1}})) == -1);
}

TEST_CASE("partition-polynomial conversions round trip") {
  FGLContext ctx(5);
  RingPtr R = ctx.series_ring({"x"});
  PartitionPoly p = PartitionPoly::monomial(Partition{2, 1}, 3) - PartitionPoly::generator(4);
  CHECK(to_partition_poly(from_partition_poly(p, R)) == p);
}
