#include <doctest.h>

#include "msl/graded_poly.hpp"

using namespace msl;

namespace {

Integer binomial(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer catalan(int n) { return binomial(2 * n, n) / (n + 1); }

Monomial mono(std::initializer_list<int> e) {
  Monomial m;
  for (int x : e) m.push_back(static_cast<std::uint16_t>(x));
  return m;
}

}  // namespace

TEST_CASE("truncated arithmetic") {
  RingPtr R = PolyRing::make({"x", "y"}, {1, 2}, 6);
  GradedPoly x = GradedPoly::generator(R, "x"), y = GradedPoly::generator(R, "y");
  GradedPoly one = GradedPoly::constant(R, 1);
  GradedPoly p = (one + x).pow(7);
  for (int k = 0; k <= 6; ++k) CHECK(p.coefficient(mono({k, 0})) == Rational(binomial(7, k)));
  CHECK(p.coefficient(mono({7, 0})) == 0);  // beyond the bound
  GradedPoly q = x * y * y;
  CHECK(q.degree_of(mono({1, 2})) == 5);
  CHECK((q * x).size() == 1);
  CHECK((q * y).is_zero());
  CHECK((p - p).is_zero());
  CHECK((x + y).homogeneous_part(2) == y);
  CHECK(p.order() == 0);
  CHECK(x.swap_generators(0, 1).to_string() == "y");
}

TEST_CASE("reciprocal of 1 - x is the geometric series") {
  RingPtr R = PolyRing::make({"x"}, {1}, 9);
  GradedPoly x = GradedPoly::generator(R, 0);
  GradedPoly g = reciprocal(GradedPoly::constant(R, 1) - x);
  for (int k = 0; k <= 9; ++k) CHECK(g.coefficient(mono({k})) == 1);
}

TEST_CASE("Lagrange inversion: the inverse of x + x^2 has signed Catalan coefficients") {
  RingPtr R = PolyRing::make({"x"}, {1}, 10);
  GradedPoly x = GradedPoly::generator(R, 0);
  GradedPoly f = x + x * x;
  GradedPoly g = invert_series_compositional(f, 0);
  for (int n = 1; n <= 10; ++n) {
    Integer want = catalan(n - 1) * (n % 2 == 1 ? 1 : -1);
    CHECK(g.coefficient(mono({n})) == Rational(want));
  }
  CHECK(compose_series(f, g, 0) == x);
  CHECK(compose_series(g, f, 0) == x);
}

TEST_CASE("Lagrange inversion with a coefficient generator") {
  // f = x + b x^2 with b of weight 0; inverse coefficients (-b)^{n-1} C_{n-1}.
  RingPtr R = PolyRing::make({"x", "b"}, {1, 0}, 7);
  GradedPoly x = GradedPoly::generator(R, 0), b = GradedPoly::generator(R, 1);
  GradedPoly g = invert_series_compositional(x + b * x * x, 0);
  for (int n = 1; n <= 7; ++n) {
    Integer want = catalan(n - 1) * ((n - 1) % 2 == 0 ? 1 : -1);
    CHECK(g.coefficient(mono({n, n - 1})) == Rational(want));
  }
}

TEST_CASE("elementary symmetric rewrite: Newton identity for the power sum p_3") {
  RingPtr R = PolyRing::make({"x1", "x2", "x3"}, {1, 1, 1}, 3);
  std::vector<std::size_t> vars{0, 1, 2};
  GradedPoly p3(R);
  for (std::size_t v : vars) p3 += GradedPoly::generator(R, v).pow(3);
  RingPtr C = PolyRing::make({"c1", "c2", "c3"}, {1, 2, 3}, 3);
  GradedPoly got = elementary_symmetric_rewrite(p3, vars, C, {"c1", "c2", "c3"});
  GradedPoly c1 = GradedPoly::generator(C, 0), c2 = GradedPoly::generator(C, 1), c3 = GradedPoly::generator(C, 2);
  // p_3 = c1^3 - 3 c1 c2 + 3 c3
  CHECK(got == c1.pow(3) - (c1 * c2).scale(3) + c3.scale(3));
  CHECK(substitute_elementary(got, {"c1", "c2", "c3"}, R, vars) == p3);
  for (int k = 1; k <= 3; ++k)
    CHECK(elementary_symmetric_rewrite(elementary_symmetric(R, vars, k), vars, C, {"c1", "c2", "c3"}) ==
          GradedPoly::generator(C, static_cast<std::size_t>(k - 1)));
}

TEST_CASE("non-symmetric input is rejected") {
  RingPtr R = PolyRing::make({"x1", "x2"}, {1, 1}, 3);
  RingPtr C = PolyRing::make({"c1", "c2"}, {1, 2}, 3);
  CHECK_THROWS(elementary_symmetric_rewrite(GradedPoly::generator(R, 0), {0, 1}, C, {"c1", "c2"}));
}

TEST_CASE("substitution and ring maps") {
  RingPtr R = PolyRing::make({"x", "y"}, {1, 1}, 4);
  GradedPoly x = GradedPoly::generator(R, 0), y = GradedPoly::generator(R, 1);
  GradedPoly p = x * x + y;
  CHECK(p.substitute(1, x.scale(2)) == x * x + x.scale(2));
  RingPtr S = PolyRing::make({"u", "v"}, {1, 1}, 4);
  GradedPoly mapped = p.map_to(S, {{"x", "u"}, {"y", "v"}});
  CHECK(mapped == GradedPoly::generator(S, 0).pow(2) + GradedPoly::generator(S, 1));
  CHECK(p.coefficient_of_power(0, 2) == GradedPoly::constant(R, 1));
  CHECK(p.max_exponent(0) == 2);
  CHECK(p.is_integral());
  CHECK_FALSE(p.scale(Rational(1, 2)).is_integral());
}
