#include <doctest.h>

#include <map>
#include <memory>

#include "msl/mu_lattice.hpp"

using namespace msl;

namespace {

Integer binomial(int n, int k) {
  Integer r;
  if (k < 0 || k > n) return 0;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// Truncated power series in one variable over Z[b].
using Series = std::vector<PartitionPoly>;

Series mul(const Series& a, const Series& b) {
  Series c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// B(t) = 1 + b_1 t + b_2 t^2 + ...
Series B(std::size_t len) {
  Series s(len);
  s[0] = PartitionPoly::one();
  for (std::size_t i = 1; i < len; ++i) s[i] = PartitionPoly::generator(static_cast<int>(i));
  return s;
}

// 1/f by the recursion g_k = -sum_{j >= 1} f_j g_{k-j}.
Series inv(const Series& f) {
  Series g(f.size());
  g[0] = PartitionPoly::one();
  for (std::size_t k = 1; k < f.size(); ++k)
    for (std::size_t j = 1; j <= k; ++j) g[k] -= f[j] * g[k - j];
  return g;
}

Series power(const Series& f, int k) {
  Series base = k < 0 ? inv(f) : f;
  Series r(f.size());
  r[0] = PartitionPoly::one();
  for (int i = 0; i < std::abs(k); ++i) r = mul(r, base);
  return r;
}

MUClass from_poly(const PartitionPoly& p, int n) { return MUClass::from_hurewicz(p, n); }

// [x^i y^j] of (x + y) B(x)^{-(i+1)} B(y)^{-(j+1)} B(x + y).
PartitionPoly milnor_oracle(int i, int j) {
  const std::size_t len = static_cast<std::size_t>(i + j + 1);
  Series bx = power(B(len), -(i + 1)), by = power(B(len), -(j + 1));
  // Bivariate coefficients keyed by (a, c).
  std::map<std::pair<int, int>, PartitionPoly> bxy;
  Series b = B(len);
  for (int k = 0; k < static_cast<int>(len); ++k)
    for (int a = 0; a <= k; ++a) bxy[{a, k - a}] += b[static_cast<std::size_t>(k)].scale(binomial(k, a));
  PartitionPoly out;
  // Factor (x + y): sum the two shifted coefficients.
  for (auto [si, sj] : {std::pair{i - 1, j}, std::pair{i, j - 1}}) {
    if (si < 0 || sj < 0) continue;
    for (int a1 = 0; a1 <= si; ++a1)
      for (int c1 = 0; c1 <= sj; ++c1) {
        auto it = bxy.find({si - a1, sj - c1});
        if (it == bxy.end()) continue;
        out += bx[static_cast<std::size_t>(a1)] * by[static_cast<std::size_t>(c1)] * it->second;
      }
  }
  return out;
}

// Multiplicative index predicted for the lattice L_n inside Z[b]_n.
Integer predicted_index(int n) {
  Integer idx = 1;
  for (const Partition& w : partitions_of(n))
    for (int part : w.parts()) idx *= milnor_target(part);
  return idx;
}

}  // namespace

TEST_CASE("CP^n Hurewicz image equals [h^n] B(h)^{-(n+1)}") {
  FGLContext ctx(8);
  for (int n = 0; n <= 8; ++n) {
    Series s = power(B(static_cast<std::size_t>(n + 1)), -(n + 1));
    CHECK(cpn_class(ctx, n) == from_poly(s[static_cast<std::size_t>(n)], n));
  }
  CHECK(cpn_class(ctx, 1).coords == std::vector<Integer>{-2});
}

TEST_CASE("Milnor hypersurface Hurewicz image from the normal bundle") {
  FGLContext ctx(8);
  for (int i = 1; i <= 4; ++i)
    for (int j = i; i + j - 1 <= 8; ++j) {
      const int n = i + j - 1;
      CHECK(milnor_hypersurface_class(ctx, i, j) == from_poly(milnor_oracle(i, j), n));
      CHECK(chern_numbers_to_hurewicz(milnor_hypersurface_chern_numbers(i, j), n) ==
            milnor_hypersurface_class(ctx, i, j));
    }
}

TEST_CASE("s-numbers of the catalog") {
  FGLContext ctx(8);
  for (int n = 1; n <= 8; ++n) CHECK(s_number(cpn_class(ctx, n)) == n + 1);
  // s[H_{i,j}] = -binom(i + j, i) for i, j >= 2.
  for (int i = 2; i <= 4; ++i)
    for (int j = i; i + j - 1 <= 8; ++j) CHECK(s_number(milnor_hypersurface_class(ctx, i, j)) == -binomial(i + j, i));
}

TEST_CASE("tangent Chern numbers of CP^n and the round trip") {
  FGLContext ctx(7);
  for (int n = 1; n <= 7; ++n) {
    ChernNumbers c = hurewicz_to_chern_numbers(cpn_class(ctx, n));
    for (const Partition& mu : partitions_of(n)) {
      Integer want = 1;
      for (int part : mu.parts()) want *= binomial(n + 1, part);
      CHECK(c[mu] == want);
    }
    CHECK(chern_numbers_to_hurewicz(c, n) == cpn_class(ctx, n));
  }
  // c_1(nu)[CP^1] = -2.
  CHECK(normal_chern_number(cpn_class(ctx, 1), Partition{1}) == -2);
}

TEST_CASE("Milnor targets") {
  std::map<int, int> want{{1, 2}, {2, 3}, {3, 2}, {4, 5}, {5, 1}, {6, 7}, {7, 2}, {8, 3}, {9, 1}, {10, 11}, {11, 1}, {15, 2}};
  for (auto [n, t] : want) CHECK(milnor_target(n) == t);
}

TEST_CASE("polynomial generators and lattices") {
  auto ctx = std::make_shared<const FGLContext>(8);
  MUBasis basis(ctx, 8);
  for (int n = 1; n <= 8; ++n) {
    CHECK(abs(s_number(basis.generator(n))) == milnor_target(n));
    CHECK(abs(determinant(basis.basis_matrix(n))) == predicted_index(n));
    for (const auto& entry : generator_catalog(*ctx, n)) CHECK(basis.contains(entry.cls));
  }
  MUClass cp1 = cpn_class(*ctx, 1);
  auto c = basis.require_coordinates(product(cp1, cp1));
  CHECK(c == std::vector<Integer>{0, 1});
  CHECK(MUBasis::monomial_label(Partition{2, 1, 1}) == "x2*x1^2");
  MUClass half = MUClass::from_hurewicz(PartitionPoly::generator(1), 1);
  CHECK_FALSE(basis.coordinates(half).has_value());
  CHECK_THROWS(basis.require_coordinates(half));
  CHECK_THROWS(basis.multiply(basis.generator(5), basis.generator(4)));
  std::vector<Integer> v{3, -1, 2};
  CHECK(basis.require_coordinates(basis.from_coordinates(3, v)) == v);
}

TEST_CASE("class arithmetic") {
  FGLContext ctx(4);
  MUClass a = cpn_class(ctx, 2);
  CHECK((a - a).is_zero());
  CHECK(a.scale(2) == a + a);
  CHECK(product(MUClass::unit(), a) == a);
  CHECK(MUClass::zero(-1).is_zero());
}
