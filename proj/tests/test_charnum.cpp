#include <doctest.h>

#include <functional>
#include <memory>

#include "msl/charnum.hpp"

using namespace msl;

namespace {

struct Fixture {
  std::shared_ptr<const FGLContext> ctx = std::make_shared<const FGLContext>(8);
  std::shared_ptr<const MUBasis> basis = std::make_shared<const MUBasis>(ctx, 8);
  ConnerFloyd cf{basis};
};

Fixture& fx() {
  static Fixture f;
  return f;
}

// c_omega[X x Y] = sum over splittings omega_i = a_i + b_i with sum a_i = dim X of
// c_a[X] c_b[Y] (zero parts dropped).
Integer kunneth(const MUClass& x, const MUClass& y, const Partition& omega) {
  const auto& parts = omega.parts();
  Integer total = 0;
  std::vector<int> a(parts.size());
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int used) {
    if (i == parts.size()) {
      if (used != x.degree) return;
      std::vector<int> pa, pb;
      for (std::size_t k = 0; k < parts.size(); ++k) {
        if (a[k] > 0) pa.push_back(a[k]);
        if (parts[k] - a[k] > 0) pb.push_back(parts[k] - a[k]);
      }
      std::sort(pa.rbegin(), pa.rend());
      std::sort(pb.rbegin(), pb.rend());
      total += chern_number(x, Partition(pa)) * chern_number(y, Partition(pb));
      return;
    }
    for (int v = 0; v <= parts[i] && used + v <= x.degree; ++v) {
      a[i] = v;
      rec(i + 1, used + v);
    }
  };
  rec(0, 0);
  return total;
}

}  // namespace

TEST_CASE("the quartic surface") {
  VarietyClass q = hypersurface_class(3, 4);
  CHECK(q.dimension == 2);
  CHECK(q.tangent.at(Partition{2}) == 24);
  CHECK(q.tangent.at(Partition{1, 1}) == 0);
  REQUIRE(q.calabi_yau.has_value());
  CHECK(*q.calabi_yau);
  // c(nu) = (1 + 4h) / (1 + h)^4 = 1 - 6h^2 + ...: c_2(nu)[X] = -6 * 4.
  CHECK(chern_number(q.cls, Partition{2}) == -24);
  CHECK(s_number(q.cls) == -48);
  GeneratorVerdict v = generator_check_msu(fx().cf, q.cls);
  CHECK(v.pass);
  CHECK(v.odd_part == 3);
}

TEST_CASE("linear hypersurfaces are projective spaces") {
  for (int n = 2; n <= 7; ++n) CHECK(hypersurface_class(n, 1).cls == cpn_class(*fx().ctx, n - 1));
  CHECK_FALSE(*hypersurface_class(3, 3).calabi_yau);
  CHECK(*hypersurface_class(4, 5).calabi_yau);
}

TEST_CASE("products of projective spaces") {
  const FGLContext& ctx = *fx().ctx;
  CHECK(product_projective_class({1, 1}).cls == product(cpn_class(ctx, 1), cpn_class(ctx, 1)));
  CHECK(product_projective_class({2}).cls == cpn_class(ctx, 2));
  CHECK(product_projective_class({1, 2, 2}).cls ==
        product(cpn_class(ctx, 1), product(cpn_class(ctx, 2), cpn_class(ctx, 2))));
  CHECK(s_number(product_projective_class({1, 2}).cls) == 0);
}

TEST_CASE("chern numbers of products follow the Kunneth expansion") {
  const FGLContext& ctx = *fx().ctx;
  std::vector<MUClass> cat{cpn_class(ctx, 1), cpn_class(ctx, 2), cpn_class(ctx, 3), milnor_hypersurface_class(ctx, 2, 2),
                           hypersurface_class(3, 4).cls};
  for (const auto& x : cat)
    for (const auto& y : cat) {
      if (x.degree + y.degree > 7) continue;
      MUClass xy = product(x, y);
      for (const Partition& w : partitions_of(xy.degree)) CHECK(chern_number(xy, w) == kunneth(x, y, w));
    }
}

TEST_CASE("chern_number basics") {
  CHECK(chern_number(cpn_class(*fx().ctx, 1), Partition{1}) == -2);
  CHECK(chern_number(MUClass::unit(), Partition{}) == 1);
  CHECK_THROWS(chern_number(cpn_class(*fx().ctx, 2), Partition{1}));
}

TEST_CASE("generator verdicts") {
  MUClass q = hypersurface_class(3, 4).cls;
  GeneratorVerdict v = generator_check_msu(fx().cf, product(q, q));
  CHECK_FALSE(v.pass);
  CHECK(v.s_number == 0);
  const FGLContext& ctx = *fx().ctx;
  // Neither CP^2 nor (CP^1)^2 lies in Ker Delta.
  CHECK_THROWS_AS(generator_check_msu(fx().cf, cpn_class(ctx, 2)), std::invalid_argument);
  CHECK_THROWS_AS(generator_check_msu(fx().cf, product(cpn_class(ctx, 1), cpn_class(ctx, 1))), std::invalid_argument);
  CHECK_THROWS_AS(generator_check_msu(fx().cf, cpn_class(ctx, 1)), std::invalid_argument);
  CHECK(generator_check_msu(fx().cf, q).to_json()["verdict"] == "PASS");
}

TEST_CASE("json output") {
  auto j = hypersurface_class(3, 4).to_json();
  CHECK(j["tangent_chern_numbers"]["(2)"] == "24");
  CHECK(j["calabi_yau"] == true);
}
