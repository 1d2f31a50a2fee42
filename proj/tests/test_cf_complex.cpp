#include <doctest.h>

#include <memory>

#include "msl/cf_complex.hpp"

using namespace msl;

namespace {

struct Fixture {
  std::shared_ptr<const FGLContext> ctx = std::make_shared<const FGLContext>(10);
  std::shared_ptr<const MUBasis> basis = std::make_shared<const MUBasis>(ctx, 10);
  ConnerFloyd cf{basis};
};

Fixture& fx() {
  static Fixture f;
  return f;
}

std::int64_t p(int n) { return partition_count(n); }

FGAbGroup z2(int k) { return FGAbGroup(0, std::vector<Integer>(static_cast<std::size_t>(k), Integer(2))); }

}  // namespace

TEST_CASE("Wall lattice ranks") {
  auto& cf = fx().cf;
  for (int n = 0; n <= 10; ++n) CHECK(static_cast<std::int64_t>(cf.w_lattice(n).cols()) == p(n) - p(n - 2));
  // Saturated: the basis extends to a basis of L_n.
  for (int n = 2; n <= 10; ++n)
    for (const auto& d : smith_invariants(cf.w_lattice(n))) CHECK(d == 1);
  for (int n = 2; n <= 10; ++n) CHECK((cf.delta_on_lattice(n) * cf.w_lattice(n)).is_zero());
}

TEST_CASE("delta in low degree") {
  auto& cf = fx().cf;
  CHECK(cf.w_class(1, 0) == cpn_class(fx().basis->context(), 1));
  CHECK(cf.delta_matrix(1) == IntMatrix::from_rows({{-2}}));
  for (int n = 2; n <= 10; ++n) CHECK((cf.delta_matrix(n - 1) * cf.delta_matrix(n)).is_zero());
}

TEST_CASE("homology pattern and cycle ranks") {
  auto& cf = fx().cf;
  std::vector<FGAbGroup> want{z2(1), z2(0), z2(1), z2(0), z2(1), z2(0), z2(1), z2(0), z2(2), z2(0)};
  for (int n = 0; n <= 9; ++n) {
    CFHomology h = cf.homology(n);
    CHECK(h.homology == want[static_cast<std::size_t>(n)]);
    CHECK(static_cast<std::int64_t>(h.rank_cycles) == p(n) - p(n - 1));
    CHECK(h.rank_boundaries == h.rank_cycles);
  }
}

TEST_CASE("the sign of delta does not change cycles, boundaries or homology") {
  ConnerFloyd plus(fx().basis, +1);
  for (int n = 0; n <= 9; ++n) {
    CHECK(plus.delta_matrix(n + 1) == -fx().cf.delta_matrix(n + 1));
    CFHomology a = plus.homology(n), b = fx().cf.homology(n);
    CHECK(a.homology == b.homology);
    CHECK(lattice_basis(plus.cycles_in_lattice(n)) == lattice_basis(fx().cf.cycles_in_lattice(n)));
    CHECK(lattice_basis(plus.boundaries_in_lattice(n)) == lattice_basis(fx().cf.boundaries_in_lattice(n)));
  }
}

TEST_CASE("image of MSL in MGL") {
  auto& cf = fx().cf;
  CHECK(cf.msl_image_in_mgl(2) == cf.boundaries_in_lattice(2));
  CHECK(cf.msl_image_in_mgl(3) == cf.cycles_in_lattice(3));
  CHECK(cf.msl_image_in_mgl(3).cols() == 1);
  CHECK(cf.cycles_in_lattice(0) == IntMatrix::from_rows({{1}}));
  for (int n = 0; n <= 9; ++n)
    for (std::size_t j = 0; j < cf.boundaries_in_lattice(n).cols(); ++j)
      CHECK(in_span(cf.cycles_in_lattice(n), cf.boundaries_in_lattice(n).column(j)));
}

TEST_CASE("additive model of MSU") {
  CHECK(msu_additive(5) == FGAbGroup(2, {2}));
  CHECK(msu_additive(9) == FGAbGroup(8, {2, 2}));
  CHECK(msu_additive(3) == FGAbGroup::free(1));
  CHECK(msu_additive(0) == FGAbGroup::free(1));
  CHECK(msu_additive(1) == FGAbGroup(0, {2}));
}
