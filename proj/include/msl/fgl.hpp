#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "msl/graded_poly.hpp"
#include "msl/symmetric.hpp"

namespace msl {

// The universal formal group law over Z[b_1, ..., b_N] with exp(x) = x + b_1 x^2 + b_2 x^3 + ...
//
// Series live in rings whose series variables have weight 1 and whose b_i
// have weight 0; the bound N + 1 on the x-degree keeps every coefficient of
// b-weight <= N. The intrinsic weight of b_i is i (see b_weight()).
class FGLContext {
 public:
  explicit FGLContext(int truncation);

  int truncation() const { return n_; }

  // Ring with the given series variables (weight 1) followed by b_1..b_N (weight 0).
  RingPtr series_ring(const std::vector<std::string>& vars) const;
  // Ring with c_1..c_k (weight i) followed by b_1..b_N (weight 0), bound max_weight.
  RingPtr chern_ring(int k, int max_weight) const;

  const GradedPoly& exp() const;
  const GradedPoly& log() const;
  // m_n: coefficient of x^{n+1} in log, as an integral b-polynomial of weight n.
  PartitionPoly log_coefficient(int n) const;

  const GradedPoly& formal_group() const;    // F(x, y)
  const GradedPoly& formal_inverse() const;  // chi(x)
  // F(x_1, F(x_2, ...)) in variables x1..xk.
  GradedPoly formal_sum(int k) const;
  // The same series built by nesting F; quadratic cost, used for cross-checks.
  GradedPoly formal_sum_nested(int k) const;

  // c_1(det) (dual = false) or c_1(det^dual) as a polynomial in c_1..c_k over Z[b].
  GradedPoly c1_determinant_class(int k, bool dual) const;
  // Stable form of the same class, valid for any number of roots, up to c-weight max_weight.
  GradedPoly stable_determinant_class(bool dual, int max_weight) const;

 private:
  int n_;
  RingPtr univariate_;
  RingPtr bivariate_;
  GradedPoly exp_;
  mutable std::once_flag log_once_, group_once_, inverse_once_;
  mutable std::optional<GradedPoly> log_, group_, inverse_;
};

// Conversions between b-polynomials held as GradedPoly (generators named b<i>)
// and as PartitionPoly.
PartitionPoly to_partition_poly(const GradedPoly& p);
GradedPoly from_partition_poly(const PartitionPoly& p, const RingPtr& ring);

// Weight with b_i counted as i (plus the ring weights of other generators).
int b_weight(const GradedPoly& p, const Monomial& m);

}  // namespace msl
