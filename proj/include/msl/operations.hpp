#pragma once

#include <functional>
#include <optional>
#include <string>

#include "msl/fgl.hpp"
#include "msl/mu_lattice.hpp"
#include "msl/symmetric.hpp"

namespace msl {

// A stable cohomology operation on MU, given by a characteristic class in
// the Chern classes of the universal bundle.
//
// Line-type operations have a class that depends only on c_1(det): pulled
// back to ordinary Chern roots y_i it equals f(y_1 + y_2 + ...), with f held
// explicitly. That form allows a direct evaluation without expanding the class.
class CohOperation {
 public:
  enum class Kind { LandweberNovikov, Line, General };

  static CohOperation landweber_novikov(const Partition& omega);
  static CohOperation line(std::string name, int shift, PSeries f,
                           std::function<GradedPoly(const FGLContext&, int)> class_builder);
  // `cls` lives in a ring with generators c1..cK and b1..bM.
  static CohOperation general(std::string name, int shift, GradedPoly cls);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  int shift() const { return shift_; }
  const Partition& ln_index() const { return omega_; }
  const PSeries& line_series() const { return f_; }

  // Class as a polynomial in c_1..c_w over Z[b], for c-weight <= w.
  GradedPoly characteristic_class(const FGLContext& ctx, int w) const;

  // The operation's action on pi_*(MU). Lands in degree deg x - shift; the
  // result is the zero class when that is negative.
  MUClass apply(const MUClass& x) const;
  // Same action computed from characteristic_class(); small degrees only.
  MUClass apply_via_class(const FGLContext& ctx, const MUClass& x) const;

 private:
  Kind kind_ = Kind::General;
  std::string name_;
  int shift_ = 0;
  Partition omega_;
  PSeries f_;
  std::function<GradedPoly(const FGLContext&, int)> builder_;
  std::optional<GradedPoly> class_;
};

// Class c_1(det gamma^dual); shift 1.
CohOperation boundary_partial(const FGLContext& ctx);
// Class c_1(det gamma) c_1(det gamma^dual); shift 2.
CohOperation delta_op(const FGLContext& ctx);

// Sum over lambda of G_lambda * a_lambda, for x of degree n with b-coordinates a.
PartitionPoly pair_with_class(const SymFn& g, const MUClass& x);

// Pull a class in c_1..c_k over Z[b] back to the roots: c_i -> e_i(E(y)).
SymFn class_to_symfn(const GradedPoly& cls, int max_degree);

}  // namespace msl
