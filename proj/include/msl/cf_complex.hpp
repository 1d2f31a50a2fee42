#pragma once

#include <memory>
#include <vector>

#include "msl/fg_ab_group.hpp"
#include "msl/int_matrix.hpp"
#include "msl/mu_lattice.hpp"
#include "msl/operations.hpp"

namespace msl {

struct CFHomology {
  int degree = 0;
  IntMatrix cycles;      // basis of Z_n, columns in W_n coordinates
  IntMatrix boundaries;  // generators of B_n, columns in Z_n coordinates
  FGAbGroup homology;    // Z_n / B_n
  std::size_t rank_cycles = 0;
  std::size_t rank_boundaries = 0;
};

// The complex (Ker Delta, delta) built on the lattices L_n of an MUBasis.
// Lattice vectors are in x-monomial coordinates unless stated otherwise.
class ConnerFloyd {
 public:
  // delta_sign multiplies the boundary operation; the complex uses -1.
  explicit ConnerFloyd(std::shared_ptr<const MUBasis> basis, int delta_sign = -1);

  int max_degree() const { return basis_->max_degree(); }
  const MUBasis& basis() const { return *basis_; }
  const CohOperation& partial() const { return partial_; }
  const CohOperation& delta() const { return delta_; }

  // Delta : L_n -> L_{n-2}; p(n-2) x p(n) (no rows when n < 2).
  IntMatrix delta_on_lattice(int n) const;
  // Partial : L_n -> L_{n-1}.
  IntMatrix partial_on_lattice(int n) const;

  // Basis of W_n = Ker Delta as columns in L_n coordinates.
  const IntMatrix& w_lattice(int n) const;
  MUClass w_class(int n, std::size_t j) const;

  // delta_n : W_n -> W_{n-1} in the chosen bases.
  const IntMatrix& delta_matrix(int n) const;

  // Needs n + 1 <= max_degree().
  CFHomology homology(int n) const;

  // Z_n and B_n as columns in L_n coordinates.
  IntMatrix cycles_in_lattice(int n) const;
  IntMatrix boundaries_in_lattice(int n) const;
  // Z_n unless n = 2 mod 4, where it is B_n.
  IntMatrix msl_image_in_mgl(int n) const;

 private:
  std::shared_ptr<const MUBasis> basis_;
  int sign_;
  CohOperation partial_;
  CohOperation delta_;
  std::vector<IntMatrix> w_;
  std::vector<IntMatrix> d_;
};

// Z^{p(n) - p(n-1)}, plus (Z/2)^{p((n-1)/4)} when n = 1 mod 4.
FGAbGroup msu_additive(int n);

}  // namespace msl
