#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "msl/fg_ab_group.hpp"
#include "msl/fgl.hpp"
#include "msl/int_matrix.hpp"
#include "msl/partition.hpp"
#include "msl/symmetric.hpp"

namespace msl {

// An element of pi_{2n}(MU), held as its Hurewicz image: coords[i] is the
// coefficient of b^{omega_i}, omega_i = partitions_of(degree)[i]. That
// coefficient is the normal characteristic number m_omega(nu).
struct MUClass {
  int degree = 0;
  std::vector<Integer> coords;

  // Negative degrees are allowed and give the (only) zero class there.
  static MUClass zero(int n);
  static MUClass unit() { return from_hurewicz(PartitionPoly::one(), 0); }
  static MUClass from_hurewicz(const PartitionPoly& h, int n);
  PartitionPoly hurewicz() const;

  bool is_zero() const;
  MUClass operator+(const MUClass& o) const;
  MUClass operator-(const MUClass& o) const;
  MUClass operator-() const;
  MUClass scale(const Integer& c) const;
  bool operator==(const MUClass& o) const { return degree == o.degree && coords == o.coords; }
};

// Product of Hurewicz images (no truncation check).
MUClass product(const MUClass& a, const MUClass& b);

// s-number, normalized so that s_n[CP^n] = n + 1: the negated b_n coefficient.
Integer s_number(const MUClass& x);

// Tangent Chern numbers c_mu(T)[M], keyed by partitions of n.
using ChernNumbers = std::map<Partition, Integer>;

MUClass chern_numbers_to_hurewicz(const ChernNumbers& tangent, int n);
ChernNumbers hurewicz_to_chern_numbers(const MUClass& x);
// c_omega of the stable normal bundle.
Integer normal_chern_number(const MUClass& x, const Partition& omega);

// Total tangent Chern class c(T) = prod (1 + x_i)^{k_i}: tangent numbers of CP^{n}.
ChernNumbers cpn_chern_numbers(int n);
ChernNumbers milnor_hypersurface_chern_numbers(int i, int j);

// Classes built from the log coefficients of the formal group law.
MUClass cpn_class(const FGLContext& ctx, int n);
MUClass milnor_hypersurface_class(const FGLContext& ctx, int i, int j);

struct CatalogEntry {
  std::string label;  // "CP3", "H2_3"
  MUClass cls;
};

// CP^n and H_{i,j} (1 <= i <= j, i + j - 1 = n), in that order.
std::vector<CatalogEntry> generator_catalog(const FGLContext& ctx, int n);

// Required |s_n| of a polynomial generator: p if n + 1 is a power of the prime p, else 1.
Integer milnor_target(int n);

// Polynomial generators x_1..x_N selected from the catalog, and the
// x-monomial bases of the lattices L_n they span.
class MUBasis {
 public:
  MUBasis(std::shared_ptr<const FGLContext> ctx, int max_degree);

  int max_degree() const { return max_degree_; }
  const FGLContext& context() const { return *ctx_; }

  const MUClass& generator(int n) const { return generators_.at(static_cast<std::size_t>(n)); }
  const std::string& generator_recipe(int n) const { return recipes_.at(static_cast<std::size_t>(n)); }

  // x^omega for omega in partitions_of(n).
  const std::vector<MUClass>& basis(int n) const { return bases_.at(static_cast<std::size_t>(n)); }
  // Columns are the b-coordinates of the basis.
  const IntMatrix& basis_matrix(int n) const { return matrices_.at(static_cast<std::size_t>(n)); }
  static std::string monomial_label(const Partition& omega);

  // x-coordinates; nullopt when x is not in the lattice.
  std::optional<std::vector<Integer>> coordinates(const MUClass& x) const;
  std::vector<Integer> require_coordinates(const MUClass& x) const;
  MUClass from_coordinates(int n, const std::vector<Integer>& c) const;
  bool contains(const MUClass& x) const { return coordinates(x).has_value(); }

  // Product with the degree bound enforced.
  MUClass multiply(const MUClass& a, const MUClass& b) const;

 private:
  std::shared_ptr<const FGLContext> ctx_;
  int max_degree_;
  std::vector<MUClass> generators_;
  std::vector<std::string> recipes_;
  std::vector<std::vector<MUClass>> bases_;
  std::vector<IntMatrix> matrices_;
  std::vector<RatMatrix> inverses_;
};

}  // namespace msl
