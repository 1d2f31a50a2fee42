#pragma once

#include <map>
#include <string>
#include <vector>

#include "msl/int_matrix.hpp"
#include "msl/integer.hpp"
#include "msl/partition.hpp"

namespace msl {

// Integer polynomial whose monomials are indexed by partitions: the
// partition (3,1,1) stands for b_3 b_1^2 (or c_3 c_1^2). The weight of a
// monomial is the weight of its partition.
class PartitionPoly {
 public:
  PartitionPoly() = default;

  static PartitionPoly one() { return monomial(Partition{}); }
  static PartitionPoly monomial(const Partition& p, const Integer& c = 1);
  // The single generator of index i; index 0 means the constant 1.
  static PartitionPoly generator(int i);

  const std::map<Partition, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const Partition& p) const;
  void add_term(const Partition& p, const Integer& c);

  PartitionPoly& operator+=(const PartitionPoly& o);
  PartitionPoly& operator-=(const PartitionPoly& o);
  PartitionPoly operator+(const PartitionPoly& o) const;
  PartitionPoly operator-(const PartitionPoly& o) const;
  PartitionPoly operator-() const;
  PartitionPoly operator*(const PartitionPoly& o) const;
  PartitionPoly scale(const Integer& c) const;
  // Product keeping only monomials of weight <= max_weight.
  PartitionPoly mul_truncated(const PartitionPoly& o, int max_weight) const;

  PartitionPoly homogeneous_part(int weight) const;
  bool is_homogeneous(int weight) const;

  bool operator==(const PartitionPoly& o) const { return terms_ == o.terms_; }

  // "b" prefix: "-2*b1", "4*b1^2 - 3*b2".
  std::string to_string(const std::string& var = "b") const;

 private:
  std::map<Partition, Integer> terms_;
};

// Power series in one variable t with PartitionPoly coefficients; index = power of t.
using PSeries = std::vector<PartitionPoly>;

PSeries series_mul(const PSeries& a, const PSeries& b, std::size_t len);
// Requires a[0] == 1.
PSeries series_inverse(const PSeries& a, std::size_t len);
PSeries series_pow(const PSeries& a, int k, std::size_t len);

// E(t) = sum_{j >= 0} b_j t^{j+1} with b_0 = 1, and B(t) = E(t)/t.
PSeries exp_series(std::size_t len);
PSeries b_series(std::size_t len);

// Coefficients of m_lambda in m_mu * m_nu.
const std::map<Partition, Integer>& monomial_product(const Partition& mu, const Partition& nu);

// m_(1) * m_omega in the monomial basis.
std::map<Partition, Integer> p1_times(const Partition& omega);

// Column j: e_{mu_j} expanded in m_lambda, rows and columns indexed by partitions_of(n).
const IntMatrix& elementary_to_monomial(int n);
// Inverse transition: column j expresses m_{lambda_j} in the e_mu.
const IntMatrix& monomial_to_elementary(int n);

// Symmetric function in the monomial basis with coefficients in Z[b],
// truncated at a fixed degree.
class SymFn {
 public:
  explicit SymFn(int max_degree) : max_degree_(max_degree) {}

  static SymFn one(int max_degree);
  int max_degree() const { return max_degree_; }
  const std::map<Partition, PartitionPoly>& terms() const { return terms_; }
  void add(const Partition& lambda, const PartitionPoly& c);

  SymFn operator+(const SymFn& o) const;
  SymFn operator*(const SymFn& o) const;
  SymFn scale(const PartitionPoly& c) const;

  const PartitionPoly& coefficient(const Partition& lambda) const;

 private:
  int max_degree_;
  std::map<Partition, PartitionPoly> terms_;
};

// Sum over omega of b^omega m_omega, i.e. the product of B(y_i) over all roots.
SymFn total_b_class(int max_degree);

// e_k(E(y_1), E(y_2), ...).
SymFn elementary_of_exp(int k, int max_degree);

// m_alpha(E(y_1), E(y_2), ...).
SymFn monomial_of_exp(const Partition& alpha, int max_degree);

}  // namespace msl
