#pragma once

#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "msl/int_matrix.hpp"
#include "msl/integer.hpp"

namespace msl {

// Finitely generated abelian group over Z[1/e], held in invariant-factor
// normal form. Torsion at inverted primes is stripped on construction.
class FGAbGroup {
 public:
  FGAbGroup() = default;
  // `cyclic_orders` may be any list of orders (>= 1, unsorted, not chained);
  // the constructor normalizes them.
  FGAbGroup(int free_rank, const std::vector<Integer>& cyclic_orders, std::set<long> inverted_primes = {});

  static FGAbGroup trivial(std::set<long> inverted = {}) { return FGAbGroup(0, {}, std::move(inverted)); }
  static FGAbGroup free(int rank, std::set<long> inverted = {}) { return FGAbGroup(rank, {}, std::move(inverted)); }
  static FGAbGroup cyclic(const Integer& order, std::set<long> inverted = {}) {
    return FGAbGroup(0, {order}, std::move(inverted));
  }

  int free_rank() const { return free_rank_; }
  const std::vector<Integer>& invariant_factors() const { return factors_; }
  const std::set<long>& inverted_primes() const { return inverted_; }

  bool is_trivial() const { return free_rank_ == 0 && factors_.empty(); }
  bool is_finite() const { return free_rank_ == 0; }
  Integer torsion_order() const;

  FGAbGroup direct_sum(const FGAbGroup& other) const;
  FGAbGroup power(int k) const;
  FGAbGroup localized(const std::set<long>& extra_inverted) const;
  FGAbGroup torsion_subgroup() const;
  FGAbGroup p_primary_torsion(long p) const;
  FGAbGroup free_part() const { return FGAbGroup(free_rank_, {}, inverted_); }

  // Square diagonal presentation whose cokernel is this group.
  IntMatrix presentation() const;

  // "Z^2 + Z/2"-style text using the unicode direct-sum sign; "0" when trivial.
  std::string to_string() const;

  nlohmann::json to_json() const;
  static FGAbGroup from_json(const nlohmann::json& j);

  bool operator==(const FGAbGroup& other) const = default;

 private:
  int free_rank_ = 0;
  std::vector<Integer> factors_;
  std::set<long> inverted_;
};

// Z^rows / im(M), localized at the given primes.
FGAbGroup cokernel(const IntMatrix& M, const std::set<long>& inverted_primes = {});

// Subgroup of Z^n / span(relations) generated by the columns of `generators`,
// as an abstract group.
FGAbGroup subgroup_generated(const IntMatrix& generators, const IntMatrix& relations,
                             const std::set<long>& inverted_primes = {});

// Prime factorization by trial division (small inputs only).
std::vector<std::pair<Integer, int>> factorize(const Integer& n);

}  // namespace msl
