#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "msl/fg_ab_group.hpp"
#include "msl/int_matrix.hpp"

namespace msl {

enum class FieldKind { QuadraticallyClosed, RealClosed, FiniteQ1, FiniteQ3 };

struct FieldDescriptor {
  FieldKind kind = FieldKind::QuadraticallyClosed;
  long e = 1;  // exponential characteristic

  // "c", "r", "fq1", "fq3"; finite kinds take their characteristic from
  // `characteristic` (defaults: 5 for fq1, 3 for fq3).
  static FieldDescriptor parse(const std::string& flag, std::optional<long> characteristic = std::nullopt);
  static FieldDescriptor quadratically_closed() { return {FieldKind::QuadraticallyClosed, 1}; }
  static FieldDescriptor real_closed() { return {FieldKind::RealClosed, 1}; }
  static FieldDescriptor finite(long q);

  std::string flag() const;
  std::string name() const;
  std::set<long> inverted_primes() const;
  void validate() const;

  bool operator==(const FieldDescriptor&) const = default;
};

// All four kinds with their default characteristics.
std::vector<FieldDescriptor> field_catalog();

// GW(k) presented on square-class generators <a>, with the multiplication
// <a><b> = <ab> and the hyperbolic class h = <1> + <-1>.
class WittRing {
 public:
  explicit WittRing(const FieldDescriptor& k);

  const FieldDescriptor& field() const { return field_; }
  const std::vector<std::string>& generator_labels() const { return labels_; }
  std::size_t generator_count() const { return labels_.size(); }

  const IntMatrix& gw_relations() const { return gw_rel_; }
  const IntMatrix& w_relations() const { return w_rel_; }
  const std::vector<Integer>& hyperbolic() const { return hyperbolic_; }
  std::vector<Integer> one() const;
  std::vector<Integer> multiply(const std::vector<Integer>& a, const std::vector<Integer>& b) const;

  const FGAbGroup& gw() const { return gw_; }
  const FGAbGroup& w() const { return w_; }

  // Rank map Z^g -> Z (1 x g).
  const IntMatrix& rank_map() const { return rank_; }

  // Generators of I^m (columns, in Z^g), products of m elements <1> - <a>; I^0 = W.
  IntMatrix ideal_power_generators(int m) const;
  FGAbGroup fundamental_ideal_power(int m) const;
  // Kernel of the rank in GW.
  FGAbGroup gw_augmentation_ideal() const;
  // W / I via rank mod 2.
  FGAbGroup w_mod_ideal() const;

  nlohmann::json to_json(int max_power) const;

 private:
  FieldDescriptor field_;
  std::vector<std::string> labels_;
  std::vector<long> square_classes_;  // representative per generator (for the table)
  std::vector<std::vector<std::size_t>> product_;  // generator index of <a><b>
  IntMatrix gw_rel_;
  IntMatrix w_rel_;
  std::vector<Integer> hyperbolic_;
  IntMatrix rank_;
  FGAbGroup gw_, w_;
};

// Convenience wrappers.
WittRing witt_data(const FieldDescriptor& k);
FGAbGroup fundamental_ideal_power(const FieldDescriptor& k, int m);
FGAbGroup two_primary_torsion_of_ideal(const FieldDescriptor& k, int m);

// Classification by brute force over F_q (q in {3, 5, 7, 9}): Witt classes of
// diagonal forms of rank <= 4, reduced by splitting off hyperbolic planes and
// compared by exhaustive isometry search.
struct WittOracleResult {
  long q = 0;
  std::size_t class_count = 0;
  FGAbGroup w;
  FGAbGroup gw;
  FGAbGroup ideal;
  FGAbGroup ideal_square;
};

WittOracleResult witt_oracle_finite(long q);

// Real closed case: signatures of diagonal +-1 forms of rank <= 4.
struct RealOracleResult {
  FGAbGroup w;
  std::vector<FGAbGroup> ideal_powers;  // I^1..I^3 as subgroups of W
  std::vector<Integer> ideal_power_index;  // [W : I^m]
};

RealOracleResult witt_oracle_real();

}  // namespace msl
