#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace msl {

// A weakly decreasing tuple of positive integers. Indexes b-monomials,
// x-monomials, Chern-number tuples and monomial symmetric functions.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }

  // Number of parts equal to v.
  int multiplicity(int v) const;

  // Sorted union of parts.
  Partition join(const Partition& other) const;

  // Remove one part equal to v; nullopt if absent.
  std::optional<Partition> remove_part(int v) const;

  // "(3,1,1)"; the empty partition prints as "()".
  std::string to_string() const;
  static Partition parse(const std::string& text);

  // Lexicographic on the parts vector. Used for map keys only; the global
  // enumeration order is the one produced by partitions_of().
  auto operator<=>(const Partition& other) const { return parts_ <=> other.parts_; }
  bool operator==(const Partition& other) const { return parts_ == other.parts_; }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ..., (1^n).
const std::vector<Partition>& partitions_of(int n);

// p(n); 0 for negative n.
std::int64_t partition_count(int n);

// Position of a partition inside partitions_of(weight).
int partition_index(const Partition& p);

// Number of distinct rearrangements of the parts.
std::int64_t distinct_permutations(const Partition& p);

}  // namespace msl
