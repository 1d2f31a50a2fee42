#include <doctest.h>

#include <functional>
#include <random>

#include "msl/fg_ab_group.hpp"
#include "msl/int_matrix.hpp"
#include "msl/partition.hpp"

using namespace msl;

namespace {

// All weakly decreasing sequences summing to n, by recursion on the largest part.
void brute_partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    brute_partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  IntMatrix M(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) M(i, j) = dist(rng);
  return M;
}

bool is_diagonal_chain(const IntMatrix& D) {
  Integer prev = 1;
  bool zero_seen = false;
  for (std::size_t i = 0; i < D.rows(); ++i)
    for (std::size_t j = 0; j < D.cols(); ++j) {
      if (i != j && D(i, j) != 0) return false;
      if (i == j) {
        if (D(i, i) < 0) return false;
        if (D(i, i) == 0) {
          zero_seen = true;
        } else {
          if (zero_seen || D(i, i) % prev != 0) return false;
          prev = D(i, i);
        }
      }
    }
  return true;
}

}  // namespace

TEST_CASE("partitions match brute-force enumeration in reverse-lex order") {
  for (int n = 0; n <= 14; ++n) {
    std::vector<std::vector<int>> brute;
    std::vector<int> cur;
    brute_partitions(n, n, cur, brute);
    const auto& got = partitions_of(n);
    REQUIRE(got.size() == brute.size());
    CHECK(partition_count(n) == static_cast<std::int64_t>(brute.size()));
    for (std::size_t i = 0; i < got.size(); ++i) {
      CHECK(got[i].parts() == brute[i]);
      CHECK(partition_index(got[i]) == static_cast<int>(i));
    }
  }
  CHECK(partition_count(-1) == 0);
  CHECK(partition_count(30) == 5604);
}

TEST_CASE("partition text round trip and helpers") {
  Partition p{3, 1, 1};
  CHECK(p.to_string() == "(3,1,1)");
  CHECK(Partition::parse("(3,1,1)") == p);
  CHECK(Partition::parse("()") == Partition{});
  CHECK(p.multiplicity(1) == 2);
  CHECK(p.join(Partition{2}) == Partition{3, 2, 1, 1});
  CHECK(p.remove_part(3) == Partition{1, 1});
  CHECK_FALSE(p.remove_part(2).has_value());
  CHECK(distinct_permutations(p) == 3);
}

TEST_CASE("Smith normal form: hand example") {
  IntMatrix M = IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  auto inv = smith_invariants(M);
  REQUIRE(inv.size() == 3);
  CHECK(inv[0] == 2);
  CHECK(inv[1] == 6);
  CHECK(inv[2] == 12);
  auto S = smith_normal_form(M);
  CHECK(S.U * M * S.V == S.D);
}

TEST_CASE("Smith normal form: randomized U M V = D") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + trial % 5, c = 1 + (trial / 5) % 6;
    IntMatrix M = random_matrix(rng, r, c, 9);
    auto S = smith_normal_form(M);
    CHECK(S.U * M * S.V == S.D);
    CHECK(is_diagonal_chain(S.D));
    CHECK(abs(determinant(S.U)) == 1);
    CHECK(abs(determinant(S.V)) == 1);
    // d_1 is the gcd of all entries.
    Integer g = 0;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) g = gcd(g, M(i, j));
    CHECK(S.D(0, 0) == g);
    if (r == c) {
      Integer prod = 1;
      for (std::size_t i = 0; i < r; ++i) prod *= S.D(i, i);
      CHECK(prod == abs(determinant(M)));
    }
  }
}

TEST_CASE("kernel lattice is saturated and of the right rank") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix M = random_matrix(rng, 2 + trial % 3, 5, 6);
    IntMatrix K = kernel_lattice(M);
    CHECK(K.cols() == 5 - rank(M));
    CHECK((M * K).is_zero());
    // Saturated: elementary divisors of K are all 1.
    for (const auto& d : smith_invariants(K)) CHECK(d == 1);
  }
}

TEST_CASE("lattice membership") {
  IntMatrix B = IntMatrix::from_rows({{2, 0}, {0, 3}, {1, 1}});
  CHECK(in_span(B, {2, 3, 2}));
  CHECK_FALSE(in_span(B, {1, 0, 0}));
  auto c = solve_in_lattice(B, {4, -3, 1});
  REQUIRE(c.has_value());
  CHECK((*c)[0] == 2);
  CHECK((*c)[1] == -1);
  CHECK_FALSE(solve_in_lattice(B, {1, 0, 1}).has_value());
}

TEST_CASE("finitely generated abelian groups in normal form") {
  FGAbGroup g(1, {4, 6});
  CHECK(g.invariant_factors() == std::vector<Integer>{2, 12});
  CHECK(g.to_string() == "Z ⊕ Z/2 ⊕ Z/12");
  CHECK(FGAbGroup(0, {2, 2}).to_string() == "(Z/2)^2");
  CHECK(FGAbGroup::trivial().to_string() == "0");
  CHECK(FGAbGroup::cyclic(6).localized({3}) == FGAbGroup::cyclic(2, {3}));
  CHECK(FGAbGroup::cyclic(6).localized({3}).to_string() == "Z/2");
  CHECK(FGAbGroup(2, {}, {5}).to_string() == "Z[1/5]^2");
  CHECK(g.p_primary_torsion(2) == FGAbGroup(0, {2, 4}));
  CHECK(g.p_primary_torsion(3) == FGAbGroup::cyclic(3));
  CHECK(FGAbGroup::from_json(g.to_json()) == g);
  CHECK(cokernel(g.presentation()) == g);

  IntMatrix M = IntMatrix::from_rows({{2, 0}, {0, 3}, {0, 0}});
  CHECK(cokernel(M) == FGAbGroup(1, {6}));
  // 2Z/6Z inside Z/6 is Z/3.
  IntMatrix gen = IntMatrix::from_rows({{2}});
  IntMatrix rel = IntMatrix::from_rows({{6}});
  CHECK(subgroup_generated(gen, rel) == FGAbGroup::cyclic(3));
}
