#include "msl/fg_ab_group.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace msl {

std::vector<std::pair<Integer, int>> factorize(const Integer& n) {
  if (n <= 0) throw std::invalid_argument("factorize: non-positive input");
  std::vector<std::pair<Integer, int>> out;
  Integer m = n;
  for (Integer p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

FGAbGroup::FGAbGroup(int free_rank, const std::vector<Integer>& cyclic_orders, std::set<long> inverted)
    : free_rank_(free_rank), inverted_(std::move(inverted)) {
  if (free_rank < 0) throw std::invalid_argument("FGAbGroup: negative free rank");
  for (long p : inverted_)
    if (p < 2) throw std::invalid_argument("FGAbGroup: inverted primes must be >= 2");
  // Collect prime-power parts, drop inverted primes, recombine into a chain.
  std::map<Integer, std::vector<int>> by_prime;
  for (const auto& order : cyclic_orders) {
    if (order == 0) {
      ++free_rank_;
      continue;
    }
    Integer a = abs(order);
    if (a == 1) continue;
    for (auto& [p, e] : factorize(a)) {
      if (p.fits_slong_p() && inverted_.count(p.get_si())) continue;
      by_prime[p].push_back(e);
    }
  }
  std::size_t count = 0;
  for (auto& [p, exps] : by_prime) {
    std::sort(exps.begin(), exps.end(), std::greater<>());
    count = std::max(count, exps.size());
  }
  // factors_[0] | factors_[1] | ...: the largest factor takes the highest power of every prime.
  std::vector<Integer> chain(count, 1);
  for (auto& [p, exps] : by_prime)
    for (std::size_t i = 0; i < exps.size(); ++i) {
      Integer pe;
      mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(exps[i]));
      chain[count - 1 - i] *= pe;
    }
  factors_ = std::move(chain);
}

Integer FGAbGroup::torsion_order() const {
  Integer t = 1;
  for (const auto& f : factors_) t *= f;
  return t;
}

FGAbGroup FGAbGroup::direct_sum(const FGAbGroup& other) const {
  std::set<long> inv = inverted_;
  inv.insert(other.inverted_.begin(), other.inverted_.end());
  std::vector<Integer> all = factors_;
  all.insert(all.end(), other.factors_.begin(), other.factors_.end());
  return FGAbGroup(free_rank_ + other.free_rank_, all, inv);
}

FGAbGroup FGAbGroup::power(int k) const {
  if (k < 0) throw std::invalid_argument("FGAbGroup::power: negative exponent");
  FGAbGroup out = trivial(inverted_);
  for (int i = 0; i < k; ++i) out = out.direct_sum(*this);
  return out;
}

FGAbGroup FGAbGroup::localized(const std::set<long>& extra) const {
  std::set<long> inv = inverted_;
  inv.insert(extra.begin(), extra.end());
  return FGAbGroup(free_rank_, factors_, inv);
}

FGAbGroup FGAbGroup::torsion_subgroup() const { return FGAbGroup(0, factors_, inverted_); }

FGAbGroup FGAbGroup::p_primary_torsion(long p) const {
  std::vector<Integer> parts;
  for (const auto& f : factors_) {
    Integer part = 1, m = f;
    while (m % p == 0) {
      m /= p;
      part *= p;
    }
    parts.push_back(part);
  }
  return FGAbGroup(0, parts, inverted_);
}

IntMatrix FGAbGroup::presentation() const {
  const std::size_t n = factors_.size() + static_cast<std::size_t>(free_rank_);
  IntMatrix M(n, n);
  for (std::size_t i = 0; i < factors_.size(); ++i) M(i, i) = factors_[i];
  return M;
}

std::string FGAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  std::string ring = "Z";
  if (!inverted_.empty()) {
    long prod = 1;
    for (long p : inverted_) prod *= p;
    ring = "Z[1/" + std::to_string(prod) + "]";
  }
  bool first = true;
  if (free_rank_ > 0) {
    os << ring;
    if (free_rank_ > 1) os << '^' << free_rank_;
    first = false;
  }
  // Group equal factors: (Z/2)^2.
  std::size_t i = 0;
  while (i < factors_.size()) {
    std::size_t j = i;
    while (j < factors_.size() && factors_[j] == factors_[i]) ++j;
    if (!first) os << " ⊕ ";
    first = false;
    if (j - i > 1)
      os << "(Z/" << factors_[i].get_str() << ")^" << (j - i);
    else
      os << "Z/" << factors_[i].get_str();
    i = j;
  }
  return os.str();
}

nlohmann::json FGAbGroup::to_json() const {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& f : factors_) {
    if (fits_int64(f))
      factors.push_back(f.get_si());
    else
      factors.push_back(f.get_str());
  }
  return {{"free_rank", free_rank_}, {"invariant_factors", factors}, {"inverted_primes", inverted_}};
}

FGAbGroup FGAbGroup::from_json(const nlohmann::json& j) {
  std::vector<Integer> factors;
  for (const auto& f : j.at("invariant_factors")) {
    if (f.is_string())
      factors.emplace_back(f.get<std::string>());
    else
      factors.emplace_back(f.get<long>());
  }
  std::set<long> inv;
  for (const auto& p : j.at("inverted_primes")) inv.insert(p.get<long>());
  return FGAbGroup(j.at("free_rank").get<int>(), factors, inv);
}

FGAbGroup cokernel(const IntMatrix& M, const std::set<long>& inverted_primes) {
  auto d = smith_invariants(M);
  int free_rank = static_cast<int>(M.rows()) - static_cast<int>(d.size());
  return FGAbGroup(free_rank, d, inverted_primes);
}

FGAbGroup subgroup_generated(const IntMatrix& generators, const IntMatrix& relations,
                             const std::set<long>& inverted_primes) {
  const std::size_t s = generators.cols();
  if (s == 0) return FGAbGroup::trivial(inverted_primes);
  IntMatrix joint = relations.cols() ? generators.hconcat(relations) : generators;
  // c in Z^s is a relation iff generators*c lies in span(relations).
  IntMatrix K = kernel_lattice(joint);
  IntMatrix rel(s, K.cols());
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < K.cols(); ++j) rel(i, j) = K(i, j);
  return cokernel(rel, inverted_primes);
}

}  // namespace msl
