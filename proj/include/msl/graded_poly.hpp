#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "msl/integer.hpp"

namespace msl {

// Generators of a polynomial ring together with their weights and the
// truncation bound. Weight-0 generators play the role of coefficients
// (e.g. the b_i when expanding a power series in x); only positive-weight
// generators count towards the bound.
class PolyRing {
 public:
  PolyRing(std::vector<std::string> names, std::vector<int> weights, int truncation);

  static std::shared_ptr<const PolyRing> make(std::vector<std::string> names, std::vector<int> weights,
                                              int truncation) {
    return std::make_shared<const PolyRing>(std::move(names), std::move(weights), truncation);
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  int weight(std::size_t i) const { return weights_[i]; }
  int truncation() const { return truncation_; }
  std::optional<std::size_t> index_of(const std::string& name) const;
  std::size_t require(const std::string& name) const;

  bool operator==(const PolyRing& other) const {
    return names_ == other.names_ && weights_ == other.weights_ && truncation_ == other.truncation_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<int> weights_;
  int truncation_;
};

using RingPtr = std::shared_ptr<const PolyRing>;
using Monomial = std::vector<std::uint16_t>;

// Sparse polynomial with exact rational coefficients, truncated at the
// ring's weighted-degree bound. Zero coefficients are never stored.
class GradedPoly {
 public:
  explicit GradedPoly(RingPtr ring) : ring_(std::move(ring)) {}

  static GradedPoly constant(RingPtr ring, const Rational& c);
  static GradedPoly generator(RingPtr ring, std::size_t index);
  static GradedPoly generator(RingPtr ring, const std::string& name);
  static GradedPoly monomial(RingPtr ring, const Monomial& m, const Rational& c = 1);

  const RingPtr& ring() const { return ring_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const { return coefficient(Monomial(ring_->size(), 0)); }
  int degree_of(const Monomial& m) const;
  // Smallest weighted degree of a stored term; nullopt for zero.
  std::optional<int> order() const;

  // Adds c * m, dropping it if it exceeds the truncation bound.
  void add_term(const Monomial& m, const Rational& c);

  GradedPoly operator+(const GradedPoly& other) const;
  GradedPoly operator-(const GradedPoly& other) const;
  GradedPoly operator-() const;
  GradedPoly operator*(const GradedPoly& other) const;
  GradedPoly scale(const Rational& c) const;
  GradedPoly& operator+=(const GradedPoly& other);
  GradedPoly& operator-=(const GradedPoly& other);
  GradedPoly pow(int k) const;

  bool operator==(const GradedPoly& other) const;

  GradedPoly homogeneous_part(int degree) const;
  // Terms in which generator `var` appears to exactly `power`, with var removed.
  GradedPoly coefficient_of_power(std::size_t var, int power) const;
  int max_exponent(std::size_t var) const;

  // Replace generator `var` by `value` (same ring).
  GradedPoly substitute(std::size_t var, const GradedPoly& value) const;
  // Generators are matched by name (after applying `rename`); generators
  // missing in the target must not occur.
  GradedPoly map_to(const RingPtr& target, const std::map<std::string, std::string>& rename = {}) const;
  // Swap two generators.
  GradedPoly swap_generators(std::size_t a, std::size_t b) const;

  bool is_integral() const;
  std::string to_string() const;

 private:
  void require_same_ring(const GradedPoly& other) const;

  RingPtr ring_;
  std::map<Monomial, Rational> terms_;
};

// f(g(x)) where x = generator `var`. Both f and g must vanish at x = 0.
GradedPoly compose_series(const GradedPoly& f, const GradedPoly& g, std::size_t var);

// g with f(g(x)) = x = g(f(x)); f must be x + (higher powers of x).
GradedPoly invert_series_compositional(const GradedPoly& f, std::size_t var);

// 1/f; the weighted-degree-0 part of f must be a nonzero constant.
GradedPoly reciprocal(const GradedPoly& f);

// e_k(x_{vars[0]}, ..., x_{vars[m-1]}).
GradedPoly elementary_symmetric(const RingPtr& ring, const std::vector<std::size_t>& vars, int k);

// Rewrites f, symmetric in the generators `vars` (x_1..x_k), as a polynomial in
// elementary symmetric functions. The target ring must contain the generators
// c_names (c_1..c_k) plus every other generator of f's ring occurring in f.
GradedPoly elementary_symmetric_rewrite(const GradedPoly& f, const std::vector<std::size_t>& vars,
                                        const RingPtr& target, const std::vector<std::string>& c_names);

// Substitutes c_i -> e_i(x) back (inverse of the rewrite), mapping into `target`.
GradedPoly substitute_elementary(const GradedPoly& g, const std::vector<std::string>& c_names,
                                 const RingPtr& target, const std::vector<std::size_t>& vars);

}  // namespace msl
