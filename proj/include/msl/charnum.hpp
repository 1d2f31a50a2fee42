#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "msl/cf_complex.hpp"
#include "msl/graded_poly.hpp"
#include "msl/mu_lattice.hpp"

namespace msl {

struct VarietyClass {
  std::string description;
  int dimension = 0;
  ChernNumbers tangent;                // c_mu(T)[X], |mu| = dimension
  GradedPoly tangent_class{nullptr};   // total Chern class in the ambient model
  std::optional<bool> calabi_yau;      // c_1(T) = 0 in the ambient model (hypersurfaces only)
  MUClass cls;

  nlohmann::json to_json() const;
};

// Smooth degree-d hypersurface in P^n; dimension n - 1.
VarietyClass hypersurface_class(int n, int d);
// P^{d_1} x ... x P^{d_k}.
VarietyClass product_projective_class(const std::vector<int>& dims);

// c_omega of the stable normal bundle, |omega| = deg x.
Integer chern_number(const MUClass& x, const Partition& omega);

struct GeneratorVerdict {
  int n = 0;
  Integer s_number;
  Integer required;  // odd part s_n must have: p if n + 1 = p^k (p odd), else 1
  Integer odd_part;
  bool pass = false;
  std::string detail;

  nlohmann::json to_json() const;
};

// Throws std::invalid_argument unless deg x >= 2 and x lies in the cycle lattice Z_n.
GeneratorVerdict generator_check_msu(const ConnerFloyd& cf, const MUClass& x);

}  // namespace msl
