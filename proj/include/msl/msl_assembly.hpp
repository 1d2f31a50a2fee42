#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "msl/fg_ab_group.hpp"
#include "msl/witt.hpp"

namespace msl {

struct MSLSummand {
  std::string label;     // "ideal_part", "msu_free", "msu_torsion"
  std::string symbolic;  // "I(k)^2", "Z^7", "(Z/2)^2"
  FGAbGroup group;
  std::string note;
};

struct MSLAnswer {
  FieldDescriptor k;
  int n = 0;
  FGAbGroup group;
  std::vector<MSLSummand> decomposition;
  // Field-generic label in the style "GW(k)^2 ⊕ Z^5".
  std::string symbolic;

  nlohmann::json to_json() const;
};

// Degree-n diagonal group; requires 0 <= n <= max_degree - 1.
MSLAnswer msl_diagonal(const FieldDescriptor& k, int n, int max_degree);
// Off-diagonal group in weight shift m > 0.
FGAbGroup msl_off_diagonal(const FieldDescriptor& k, int n, int m);
// The ideal eta * pi(MSL) inside the diagonal.
FGAbGroup i_msl(const FieldDescriptor& k, int n);
// 2-primary torsion, cross-checked against msl_diagonal.
FGAbGroup msl_torsion(const FieldDescriptor& k, int n);

struct EtaQuotientDegree {
  int n = 0;
  std::vector<std::string> monomials;  // "1", "y4^2", "y8"
  FGAbGroup group;                      // W(k)^{#monomials}
};

std::vector<EtaQuotientDegree> eta_quotient_degrees(const FieldDescriptor& k, int max_n);

struct IntroRow {
  int n = 0;
  FGAbGroup group;
  std::string symbolic;
};

// Rows n = 0..9.
std::vector<IntroRow> intro_table(const FieldDescriptor& k);

struct CheckResult {
  bool pass = true;
  std::string detail;
};

// Diagonal modulo I_MSL versus msu_additive(n).
CheckResult msl_quotient_check(const FieldDescriptor& k, int n);
// After inverting 2e the diagonal splits as Z^{p(n)-p(n-1)} + W(k)^{p(n/4)}.
CheckResult msl_away_from_two_check(const FieldDescriptor& k, int n);
// Off-diagonal W^p modulo the ideal part I^p is the (Z/2)^p that eta_top detects.
CheckResult msl_eta_extension_check(const FieldDescriptor& k, int n);

}  // namespace msl
