#pragma once

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "msl/cf_complex.hpp"
#include "msl/fgl.hpp"
#include "msl/mu_lattice.hpp"

namespace msl {

// FGL context, polynomial generators and the Conner-Floyd complex at one truncation.
struct Workspace {
  std::shared_ptr<const FGLContext> ctx;
  std::shared_ptr<const MUBasis> basis;
  std::shared_ptr<const ConnerFloyd> cf;

  static Workspace build(int truncation);
};

struct SuiteReport {
  std::string name;
  bool pass = true;
  std::vector<std::string> lines;

  void check(bool ok, const std::string& what);
  nlohmann::json to_json() const;
  std::string to_text() const;
};

// Expected Conner-Floyd homology: (Z/2)^{p(n/4)}, (Z/2)^{p((n-2)/4)} or 0.
FGAbGroup expected_cf_homology(int n);

// Twisted Leibniz laws on Wall-lattice basis pairs with deg a + deg b <= max_degree.
SuiteReport verify_leibniz(const Workspace& ws, int max_degree);
// Homology pattern, ranks, delta^2 = 0 and Delta surjectivity for n <= max_degree - 1.
SuiteReport verify_cf_pattern(const Workspace& ws, int max_degree);
// Intro table, quotient and away-from-2 checks for every catalog field.
SuiteReport verify_table();
SuiteReport verify_kq(int max_degree);
SuiteReport verify_witt_oracle();

std::vector<std::string> suite_names();
std::vector<SuiteReport> run_suite(const std::string& name, const Workspace& ws, int max_degree);

}  // namespace msl
