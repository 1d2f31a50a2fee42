#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "msl/fg_ab_group.hpp"
#include "msl/witt.hpp"

namespace msl {

// Canonical monomials of the diagonal of KQ: beta^c (degree 4c),
// etaeta * beta^c (4c + 1) and H * beta^c (4c + 2).
enum class KQBase { One, EtaEta, H };

struct KQMonomial {
  KQBase base = KQBase::One;
  int beta = 0;

  int degree() const { return 4 * beta + static_cast<int>(base); }
  std::string to_string() const;
  auto operator<=>(const KQMonomial&) const = default;
};

// GW(k)-linear combination of canonical monomials; coefficients are vectors
// on the Witt-class generators of the field.
struct KQElement {
  std::map<KQMonomial, std::vector<Integer>> terms;
};

class KQPresentation {
 public:
  // very_effective drops beta^{-1}: negative degrees vanish.
  explicit KQPresentation(const FieldDescriptor& k, bool very_effective = false);

  const WittRing& witt() const { return witt_; }
  bool very_effective() const { return very_effective_; }

  KQElement monomial(KQBase base, int beta, const std::vector<Integer>& coeff) const;
  KQElement generator(KQBase base, int beta) const { return monomial(base, beta, witt_.one()); }
  KQElement add(const KQElement& a, const KQElement& b) const;
  KQElement scale(const KQElement& a, const std::vector<Integer>& coeff) const;
  // Applies the rewriting rules (etaeta)^2 -> 0, etaeta*H -> 0, H^2 -> 2h*beta.
  KQElement multiply(const KQElement& a, const KQElement& b) const;

  // Relations on the coefficient of the unique degree-n monomial.
  IntMatrix degree_relations(int n) const;
  FGAbGroup degree_group(int n) const;
  // True when the element is zero in the presented ring.
  bool is_zero(const KQElement& a) const;

 private:
  WittRing witt_;
  bool very_effective_;
};

// GW(k), Z/2, Z, 0 for n = 0, 1, 2, 3 mod 4.
FGAbGroup kq_diagonal(const FieldDescriptor& k, int n, bool very_effective = false);
// W(k) for n = 0 mod 4, else 0.
FGAbGroup kw_diagonal(const FieldDescriptor& k, int n);

struct KQReport {
  bool pass = true;
  std::vector<std::string> lines;     // per-check diagnostics
  std::vector<std::string> failures;  // named failing relation / degree
  nlohmann::json to_json() const;
};

KQReport kq_relation_check(const FieldDescriptor& k, int max_degree, bool very_effective = false);

struct EtaTopReport {
  bool well_defined = false;    // rank mod 2 kills the Witt relations
  bool surjective = false;
  FGAbGroup kernel;
  bool kernel_is_ideal = false;  // kernel equals I(k) as a subgroup of W(k)
  bool isomorphism = false;
  nlohmann::json to_json() const;
};

EtaTopReport eta_top_square_check(const FieldDescriptor& k);

}  // namespace msl
