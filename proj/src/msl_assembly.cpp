#include "msl/msl_assembly.hpp"

#include <stdexcept>

#include "msl/cf_complex.hpp"
#include "msl/partition.hpp"

namespace msl {

namespace {

int p_quarter(int n) { return n >= 0 && n % 4 == 0 ? static_cast<int>(partition_count(n / 4)) : 0; }

std::string power_label(const std::string& base, int p) {
  if (p == 1) return base;
  return (base.size() > 1 && base.find('/') != std::string::npos ? "(" + base + ")" : base) + "^" +
         std::to_string(p);
}

// W^p modulo I^p, presented on p copies of the Witt generators.
FGAbGroup block_cokernel(const WittRing& W, int p, bool with_ideal) {
  const std::size_t g = W.generator_count();
  IntMatrix rel = W.w_relations();
  if (with_ideal) {
    IntMatrix I = W.ideal_power_generators(1);
    if (I.cols()) rel = rel.hconcat(I);
  }
  IntMatrix big(g * static_cast<std::size_t>(p), rel.cols() * static_cast<std::size_t>(p));
  for (int b = 0; b < p; ++b)
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = 0; j < rel.cols(); ++j)
        big(static_cast<std::size_t>(b) * g + i, static_cast<std::size_t>(b) * rel.cols() + j) = rel(i, j);
  return cokernel(big, W.field().inverted_primes());
}

FGAbGroup diagonal_group(const FieldDescriptor& k, int n) {
  FGAbGroup msu = msu_additive(n).localized(k.inverted_primes());
  return i_msl(k, n).direct_sum(msu);
}

}  // namespace

nlohmann::json MSLAnswer::to_json() const {
  nlohmann::json j;
  j["field"] = k.flag();
  j["n"] = n;
  j["group"] = group.to_json();
  j["group_text"] = group.to_string();
  j["symbolic"] = symbolic;
  nlohmann::json parts = nlohmann::json::array();
  for (const auto& s : decomposition) {
    nlohmann::json p;
    p["label"] = s.label;
    p["symbolic"] = s.symbolic;
    p["group"] = s.group.to_json();
    p["group_text"] = s.group.to_string();
    p["note"] = s.note;
    parts.push_back(p);
  }
  j["decomposition"] = parts;
  return j;
}

FGAbGroup i_msl(const FieldDescriptor& k, int n) {
  int p = p_quarter(n);
  if (p == 0) return FGAbGroup::trivial(k.inverted_primes());
  return fundamental_ideal_power(k, 1).power(p);
}

MSLAnswer msl_diagonal(const FieldDescriptor& k, int n, int max_degree) {
  k.validate();
  if (n < 0 || n > max_degree - 1)
    throw std::out_of_range("degree " + std::to_string(n) + " out of range 0.." + std::to_string(max_degree - 1));
  MSLAnswer a;
  a.k = k;
  a.n = n;
  a.group = diagonal_group(k, n);

  const int p = p_quarter(n);
  const int free = static_cast<int>(partition_count(n) - partition_count(n - 1));
  const auto inv = k.inverted_primes();
  if (p > 0)
    a.decomposition.push_back({"ideal_part", power_label("I(k)", p), i_msl(k, n),
                               "kernel of complex realization; the extension by it splits since the MSU corner is free"});
  a.decomposition.push_back({"msu_free", power_label("Z", free), FGAbGroup::free(free, inv),
                             "free part of pi_2n(MSU)"});
  FGAbGroup tors = msu_additive(n).torsion_subgroup().localized(inv);
  if (!tors.is_trivial())
    a.decomposition.push_back({"msu_torsion", power_label("Z/2", static_cast<int>(tors.invariant_factors().size())),
                               tors, "eta-multiples in pi_2n(MSU), n = 1 mod 4"});

  // GW(k) = I(k) + Z absorbs one Z from the MSU part per ideal summand.
  std::vector<std::string> pieces;
  if (p > 0) pieces.push_back(power_label("GW(k)", p));
  if (free - p > 0) pieces.push_back(power_label("Z", free - p));
  if (!tors.is_trivial()) pieces.push_back(power_label("Z/2", static_cast<int>(tors.invariant_factors().size())));
  if (pieces.empty()) pieces.push_back("0");
  for (std::size_t i = 0; i < pieces.size(); ++i) a.symbolic += (i ? " ⊕ " : "") + pieces[i];
  return a;
}

FGAbGroup msl_off_diagonal(const FieldDescriptor& k, int n, int m) {
  if (m <= 0) throw std::invalid_argument("off-diagonal shift m must be positive");
  int p = p_quarter(n);
  if (p == 0) return FGAbGroup::trivial(k.inverted_primes());
  return WittRing(k).w().power(p);
}

FGAbGroup msl_torsion(const FieldDescriptor& k, int n) {
  FGAbGroup t;
  if (n >= 0 && n % 4 == 0) {
    t = two_primary_torsion_of_ideal(k, 1).power(p_quarter(n));
  } else if (n >= 1 && n % 4 == 1) {
    t = FGAbGroup(0, std::vector<Integer>(static_cast<std::size_t>(partition_count((n - 1) / 4)), Integer(2)),
                  k.inverted_primes());
  } else {
    t = FGAbGroup::trivial(k.inverted_primes());
  }
  if (n >= 0 && !(t == diagonal_group(k, n).p_primary_torsion(2)))
    throw std::logic_error("msl_torsion disagrees with the 2-primary part of the diagonal group");
  return t;
}

std::vector<EtaQuotientDegree> eta_quotient_degrees(const FieldDescriptor& k, int max_n) {
  WittRing W(k);
  std::vector<EtaQuotientDegree> out;
  for (int n = 0; n <= max_n; ++n) {
    EtaQuotientDegree d;
    d.n = n;
    if (n % 4 == 0) {
      for (const auto& omega : partitions_of(n / 4)) {
        if (omega.weight() == 0) {
          d.monomials.push_back("1");
          continue;
        }
        std::string label;
        // Parts descend, so equal parts are adjacent.
        const auto& parts = omega.parts();
        for (std::size_t i = 0; i < parts.size();) {
          std::size_t j = i;
          while (j < parts.size() && parts[j] == parts[i]) ++j;
          if (!label.empty()) label += "*";
          label += "y" + std::to_string(4 * parts[i]);
          if (j - i > 1) label += "^" + std::to_string(j - i);
          i = j;
        }
        d.monomials.push_back(label);
      }
    }
    d.group = W.w().power(static_cast<int>(d.monomials.size()));
    out.push_back(d);
  }
  return out;
}

std::vector<IntroRow> intro_table(const FieldDescriptor& k) {
  std::vector<IntroRow> rows;
  for (int n = 0; n <= 9; ++n) {
    MSLAnswer a = msl_diagonal(k, n, 10);
    rows.push_back({n, a.group, a.symbolic});
  }
  return rows;
}

CheckResult msl_quotient_check(const FieldDescriptor& k, int n) {
  // Present the diagonal as (I^p block) + (MSU block) and kill the I-block generators.
  FGAbGroup ideal = i_msl(k, n);
  FGAbGroup msu = msu_additive(n).localized(k.inverted_primes());
  IntMatrix P = ideal.direct_sum(msu).presentation();
  const std::size_t ri = ideal.presentation().rows();
  IntMatrix kill(P.rows(), ri);
  for (std::size_t i = 0; i < ri; ++i) kill(i, i) = 1;
  IntMatrix rel = P.cols() ? (ri ? P.hconcat(kill) : P) : kill;
  FGAbGroup q = cokernel(rel, k.inverted_primes());
  FGAbGroup expected = msu_additive(n).localized(k.inverted_primes());
  CheckResult r;
  r.pass = q == expected && diagonal_group(k, n) == ideal.direct_sum(msu);
  r.detail = "n=" + std::to_string(n) + " quotient " + q.to_string() + " vs MSU " + expected.to_string();
  return r;
}

CheckResult msl_away_from_two_check(const FieldDescriptor& k, int n) {
  std::set<long> inv = k.inverted_primes();
  inv.insert(2);
  FGAbGroup lhs = diagonal_group(k, n).localized(inv);
  int free = static_cast<int>(partition_count(n) - partition_count(n - 1));
  FGAbGroup rhs = FGAbGroup::free(free, inv).direct_sum(WittRing(k).w().power(p_quarter(n)).localized(inv));
  CheckResult r;
  r.pass = lhs == rhs;
  r.detail = "n=" + std::to_string(n) + " " + lhs.to_string() + " vs " + rhs.to_string();
  return r;
}

CheckResult msl_eta_extension_check(const FieldDescriptor& k, int n) {
  WittRing W(k);
  int p = p_quarter(n);
  CheckResult r;
  FGAbGroup off = p ? msl_off_diagonal(k, n, 1) : FGAbGroup::trivial(k.inverted_primes());
  FGAbGroup presented = p ? block_cokernel(W, p, false) : FGAbGroup::trivial(k.inverted_primes());
  FGAbGroup quotient = p ? block_cokernel(W, p, true) : FGAbGroup::trivial(k.inverted_primes());
  FGAbGroup expected(0, std::vector<Integer>(static_cast<std::size_t>(p), Integer(2)), k.inverted_primes());
  r.pass = off == presented && quotient == expected;
  r.detail = "n=" + std::to_string(n) + " W^p=" + off.to_string() + " W^p/I^p=" + quotient.to_string();
  return r;
}

}  // namespace msl
