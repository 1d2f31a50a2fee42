#include "msl/charnum.hpp"

#include <stdexcept>

namespace msl {

namespace {

ChernNumbers numbers_from_class(const GradedPoly& total, int dim, const Monomial& top, const Integer& scale,
                                const GradedPoly& fundamental) {
  std::vector<GradedPoly> c;
  for (int k = 0; k <= dim; ++k) c.push_back(total.homogeneous_part(k));
  ChernNumbers out;
  for (const Partition& mu : partitions_of(dim)) {
    GradedPoly cls = fundamental;
    for (int part : mu.parts()) cls = cls * c[static_cast<std::size_t>(part)];
    Rational v = cls.coefficient(top) * Rational(scale);
    if (!is_integral(v)) throw std::logic_error("non-integral Chern number");
    out[mu] = v.get_num();
  }
  return out;
}

nlohmann::json numbers_json(const ChernNumbers& c) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [mu, v] : c) j[mu.to_string()] = to_string(v);
  return j;
}

}  // namespace

nlohmann::json VarietyClass::to_json() const {
  nlohmann::json j;
  j["description"] = description;
  j["dimension"] = dimension;
  j["tangent_chern_numbers"] = numbers_json(tangent);
  nlohmann::json normal = nlohmann::json::object();
  for (const Partition& mu : partitions_of(dimension)) normal[mu.to_string()] = to_string(chern_number(cls, mu));
  j["normal_chern_numbers"] = normal;
  if (tangent_class.ring()) j["tangent_class"] = tangent_class.to_string();
  if (calabi_yau) {
    j["calabi_yau"] = *calabi_yau;
    j["calabi_yau_note"] = "symbolic condition only: c_1(T) vanishes in the ambient cohomology model";
  }
  if (dimension >= 1) j["s_number"] = to_string(s_number(cls));
  nlohmann::json h = nlohmann::json::array();
  for (const auto& x : cls.coords) h.push_back(to_string(x));
  j["hurewicz"] = h;
  return j;
}

VarietyClass hypersurface_class(int n, int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("hypersurface: need ambient dimension >= 1 and degree >= 1");
  const int dim = n - 1;
  RingPtr ring = PolyRing::make({"h"}, {1}, dim);
  GradedPoly h = GradedPoly::generator(ring, 0);
  GradedPoly one = GradedPoly::constant(ring, 1);
  // c(T_X) = (1 + h)^{n+1} / (1 + d h), restricted from P^n; h^{n-1} is top on X.
  GradedPoly total = (one + h).pow(n + 1) * reciprocal(one + h.scale(d));
  VarietyClass v;
  v.description = "degree-" + std::to_string(d) + " hypersurface in P^" + std::to_string(n);
  v.dimension = dim;
  v.tangent_class = total;
  // Integration over X is d times the coefficient of h^{n-1}.
  v.tangent = numbers_from_class(total, dim, Monomial{static_cast<std::uint16_t>(dim)}, d, one);
  v.calabi_yau = total.homogeneous_part(1).is_zero();
  v.cls = chern_numbers_to_hurewicz(v.tangent, dim);
  return v;
}

VarietyClass product_projective_class(const std::vector<int>& dims) {
  int dim = 0;
  std::vector<std::string> names;
  Monomial top;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] < 0) throw std::invalid_argument("product_projective_class: negative dimension");
    dim += dims[i];
    names.push_back("h" + std::to_string(i + 1));
    top.push_back(static_cast<std::uint16_t>(dims[i]));
  }
  RingPtr ring = PolyRing::make(names, std::vector<int>(dims.size(), 1), dim);
  GradedPoly one = GradedPoly::constant(ring, 1);
  GradedPoly total = one;
  // Kunneth: c(T) = prod (1 + h_i)^{d_i + 1}; h_i^{d_i + 1} never reaches the top monomial.
  for (std::size_t i = 0; i < dims.size(); ++i) total = total * (one + GradedPoly::generator(ring, i)).pow(dims[i] + 1);
  VarietyClass v;
  v.description = "product of projective spaces";
  for (std::size_t i = 0; i < dims.size(); ++i) v.description += (i ? " x P^" : " P^") + std::to_string(dims[i]);
  v.dimension = dim;
  v.tangent_class = total;
  v.tangent = numbers_from_class(total, dim, top, 1, one);
  v.cls = chern_numbers_to_hurewicz(v.tangent, dim);
  return v;
}

Integer chern_number(const MUClass& x, const Partition& omega) {
  if (omega.weight() != x.degree)
    throw std::invalid_argument("chern_number: |omega| = " + std::to_string(omega.weight()) + " but deg x = " +
                                std::to_string(x.degree));
  return normal_chern_number(x, omega);
}

nlohmann::json GeneratorVerdict::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["s_number"] = to_string(s_number);
  j["required_odd_part"] = to_string(required);
  j["odd_part"] = to_string(odd_part);
  j["verdict"] = pass ? "PASS" : "FAIL";
  j["detail"] = detail;
  return j;
}

GeneratorVerdict generator_check_msu(const ConnerFloyd& cf, const MUClass& x) {
  const int n = x.degree;
  if (n < 2) throw std::invalid_argument("generator_check_msu: degree must be at least 2");
  if (n > cf.max_degree()) throw std::invalid_argument("generator_check_msu: degree exceeds the truncation");
  auto coords = cf.basis().coordinates(x);
  if (!coords) throw std::invalid_argument("generator_check_msu: class is not in pi_*(MU)");
  if (!in_span(cf.cycles_in_lattice(n), *coords))
    throw std::invalid_argument("generator_check_msu: class is not a cycle (not in the image of MSL)");

  GeneratorVerdict v;
  v.n = n;
  v.s_number = s_number(x);
  v.required = 1;
  Integer t = milnor_target(n);
  if (t != 2) v.required = t;
  v.odd_part = abs(v.s_number);
  if (v.odd_part != 0)
    while (v.odd_part % 2 == 0) v.odd_part /= 2;
  v.pass = v.s_number != 0 && v.odd_part == v.required;
  v.detail = "s_" + std::to_string(n) + " = " + to_string(v.s_number) + ", odd part " + to_string(v.odd_part) +
             ", required " + to_string(v.required);
  return v;
}

}  // namespace msl
