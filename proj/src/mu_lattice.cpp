#include "msl/mu_lattice.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace msl {

MUClass MUClass::zero(int n) {
  if (n < 0) return MUClass{n, {}};
  return MUClass{n, std::vector<Integer>(partitions_of(n).size())};
}

MUClass MUClass::from_hurewicz(const PartitionPoly& h, int n) {
  MUClass x = zero(n);
  for (const auto& [p, c] : h.terms()) {
    if (p.weight() != n) throw std::invalid_argument("MUClass: Hurewicz image is not homogeneous of weight " + std::to_string(n));
    x.coords[static_cast<std::size_t>(partition_index(p))] = c;
  }
  return x;
}

PartitionPoly MUClass::hurewicz() const {
  PartitionPoly h;
  if (degree < 0) return h;
  const auto& parts = partitions_of(degree);
  for (std::size_t i = 0; i < coords.size(); ++i) h.add_term(parts[i], coords[i]);
  return h;
}

bool MUClass::is_zero() const {
  for (const auto& c : coords)
    if (c != 0) return false;
  return true;
}

MUClass MUClass::operator+(const MUClass& o) const {
  if (degree != o.degree) throw std::invalid_argument("MUClass: adding classes of different degree");
  MUClass r = *this;
  for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
  return r;
}

MUClass MUClass::operator-(const MUClass& o) const { return *this + (-o); }

MUClass MUClass::operator-() const { return scale(-1); }

MUClass MUClass::scale(const Integer& c) const {
  MUClass r = *this;
  for (auto& v : r.coords) v *= c;
  return r;
}

MUClass product(const MUClass& a, const MUClass& b) {
  return MUClass::from_hurewicz(a.hurewicz() * b.hurewicz(), a.degree + b.degree);
}

Integer s_number(const MUClass& x) {
  if (x.degree < 1) throw std::invalid_argument("s_number: degree must be positive");
  return -x.coords[static_cast<std::size_t>(partition_index(Partition{x.degree}))];
}

namespace {

// Components of 1 / (1 + c_1 + c_2 + ...) up to weight n, as polynomials in the c_i.
const std::vector<PartitionPoly>& inverse_total_class(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<PartitionPoly>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<PartitionPoly> inv(static_cast<std::size_t>(n) + 1);
  inv[0] = PartitionPoly::one();
  for (int j = 1; j <= n; ++j) {
    PartitionPoly acc;
    for (int k = 1; k <= j; ++k) acc += PartitionPoly::generator(k) * inv[static_cast<std::size_t>(j - k)];
    inv[static_cast<std::size_t>(j)] = -acc;
  }
  return cache.emplace(n, std::move(inv)).first->second;
}

// Numbers of the inverse bundle: c_mu(-E) from the numbers c_mu(E).
ChernNumbers invert_numbers(const ChernNumbers& numbers, int n) {
  const auto& inv = inverse_total_class(n);
  ChernNumbers out;
  for (const Partition& mu : partitions_of(n)) {
    PartitionPoly poly = PartitionPoly::one();
    for (int part : mu.parts()) poly = poly * inv[static_cast<std::size_t>(part)];
    Integer total = 0;
    for (const auto& [p, c] : poly.terms()) total += c * numbers.at(p);
    out[mu] = total;
  }
  return out;
}

void require_complete(const ChernNumbers& numbers, int n) {
  for (const Partition& mu : partitions_of(n))
    if (!numbers.count(mu)) throw std::invalid_argument("Chern numbers: missing entry for " + mu.to_string());
}

Integer binomial(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

MUClass chern_numbers_to_hurewicz(const ChernNumbers& tangent, int n) {
  require_complete(tangent, n);
  ChernNumbers normal = invert_numbers(tangent, n);
  const auto& parts = partitions_of(n);
  const IntMatrix& B = monomial_to_elementary(n);
  MUClass x = MUClass::zero(n);
  for (std::size_t j = 0; j < parts.size(); ++j)
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (B(i, j) != 0) x.coords[j] += B(i, j) * normal.at(parts[i]);
  return x;
}

Integer normal_chern_number(const MUClass& x, const Partition& omega) {
  if (omega.weight() != x.degree) throw std::invalid_argument("normal_chern_number: degree mismatch");
  const IntMatrix& A = elementary_to_monomial(x.degree);
  std::size_t j = static_cast<std::size_t>(partition_index(omega));
  Integer total = 0;
  for (std::size_t i = 0; i < x.coords.size(); ++i) total += A(i, j) * x.coords[i];
  return total;
}

ChernNumbers hurewicz_to_chern_numbers(const MUClass& x) {
  ChernNumbers normal;
  for (const Partition& mu : partitions_of(x.degree)) normal[mu] = normal_chern_number(x, mu);
  return invert_numbers(normal, x.degree);
}

ChernNumbers cpn_chern_numbers(int n) {
  ChernNumbers out;
  for (const Partition& mu : partitions_of(n)) {
    Integer v = 1;
    for (int part : mu.parts()) v *= binomial(n + 1, part);
    out[mu] = v;
  }
  return out;
}

ChernNumbers milnor_hypersurface_chern_numbers(int i, int j) {
  if (i < 1 || j < i) throw std::invalid_argument("milnor hypersurface: need 1 <= i <= j");
  const int n = i + j - 1;
  RingPtr ring = PolyRing::make({"x", "y"}, {1, 1}, i + j);
  GradedPoly x = GradedPoly::generator(ring, 0);
  GradedPoly y = GradedPoly::generator(ring, 1);
  GradedPoly one = GradedPoly::constant(ring, 1);
  GradedPoly total = (one + x).pow(i + 1) * (one + y).pow(j + 1) * reciprocal(one + x + y);
  std::vector<GradedPoly> c;
  for (int k = 0; k <= n; ++k) c.push_back(total.homogeneous_part(k));
  ChernNumbers out;
  Monomial top{static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j)};
  for (const Partition& mu : partitions_of(n)) {
    GradedPoly cls = x + y;
    for (int part : mu.parts()) cls = cls * c[static_cast<std::size_t>(part)];
    Rational v = cls.coefficient(top);
    out[mu] = v.get_num();
  }
  return out;
}

MUClass cpn_class(const FGLContext& ctx, int n) {
  if (n < 0 || n > ctx.truncation()) throw std::out_of_range("cpn_class: degree outside truncation");
  if (n == 0) return MUClass::unit();
  return MUClass::from_hurewicz(ctx.log_coefficient(n).scale(n + 1), n);
}

MUClass milnor_hypersurface_class(const FGLContext& ctx, int i, int j) {
  if (i < 1 || j < i || i + j - 1 > ctx.truncation())
    throw std::out_of_range("milnor_hypersurface_class: indices out of range");
  return chern_numbers_to_hurewicz(milnor_hypersurface_chern_numbers(i, j), i + j - 1);
}

std::vector<CatalogEntry> generator_catalog(const FGLContext& ctx, int n) {
  std::vector<CatalogEntry> out;
  out.push_back({"CP" + std::to_string(n), cpn_class(ctx, n)});
  for (int i = 1; 2 * i <= n + 1; ++i) {
    int j = n + 1 - i;
    out.push_back({"H" + std::to_string(i) + "_" + std::to_string(j), milnor_hypersurface_class(ctx, i, j)});
  }
  return out;
}

Integer milnor_target(int n) {
  auto f = factorize(Integer(n + 1));
  return f.size() == 1 ? f.front().first : Integer(1);
}

namespace {

std::string term_text(const Integer& c, const std::string& label) {
  if (c == 1) return label;
  if (c == -1) return "-" + label;
  return c.get_str() + "*" + label;
}

std::string combination_text(const std::vector<std::pair<Integer, std::string>>& terms) {
  std::string out;
  for (const auto& [c, label] : terms) {
    if (c == 0) continue;
    std::string t = term_text(c, label);
    if (out.empty()) {
      out = t;
    } else if (t[0] == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out;
}

}  // namespace

MUBasis::MUBasis(std::shared_ptr<const FGLContext> ctx, int max_degree) : ctx_(std::move(ctx)), max_degree_(max_degree) {
  if (max_degree_ < 0 || max_degree_ > ctx_->truncation())
    throw std::out_of_range("MUBasis: degree bound outside truncation");
  generators_.push_back(MUClass::unit());
  recipes_.push_back("1");
  for (int n = 1; n <= max_degree_; ++n) {
    auto catalog = generator_catalog(*ctx_, n);
    const Integer target = milnor_target(n);
    std::vector<Integer> s;
    for (const auto& e : catalog) s.push_back(s_number(e.cls));

    std::optional<MUClass> chosen;
    std::string recipe;
    for (std::size_t a = 0; a < catalog.size() && !chosen; ++a)
      if (abs(s[a]) == target) {
        chosen = catalog[a].cls;
        recipe = catalog[a].label;
      }
    for (std::size_t a = 0; a < catalog.size() && !chosen; ++a)
      for (std::size_t b = a + 1; b < catalog.size() && !chosen; ++b) {
        Integer u, v;
        if (extended_gcd(s[a], s[b], u, v) == target) {
          chosen = catalog[a].cls.scale(u) + catalog[b].cls.scale(v);
          recipe = combination_text({{u, catalog[a].label}, {v, catalog[b].label}});
        }
      }
    if (!chosen) {
      // Running extended gcd over the whole catalog.
      MUClass acc = catalog[0].cls;
      Integer g = s[0];
      std::vector<Integer> coeff(catalog.size());
      coeff[0] = 1;
      for (std::size_t a = 1; a < catalog.size(); ++a) {
        Integer u, v;
        Integer ng = extended_gcd(g, s[a], u, v);
        acc = acc.scale(u) + catalog[a].cls.scale(v);
        for (std::size_t t = 0; t < a; ++t) coeff[t] *= u;
        coeff[a] = v;
        g = ng;
      }
      if (g != target) {
        std::ostringstream msg;
        msg << "MUBasis: degree " << n << " catalog reaches |s_n| = " << g << ", required " << target
            << "; the generator catalog must be enlarged";
        throw std::runtime_error(msg.str());
      }
      chosen = acc;
      std::vector<std::pair<Integer, std::string>> terms;
      for (std::size_t a = 0; a < catalog.size(); ++a) terms.emplace_back(coeff[a], catalog[a].label);
      recipe = combination_text(terms);
    }
    generators_.push_back(*chosen);
    recipes_.push_back(recipe);
  }

  for (int n = 0; n <= max_degree_; ++n) {
    std::vector<MUClass> basis;
    for (const Partition& omega : partitions_of(n)) {
      MUClass x = MUClass::unit();
      for (int part : omega.parts()) x = product(x, generators_[static_cast<std::size_t>(part)]);
      basis.push_back(std::move(x));
    }
    std::vector<std::vector<Integer>> cols;
    for (const auto& x : basis) cols.push_back(x.coords);
    IntMatrix M = IntMatrix::from_columns(cols, cols.size());
    auto inv = inverse(to_rational(M));
    if (!inv) throw std::runtime_error("MUBasis: x-monomials are linearly dependent in degree " + std::to_string(n));
    bases_.push_back(std::move(basis));
    matrices_.push_back(std::move(M));
    inverses_.push_back(std::move(*inv));
  }

  // Every catalog class must lie in the span; since each x_k is an integral
  // combination of catalog classes this makes L_n the span of all catalog products.
  for (int n = 1; n <= max_degree_; ++n)
    for (const auto& e : generator_catalog(*ctx_, n))
      if (!contains(e.cls))
        throw std::runtime_error("MUBasis: catalog class " + e.label + " is not in the x-monomial lattice");
}

std::string MUBasis::monomial_label(const Partition& omega) {
  if (omega.empty()) return "1";
  std::string out;
  int i = 0;
  while (i < omega.length()) {
    int v = omega[i];
    int m = omega.multiplicity(v);
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(v);
    if (m > 1) out += "^" + std::to_string(m);
    i += m;
  }
  return out;
}

std::optional<std::vector<Integer>> MUBasis::coordinates(const MUClass& x) const {
  if (x.degree < 0 || x.degree > max_degree_) throw std::out_of_range("MUBasis: degree outside basis range");
  const RatMatrix& inv = inverses_[static_cast<std::size_t>(x.degree)];
  std::vector<Integer> out(x.coords.size());
  for (std::size_t i = 0; i < inv.rows(); ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < inv.cols(); ++j)
      if (x.coords[j] != 0) acc += inv(i, j) * x.coords[j];
    if (!is_integral(acc)) return std::nullopt;
    out[i] = acc.get_num();
  }
  return out;
}

std::vector<Integer> MUBasis::require_coordinates(const MUClass& x) const {
  auto c = coordinates(x);
  if (!c) throw std::logic_error("MUBasis: class is not in the lattice");
  return *c;
}

MUClass MUBasis::from_coordinates(int n, const std::vector<Integer>& c) const {
  const IntMatrix& M = matrices_.at(static_cast<std::size_t>(n));
  if (c.size() != M.cols()) throw std::invalid_argument("MUBasis: coordinate vector has wrong length");
  return MUClass{n, M * c};
}

MUClass MUBasis::multiply(const MUClass& a, const MUClass& b) const {
  if (a.degree + b.degree > max_degree_) throw std::out_of_range("MUBasis::multiply: degree overflow");
  return product(a, b);
}

}  // namespace msl
