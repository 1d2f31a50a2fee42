#include "msl/graded_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace msl {

PolyRing::PolyRing(std::vector<std::string> names, std::vector<int> weights, int truncation)
    : names_(std::move(names)), weights_(std::move(weights)), truncation_(truncation) {
  if (names_.size() != weights_.size()) throw std::invalid_argument("PolyRing: names/weights size mismatch");
  if (truncation_ < 0) throw std::invalid_argument("PolyRing: negative truncation");
  for (int w : weights_)
    if (w < 0) throw std::invalid_argument("PolyRing: negative weight");
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw std::invalid_argument("PolyRing: duplicate generator " + names_[i]);
}

std::optional<std::size_t> PolyRing::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t PolyRing::require(const std::string& name) const {
  auto i = index_of(name);
  if (!i) throw std::invalid_argument("PolyRing: unknown generator " + name);
  return *i;
}

GradedPoly GradedPoly::constant(RingPtr ring, const Rational& c) {
  GradedPoly p(ring);
  p.add_term(Monomial(ring->size(), 0), c);
  return p;
}

GradedPoly GradedPoly::generator(RingPtr ring, std::size_t index) {
  if (index >= ring->size()) throw std::out_of_range("GradedPoly::generator");
  Monomial m(ring->size(), 0);
  m[index] = 1;
  GradedPoly p(ring);
  p.add_term(m, 1);
  return p;
}

GradedPoly GradedPoly::generator(RingPtr ring, const std::string& name) {
  std::size_t i = ring->require(name);
  return generator(std::move(ring), i);
}

GradedPoly GradedPoly::monomial(RingPtr ring, const Monomial& m, const Rational& c) {
  if (m.size() != ring->size()) throw std::invalid_argument("GradedPoly::monomial: wrong arity");
  GradedPoly p(ring);
  p.add_term(m, c);
  return p;
}

Rational GradedPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int GradedPoly::degree_of(const Monomial& m) const {
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += ring_->weight(i) * m[i];
  return d;
}

std::optional<int> GradedPoly::order() const {
  std::optional<int> best;
  for (const auto& [m, c] : terms_) {
    int d = degree_of(m);
    if (!best || d < *best) best = d;
  }
  return best;
}

void GradedPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0 || degree_of(m) > ring_->truncation()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void GradedPoly::require_same_ring(const GradedPoly& other) const {
  if (ring_ != other.ring_ && !(*ring_ == *other.ring_))
    throw std::invalid_argument("GradedPoly: generator weights or truncation bound differ");
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& other) {
  require_same_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& other) {
  require_same_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

GradedPoly GradedPoly::operator+(const GradedPoly& other) const {
  GradedPoly r = *this;
  r += other;
  return r;
}

GradedPoly GradedPoly::operator-(const GradedPoly& other) const {
  GradedPoly r = *this;
  r -= other;
  return r;
}

GradedPoly GradedPoly::operator-() const { return scale(-1); }

GradedPoly GradedPoly::scale(const Rational& c) const {
  GradedPoly r(ring_);
  if (c == 0) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

GradedPoly GradedPoly::operator*(const GradedPoly& other) const {
  require_same_ring(other);
  GradedPoly r(ring_);
  const int bound = ring_->truncation();
  std::vector<std::pair<const Monomial*, int>> rhs;
  rhs.reserve(other.terms_.size());
  for (const auto& [m, c] : other.terms_) rhs.emplace_back(&m, degree_of(m));
  Monomial prod(ring_->size());
  for (const auto& [ma, ca] : terms_) {
    int da = degree_of(ma);
    auto itb = other.terms_.begin();
    for (std::size_t k = 0; k < rhs.size(); ++k, ++itb) {
      if (da + rhs[k].second > bound) continue;
      const Monomial& mb = *rhs[k].first;
      for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = static_cast<std::uint16_t>(ma[i] + mb[i]);
      Rational c = ca * itb->second;
      auto [it, inserted] = r.terms_.try_emplace(prod, c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

GradedPoly GradedPoly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("GradedPoly::pow: negative exponent");
  GradedPoly result = constant(ring_, 1);
  GradedPoly base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

bool GradedPoly::operator==(const GradedPoly& other) const {
  require_same_ring(other);
  return terms_ == other.terms_;
}

GradedPoly GradedPoly::homogeneous_part(int degree) const {
  GradedPoly r(ring_);
  for (const auto& [m, c] : terms_)
    if (degree_of(m) == degree) r.terms_.emplace(m, c);
  return r;
}

GradedPoly GradedPoly::coefficient_of_power(std::size_t var, int power) const {
  GradedPoly r(ring_);
  for (const auto& [m, c] : terms_) {
    if (m[var] != power) continue;
    Monomial k = m;
    k[var] = 0;
    r.terms_.emplace(k, c);
  }
  return r;
}

int GradedPoly::max_exponent(std::size_t var) const {
  int e = 0;
  for (const auto& [m, c] : terms_) e = std::max<int>(e, m[var]);
  return e;
}

GradedPoly GradedPoly::substitute(std::size_t var, const GradedPoly& value) const {
  require_same_ring(value);
  int top = max_exponent(var);
  GradedPoly result(ring_);
  GradedPoly power = constant(ring_, 1);
  for (int k = 0; k <= top; ++k) {
    if (k > 0) power = power * value;
    GradedPoly coeff = coefficient_of_power(var, k);
    if (!coeff.is_zero()) result += coeff * power;
  }
  return result;
}

GradedPoly GradedPoly::map_to(const RingPtr& target, const std::map<std::string, std::string>& rename) const {
  std::vector<std::optional<std::size_t>> where(ring_->size());
  for (std::size_t i = 0; i < ring_->size(); ++i) {
    auto r = rename.find(ring_->name(i));
    where[i] = target->index_of(r == rename.end() ? ring_->name(i) : r->second);
  }
  GradedPoly r(target);
  for (const auto& [m, c] : terms_) {
    Monomial t(target->size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!where[i]) throw std::invalid_argument("GradedPoly::map_to: generator " + ring_->name(i) + " missing");
      t[*where[i]] = m[i];
    }
    r.add_term(t, c);
  }
  return r;
}

GradedPoly GradedPoly::swap_generators(std::size_t a, std::size_t b) const {
  GradedPoly r(ring_);
  for (const auto& [m, c] : terms_) {
    Monomial t = m;
    std::swap(t[a], t[b]);
    r.add_term(t, c);
  }
  return r;
}

bool GradedPoly::is_integral() const {
  for (const auto& [m, c] : terms_)
    if (!msl::is_integral(c)) return false;
  return true;
}

std::string GradedPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) out << "-";
    } else {
      out << (a < 0 ? " - " : " + ");
    }
    first = false;
    a = a < 0 ? Rational(-a) : a;
    bool unit_monomial = std::all_of(m.begin(), m.end(), [](auto e) { return e == 0; });
    bool print_coeff = unit_monomial || a != 1;
    if (print_coeff) out << a.get_str();
    bool need_star = print_coeff;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (need_star) out << "*";
      out << ring_->name(i);
      if (m[i] > 1) out << "^" << m[i];
      need_star = true;
    }
  }
  return out.str();
}

namespace {

void require_vanishing_at_zero(const GradedPoly& f, std::size_t var, const char* what) {
  for (const auto& [m, c] : f.terms())
    if (m[var] == 0) throw std::invalid_argument(std::string(what) + ": series has a nonzero constant term");
}

}  // namespace

GradedPoly compose_series(const GradedPoly& f, const GradedPoly& g, std::size_t var) {
  require_vanishing_at_zero(f, var, "compose_series");
  require_vanishing_at_zero(g, var, "compose_series");
  return f.substitute(var, g);
}

GradedPoly invert_series_compositional(const GradedPoly& f, std::size_t var) {
  require_vanishing_at_zero(f, var, "invert_series_compositional");
  const RingPtr& ring = f.ring();
  GradedPoly x = GradedPoly::generator(ring, var);
  GradedPoly linear = f.coefficient_of_power(var, 1);
  if (!(linear == GradedPoly::constant(ring, 1)))
    throw std::invalid_argument("invert_series_compositional: leading coefficient must be 1");
  if (ring->weight(var) <= 0) throw std::invalid_argument("invert_series_compositional: variable needs positive weight");
  // g <- g - (f(g) - x) gains at least one order per round.
  GradedPoly g = x;
  int rounds = ring->truncation() / ring->weight(var) + 1;
  for (int r = 0; r < rounds; ++r) {
    GradedPoly err = f.substitute(var, g) - x;
    if (err.is_zero()) break;
    g -= err;
  }
  return g;
}

GradedPoly reciprocal(const GradedPoly& f) {
  const RingPtr& ring = f.ring();
  GradedPoly low = f.homogeneous_part(0);
  Rational c0 = f.constant_term();
  if (c0 == 0 || low.size() != 1) throw std::invalid_argument("reciprocal: constant term is not a unit");
  GradedPoly u = f.scale(1 / c0) - GradedPoly::constant(ring, 1);
  // 1/(1+u) = sum (-u)^k; u has positive order so the sum terminates.
  GradedPoly result = GradedPoly::constant(ring, 1);
  GradedPoly term = GradedPoly::constant(ring, 1);
  GradedPoly neg_u = -u;
  for (int k = 1; k <= ring->truncation(); ++k) {
    term = term * neg_u;
    if (term.is_zero()) break;
    result += term;
  }
  return result.scale(1 / c0);
}

GradedPoly elementary_symmetric(const RingPtr& ring, const std::vector<std::size_t>& vars, int k) {
  // e_k via the generating product prod (1 + x_i t), coefficientwise.
  std::vector<GradedPoly> e(static_cast<std::size_t>(std::max(k, 0)) + 1, GradedPoly(ring));
  if (k < 0) return GradedPoly(ring);
  e[0] = GradedPoly::constant(ring, 1);
  for (std::size_t v : vars) {
    GradedPoly x = GradedPoly::generator(ring, v);
    for (int j = k; j >= 1; --j) e[static_cast<std::size_t>(j)] += e[static_cast<std::size_t>(j - 1)] * x;
  }
  return e[static_cast<std::size_t>(k)];
}

GradedPoly elementary_symmetric_rewrite(const GradedPoly& f, const std::vector<std::size_t>& vars,
                                        const RingPtr& target, const std::vector<std::string>& c_names) {
  const RingPtr& ring = f.ring();
  const std::size_t k = vars.size();
  if (c_names.size() != k) throw std::invalid_argument("elementary_symmetric_rewrite: need one c per variable");
  for (std::size_t a = 0; a + 1 < k; ++a)
    if (!(f.swap_generators(vars[a], vars[a + 1]) == f))
      throw std::invalid_argument("elementary_symmetric_rewrite: input is not symmetric");

  std::vector<bool> is_var(ring->size(), false);
  for (std::size_t v : vars) is_var[v] = true;
  std::vector<std::size_t> c_index;
  for (const auto& name : c_names) c_index.push_back(target->require(name));

  std::vector<GradedPoly> e;
  for (std::size_t j = 1; j <= k; ++j) e.push_back(elementary_symmetric(ring, vars, static_cast<int>(j)));

  GradedPoly rest = f;
  GradedPoly out(target);
  while (!rest.is_zero()) {
    // Leading x-exponent in lex order on (x_1, ..., x_k).
    std::vector<int> lead;
    for (const auto& [m, c] : rest.terms()) {
      std::vector<int> ex;
      for (std::size_t v : vars) ex.push_back(m[v]);
      if (lead.empty() || ex > lead) lead = ex;
    }
    for (std::size_t a = 0; a + 1 < k; ++a)
      if (lead[a] < lead[a + 1]) throw std::logic_error("elementary_symmetric_rewrite: lost symmetry");
    // Coefficient: polynomial in the non-x generators.
    GradedPoly coeff(ring);
    for (const auto& [m, c] : rest.terms()) {
      bool match = true;
      for (std::size_t a = 0; a < k && match; ++a) match = m[vars[a]] == lead[a];
      if (!match) continue;
      Monomial r = m;
      for (std::size_t v : vars) r[v] = 0;
      coeff.add_term(r, c);
    }
    // x^lead is the leading term of prod e_j^{lead_j - lead_{j+1}}.
    GradedPoly eprod = coeff;
    Monomial cmono(target->size(), 0);
    for (std::size_t a = 0; a < k; ++a) {
      int power = lead[a] - (a + 1 < k ? lead[a + 1] : 0);
      if (power > 0) eprod = eprod * e[a].pow(power);
      cmono[c_index[a]] = static_cast<std::uint16_t>(power);
    }
    rest -= eprod;
    GradedPoly mapped = coeff.map_to(target) * GradedPoly::monomial(target, cmono);
    out += mapped;
  }
  return out;
}

GradedPoly substitute_elementary(const GradedPoly& g, const std::vector<std::string>& c_names, const RingPtr& target,
                                 const std::vector<std::size_t>& vars) {
  const RingPtr& ring = g.ring();
  std::vector<std::size_t> c_index;
  for (const auto& name : c_names) c_index.push_back(ring->require(name));
  std::vector<GradedPoly> e;
  for (std::size_t j = 1; j <= c_names.size(); ++j) e.push_back(elementary_symmetric(target, vars, static_cast<int>(j)));
  GradedPoly out(target);
  for (const auto& [m, c] : g.terms()) {
    Monomial rest = m;
    for (std::size_t idx : c_index) rest[idx] = 0;
    GradedPoly piece = GradedPoly::monomial(ring, rest, c).map_to(target);
    for (std::size_t a = 0; a < c_index.size(); ++a)
      if (m[c_index[a]] > 0) piece = piece * e[a].pow(m[c_index[a]]);
    out += piece;
  }
  return out;
}

}  // namespace msl
