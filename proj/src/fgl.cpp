#include "msl/fgl.hpp"

#include <stdexcept>

namespace msl {

namespace {

std::vector<std::string> b_names(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back("b" + std::to_string(i));
  return out;
}

// b-index of a generator name, 0 when it is not a b.
int b_index(const std::string& name) {
  if (name.size() < 2 || name[0] != 'b') return 0;
  for (std::size_t i = 1; i < name.size(); ++i)
    if (name[i] < '0' || name[i] > '9') return 0;
  return std::stoi(name.substr(1));
}

void require_integral(const GradedPoly& p, const char* what) {
  if (!p.is_integral()) throw std::logic_error(std::string(what) + ": non-integral coefficient");
}

}  // namespace

FGLContext::FGLContext(int truncation)
    : n_(truncation),
      univariate_(series_ring({"x"})),
      bivariate_(series_ring({"x", "y"})),
      exp_(univariate_) {
  if (truncation < 1) throw std::invalid_argument("FGLContext: truncation must be positive");
  Monomial m(univariate_->size(), 0);
  m[0] = 1;
  exp_.add_term(m, 1);
  for (int j = 1; j <= n_; ++j) {
    Monomial t(univariate_->size(), 0);
    t[0] = static_cast<std::uint16_t>(j + 1);
    t[static_cast<std::size_t>(j)] = 1;
    exp_.add_term(t, 1);
  }
}

RingPtr FGLContext::series_ring(const std::vector<std::string>& vars) const {
  std::vector<std::string> names = vars;
  std::vector<int> weights(vars.size(), 1);
  for (auto& b : b_names(n_)) {
    names.push_back(b);
    weights.push_back(0);
  }
  return PolyRing::make(names, weights, n_ + 1);
}

RingPtr FGLContext::chern_ring(int k, int max_weight) const {
  std::vector<std::string> names;
  std::vector<int> weights;
  for (int i = 1; i <= k; ++i) {
    names.push_back("c" + std::to_string(i));
    weights.push_back(i);
  }
  for (auto& b : b_names(n_)) {
    names.push_back(b);
    weights.push_back(0);
  }
  return PolyRing::make(names, weights, max_weight);
}

const GradedPoly& FGLContext::exp() const { return exp_; }

const GradedPoly& FGLContext::log() const {
  std::call_once(log_once_, [this] {
    GradedPoly g = invert_series_compositional(exp_, 0);
    require_integral(g, "log");
    log_ = std::move(g);
  });
  return *log_;
}

PartitionPoly FGLContext::log_coefficient(int n) const {
  if (n < 0 || n > n_) throw std::out_of_range("log_coefficient: degree outside truncation");
  return to_partition_poly(log().coefficient_of_power(0, n + 1));
}

const GradedPoly& FGLContext::formal_group() const {
  std::call_once(group_once_, [this] {
    GradedPoly lx = log().map_to(bivariate_);
    GradedPoly ly = lx.swap_generators(0, 1);
    GradedPoly e = exp_.map_to(bivariate_);
    GradedPoly f = e.substitute(0, lx + ly);
    require_integral(f, "formal group");
    group_ = std::move(f);
  });
  return *group_;
}

const GradedPoly& FGLContext::formal_inverse() const {
  std::call_once(inverse_once_, [this] {
    GradedPoly chi = exp_.substitute(0, -log());
    require_integral(chi, "formal inverse");
    inverse_ = std::move(chi);
  });
  return *inverse_;
}

GradedPoly FGLContext::formal_sum(int k) const {
  if (k < 1) throw std::invalid_argument("formal_sum: need at least one variable");
  std::vector<std::string> vars;
  for (int i = 1; i <= k; ++i) vars.push_back("x" + std::to_string(i));
  RingPtr ring = series_ring(vars);
  GradedPoly total(ring);
  for (int i = 0; i < k; ++i) total += log().map_to(ring, {{"x", vars[static_cast<std::size_t>(i)]}});
  GradedPoly e = exp_.map_to(ring, {{"x", "x1"}});
  GradedPoly f = e.substitute(0, total);
  require_integral(f, "formal sum");
  return f;
}

GradedPoly FGLContext::formal_sum_nested(int k) const {
  if (k < 1) throw std::invalid_argument("formal_sum_nested: need at least one variable");
  std::vector<std::string> vars;
  for (int i = 1; i <= k; ++i) vars.push_back("x" + std::to_string(i));
  RingPtr ring = series_ring(vars);
  std::vector<std::string> wide = vars;
  wide.push_back("y");
  RingPtr work = series_ring(wide);
  const std::size_t y = static_cast<std::size_t>(k);
  GradedPoly acc = GradedPoly::generator(work, static_cast<std::size_t>(k - 1));
  for (int i = k - 2; i >= 0; --i) {
    GradedPoly f = formal_group().map_to(work, {{"x", vars[static_cast<std::size_t>(i)]}});
    acc = f.substitute(y, acc);
  }
  return acc.map_to(ring);
}

GradedPoly FGLContext::c1_determinant_class(int k, bool dual) const {
  GradedPoly s = formal_sum(k);
  if (dual) {
    GradedPoly chi = formal_inverse().map_to(s.ring(), {{"x", "x1"}});
    s = chi.substitute(0, s);
  }
  std::vector<std::size_t> vars;
  std::vector<std::string> cs;
  for (int i = 0; i < k; ++i) {
    vars.push_back(static_cast<std::size_t>(i));
    cs.push_back("c" + std::to_string(i + 1));
  }
  GradedPoly out = elementary_symmetric_rewrite(s, vars, chern_ring(k, n_ + 1), cs);
  require_integral(out, "c1 determinant class");
  return out;
}

GradedPoly FGLContext::stable_determinant_class(bool dual, int max_weight) const {
  if (max_weight > n_ + 1) throw std::out_of_range("stable_determinant_class: weight beyond truncation");
  const int w = max_weight;
  RingPtr ring = chern_ring(w, w);
  // Newton: p_j in terms of the c_i = e_i.
  std::vector<GradedPoly> c(static_cast<std::size_t>(w) + 1, GradedPoly(ring));
  for (int i = 1; i <= w; ++i) c[static_cast<std::size_t>(i)] = GradedPoly::generator(ring, static_cast<std::size_t>(i - 1));
  std::vector<GradedPoly> p(static_cast<std::size_t>(w) + 1, GradedPoly(ring));
  for (int j = 1; j <= w; ++j) {
    GradedPoly acc = c[static_cast<std::size_t>(j)].scale(j * ((j % 2) ? 1 : -1));
    for (int i = 1; i < j; ++i) {
      int sign = ((j - 1 + i) % 2) ? -1 : 1;
      acc += (c[static_cast<std::size_t>(j - i)] * p[static_cast<std::size_t>(i)]).scale(sign);
    }
    p[static_cast<std::size_t>(j)] = acc;
  }
  // Sum of log x_i = sum_j m_{j-1} p_j.
  GradedPoly total(ring);
  for (int j = 1; j <= w; ++j) total += from_partition_poly(log_coefficient(j - 1), ring) * p[static_cast<std::size_t>(j)];
  if (dual) total = -total;
  // exp applied to `total`, which has c-weight >= 1.
  GradedPoly result(ring);
  GradedPoly power = GradedPoly::constant(ring, 1);
  for (int j = 0; j < w; ++j) {
    power = power * total;
    if (power.is_zero()) break;
    result += power * from_partition_poly(PartitionPoly::generator(j), ring);
  }
  require_integral(result, "stable determinant class");
  return result;
}

PartitionPoly to_partition_poly(const GradedPoly& p) {
  const RingPtr& ring = p.ring();
  std::vector<int> idx(ring->size());
  for (std::size_t i = 0; i < ring->size(); ++i) idx[i] = b_index(ring->name(i));
  PartitionPoly out;
  for (const auto& [m, c] : p.terms()) {
    if (!is_integral(c)) throw std::logic_error("to_partition_poly: non-integral coefficient");
    std::vector<int> parts;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (idx[i] == 0) throw std::invalid_argument("to_partition_poly: non-b generator " + ring->name(i));
      for (int r = 0; r < m[i]; ++r) parts.push_back(idx[i]);
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    out.add_term(Partition(parts), c.get_num());
  }
  return out;
}

GradedPoly from_partition_poly(const PartitionPoly& p, const RingPtr& ring) {
  GradedPoly out(ring);
  for (const auto& [part, c] : p.terms()) {
    Monomial m(ring->size(), 0);
    for (int v : part.parts()) m[ring->require("b" + std::to_string(v))] += 1;
    out.add_term(m, Rational(c));
  }
  return out;
}

int b_weight(const GradedPoly& p, const Monomial& m) {
  const RingPtr& ring = p.ring();
  int w = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    int bi = b_index(ring->name(i));
    w += m[i] * (bi > 0 ? bi : ring->weight(i));
  }
  return w;
}

}  // namespace msl
