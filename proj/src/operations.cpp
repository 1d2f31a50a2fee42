#include "msl/operations.hpp"

#include <mutex>
#include <stdexcept>

namespace msl {

namespace {

// Row omega, column lambda: coefficient of m_lambda in p_1^{n - |omega|} m_omega,
// for all omega with |omega| <= n. Rows follow partitions_of(0), ..., partitions_of(n).
struct P1Table {
  std::vector<Partition> rows;
  std::vector<std::map<std::size_t, Integer>> entries;
};

const P1Table& p1_table(int n) {
  static std::mutex mu;
  static std::map<int, P1Table> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  P1Table t;
  for (int d = 0; d <= n; ++d)
    for (const Partition& omega : partitions_of(d)) {
      std::map<Partition, Integer> cur{{omega, 1}};
      for (int k = d; k < n; ++k) {
        std::map<Partition, Integer> next;
        for (const auto& [lam, c] : cur)
          for (const auto& [nu, m] : p1_times(lam)) next[nu] += c * m;
        cur = std::move(next);
      }
      std::map<std::size_t, Integer> row;
      for (const auto& [lam, c] : cur)
        if (c != 0) row.emplace(static_cast<std::size_t>(partition_index(lam)), c);
      t.rows.push_back(omega);
      t.entries.push_back(std::move(row));
    }
  return cache.emplace(n, std::move(t)).first->second;
}

MUClass land(const PartitionPoly& h, int degree) {
  PartitionPoly top = h.homogeneous_part(degree);
  if (!(top == h)) throw std::logic_error("operation result is not homogeneous");
  return MUClass::from_hurewicz(top, degree);
}

}  // namespace

CohOperation CohOperation::landweber_novikov(const Partition& omega) {
  CohOperation op;
  op.kind_ = Kind::LandweberNovikov;
  op.name_ = "s" + omega.to_string();
  op.shift_ = omega.weight();
  op.omega_ = omega;
  return op;
}

CohOperation CohOperation::line(std::string name, int shift, PSeries f,
                                std::function<GradedPoly(const FGLContext&, int)> class_builder) {
  CohOperation op;
  op.kind_ = Kind::Line;
  op.name_ = std::move(name);
  op.shift_ = shift;
  op.f_ = std::move(f);
  op.builder_ = std::move(class_builder);
  return op;
}

CohOperation CohOperation::general(std::string name, int shift, GradedPoly cls) {
  CohOperation op;
  op.kind_ = Kind::General;
  op.name_ = std::move(name);
  op.shift_ = shift;
  op.class_ = std::move(cls);
  return op;
}

GradedPoly CohOperation::characteristic_class(const FGLContext& ctx, int w) const {
  switch (kind_) {
    case Kind::LandweberNovikov: {
      // m_omega = sum_mu M(mu, omega) e_mu, and e_mu becomes c^mu.
      RingPtr ring = ctx.chern_ring(w, w);
      GradedPoly out(ring);
      const int n = omega_.weight();
      if (n > w) return out;
      const IntMatrix& M = monomial_to_elementary(n);
      const auto& parts = partitions_of(n);
      std::size_t j = static_cast<std::size_t>(partition_index(omega_));
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (M(i, j) == 0) continue;
        Monomial m(ring->size(), 0);
        for (int part : parts[i].parts()) m[static_cast<std::size_t>(part - 1)] += 1;
        out.add_term(m, Rational(M(i, j)));
      }
      return out;
    }
    case Kind::Line:
      return builder_(ctx, w);
    case Kind::General:
      return *class_;
  }
  throw std::logic_error("unknown operation kind");
}

MUClass CohOperation::apply(const MUClass& x) const {
  const int n = x.degree;
  const int target = n - shift_;
  if (target < 0) return MUClass::zero(target);
  switch (kind_) {
    case Kind::Line: {
      const P1Table& t = p1_table(n);
      PartitionPoly out;
      for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const Partition& omega = t.rows[r];
        std::size_t k = static_cast<std::size_t>(n - omega.weight());
        if (k >= f_.size() || f_[k].is_zero()) continue;
        Integer pairing = 0;
        for (const auto& [col, c] : t.entries[r]) pairing += c * x.coords[col];
        if (pairing == 0) continue;
        out += (f_[k] * PartitionPoly::monomial(omega)).scale(pairing);
      }
      return land(out, target);
    }
    case Kind::LandweberNovikov: {
      SymFn g = monomial_of_exp(omega_, n) * total_b_class(n);
      return land(pair_with_class(g, x), target);
    }
    case Kind::General: {
      SymFn g = class_to_symfn(*class_, n) * total_b_class(n);
      return land(pair_with_class(g, x), target);
    }
  }
  throw std::logic_error("unknown operation kind");
}

MUClass CohOperation::apply_via_class(const FGLContext& ctx, const MUClass& x) const {
  const int n = x.degree;
  const int target = n - shift_;
  if (target < 0) return MUClass::zero(target);
  const int w = std::min(ctx.truncation() + 1, n + 1);
  SymFn g = class_to_symfn(characteristic_class(ctx, w), n) * total_b_class(n);
  return land(pair_with_class(g, x), target);
}

PartitionPoly pair_with_class(const SymFn& g, const MUClass& x) {
  PartitionPoly out;
  const auto& parts = partitions_of(x.degree);
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (x.coords[i] != 0) out += g.coefficient(parts[i]).scale(x.coords[i]);
  return out;
}

SymFn class_to_symfn(const GradedPoly& cls, int max_degree) {
  const RingPtr& ring = cls.ring();
  // Split each monomial into its c-part (a partition) and its b-part.
  std::vector<int> c_index(ring->size(), 0);
  for (std::size_t i = 0; i < ring->size(); ++i) {
    const std::string& nm = ring->name(i);
    if (nm.size() > 1 && nm[0] == 'c') c_index[i] = std::stoi(nm.substr(1));
  }
  std::map<Partition, PartitionPoly> grouped;
  for (const auto& [m, q] : cls.terms()) {
    std::vector<int> cparts;
    Monomial bpart = m;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (c_index[i] == 0) continue;
      for (int r = 0; r < m[i]; ++r) cparts.push_back(c_index[i]);
      bpart[i] = 0;
    }
    std::sort(cparts.begin(), cparts.end(), std::greater<>());
    Partition mu(cparts);
    if (mu.weight() > max_degree) continue;
    grouped[mu] += to_partition_poly(GradedPoly::monomial(ring, bpart, q));
  }
  std::map<int, SymFn> e;
  SymFn out(max_degree);
  for (const auto& [mu, coeff] : grouped) {
    SymFn term = SymFn::one(max_degree);
    for (int part : mu.parts()) {
      auto it = e.find(part);
      if (it == e.end()) it = e.emplace(part, elementary_of_exp(part, max_degree)).first;
      term = term * it->second;
    }
    out = out + term.scale(coeff);
  }
  return out;
}

CohOperation boundary_partial(const FGLContext& ctx) {
  const std::size_t len = static_cast<std::size_t>(ctx.truncation()) + 2;
  // E(-t)
  PSeries f(len);
  for (std::size_t k = 1; k < len; ++k)
    f[k] = PartitionPoly::generator(static_cast<int>(k - 1)).scale((k % 2) ? -1 : 1);
  return CohOperation::line("partial", 1, std::move(f),
                            [](const FGLContext& c, int w) { return c.stable_determinant_class(true, w); });
}

CohOperation delta_op(const FGLContext& ctx) {
  const std::size_t len = static_cast<std::size_t>(ctx.truncation()) + 2;
  PSeries e = exp_series(len);
  PSeries e_neg(len);
  for (std::size_t k = 1; k < len; ++k) e_neg[k] = e[k].scale((k % 2) ? -1 : 1);
  PSeries f = series_mul(e, e_neg, len);
  return CohOperation::line("delta", 2, std::move(f), [](const FGLContext& c, int w) {
    return c.stable_determinant_class(false, w) * c.stable_determinant_class(true, w);
  });
}

}  // namespace msl
