#include "msl/kq_ring.hpp"

#include <stdexcept>

namespace msl {

namespace {

int floor_div4(int n) { return n >= 0 ? n / 4 : -((-n + 3) / 4); }

bool all_zero(const std::vector<Integer>& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

std::string KQMonomial::to_string() const {
  std::string b = base == KQBase::One ? "" : (base == KQBase::EtaEta ? "etaeta" : "H");
  if (beta == 0) return b.empty() ? "1" : b;
  std::string p = beta == 1 ? "beta" : "beta^" + std::to_string(beta);
  return b.empty() ? p : b + "*" + p;
}

KQPresentation::KQPresentation(const FieldDescriptor& k, bool very_effective)
    : witt_(k), very_effective_(very_effective) {}

KQElement KQPresentation::monomial(KQBase base, int beta, const std::vector<Integer>& coeff) const {
  KQElement e;
  if (very_effective_ && beta < 0) return e;
  if (!all_zero(coeff)) e.terms[{base, beta}] = coeff;
  return e;
}

KQElement KQPresentation::add(const KQElement& a, const KQElement& b) const {
  KQElement out = a;
  for (const auto& [m, c] : b.terms) {
    auto& t = out.terms[m];
    if (t.empty()) t.assign(witt_.generator_count(), 0);
    for (std::size_t i = 0; i < c.size(); ++i) t[i] += c[i];
    if (all_zero(t)) out.terms.erase(m);
  }
  return out;
}

KQElement KQPresentation::scale(const KQElement& a, const std::vector<Integer>& coeff) const {
  KQElement out;
  for (const auto& [m, c] : a.terms) {
    auto p = witt_.multiply(coeff, c);
    if (!all_zero(p)) out.terms[m] = p;
  }
  return out;
}

KQElement KQPresentation::multiply(const KQElement& a, const KQElement& b) const {
  KQElement out;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      auto c = witt_.multiply(ca, cb);
      int beta = ma.beta + mb.beta;
      KQBase base;
      if (ma.base == KQBase::One) {
        base = mb.base;
      } else if (mb.base == KQBase::One) {
        base = ma.base;
      } else if (ma.base == KQBase::H && mb.base == KQBase::H) {
        base = KQBase::One;
        beta += 1;
        auto twice_h = witt_.hyperbolic();
        for (auto& x : twice_h) x *= 2;
        c = witt_.multiply(c, twice_h);
      } else {
        continue;  // (etaeta)^2 = 0 and etaeta * H = 0
      }
      out = add(out, monomial(base, beta, c));
    }
  return out;
}

IntMatrix KQPresentation::degree_relations(int n) const {
  const std::size_t g = witt_.generator_count();
  IntMatrix rel = witt_.gw_relations();
  auto append = [&](const IntMatrix& extra) {
    if (extra.cols()) rel = rel.cols() ? rel.hconcat(extra) : extra;
  };
  int r = ((n % 4) + 4) % 4;
  if (r == 3) return IntMatrix::identity(g);
  if (very_effective_ && n < 0) return IntMatrix::identity(g);
  if (r == 1) {
    // 2 * etaeta = 0 and I(k) * etaeta = 0.
    IntMatrix two(g, 1);
    two(0, 0) = 2;
    append(two);
    append(witt_.ideal_power_generators(1));
  } else if (r == 2) {
    append(witt_.ideal_power_generators(1));  // I(k) * H = 0
  }
  if (!rel.cols()) rel = IntMatrix(g, 0);
  return rel;
}

FGAbGroup KQPresentation::degree_group(int n) const {
  return cokernel(degree_relations(n), witt_.field().inverted_primes());
}

bool KQPresentation::is_zero(const KQElement& a) const {
  for (const auto& [m, c] : a.terms) {
    if (!in_span(degree_relations(m.degree()), c)) return false;
  }
  return true;
}

FGAbGroup kq_diagonal(const FieldDescriptor& k, int n, bool very_effective) {
  const auto inv = k.inverted_primes();
  if (very_effective && n < 0) return FGAbGroup::trivial(inv);
  switch (((n % 4) + 4) % 4) {
    case 0: return WittRing(k).gw();
    case 1: return FGAbGroup::cyclic(2, inv);
    case 2: return FGAbGroup::free(1, inv);
    default: return FGAbGroup::trivial(inv);
  }
}

FGAbGroup kw_diagonal(const FieldDescriptor& k, int n) {
  if (((n % 4) + 4) % 4 == 0) return WittRing(k).w();
  return FGAbGroup::trivial(k.inverted_primes());
}

nlohmann::json KQReport::to_json() const {
  nlohmann::json j;
  j["pass"] = pass;
  j["lines"] = lines;
  j["failures"] = failures;
  return j;
}

KQReport kq_relation_check(const FieldDescriptor& k, int max_degree, bool very_effective) {
  KQPresentation P(k, very_effective);
  const WittRing& W = P.witt();
  KQReport rep;
  auto record = [&](bool ok, const std::string& what) {
    rep.lines.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    if (!ok) {
      rep.pass = false;
      rep.failures.push_back(what);
    }
  };
  const int lo = very_effective ? 0 : -max_degree;

  for (int n = lo; n <= max_degree; ++n) {
    FGAbGroup got = P.degree_group(n), want = kq_diagonal(k, n, very_effective);
    record(got == want, "degree " + std::to_string(n) + ": presented " + got.to_string() + " vs table " +
                            want.to_string());
  }

  auto one = W.one();
  auto twice = one;
  twice[0] = 2;
  for (int c = floor_div4(lo); 4 * c + 2 <= max_degree; ++c) {
    if (very_effective && c < 0) continue;
    const std::string bc = "beta^" + std::to_string(c);
    if (4 * c + 1 <= max_degree) {
      KQElement e = P.generator(KQBase::EtaEta, c);
      record(!P.is_zero(e) && P.is_zero(P.scale(e, twice)), "etaeta*" + bc + " has order exactly 2");
      for (std::size_t j = 0; j < W.ideal_power_generators(1).cols(); ++j) {
        auto a = W.ideal_power_generators(1).column(j);
        record(P.is_zero(P.scale(e, a)), "I(k)*etaeta*" + bc + " = 0 (generator " + std::to_string(j) + ")");
      }
    }
    if (4 * c + 2 <= max_degree) {
      KQElement h = P.generator(KQBase::H, c);
      record(!P.is_zero(h), "H*" + bc + " is nonzero");
      // H generates: killing it leaves nothing.
      IntMatrix rel = P.degree_relations(4 * c + 2);
      IntMatrix gen(W.generator_count(), 1);
      gen(0, 0) = 1;
      record(cokernel(rel.cols() ? rel.hconcat(gen) : gen, k.inverted_primes()).is_trivial(),
             "H*" + bc + " generates degree " + std::to_string(4 * c + 2));
      for (std::size_t j = 0; j < W.ideal_power_generators(1).cols(); ++j) {
        auto a = W.ideal_power_generators(1).column(j);
        record(P.is_zero(P.scale(h, a)), "I(k)*H*" + bc + " = 0 (generator " + std::to_string(j) + ")");
      }
    }
  }

  KQElement ee = P.generator(KQBase::EtaEta, 0), H = P.generator(KQBase::H, 0);
  record(P.is_zero(P.multiply(ee, ee)), "(etaeta)^2 = 0");
  record(P.is_zero(P.multiply(ee, H)) && P.is_zero(P.multiply(H, ee)), "etaeta*H = 0");
  {
    auto twice_h = W.hyperbolic();
    for (auto& x : twice_h) x = -2 * x;
    KQElement diff = P.add(P.multiply(H, H), P.monomial(KQBase::One, 1, twice_h));
    record(diff.terms.empty(), "H^2 - 2h*beta = 0 exactly in degree 4");
  }
  if (!very_effective) {
    KQElement b = P.generator(KQBase::One, 1), binv = P.generator(KQBase::One, -1);
    KQElement prod = P.multiply(b, binv);
    record(prod.terms.size() == 1 && prod.terms.begin()->first == KQMonomial{KQBase::One, 0} &&
               prod.terms.begin()->second == one,
           "beta*beta^-1 = 1");
  }

  // Associativity of the rewriting on all generator triples with Witt-class coefficients.
  std::vector<KQElement> gens;
  for (KQBase base : {KQBase::One, KQBase::EtaEta, KQBase::H})
    for (std::size_t i = 0; i < W.generator_count(); ++i) {
      std::vector<Integer> c(W.generator_count());
      c[i] = 1;
      gens.push_back(P.monomial(base, base == KQBase::One ? 1 : 0, c));
    }
  bool assoc = true;
  for (const auto& x : gens)
    for (const auto& y : gens)
      for (const auto& z : gens) {
        KQElement l = P.multiply(P.multiply(x, y), z), r = P.multiply(x, P.multiply(y, z));
        KQElement neg = P.scale(r, [&] {
          auto m = one;
          m[0] = -1;
          return m;
        }());
        if (!P.is_zero(P.add(l, neg))) assoc = false;
      }
  record(assoc, "associativity on generator triples");

  if (!very_effective) {
    bool periodic = true;
    for (int n = -16; n <= 16; ++n)
      if (!(kq_diagonal(k, n) == kq_diagonal(k, n + 4)) || !(P.degree_group(n) == P.degree_group(n + 4)))
        periodic = false;
    record(periodic, "(8,4)-periodicity for n in [-16, 16]");
  }
  return rep;
}

nlohmann::json EtaTopReport::to_json() const {
  nlohmann::json j;
  j["well_defined"] = well_defined;
  j["surjective"] = surjective;
  j["kernel"] = kernel.to_json();
  j["kernel_text"] = kernel.to_string();
  j["kernel_is_ideal"] = kernel_is_ideal;
  j["isomorphism"] = isomorphism;
  return j;
}

EtaTopReport eta_top_square_check(const FieldDescriptor& k) {
  WittRing W(k);
  const std::size_t g = W.generator_count();
  const auto inv = k.inverted_primes();
  EtaTopReport rep;
  auto rank_mod2 = [&](const std::vector<Integer>& v) {
    Integer r = 0;
    for (std::size_t i = 0; i < g; ++i) r += W.rank_map()(0, i) * v[i];
    return Integer(((r % 2) + 2) % 2);
  };
  rep.well_defined = true;
  for (std::size_t j = 0; j < W.w_relations().cols(); ++j)
    if (rank_mod2(W.w_relations().column(j)) != 0) rep.well_defined = false;
  rep.surjective = rank_mod2(W.one()) == 1;

  // Kernel: v with rank(v) + 2t = 0, projected to the Witt coordinates.
  IntMatrix M(1, g + 1);
  for (std::size_t i = 0; i < g; ++i) M(0, i) = W.rank_map()(0, i);
  M(0, g) = 2;
  IntMatrix K = kernel_lattice(M);
  IntMatrix Kw(g, K.cols());
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < K.cols(); ++j) Kw(i, j) = K(i, j);
  rep.kernel = subgroup_generated(Kw, W.w_relations(), inv);

  IntMatrix I = W.ideal_power_generators(1);
  IntMatrix span_i = I.cols() ? W.w_relations().hconcat(I) : W.w_relations();
  IntMatrix span_k = Kw.cols() ? W.w_relations().hconcat(Kw) : W.w_relations();
  bool k_in_i = true, i_in_k = true;
  for (std::size_t j = 0; j < Kw.cols(); ++j)
    if (!in_span(span_i, Kw.column(j))) k_in_i = false;
  for (std::size_t j = 0; j < I.cols(); ++j)
    if (!in_span(span_k, I.column(j))) i_in_k = false;
  rep.kernel_is_ideal = k_in_i && i_in_k;
  rep.isomorphism = rep.well_defined && rep.surjective && rep.kernel.is_trivial();
  return rep;
}

}  // namespace msl
