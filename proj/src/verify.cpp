#include "msl/verify.hpp"

#include <sstream>
#include <stdexcept>

#include "msl/kq_ring.hpp"
#include "msl/msl_assembly.hpp"
#include "msl/witt.hpp"

namespace msl {

Workspace Workspace::build(int truncation) {
  Workspace ws;
  ws.ctx = std::make_shared<const FGLContext>(truncation);
  ws.basis = std::make_shared<const MUBasis>(ws.ctx, truncation);
  ws.cf = std::make_shared<const ConnerFloyd>(ws.basis);
  return ws;
}

void SuiteReport::check(bool ok, const std::string& what) {
  lines.push_back(std::string(ok ? "PASS " : "FAIL ") + what);
  if (!ok) pass = false;
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json j;
  j["suite"] = name;
  j["pass"] = pass;
  j["checks"] = lines;
  return j;
}

std::string SuiteReport::to_text() const {
  std::ostringstream os;
  os << "== " << name << ": " << (pass ? "PASS" : "FAIL") << "\n";
  for (const auto& l : lines) os << "  " << l << "\n";
  return os.str();
}

FGAbGroup expected_cf_homology(int n) {
  if (n < 0 || n % 2 == 1) return FGAbGroup::trivial();
  int m = n % 4 == 0 ? n / 4 : (n - 2) / 4;
  return FGAbGroup(0, std::vector<Integer>(static_cast<std::size_t>(partition_count(m)), Integer(2)));
}

SuiteReport verify_leibniz(const Workspace& ws, int max_degree) {
  SuiteReport r{"leibniz", true, {}};
  const ConnerFloyd& cf = *ws.cf;
  max_degree = std::min(max_degree, cf.max_degree());
  const MUClass a11 = -cpn_class(*ws.ctx, 1);
  const auto& d = cf.partial();
  const auto& D = cf.delta();
  for (int total = 0; total <= max_degree; ++total) {
    std::size_t pairs = 0, bad_partial = 0, bad_delta = 0;
    for (int p = 0; p <= total; ++p) {
      const int q = total - p;
      for (std::size_t i = 0; i < cf.w_lattice(p).cols(); ++i)
        for (std::size_t j = 0; j < cf.w_lattice(q).cols(); ++j) {
          MUClass a = cf.w_class(p, i), b = cf.w_class(q, j);
          MUClass ab = product(a, b);
          MUClass da = d.apply(a), db = d.apply(b);
          // d(ab) = d(a) b + a d(b) + a_{1,1} d(a) d(b)
          MUClass rhs = product(da, b) + product(a, db) + product(a11, product(da, db));
          if (!(d.apply(ab) == rhs)) ++bad_partial;
          // Delta(ab) = Delta(a) b + a Delta(b) - 2 d(a) d(b)
          MUClass rhs2 = product(D.apply(a), b) + product(a, D.apply(b)) - product(da, db).scale(2);
          if (!(D.apply(ab) == rhs2)) ++bad_delta;
          ++pairs;
        }
    }
    r.check(bad_partial == 0 && bad_delta == 0,
            "degree " + std::to_string(total) + ": " + std::to_string(pairs) + " Wall pairs, partial-law failures " +
                std::to_string(bad_partial) + ", Delta-law failures " + std::to_string(bad_delta));
  }
  return r;
}

SuiteReport verify_cf_pattern(const Workspace& ws, int max_degree) {
  SuiteReport r{"cf-pattern", true, {}};
  const ConnerFloyd& cf = *ws.cf;
  const int top = std::min(max_degree, cf.max_degree()) - 1;
  for (int n = 0; n <= top; ++n) {
    CFHomology h = cf.homology(n);
    FGAbGroup want = expected_cf_homology(n);
    const std::int64_t pn = partition_count(n), pn1 = partition_count(n - 1), pn2 = partition_count(n - 2);
    bool ok = h.homology == want && static_cast<std::int64_t>(h.rank_cycles) == pn - pn1 &&
              static_cast<std::int64_t>(cf.w_lattice(n).cols()) == pn - pn2;
    r.check(ok, "n=" + std::to_string(n) + " rank W=" + std::to_string(cf.w_lattice(n).cols()) +
                    " rank Z=" + std::to_string(h.rank_cycles) + " rank B=" + std::to_string(h.rank_boundaries) +
                    " H=" + h.homology.to_string() + " expected " + want.to_string());
  }
  for (int n = 2; n <= std::min(max_degree, cf.max_degree()); ++n) {
    IntMatrix comp = cf.delta_matrix(n - 1) * cf.delta_matrix(n);
    r.check(comp.is_zero(), "delta^2 = 0 from degree " + std::to_string(n));
    r.check(cokernel(cf.delta_on_lattice(n)).is_trivial(), "Delta : L_" + std::to_string(n) + " -> L_" +
                                                                std::to_string(n - 2) + " is onto");
  }
  return r;
}

namespace {

// Rows n = 0..9 with GW(k) kept as a placeholder: (copies of GW, free rank, number of Z/2).
struct GenericRow {
  int gw = 0, free = 0, z2 = 0;
};
const GenericRow kIntroTable[10] = {{1, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 0}, {1, 1, 0},
                                    {0, 2, 1}, {0, 4, 0}, {0, 4, 0}, {2, 5, 0}, {0, 8, 2}};

}  // namespace

SuiteReport verify_table() {
  SuiteReport r{"table", true, {}};
  for (const auto& k : field_catalog()) {
    const FGAbGroup gw = WittRing(k).gw();
    auto rows = intro_table(k);
    for (int n = 0; n <= 9; ++n) {
      const GenericRow& g = kIntroTable[n];
      FGAbGroup want = gw.power(g.gw)
                           .direct_sum(FGAbGroup::free(g.free, k.inverted_primes()))
                           .direct_sum(FGAbGroup(0, std::vector<Integer>(static_cast<std::size_t>(g.z2), Integer(2)),
                                                 k.inverted_primes()));
      r.check(rows[static_cast<std::size_t>(n)].group == want,
              k.flag() + " n=" + std::to_string(n) + ": " + rows[static_cast<std::size_t>(n)].group.to_string() +
                  " [" + rows[static_cast<std::size_t>(n)].symbolic + "]");
    }
    for (int n = 0; n <= 11; ++n) {
      auto q = msl_quotient_check(k, n);
      auto a = msl_away_from_two_check(k, n);
      auto e = msl_eta_extension_check(k, n);
      r.check(q.pass && a.pass && e.pass, k.flag() + " " + q.detail + "; " + a.detail + "; " + e.detail);
    }
  }
  return r;
}

SuiteReport verify_kq(int max_degree) {
  SuiteReport r{"kq", true, {}};
  for (const auto& k : field_catalog())
    for (bool ve : {false, true}) {
      KQReport rep = kq_relation_check(k, max_degree, ve);
      std::string tag = k.flag() + (ve ? " (very effective)" : "");
      r.check(rep.pass, tag + ": " + std::to_string(rep.lines.size()) + " relation checks to degree " +
                            std::to_string(max_degree));
      for (const auto& f : rep.failures) r.lines.push_back("  failing: " + f);
    }
  for (const auto& k : field_catalog()) {
    EtaTopReport e = eta_top_square_check(k);
    bool ok = e.well_defined && e.surjective && e.kernel_is_ideal &&
              e.isomorphism == (k.kind == FieldKind::QuadraticallyClosed);
    r.check(ok, k.flag() + ": eta_top = rank mod 2, kernel " + e.kernel.to_string() +
                    (e.isomorphism ? ", isomorphism" : ", not injective"));
  }
  return r;
}

SuiteReport verify_witt_oracle() {
  SuiteReport r{"witt-oracle", true, {}};
  for (long q : {3L, 5L, 7L, 9L}) {
    WittOracleResult o = witt_oracle_finite(q);
    FieldDescriptor k = FieldDescriptor::finite(q);
    WittRing W(k);
    const auto inv = k.inverted_primes();
    bool ok = o.w.localized(inv) == W.w() && o.ideal.localized(inv) == W.fundamental_ideal_power(1) &&
              o.ideal_square.localized(inv) == W.fundamental_ideal_power(2) && o.gw.localized(inv) == W.gw();
    r.check(ok, "F_" + std::to_string(q) + ": " + std::to_string(o.class_count) + " Witt classes, W=" +
                    o.w.to_string() + " I=" + o.ideal.to_string() + " I^2=" + o.ideal_square.to_string() +
                    " GW=" + o.gw.to_string());
  }
  RealOracleResult ro = witt_oracle_real();
  WittRing R(FieldDescriptor::real_closed());
  bool ok = ro.w == R.w();
  for (int m = 1; m <= 3; ++m)
    ok = ok && ro.ideal_powers[static_cast<std::size_t>(m - 1)] == R.fundamental_ideal_power(m) &&
         ro.ideal_power_index[static_cast<std::size_t>(m - 1)] == (Integer(1) << m);
  r.check(ok, "R: W=" + ro.w.to_string() + ", [W : I^m] = 2, 4, 8 by signatures");
  return r;
}

std::vector<std::string> suite_names() { return {"leibniz", "cf-pattern", "table", "kq", "witt-oracle", "all"}; }

std::vector<SuiteReport> run_suite(const std::string& name, const Workspace& ws, int max_degree) {
  if (name == "leibniz") return {verify_leibniz(ws, max_degree)};
  if (name == "cf-pattern") return {verify_cf_pattern(ws, max_degree)};
  if (name == "table") return {verify_table()};
  if (name == "kq") return {verify_kq(16)};
  if (name == "witt-oracle") return {verify_witt_oracle()};
  if (name == "all")
    return {verify_leibniz(ws, max_degree), verify_cf_pattern(ws, max_degree), verify_table(), verify_kq(16),
            verify_witt_oracle()};
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace msl
