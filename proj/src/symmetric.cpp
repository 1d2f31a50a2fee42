#include "msl/symmetric.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace msl {

PartitionPoly PartitionPoly::monomial(const Partition& p, const Integer& c) {
  PartitionPoly r;
  r.add_term(p, c);
  return r;
}

PartitionPoly PartitionPoly::generator(int i) {
  if (i < 0) throw std::invalid_argument("PartitionPoly::generator: negative index");
  return i == 0 ? one() : monomial(Partition{i});
}

Integer PartitionPoly::coefficient(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Integer(0) : it->second;
}

void PartitionPoly::add_term(const Partition& p, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

PartitionPoly& PartitionPoly::operator+=(const PartitionPoly& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

PartitionPoly& PartitionPoly::operator-=(const PartitionPoly& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

PartitionPoly PartitionPoly::operator+(const PartitionPoly& o) const {
  PartitionPoly r = *this;
  r += o;
  return r;
}

PartitionPoly PartitionPoly::operator-(const PartitionPoly& o) const {
  PartitionPoly r = *this;
  r -= o;
  return r;
}

PartitionPoly PartitionPoly::operator-() const { return scale(-1); }

PartitionPoly PartitionPoly::scale(const Integer& c) const {
  PartitionPoly r;
  if (c == 0) return r;
  for (const auto& [p, v] : terms_) r.terms_.emplace(p, v * c);
  return r;
}

PartitionPoly PartitionPoly::operator*(const PartitionPoly& o) const {
  PartitionPoly r;
  for (const auto& [p, c] : terms_)
    for (const auto& [q, d] : o.terms_) r.add_term(p.join(q), c * d);
  return r;
}

PartitionPoly PartitionPoly::mul_truncated(const PartitionPoly& o, int max_weight) const {
  PartitionPoly r;
  for (const auto& [p, c] : terms_)
    for (const auto& [q, d] : o.terms_)
      if (p.weight() + q.weight() <= max_weight) r.add_term(p.join(q), c * d);
  return r;
}

PartitionPoly PartitionPoly::homogeneous_part(int weight) const {
  PartitionPoly r;
  for (const auto& [p, c] : terms_)
    if (p.weight() == weight) r.terms_.emplace(p, c);
  return r;
}

bool PartitionPoly::is_homogeneous(int weight) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first.weight() == weight; });
}

std::string PartitionPoly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest weight first, then the global partition order.
  std::vector<std::pair<Partition, Integer>> items(terms_.begin(), terms_.end());
  std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.first.weight() != b.first.weight()) return a.first.weight() > b.first.weight();
    return a.first > b.first;
  });
  for (const auto& [p, c] : items) {
    Integer a = c;
    if (first) {
      if (a < 0) out << "-";
    } else {
      out << (a < 0 ? " - " : " + ");
    }
    first = false;
    a = abs(a);
    bool print_coeff = p.empty() || a != 1;
    if (print_coeff) out << a.get_str();
    bool star = print_coeff;
    int i = 0;
    while (i < p.length()) {
      int v = p[i];
      int m = p.multiplicity(v);
      if (star) out << "*";
      out << var << v;
      if (m > 1) out << "^" << m;
      star = true;
      i += m;
    }
  }
  return out.str();
}

PSeries series_mul(const PSeries& a, const PSeries& b, std::size_t len) {
  PSeries r(len);
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j)
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
  }
  return r;
}

PSeries series_inverse(const PSeries& a, std::size_t len) {
  if (a.empty() || !(a[0] == PartitionPoly::one())) throw std::invalid_argument("series_inverse: constant term must be 1");
  PSeries r(len);
  if (len == 0) return r;
  r[0] = PartitionPoly::one();
  for (std::size_t n = 1; n < len; ++n) {
    PartitionPoly acc;
    for (std::size_t k = 1; k <= n && k < a.size(); ++k)
      if (!a[k].is_zero()) acc += a[k] * r[n - k];
    r[n] = -acc;
  }
  return r;
}

PSeries series_pow(const PSeries& a, int k, std::size_t len) {
  PSeries base = k < 0 ? series_inverse(a, len) : a;
  base.resize(std::max(base.size(), len));
  int e = std::abs(k);
  PSeries result(len);
  if (len > 0) result[0] = PartitionPoly::one();
  while (e > 0) {
    if (e & 1) result = series_mul(result, base, len);
    e >>= 1;
    if (e) base = series_mul(base, base, len);
  }
  return result;
}

PSeries exp_series(std::size_t len) {
  PSeries e(len);
  for (std::size_t i = 1; i < len; ++i) e[i] = PartitionPoly::generator(static_cast<int>(i - 1));
  return e;
}

PSeries b_series(std::size_t len) {
  PSeries e(len);
  for (std::size_t i = 0; i < len; ++i) e[i] = PartitionPoly::generator(static_cast<int>(i));
  return e;
}

namespace {

// Ways to write the sequence lambda[pos..] as a sum of an arrangement of the
// multiset mu and one of nu (zero-padded).
Integer count_splittings(const std::vector<int>& lambda, std::size_t pos, std::vector<int>& mu, std::vector<int>& nu) {
  if (pos == lambda.size()) return (mu.empty() && nu.empty()) ? Integer(1) : Integer(0);
  Integer total = 0;
  const int target = lambda[pos];
  std::vector<int> choices{0};
  for (int v : mu)
    if (std::find(choices.begin(), choices.end(), v) == choices.end()) choices.push_back(v);
  for (int a : choices) {
    int b = target - a;
    if (b < 0) continue;
    if (b > 0 && std::find(nu.begin(), nu.end(), b) == nu.end()) continue;
    if (a > 0) mu.erase(std::find(mu.begin(), mu.end(), a));
    if (b > 0) nu.erase(std::find(nu.begin(), nu.end(), b));
    total += count_splittings(lambda, pos + 1, mu, nu);
    if (b > 0) nu.push_back(b);
    if (a > 0) mu.push_back(a);
  }
  return total;
}

std::mutex g_product_mutex;
std::map<std::pair<Partition, Partition>, std::map<Partition, Integer>> g_product_cache;

}  // namespace

const std::map<Partition, Integer>& monomial_product(const Partition& mu, const Partition& nu) {
  std::lock_guard<std::mutex> lock(g_product_mutex);
  auto key = mu < nu ? std::make_pair(mu, nu) : std::make_pair(nu, mu);
  auto it = g_product_cache.find(key);
  if (it != g_product_cache.end()) return it->second;
  std::map<Partition, Integer> out;
  const int total = mu.weight() + nu.weight();
  const int lo = std::max(mu.length(), nu.length());
  const int hi = mu.length() + nu.length();
  for (const Partition& lambda : partitions_of(total)) {
    if (lambda.length() < lo || lambda.length() > hi) continue;
    std::vector<int> m = mu.parts(), n = nu.parts();
    Integer c = count_splittings(lambda.parts(), 0, m, n);
    if (c != 0) out.emplace(lambda, c);
  }
  return g_product_cache.emplace(key, std::move(out)).first->second;
}

std::map<Partition, Integer> p1_times(const Partition& omega) {
  std::map<Partition, Integer> out;
  std::vector<int> values{0};
  for (int v : omega.parts())
    if (std::find(values.begin(), values.end(), v) == values.end()) values.push_back(v);
  for (int v : values) {
    std::vector<int> parts = omega.parts();
    if (v == 0) {
      parts.push_back(1);
    } else {
      *std::find(parts.begin(), parts.end(), v) = v + 1;
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    Partition lambda(parts);
    out[lambda] += lambda.multiplicity(v + 1);
  }
  return out;
}

namespace {

std::mutex g_transition_mutex;
std::map<int, IntMatrix> g_e_to_m;
std::map<int, IntMatrix> g_m_to_e;

Partition ones(int k) { return Partition(std::vector<int>(static_cast<std::size_t>(k), 1)); }

IntMatrix build_e_to_m(int n) {
  const auto& parts = partitions_of(n);
  IntMatrix A(parts.size(), parts.size());
  for (std::size_t j = 0; j < parts.size(); ++j) {
    // e_mu = prod_i m_(1^{mu_i})
    std::map<Partition, Integer> acc{{Partition{}, 1}};
    for (int k : parts[j].parts()) {
      std::map<Partition, Integer> next;
      for (const auto& [lam, c] : acc)
        for (const auto& [nu, d] : monomial_product(lam, ones(k))) next[nu] += c * d;
      acc = std::move(next);
    }
    for (const auto& [lam, c] : acc) A(static_cast<std::size_t>(partition_index(lam)), j) = c;
  }
  return A;
}

}  // namespace

const IntMatrix& elementary_to_monomial(int n) {
  {
    std::lock_guard<std::mutex> lock(g_transition_mutex);
    auto it = g_e_to_m.find(n);
    if (it != g_e_to_m.end()) return it->second;
  }
  IntMatrix A = build_e_to_m(n);
  std::lock_guard<std::mutex> lock(g_transition_mutex);
  return g_e_to_m.emplace(n, std::move(A)).first->second;
}

const IntMatrix& monomial_to_elementary(int n) {
  {
    std::lock_guard<std::mutex> lock(g_transition_mutex);
    auto it = g_m_to_e.find(n);
    if (it != g_m_to_e.end()) return it->second;
  }
  const IntMatrix& A = elementary_to_monomial(n);
  auto inv = inverse(to_rational(A));
  if (!inv) throw std::logic_error("elementary/monomial transition is singular");
  IntMatrix B(A.rows(), A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) {
      const Rational& q = (*inv)(i, j);
      if (!is_integral(q)) throw std::logic_error("elementary/monomial transition is not unimodular");
      B(i, j) = q.get_num();
    }
  std::lock_guard<std::mutex> lock(g_transition_mutex);
  return g_m_to_e.emplace(n, std::move(B)).first->second;
}

SymFn SymFn::one(int max_degree) {
  SymFn s(max_degree);
  s.add(Partition{}, PartitionPoly::one());
  return s;
}

void SymFn::add(const Partition& lambda, const PartitionPoly& c) {
  if (lambda.weight() > max_degree_ || c.is_zero()) return;
  auto& slot = terms_[lambda];
  slot += c;
  if (slot.is_zero()) terms_.erase(lambda);
}

SymFn SymFn::operator+(const SymFn& o) const {
  SymFn r = *this;
  for (const auto& [l, c] : o.terms_) r.add(l, c);
  return r;
}

SymFn SymFn::operator*(const SymFn& o) const {
  SymFn r(std::min(max_degree_, o.max_degree_));
  for (const auto& [mu, c] : terms_)
    for (const auto& [nu, d] : o.terms_) {
      if (mu.weight() + nu.weight() > r.max_degree_) continue;
      PartitionPoly cd = c * d;
      for (const auto& [lam, k] : monomial_product(mu, nu)) r.add(lam, cd.scale(k));
    }
  return r;
}

SymFn SymFn::scale(const PartitionPoly& c) const {
  SymFn r(max_degree_);
  for (const auto& [l, v] : terms_) r.add(l, v * c);
  return r;
}

const PartitionPoly& SymFn::coefficient(const Partition& lambda) const {
  static const PartitionPoly zero;
  auto it = terms_.find(lambda);
  return it == terms_.end() ? zero : it->second;
}

SymFn total_b_class(int max_degree) {
  SymFn s(max_degree);
  for (int d = 0; d <= max_degree; ++d)
    for (const Partition& w : partitions_of(d)) s.add(w, PartitionPoly::monomial(w));
  return s;
}

SymFn elementary_of_exp(int k, int max_degree) {
  SymFn s(max_degree);
  for (int d = k; d <= max_degree; ++d)
    for (const Partition& lam : partitions_of(d)) {
      if (lam.length() != k) continue;
      std::vector<int> b;
      for (int v : lam.parts())
        if (v > 1) b.push_back(v - 1);
      s.add(lam, PartitionPoly::monomial(Partition(b)));
    }
  return s;
}

SymFn monomial_of_exp(const Partition& alpha, int max_degree) {
  SymFn s(max_degree);
  const std::size_t len = static_cast<std::size_t>(max_degree) + 1;
  const PSeries e = exp_series(len);
  std::map<int, PSeries> powers;
  for (int v : alpha.parts())
    if (!powers.count(v)) powers.emplace(v, series_pow(e, v, len));
  // Distinct arrangements of alpha.
  std::vector<std::vector<int>> arrangements;
  std::vector<int> seq = alpha.parts();
  std::sort(seq.begin(), seq.end());
  do arrangements.push_back(seq);
  while (std::next_permutation(seq.begin(), seq.end()));

  for (int d = alpha.weight(); d <= max_degree; ++d)
    for (const Partition& lam : partitions_of(d)) {
      if (lam.length() != alpha.length()) continue;
      PartitionPoly total;
      for (const auto& sigma : arrangements) {
        PartitionPoly prod = PartitionPoly::one();
        for (std::size_t i = 0; i < sigma.size() && !prod.is_zero(); ++i) {
          int deg = lam[static_cast<int>(i)];
          if (deg < sigma[i]) {
            prod = PartitionPoly();
            break;
          }
          prod = prod * powers.at(sigma[i])[static_cast<std::size_t>(deg)];
        }
        total += prod;
      }
      s.add(lam, total);
    }
  return s;
}

}  // namespace msl
