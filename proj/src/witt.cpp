#include "msl/witt.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace msl {

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

FieldDescriptor FieldDescriptor::parse(const std::string& flag, std::optional<long> characteristic) {
  FieldDescriptor k;
  if (flag == "c") {
    k = quadratically_closed();
  } else if (flag == "r") {
    k = real_closed();
  } else if (flag == "fq1") {
    k = {FieldKind::FiniteQ1, characteristic.value_or(5)};
  } else if (flag == "fq3") {
    k = {FieldKind::FiniteQ3, characteristic.value_or(3)};
  } else {
    throw std::invalid_argument("unknown field kind '" + flag + "' (expected c, r, fq1 or fq3)");
  }
  if (characteristic && (k.kind == FieldKind::QuadraticallyClosed || k.kind == FieldKind::RealClosed) &&
      *characteristic != 1)
    throw std::invalid_argument("field kind '" + flag + "' has characteristic 0");
  k.validate();
  return k;
}

FieldDescriptor FieldDescriptor::finite(long q) {
  long p = q;
  for (long d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  long r = q;
  while (r % p == 0) r /= p;
  if (r != 1 || p == 2) throw std::invalid_argument("finite field order must be an odd prime power");
  FieldDescriptor k{q % 4 == 1 ? FieldKind::FiniteQ1 : FieldKind::FiniteQ3, p};
  k.validate();
  return k;
}

void FieldDescriptor::validate() const {
  switch (kind) {
    case FieldKind::QuadraticallyClosed:
    case FieldKind::RealClosed:
      if (e != 1) throw std::invalid_argument("characteristic-0 kinds have exponential characteristic 1");
      return;
    case FieldKind::FiniteQ1:
      if (!is_prime(e) || e == 2) throw std::invalid_argument("fq1 needs an odd prime characteristic");
      return;
    case FieldKind::FiniteQ3:
      if (!is_prime(e) || e % 4 != 3)
        throw std::invalid_argument("fq3 needs a prime characteristic congruent to 3 mod 4");
      return;
  }
}

std::string FieldDescriptor::flag() const {
  switch (kind) {
    case FieldKind::QuadraticallyClosed: return "c";
    case FieldKind::RealClosed: return "r";
    case FieldKind::FiniteQ1: return "fq1";
    case FieldKind::FiniteQ3: return "fq3";
  }
  return "?";
}

std::string FieldDescriptor::name() const {
  switch (kind) {
    case FieldKind::QuadraticallyClosed: return "quadratically closed";
    case FieldKind::RealClosed: return "real closed";
    case FieldKind::FiniteQ1: return "finite, q = 1 mod 4, char " + std::to_string(e);
    case FieldKind::FiniteQ3: return "finite, q = 3 mod 4, char " + std::to_string(e);
  }
  return "?";
}

std::set<long> FieldDescriptor::inverted_primes() const {
  if (e > 1) return {e};
  return {};
}

std::vector<FieldDescriptor> field_catalog() {
  return {FieldDescriptor::parse("c"), FieldDescriptor::parse("r"), FieldDescriptor::parse("fq1"),
          FieldDescriptor::parse("fq3")};
}

WittRing::WittRing(const FieldDescriptor& k) : field_(k) {
  k.validate();
  switch (k.kind) {
    case FieldKind::QuadraticallyClosed:
      labels_ = {"<1>"};
      square_classes_ = {1};
      product_ = {{0}};
      gw_rel_ = IntMatrix(1, 0);
      hyperbolic_ = {2};
      break;
    case FieldKind::RealClosed:
      labels_ = {"<1>", "<-1>"};
      square_classes_ = {1, -1};
      product_ = {{0, 1}, {1, 0}};
      gw_rel_ = IntMatrix(2, 0);
      hyperbolic_ = {1, 1};
      break;
    case FieldKind::FiniteQ1:
    case FieldKind::FiniteQ3:
      // <u> is the non-square class; <u, u> = <1, 1>.
      labels_ = {"<1>", "<u>"};
      square_classes_ = {1, 0};
      product_ = {{0, 1}, {1, 0}};
      gw_rel_ = IntMatrix::from_rows({{-2}, {2}});
      // -1 is a square exactly when q = 1 mod 4.
      hyperbolic_ = k.kind == FieldKind::FiniteQ1 ? std::vector<Integer>{2, 0} : std::vector<Integer>{1, 1};
      break;
  }
  const std::size_t g = labels_.size();
  IntMatrix h(g, 1);
  for (std::size_t i = 0; i < g; ++i) h(i, 0) = hyperbolic_[i];
  w_rel_ = gw_rel_.cols() ? gw_rel_.hconcat(h) : h;
  rank_ = IntMatrix(1, g);
  for (std::size_t i = 0; i < g; ++i) rank_(0, i) = 1;
  gw_ = cokernel(gw_rel_, k.inverted_primes());
  w_ = cokernel(w_rel_, k.inverted_primes());
}

std::vector<Integer> WittRing::one() const {
  std::vector<Integer> v(labels_.size());
  v[0] = 1;
  return v;
}

std::vector<Integer> WittRing::multiply(const std::vector<Integer>& a, const std::vector<Integer>& b) const {
  std::vector<Integer> out(labels_.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (a[i] != 0 && b[j] != 0) out[product_[i][j]] += a[i] * b[j];
  return out;
}

IntMatrix WittRing::ideal_power_generators(int m) const {
  if (m < 0) throw std::invalid_argument("ideal power must be nonnegative");
  const std::size_t g = labels_.size();
  if (m == 0) return IntMatrix::identity(g);
  std::vector<std::vector<Integer>> base;
  for (std::size_t a = 1; a < g; ++a) {
    std::vector<Integer> v(g);
    v[0] = 1;
    v[a] -= 1;
    base.push_back(v);
  }
  std::vector<std::vector<Integer>> cur = base;
  for (int step = 1; step < m; ++step) {
    std::vector<std::vector<Integer>> next;
    for (const auto& x : cur)
      for (const auto& y : base) next.push_back(multiply(x, y));
    cur = std::move(next);
  }
  return IntMatrix::from_columns(cur, g);
}

FGAbGroup WittRing::fundamental_ideal_power(int m) const {
  return subgroup_generated(ideal_power_generators(m), w_rel_, field_.inverted_primes());
}

FGAbGroup WittRing::gw_augmentation_ideal() const {
  return subgroup_generated(ideal_power_generators(1), gw_rel_, field_.inverted_primes());
}

FGAbGroup WittRing::w_mod_ideal() const {
  IntMatrix gens = ideal_power_generators(1);
  IntMatrix rel = gens.cols() ? w_rel_.hconcat(gens) : w_rel_;
  return cokernel(rel, field_.inverted_primes());
}

nlohmann::json WittRing::to_json(int max_power) const {
  nlohmann::json j;
  j["field"] = field_.flag();
  j["description"] = field_.name();
  j["exponential_characteristic"] = field_.e;
  j["generators"] = labels_;
  j["gw"] = gw_.to_json();
  j["w"] = w_.to_json();
  nlohmann::json hyper = nlohmann::json::array();
  for (const auto& v : hyperbolic_) hyper.push_back(v.get_si());
  j["hyperbolic"] = hyper;
  nlohmann::json table = nlohmann::json::array();
  for (std::size_t a = 0; a < labels_.size(); ++a) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t b = 0; b < labels_.size(); ++b) row.push_back(labels_[product_[a][b]]);
    table.push_back(row);
  }
  j["multiplication"] = table;
  nlohmann::json powers = nlohmann::json::array();
  for (int m = 0; m <= max_power; ++m) {
    nlohmann::json row;
    row["m"] = m;
    row["group"] = fundamental_ideal_power(m).to_json();
    row["group_text"] = fundamental_ideal_power(m).to_string();
    powers.push_back(row);
  }
  j["ideal_powers"] = powers;
  return j;
}

WittRing witt_data(const FieldDescriptor& k) { return WittRing(k); }

FGAbGroup fundamental_ideal_power(const FieldDescriptor& k, int m) { return WittRing(k).fundamental_ideal_power(m); }

FGAbGroup two_primary_torsion_of_ideal(const FieldDescriptor& k, int m) {
  if (m < 1) throw std::invalid_argument("two_primary_torsion_of_ideal: m must be at least 1");
  return fundamental_ideal_power(k, m).p_primary_torsion(2);
}

// ---------------------------------------------------------------------------
// Brute-force oracle over small finite fields.

namespace {

class FiniteField {
 public:
  explicit FiniteField(long q) : q_(q) {
    if (q == 3 || q == 5 || q == 7) {
      for (long a = 0; a < q; ++a)
        for (long b = 0; b < q; ++b) {
          add_[idx(a, b)] = (a + b) % q;
          mul_[idx(a, b)] = (a * b) % q;
        }
    } else if (q == 9) {
      // F_3[t]/(t^2 + 1); element a + 3b stands for a + b t.
      for (long x = 0; x < 9; ++x)
        for (long y = 0; y < 9; ++y) {
          long a = x % 3, b = x / 3, c = y % 3, d = y / 3;
          add_[idx(x, y)] = (a + c) % 3 + 3 * ((b + d) % 3);
          long re = ((a * c - b * d) % 3 + 3) % 3;
          long im = (a * d + b * c) % 3;
          mul_[idx(x, y)] = re + 3 * im;
        }
    } else {
      throw std::invalid_argument("witt oracle supports q in {3, 5, 7, 9}");
    }
    for (long a = 0; a < q; ++a)
      for (long b = 0; b < q; ++b)
        if (add(a, b) == 0) neg_[a] = b;
    for (long a = 1; a < q; ++a)
      for (long b = 1; b < q; ++b)
        if (mul(a, b) == 1) inv_[a] = b;
  }
  long q() const { return q_; }
  long add(long a, long b) const { return add_[idx(a, b)]; }
  long mul(long a, long b) const { return mul_[idx(a, b)]; }
  long neg(long a) const { return neg_[a]; }
  long sub(long a, long b) const { return add(a, neg(b)); }
  long inv(long a) const { return inv_[a]; }

 private:
  static std::size_t idx(long a, long b) { return static_cast<std::size_t>(a * 9 + b); }
  long q_;
  long add_[81]{}, mul_[81]{}, neg_[9]{}, inv_[9]{};
};

using Gram = std::vector<std::vector<long>>;

long bilinear(const FiniteField& F, const Gram& G, const std::vector<long>& v, const std::vector<long>& w) {
  long s = 0;
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = 0; j < G.size(); ++j) s = F.add(s, F.mul(v[i], F.mul(G[i][j], w[j])));
  return s;
}

// Calls f on every vector of F_q^r; stops when f returns true.
bool for_each_vector(long q, std::size_t r, const std::function<bool(const std::vector<long>&)>& f) {
  std::vector<long> v(r, 0);
  for (;;) {
    if (f(v)) return true;
    std::size_t i = 0;
    while (i < r && ++v[i] == q) v[i++] = 0;
    if (i == r) return false;
  }
}

// Basis of {z : A z = 0} for an m x r matrix over F.
std::vector<std::vector<long>> nullspace(const FiniteField& F, std::vector<std::vector<long>> A, std::size_t r) {
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < r && row < A.size(); ++c) {
    std::size_t p = row;
    while (p < A.size() && A[p][c] == 0) ++p;
    if (p == A.size()) continue;
    std::swap(A[p], A[row]);
    long iv = F.inv(A[row][c]);
    for (auto& x : A[row]) x = F.mul(x, iv);
    for (std::size_t i = 0; i < A.size(); ++i) {
      if (i == row || A[i][c] == 0) continue;
      long f = A[i][c];
      for (std::size_t j = 0; j < r; ++j) A[i][j] = F.sub(A[i][j], F.mul(f, A[row][j]));
    }
    pivot_col.push_back(static_cast<int>(c));
    ++row;
  }
  std::vector<std::vector<long>> basis;
  for (std::size_t free = 0; free < r; ++free) {
    if (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(free)) != pivot_col.end()) continue;
    std::vector<long> z(r, 0);
    z[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) z[static_cast<std::size_t>(pivot_col[i])] = F.neg(A[i][free]);
    basis.push_back(z);
  }
  return basis;
}

// Splits off hyperbolic planes until the form is anisotropic.
Gram anisotropic_part(const FiniteField& F, Gram G) {
  for (;;) {
    const std::size_t r = G.size();
    if (r < 2) return G;
    std::vector<long> iso;
    for_each_vector(F.q(), r, [&](const std::vector<long>& v) {
      if (std::all_of(v.begin(), v.end(), [](long x) { return x == 0; })) return false;
      if (bilinear(F, G, v, v) != 0) return false;
      iso = v;
      return true;
    });
    if (iso.empty()) return G;
    // A partner w with B(v, w) != 0 spans a hyperbolic plane with v.
    std::vector<long> w(r, 0);
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<long> e(r, 0);
      e[i] = 1;
      if (bilinear(F, G, iso, e) != 0) {
        w = e;
        break;
      }
    }
    std::vector<std::vector<long>> A(2, std::vector<long>(r, 0));
    for (std::size_t j = 0; j < r; ++j) {
      std::vector<long> e(r, 0);
      e[j] = 1;
      A[0][j] = bilinear(F, G, iso, e);
      A[1][j] = bilinear(F, G, w, e);
    }
    auto basis = nullspace(F, A, r);
    Gram next(basis.size(), std::vector<long>(basis.size()));
    for (std::size_t a = 0; a < basis.size(); ++a)
      for (std::size_t b = 0; b < basis.size(); ++b) next[a][b] = bilinear(F, G, basis[a], basis[b]);
    G = std::move(next);
  }
}

bool isometric(const FiniteField& F, const Gram& A, const Gram& B) {
  const std::size_t r = A.size();
  if (B.size() != r) return false;
  if (r == 0) return true;
  // Search P with P^T A P = B, column by column.
  std::vector<std::vector<long>> cols;
  std::function<bool(std::size_t)> extend = [&](std::size_t k) -> bool {
    if (k == r) return true;
    return for_each_vector(F.q(), r, [&](const std::vector<long>& v) {
      if (bilinear(F, A, v, v) != B[k][k]) return false;
      for (std::size_t j = 0; j < k; ++j)
        if (bilinear(F, A, cols[j], v) != B[j][k]) return false;
      cols.push_back(v);
      if (extend(k + 1)) return true;
      cols.pop_back();
      return false;
    });
  };
  // Nondegenerate target forces P invertible.
  return extend(0);
}

Gram diagonal(const std::vector<long>& d) {
  Gram G(d.size(), std::vector<long>(d.size(), 0));
  for (std::size_t i = 0; i < d.size(); ++i) G[i][i] = d[i];
  return G;
}

Gram orthogonal_sum(const Gram& A, const Gram& B) {
  Gram G(A.size() + B.size(), std::vector<long>(A.size() + B.size(), 0));
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < A.size(); ++j) G[i][j] = A[i][j];
  for (std::size_t i = 0; i < B.size(); ++i)
    for (std::size_t j = 0; j < B.size(); ++j) G[A.size() + i][A.size() + j] = B[i][j];
  return G;
}

Gram tensor(const FiniteField& F, const Gram& A, const Gram& B) {
  const std::size_t n = A.size() * B.size();
  Gram G(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < A.size(); ++j)
      for (std::size_t k = 0; k < B.size(); ++k)
        for (std::size_t l = 0; l < B.size(); ++l) G[i * B.size() + k][j * B.size() + l] = F.mul(A[i][j], B[k][l]);
  return G;
}

struct ClassTable {
  const FiniteField& F;
  std::vector<Gram> reps;

  std::size_t classify(const Gram& G) {
    Gram an = anisotropic_part(F, G);
    for (std::size_t i = 0; i < reps.size(); ++i)
      if (isometric(F, reps[i], an)) return i;
    reps.push_back(an);
    return reps.size() - 1;
  }
};

}  // namespace

WittOracleResult witt_oracle_finite(long q) {
  FiniteField F(q);
  ClassTable table{F, {}};
  table.classify(Gram{});  // zero class first
  // Every diagonal form of rank <= 4 with entries in F_q^*.
  std::vector<long> units;
  for (long a = 1; a < q; ++a) units.push_back(a);
  std::function<void(std::vector<long>&, std::size_t)> walk = [&](std::vector<long>& d, std::size_t start) {
    table.classify(diagonal(d));
    if (d.size() == 4) return;
    for (std::size_t i = start; i < units.size(); ++i) {
      d.push_back(units[i]);
      walk(d, i);
      d.pop_back();
    }
  };
  std::vector<long> d;
  walk(d, 0);

  // The class set is closed under sums; record the Cayley table as relations.
  const std::size_t k = table.reps.size();
  std::vector<std::vector<Integer>> rel;
  {
    std::vector<Integer> zero(k);
    zero[0] = 1;
    rel.push_back(zero);
  }
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b) {
      Gram s = orthogonal_sum(table.reps[a], table.reps[b]);
      std::size_t c = table.classify(s);
      if (c >= k) throw std::logic_error("witt oracle: class set not closed under sums");
      std::vector<Integer> r(k);
      r[a] += 1;
      r[b] += 1;
      r[c] -= 1;
      rel.push_back(r);
    }
  IntMatrix R = IntMatrix::from_columns(rel, k);

  WittOracleResult out;
  out.q = q;
  out.class_count = k;
  out.w = cokernel(R);

  std::vector<std::vector<Integer>> even;
  std::vector<std::size_t> even_idx;
  for (std::size_t a = 0; a < k; ++a)
    if (table.reps[a].size() % 2 == 0) {
      std::vector<Integer> v(k);
      v[a] = 1;
      even.push_back(v);
      even_idx.push_back(a);
    }
  out.ideal = subgroup_generated(IntMatrix::from_columns(even, k), R);
  std::vector<std::vector<Integer>> sq;
  for (std::size_t a : even_idx)
    for (std::size_t b : even_idx) {
      std::size_t c = table.classify(tensor(F, table.reps[a], table.reps[b]));
      if (c >= k) throw std::logic_error("witt oracle: class set not closed under products");
      std::vector<Integer> v(k);
      v[c] = 1;
      sq.push_back(v);
    }
  out.ideal_square = subgroup_generated(IntMatrix::from_columns(sq, k), R);

  // GW as the subgroup of Z x W generated by (1, <a>).
  std::vector<std::vector<Integer>> gens;
  for (long a : units) {
    std::vector<Integer> v(k + 1);
    v[0] = 1;
    v[1 + table.classify(diagonal({a}))] = 1;
    gens.push_back(v);
  }
  IntMatrix Rw(k + 1, R.cols());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < R.cols(); ++j) Rw(i + 1, j) = R(i, j);
  out.gw = subgroup_generated(IntMatrix::from_columns(gens, k + 1), Rw);
  return out;
}

RealOracleResult witt_oracle_real() {
  // Signature of a +-1 diagonal form; hyperbolic <1, -1> has signature 0.
  auto signature = [](const std::vector<int>& d) {
    long s = 0;
    for (int x : d) s += x;
    return s;
  };
  RealOracleResult out;
  // W is the image of the signature on all forms of rank <= 4.
  std::vector<std::vector<Integer>> sigs;
  for (int r = 0; r <= 4; ++r)
    for (int neg = 0; neg <= r; ++neg) {
      std::vector<int> d(static_cast<std::size_t>(r), 1);
      for (int i = 0; i < neg; ++i) d[static_cast<std::size_t>(i)] = -1;
      sigs.push_back({Integer(signature(d))});
    }
  IntMatrix S = IntMatrix::from_columns(sigs, 1);
  out.w = subgroup_generated(S, IntMatrix(1, 0));
  // I^m: signatures of m-fold Pfister forms <1, -a_1> x ... x <1, -a_m>.
  for (int m = 1; m <= 3; ++m) {
    std::vector<std::vector<Integer>> gens;
    for (int mask = 0; mask < (1 << m); ++mask) {
      std::vector<int> form{1};
      for (int i = 0; i < m; ++i) {
        int a = (mask >> i) & 1 ? -1 : 1;
        std::vector<int> next;
        for (int x : form) {
          next.push_back(x);
          next.push_back(-a * x);
        }
        form = next;
      }
      gens.push_back({Integer(signature(form))});
    }
    IntMatrix G = IntMatrix::from_columns(gens, 1);
    out.ideal_powers.push_back(subgroup_generated(G, IntMatrix(1, 0)));
    IntMatrix H = lattice_basis(G);
    IntMatrix Wb = lattice_basis(S);
    out.ideal_power_index.push_back(H.cols() ? Integer(H(0, 0) / Wb(0, 0)) : Integer(0));
  }
  return out;
}

}  // namespace msl
