#include "msl/int_matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace msl {

namespace {

void swap_rows(IntMatrix& A, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < A.cols(); ++j) std::swap(A(a, j), A(b, j));
}

void swap_cols(IntMatrix& A, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < A.rows(); ++i) std::swap(A(i, a), A(i, b));
}

void add_row_multiple(IntMatrix& A, std::size_t target, std::size_t source, const Integer& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < A.cols(); ++j)
    if (A(source, j) != 0) A(target, j) += k * A(source, j);
}

void add_col_multiple(IntMatrix& A, std::size_t target, std::size_t source, const Integer& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < A.rows(); ++i)
    if (A(i, source) != 0) A(i, target) += k * A(i, source);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Nearest integer to a / b.
Integer round_div(const Integer& a, const Integer& b) {
  Integer twice = 2 * a + b;
  Integer q;
  Integer den = 2 * b;
  mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), den.get_mpz_t());
  return q;
}

template <bool Track>
void smith_impl(IntMatrix& D, IntMatrix* U, IntMatrix* V) {
  const std::size_t r = D.rows(), c = D.cols();
  std::size_t t = 0;
  while (t < r && t < c) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    bool found = false;
    std::size_t pi = t, pj = t;
    Integer best;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j) {
        if (D(i, j) == 0) continue;
        Integer a = abs(D(i, j));
        if (!found || a < best) {
          best = a;
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    swap_rows(D, t, pi);
    swap_cols(D, t, pj);
    if constexpr (Track) {
      swap_rows(*U, t, pi);
      swap_cols(*V, t, pj);
    }
    for (;;) {
      // Reduce the pivot row and column by rounded quotients; a smaller
      // remainder becomes the new pivot.
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (D(i, t) == 0) continue;
        Integer q = round_div(D(i, t), D(t, t));
        add_row_multiple(D, i, t, -q);
        if constexpr (Track) add_row_multiple(*U, i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (D(t, j) == 0) continue;
        Integer q = round_div(D(t, j), D(t, t));
        add_col_multiple(D, j, t, -q);
        if constexpr (Track) add_col_multiple(*V, j, t, -q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) {
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < r; ++i)
          if (D(i, t) != 0 && abs(D(i, t)) < abs(D(bi, bj))) bi = i, bj = t;
        for (std::size_t j = t + 1; j < c; ++j)
          if (D(t, j) != 0 && abs(D(t, j)) < abs(D(bi, bj))) bi = t, bj = j;
        swap_rows(D, t, bi);
        swap_cols(D, t, bj);
        if constexpr (Track) {
          swap_rows(*U, t, bi);
          swap_cols(*V, t, bj);
        }
        continue;
      }
      // Divisibility: fold any offending row into the pivot row and repeat.
      bool divides = true;
      for (std::size_t i = t + 1; i < r && divides; ++i)
        for (std::size_t j = t + 1; j < c; ++j) {
          if (D(i, j) == 0) continue;
          Integer rem;
          mpz_tdiv_r(rem.get_mpz_t(), D(i, j).get_mpz_t(), D(t, t).get_mpz_t());
          if (rem != 0) {
            add_row_multiple(D, t, i, 1);
            if constexpr (Track) add_row_multiple(*U, t, i, 1);
            divides = false;
            break;
          }
        }
      if (divides) break;
    }
    if (D(t, t) < 0) {
      for (std::size_t j = 0; j < c; ++j) D(t, j) = -D(t, j);
      if constexpr (Track)
        for (std::size_t j = 0; j < r; ++j) (*U)(t, j) = -(*U)(t, j);
    }
    ++t;
  }
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& M) {
  SmithForm f{IntMatrix::identity(M.rows()), M, IntMatrix::identity(M.cols())};
  smith_impl<true>(f.D, &f.U, &f.V);
  return f;
}

std::vector<Integer> smith_invariants(const IntMatrix& M) {
  IntMatrix D = M;
  smith_impl<false>(D, nullptr, nullptr);
  std::vector<Integer> out;
  for (std::size_t i = 0; i < D.rows() && i < D.cols(); ++i)
    if (D(i, i) != 0) out.push_back(D(i, i));
  return out;
}

ColumnHermiteForm column_hermite_form(const IntMatrix& M) {
  ColumnHermiteForm f{M, IntMatrix::identity(M.cols()), 0};
  IntMatrix& H = f.H;
  IntMatrix& V = f.V;
  const std::size_t r = H.rows(), c = H.cols();
  std::size_t pc = 0;
  for (std::size_t i = 0; i < r && pc < c; ++i) {
    // Euclid on the row: move the smallest entry to the pivot column and
    // reduce the others by rounded quotients until only the pivot is left.
    for (;;) {
      std::size_t best = c;
      for (std::size_t j = pc; j < c; ++j)
        if (H(i, j) != 0 && (best == c || abs(H(i, j)) < abs(H(i, best)))) best = j;
      if (best == c) break;
      swap_cols(H, pc, best);
      swap_cols(V, pc, best);
      bool done = true;
      for (std::size_t j = pc + 1; j < c; ++j) {
        if (H(i, j) == 0) continue;
        Integer q = round_div(H(i, j), H(i, pc));
        add_col_multiple(H, j, pc, -q);
        add_col_multiple(V, j, pc, -q);
        if (H(i, j) != 0) done = false;
      }
      if (done) break;
    }
    if (H(i, pc) == 0) continue;
    if (H(i, pc) < 0) {
      for (std::size_t k = 0; k < r; ++k) H(k, pc) = -H(k, pc);
      for (std::size_t k = 0; k < V.rows(); ++k) V(k, pc) = -V(k, pc);
    }
    for (std::size_t k = 0; k < pc; ++k) {
      Integer q = floor_div(H(i, k), H(i, pc));
      if (q != 0) {
        add_col_multiple(H, k, pc, -q);
        add_col_multiple(V, k, pc, -q);
      }
    }
    ++pc;
  }
  f.rank = pc;
  return f;
}

std::size_t rank(const IntMatrix& M) { return smith_invariants(M).size(); }

IntMatrix lattice_basis(const IntMatrix& generators) {
  auto f = column_hermite_form(generators);
  return f.H.column_block(0, f.rank);
}

IntMatrix kernel_lattice(const IntMatrix& M) {
  auto f = column_hermite_form(M);
  IntMatrix K = f.V.column_block(f.rank, M.cols() - f.rank);
  if (K.cols() == 0) return K;
  return lattice_basis(K);
}

namespace {

std::optional<std::vector<Integer>> solve_echelon(const IntMatrix& H, std::size_t rank,
                                                  const std::vector<Integer>& v) {
  std::vector<Integer> y(rank);
  std::size_t row = 0;
  for (std::size_t j = 0; j < rank; ++j) {
    while (row < H.rows() && H(row, j) == 0) ++row;
    if (row == H.rows()) return std::nullopt;
    Integer acc = v[row];
    for (std::size_t l = 0; l < j; ++l) acc -= H(row, l) * y[l];
    Integer rem;
    mpz_tdiv_r(rem.get_mpz_t(), acc.get_mpz_t(), H(row, j).get_mpz_t());
    if (rem != 0) return std::nullopt;
    y[j] = exact_div(acc, H(row, j));
    ++row;
  }
  for (std::size_t i = 0; i < H.rows(); ++i) {
    Integer acc = 0;
    for (std::size_t j = 0; j < rank; ++j) acc += H(i, j) * y[j];
    if (acc != v[i]) return std::nullopt;
  }
  return y;
}

}  // namespace

std::optional<std::vector<Integer>> solve_in_lattice(const IntMatrix& B, const std::vector<Integer>& v) {
  if (v.size() != B.rows()) throw std::invalid_argument("solve_in_lattice: dimension mismatch");
  auto f = column_hermite_form(B);
  if (f.rank != B.cols()) throw std::invalid_argument("solve_in_lattice: basis is not independent");
  auto y = solve_echelon(f.H, f.rank, v);
  if (!y) return std::nullopt;
  std::vector<Integer> c(B.cols());
  for (std::size_t i = 0; i < B.cols(); ++i)
    for (std::size_t j = 0; j < f.rank; ++j) c[i] += f.V(i, j) * (*y)[j];
  return c;
}

bool in_span(const IntMatrix& generators, const std::vector<Integer>& v) {
  if (generators.cols() == 0) {
    for (const auto& x : v)
      if (x != 0) return false;
    return true;
  }
  auto f = column_hermite_form(generators);
  return solve_echelon(f.H, f.rank, v).has_value();
}

RatMatrix to_rational(const IntMatrix& M) {
  RatMatrix R(M.rows(), M.cols());
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) R(i, j) = M(i, j);
  return R;
}

std::optional<RatMatrix> inverse(const RatMatrix& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = M.rows();
  RatMatrix A = M;
  RatMatrix I = RatMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && A(piv, col) == 0) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(A(piv, j), A(col, j));
        std::swap(I(piv, j), I(col, j));
      }
    Rational inv = 1 / A(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      A(col, j) *= inv;
      I(col, j) *= inv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || A(i, col) == 0) continue;
      Rational f = A(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        if (A(col, j) != 0) A(i, j) -= f * A(col, j);
        if (I(col, j) != 0) I(i, j) -= f * I(col, j);
      }
    }
  }
  return I;
}

Integer determinant(const IntMatrix& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = M.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix A = M;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (A(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && A(p, k) == 0) ++p;
      if (p == n) return 0;
      swap_rows(A, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) A(i, j) = exact_div(A(i, j) * A(k, k) - A(i, k) * A(k, j), prev);
    prev = A(k, k);
  }
  return sign * A(n - 1, n - 1);
}

std::string to_csv(const IntMatrix& M) {
  std::ostringstream os;
  for (std::size_t i = 0; i < M.rows(); ++i) {
    for (std::size_t j = 0; j < M.cols(); ++j) {
      if (j) os << ',';
      os << M(i, j).get_str();
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace msl
