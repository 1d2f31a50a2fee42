#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "msl/integer.hpp"

namespace msl {

// Dense matrix with exact entries. Scalar is Integer or Rational.
template <typename Scalar>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static DenseMatrix from_rows(const std::vector<std::vector<Scalar>>& rows) {
    DenseMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < m.rows_; ++i)
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i].at(j);
    return m;
  }

  static DenseMatrix from_columns(const std::vector<std::vector<Scalar>>& cols, std::size_t rows) {
    DenseMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j].at(i);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Scalar> column(std::size_t j) const {
    std::vector<Scalar> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  std::vector<std::vector<Scalar>> columns() const {
    std::vector<std::vector<Scalar>> out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
    return out;
  }

  DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  // Columns [first, first + count).
  DenseMatrix column_block(std::size_t first, std::size_t count) const {
    DenseMatrix b(rows_, count);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < count; ++j) b(i, j) = (*this)(i, first + j);
    return b;
  }

  DenseMatrix row_block(std::size_t first, std::size_t count) const {
    DenseMatrix b(count, cols_);
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < cols_; ++j) b(i, j) = (*this)(first + i, j);
    return b;
  }

  // [this | other]
  DenseMatrix hconcat(const DenseMatrix& other) const {
    DenseMatrix m(rows_, cols_ + other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
      for (std::size_t j = 0; j < other.cols_; ++j) m(i, cols_ + j) = other(i, j);
    }
    return m;
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (v != 0) return false;
    return true;
  }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend std::vector<Scalar> operator*(const DenseMatrix& a, const std::vector<Scalar>& v) {
    std::vector<Scalar> out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k)
        if (a(i, k) != 0) out[i] += a(i, k) * v[k];
    return out;
  }

  friend DenseMatrix operator-(const DenseMatrix& a) {
    DenseMatrix n = a;
    for (auto& v : n.data_) v = -v;
    return n;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

using IntMatrix = DenseMatrix<Integer>;
using RatMatrix = DenseMatrix<Rational>;

struct SmithForm {
  IntMatrix U;  // rows x rows, unimodular
  IntMatrix D;  // rows x cols, diagonal, d_1 | d_2 | ...
  IntMatrix V;  // cols x cols, unimodular
};

// U * M * V = D.
SmithForm smith_normal_form(const IntMatrix& M);

// Diagonal of the Smith form only (no transforms).
std::vector<Integer> smith_invariants(const IntMatrix& M);

struct ColumnHermiteForm {
  IntMatrix H;  // M * V, column echelon; the first `rank` columns are nonzero
  IntMatrix V;  // unimodular
  std::size_t rank = 0;
};

// Column-style Hermite normal form: pivots have positive value and the
// entries to the left of a pivot in its row are reduced into [0, pivot).
ColumnHermiteForm column_hermite_form(const IntMatrix& M);

std::size_t rank(const IntMatrix& M);

// Columns form a Z-basis of {v : M v = 0}, in Hermite-reduced form.
IntMatrix kernel_lattice(const IntMatrix& M);

// Canonical Hermite basis (nonzero columns) of the column span.
IntMatrix lattice_basis(const IntMatrix& generators);

// Integer c with B c = v, when B has full column rank; nullopt when no
// integer (or no rational) solution exists.
std::optional<std::vector<Integer>> solve_in_lattice(const IntMatrix& B, const std::vector<Integer>& v);

// True when v lies in the Z-span of the columns of generators.
bool in_span(const IntMatrix& generators, const std::vector<Integer>& v);

RatMatrix to_rational(const IntMatrix& M);
std::optional<RatMatrix> inverse(const RatMatrix& M);
Integer determinant(const IntMatrix& M);

std::string to_csv(const IntMatrix& M);

}  // namespace msl
