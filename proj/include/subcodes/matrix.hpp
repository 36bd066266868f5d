#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "subcodes/finite_field.hpp"
#include "subcodes/rng.hpp"

namespace subcodes {

/// Dense row-major matrix over a finite field. Zero rows or zero columns are
/// legal and stand for trivial spaces.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

  static Matrix identity(const Field& field, std::size_t n);
  static Matrix from_rows(const Field& field, const std::vector<std::vector<Elem>>& rows,
                          std::size_t cols);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Elem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Elem v) { data_[r * cols_ + c] = v; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  const std::vector<Elem>& entries() const { return data_; }

  bool is_zero() const;
  Matrix transpose() const;
  /// Rows [begin, end) as a new matrix.
  Matrix row_range(std::size_t begin, std::size_t end) const;
  /// Columns [begin, end) as a new matrix.
  Matrix col_range(std::size_t begin, std::size_t end) const;

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  // Total order on shape then entries; field identity is not part of the key.
  bool operator<(const Matrix& o) const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

struct RowEchelon {
  Matrix reduced;  // same shape as the input, zero rows last
  std::size_t rank;
  std::vector<std::size_t> pivots;  // strictly increasing column indices
};

/// Reduced row echelon form by Gauss-Jordan elimination with first-nonzero
/// pivoting. The result is unique, so it doubles as a canonical form.
RowEchelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix matadd(const Matrix& a, const Matrix& b);
Matrix matsub(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix hstack(const Matrix& a, const Matrix& b);

/// Basis (as rows) of the right null space {x : m x^T = 0}.
Matrix kernel(const Matrix& m);

Matrix random_matrix(std::size_t rows, std::size_t cols, const Field& field, Rng& rng);
Matrix random_matrix(std::size_t rows, std::size_t cols, const Field& field, std::uint64_t seed);
/// Invertible n x n matrix by rejection sampling.
Matrix random_full_rank(std::size_t n, const Field& field, Rng& rng);
Matrix random_full_rank(std::size_t n, const Field& field, std::uint64_t seed);
/// rows x cols matrix of rank min(rows, cols) by rejection sampling.
Matrix random_max_rank(std::size_t rows, std::size_t cols, const Field& field, Rng& rng);

/// Text format: header "gf=<literal> rows=<r> cols=<c>", then one line per
/// row with space-separated element encodings.
void write_matrix(std::ostream& os, const Matrix& m);
Matrix read_matrix(std::istream& is);

}  // namespace subcodes
