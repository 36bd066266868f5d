#include "subcodes/matrix.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "subcodes/error.hpp"

namespace subcodes {

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw Error(ErrorKind::FieldMismatch, "matrices over different fields");
}

std::string shape(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw Error(ErrorKind::DimensionMismatch, "entry count does not match " + shape(*this));
  }
  for (Elem e : data_) {
    if (!field_.contains(e)) throw Error(ErrorKind::FieldMismatch, "entry outside the field");
  }
}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::from_rows(const Field& field, const std::vector<std::vector<Elem>>& rows,
                         std::size_t cols) {
  std::vector<Elem> data;
  data.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw Error(ErrorKind::DimensionMismatch, "ragged rows");
    data.insert(data.end(), r.begin(), r.end());
  }
  return Matrix(field, rows.size(), cols, std::move(data));
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
  }
  return t;
}

Matrix Matrix::row_range(std::size_t begin, std::size_t end) const {
  if (begin > end || end > rows_) throw Error(ErrorKind::DimensionMismatch, "row range");
  return Matrix(field_, end - begin, cols_,
                std::vector<Elem>(data_.begin() + static_cast<std::ptrdiff_t>(begin * cols_),
                                  data_.begin() + static_cast<std::ptrdiff_t>(end * cols_)));
}

Matrix Matrix::col_range(std::size_t begin, std::size_t end) const {
  if (begin > end || end > cols_) throw Error(ErrorKind::DimensionMismatch, "column range");
  Matrix out(field_, rows_, end - begin);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = begin; c < end; ++c) out.set(r, c - begin, at(r, c));
  }
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_ && field_ == o.field_;
}

bool Matrix::operator<(const Matrix& o) const {
  if (rows_ != o.rows_) return rows_ < o.rows_;
  if (cols_ != o.cols_) return cols_ < o.cols_;
  return data_ < o.data_;
}

RowEchelon rref(const Matrix& m) {
  const Field& f = m.field();
  Matrix r = m;
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < r.cols() && pivot_row < r.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < r.rows() && r.at(sel, col) == 0) ++sel;
    if (sel == r.rows()) continue;
    if (sel != pivot_row) {
      auto a = r.row(sel);
      auto b = r.row(pivot_row);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    auto prow = r.row(pivot_row);
    const Elem scale = f.inv(prow[col]);
    if (scale != 1) {
      for (std::size_t c = col; c < r.cols(); ++c) prow[c] = f.mul(prow[c], scale);
    }
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == pivot_row) continue;
      auto row = r.row(i);
      const Elem factor = row[col];
      if (factor == 0) continue;
      for (std::size_t c = col; c < r.cols(); ++c) {
        if (prow[c] != 0) row[c] = f.sub(row[c], f.mul(factor, prow[c]));
      }
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return {std::move(r), pivot_row, std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix matmul(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "matmul " + shape(a) + " by " + shape(b));
  }
  const Field& f = a.field();
  Matrix out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto orow = out.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Elem aik = a.at(i, k);
      if (aik == 0) continue;
      auto brow = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (brow[j] != 0) orow[j] = f.add(orow[j], f.mul(aik, brow[j]));
      }
    }
  }
  return out;
}

Matrix matadd(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "matadd " + shape(a) + " and " + shape(b));
  }
  std::vector<Elem> data(a.entries().size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    data[i] = a.field().add(a.entries()[i], b.entries()[i]);
  }
  return Matrix(a.field(), a.rows(), a.cols(), std::move(data));
}

Matrix matsub(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "matsub " + shape(a) + " and " + shape(b));
  }
  std::vector<Elem> data(a.entries().size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    data[i] = a.field().sub(a.entries()[i], b.entries()[i]);
  }
  return Matrix(a.field(), a.rows(), a.cols(), std::move(data));
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "vstack " + shape(a) + " over " + shape(b));
  }
  std::vector<Elem> data = a.entries();
  data.insert(data.end(), b.entries().begin(), b.entries().end());
  return Matrix(a.field(), a.rows() + b.rows(), a.cols(), std::move(data));
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "hstack " + shape(a) + " beside " + shape(b));
  }
  Matrix out(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a.at(r, c));
    for (std::size_t c = 0; c < b.cols(); ++c) out.set(r, a.cols() + c, b.at(r, c));
  }
  return out;
}

Matrix kernel(const Matrix& m) {
  const Field& f = m.field();
  const auto ech = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  const std::size_t nullity = m.cols() - ech.rank;
  Matrix basis(f, nullity, m.cols());
  std::size_t out_row = 0;
  // One basis vector per free column: set it to 1 and solve the pivots.
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis.set(out_row, free, 1);
    for (std::size_t i = 0; i < ech.rank; ++i) {
      basis.set(out_row, ech.pivots[i], f.neg(ech.reduced.at(i, free)));
    }
    ++out_row;
  }
  return basis;
}

Matrix random_matrix(std::size_t rows, std::size_t cols, const Field& field, Rng& rng) {
  std::vector<Elem> data(rows * cols);
  for (auto& e : data) e = static_cast<Elem>(rng.below(field.order()));
  return Matrix(field, rows, cols, std::move(data));
}

Matrix random_matrix(std::size_t rows, std::size_t cols, const Field& field, std::uint64_t seed) {
  Rng rng(seed);
  return random_matrix(rows, cols, field, rng);
}

Matrix random_max_rank(std::size_t rows, std::size_t cols, const Field& field, Rng& rng) {
  const std::size_t target = std::min(rows, cols);
  while (true) {
    Matrix m = random_matrix(rows, cols, field, rng);
    if (rank(m) == target) return m;
  }
}

Matrix random_full_rank(std::size_t n, const Field& field, Rng& rng) {
  if (n == 0) throw Error(ErrorKind::ParamViolation, "random_full_rank needs n >= 1");
  return random_max_rank(n, n, field, rng);
}

Matrix random_full_rank(std::size_t n, const Field& field, std::uint64_t seed) {
  Rng rng(seed);
  return random_full_rank(n, field, rng);
}

void write_matrix(std::ostream& os, const Matrix& m) {
  os << "gf=" << m.field().literal() << " rows=" << m.rows() << " cols=" << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ' ';
      os << m.at(r, c);
    }
    os << '\n';
  }
}

Matrix read_matrix(std::istream& is) {
  std::string header;
  while (header.find_first_not_of(" \t\r") == std::string::npos) {
    if (!std::getline(is, header)) throw Error(ErrorKind::ParseError, "missing matrix header");
  }
  std::istringstream hs(header);
  std::string tok;
  std::optional<Field> field;
  std::optional<std::size_t> rows, cols;
  while (hs >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::ParseError, "bad header token '" + tok + "'");
    const std::string key = tok.substr(0, eq);
    const std::string value = tok.substr(eq + 1);
    try {
      if (key == "gf") {
        field = Field::parse(value);
      } else if (key == "rows") {
        rows = std::stoull(value);
      } else if (key == "cols") {
        cols = std::stoull(value);
      } else {
        throw Error(ErrorKind::ParseError, "unknown header key '" + key + "'");
      }
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::ParseError, "bad header value '" + tok + "'");
    }
  }
  if (!field || !rows || !cols) {
    throw Error(ErrorKind::ParseError, "header needs gf=, rows= and cols=: '" + header + "'");
  }
  std::vector<Elem> data;
  data.reserve(*rows * *cols);
  for (std::size_t r = 0; r < *rows; ++r) {
    std::string line;
    if (!std::getline(is, line)) {
      throw Error(ErrorKind::ParseError, "expected " + std::to_string(*rows) + " rows");
    }
    std::istringstream ls(line);
    std::size_t count = 0;
    unsigned long long v;
    while (ls >> v) {
      if (v >= field->order()) {
        throw Error(ErrorKind::ParseError, "entry " + std::to_string(v) + " outside the field");
      }
      data.push_back(static_cast<Elem>(v));
      ++count;
    }
    if (!ls.eof() || count != *cols) {
      throw Error(ErrorKind::ParseError, "row " + std::to_string(r) + " needs " +
                                             std::to_string(*cols) + " integer entries");
    }
  }
  return Matrix(*field, *rows, *cols, std::move(data));
}

}  // namespace subcodes
