#include "valg/matrix.hpp"

#include <stdexcept>

namespace valg {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rat> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw std::invalid_argument("matrix entry count does not match shape");
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
  RatMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vec RatMatrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec RatMatrix::column(std::size_t c) const {
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

std::vector<Vec> RatMatrix::row_list() const {
  std::vector<Vec> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

Rat RatMatrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
  Rat t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  RatMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rat& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(k, j) != 0) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

Vec operator*(const RatMatrix& a, const Vec& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  Vec out = zero_vec(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (v[k] != 0 && a(i, k) != 0) out[i] += a(i, k) * v[k];
    }
  }
  return out;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum shape mismatch");
  std::vector<Rat> e(a.entries().size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.entries()[i] + b.entries()[i];
  return RatMatrix(a.rows(), a.cols(), std::move(e));
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  return a + Rat(-1) * b;
}

RatMatrix operator*(const Rat& s, const RatMatrix& a) {
  std::vector<Rat> e(a.entries().size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = s * a.entries()[i];
  return RatMatrix(a.rows(), a.cols(), std::move(e));
}

std::string to_string(const RatMatrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) out += ", ";
    out += to_string(m.row(r));
  }
  return out + "]";
}

}  // namespace valg
