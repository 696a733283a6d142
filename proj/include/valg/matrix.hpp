#pragma once

#include "valg/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace valg {

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rat> entries);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static RatMatrix from_columns(const std::vector<Vec>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;
  std::vector<Vec> row_list() const;

  /// Row-major entries, also used as the coordinates of the matrix inside
  /// the rows*cols dimensional operator space.
  const std::vector<Rat>& entries() const { return data_; }

  RatMatrix transpose() const;
  bool is_zero() const;
  Rat trace() const;

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
Vec operator*(const RatMatrix& a, const Vec& v);
RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const Rat& s, const RatMatrix& a);

std::string to_string(const RatMatrix& m);

}  // namespace valg
