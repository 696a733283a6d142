#pragma once

#include "valg/matrix.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace valg {

/// Bilinear operation given by structure constants:
///   (b_i o b_j) = sum_k c[i][j][k] b_k
/// with b_i from a left space of dimension d_left, b_j from a right space of
/// dimension d_right and the result in a space of dimension d_out.
class Trilinear {
 public:
  Trilinear() = default;
  Trilinear(std::size_t d_left, std::size_t d_right, std::size_t d_out);

  std::size_t d_left() const { return dl_; }
  std::size_t d_right() const { return dr_; }
  std::size_t d_out() const { return do_; }
  std::array<std::size_t, 3> dims() const { return {dl_, dr_, do_}; }

  Rat& at(std::size_t i, std::size_t j, std::size_t k) { return c_[index(i, j, k)]; }
  const Rat& at(std::size_t i, std::size_t j, std::size_t k) const { return c_[index(i, j, k)]; }

  /// Product of two basis elements as an output-space vector.
  Vec basis_product(std::size_t i, std::size_t j) const;

  /// Bilinear extension to arbitrary vectors.
  Vec apply(const Vec& x, const Vec& y) const;

  /// Matrix (d_out x d_right) of y -> b_i o y.
  RatMatrix left_operator(std::size_t i) const;
  /// Matrix (d_out x d_right) of y -> x o y.
  RatMatrix left_operator(const Vec& x) const;
  /// Matrix (d_out x d_left) of x -> x o b_j.
  RatMatrix right_operator(std::size_t j) const;

  bool is_zero() const;
  const std::vector<Rat>& constants() const { return c_; }

  friend bool operator==(const Trilinear& a, const Trilinear& b) = default;

 private:
  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const { return (i * dr_ + j) * do_ + k; }

  std::size_t dl_ = 0;
  std::size_t dr_ = 0;
  std::size_t do_ = 0;
  std::vector<Rat> c_;
};

}  // namespace valg
