#pragma once

#include "valg/linalg.hpp"

#include <span>
#include <string>
#include <vector>

namespace valg {

/// Subspace of Q^n stored by its reduced row-echelon basis, so equality of
/// subspaces is equality of basis matrices.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  static Subspace span(std::size_t ambient, std::span<const Vec> vectors);
  static Subspace span(std::size_t ambient, std::initializer_list<Vec> vectors);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  const RatMatrix& basis() const { return basis_; }
  std::vector<Vec> basis_vectors() const { return basis_.row_list(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Columns that are not pivots; the standard vectors on these columns
  /// form the canonical complement used for quotient coordinates.
  std::vector<std::size_t> complement_columns() const;

  bool contains(const Vec& w) const;
  bool contains(const Subspace& other) const;

  /// Reduces v modulo this subspace (zeroes every pivot entry).
  Vec reduce(const Vec& v) const;

  /// Coordinates of v + S in the quotient, on the complement basis.
  Vec quotient_coords(const Vec& v) const;

  /// Representative of a quotient class supported on the complement columns.
  Vec lift(const Vec& quotient_coordinates) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Subspace(std::size_t ambient, RatMatrix basis, std::vector<std::size_t> pivots);

  std::size_t ambient_ = 0;
  RatMatrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const Subspace& u, const Subspace& v);
bool contains(const Subspace& u, const Vec& w);

/// Image of a subspace under a linear map (matrix acting on columns).
Subspace image(const RatMatrix& map, const Subspace& s);
Subspace column_space(const RatMatrix& m);
Subspace kernel(const RatMatrix& m);

/// Smallest subspace containing every seed vector and invariant under every
/// operator. Throws std::invalid_argument on a shape mismatch and
/// std::logic_error if the closure loop exceeds its round bound.
Subspace spin(std::size_t ambient, std::span<const Vec> seed, std::span<const RatMatrix> ops);

/// Unital associative algebra generated by ops inside the dim*dim operator
/// space (matrices flattened row-major).
Subspace envelope(std::span<const RatMatrix> ops, std::size_t dim);

std::string to_string(const Subspace& s);

}  // namespace valg
