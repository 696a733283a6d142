#pragma once

#include "valg/matrix.hpp"

#include <optional>
#include <vector>

namespace valg {

struct RrefResult {
  RatMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Unique reduced row-echelon form of m.
RrefResult rref(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Basis of {x : m x = 0}, one vector per free column, in column order.
std::vector<Vec> kernel_basis(const RatMatrix& m);

struct LinearSolution {
  Vec particular;
  std::vector<Vec> kernel;
};

/// Exact solution set of a x = b; std::nullopt when the system is infeasible.
/// The particular solution sets every free variable to zero.
std::optional<LinearSolution> solve_linear(const RatMatrix& a, const Vec& b);

/// Inverse of a square matrix, or std::nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

/// Characteristic polynomial det(tI - m), coefficients from t^0 upward
/// (monic, so the last coefficient is 1). Faddeev-LeVerrier recurrence.
std::vector<Rat> char_poly(const RatMatrix& m);

/// Distinct rational roots of a polynomial given from t^0 upward, in
/// increasing order. Returns std::nullopt if the rational-root candidate
/// search would have to factor an integer beyond the built-in bound.
std::optional<std::vector<Rat>> rational_roots(const std::vector<Rat>& poly);

Rat poly_eval(const std::vector<Rat>& poly, const Rat& t);

}  // namespace valg
