#include "valg/trilinear.hpp"

#include <stdexcept>

namespace valg {

Trilinear::Trilinear(std::size_t d_left, std::size_t d_right, std::size_t d_out)
    : dl_(d_left), dr_(d_right), do_(d_out), c_(d_left * d_right * d_out, Rat(0)) {}

Vec Trilinear::basis_product(std::size_t i, std::size_t j) const {
  if (i >= dl_ || j >= dr_) throw std::out_of_range("Trilinear::basis_product index out of range");
  Vec out(do_);
  for (std::size_t k = 0; k < do_; ++k) out[k] = c_[index(i, j, k)];
  return out;
}

Vec Trilinear::apply(const Vec& x, const Vec& y) const {
  if (x.size() != dl_ || y.size() != dr_) throw std::invalid_argument("Trilinear::apply: argument length mismatch");
  Vec out = zero_vec(do_);
  for (std::size_t i = 0; i < dl_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dr_; ++j) {
      if (y[j] == 0) continue;
      Rat s = x[i] * y[j];
      for (std::size_t k = 0; k < do_; ++k) {
        const Rat& c = c_[index(i, j, k)];
        if (c != 0) out[k] += s * c;
      }
    }
  }
  return out;
}

RatMatrix Trilinear::left_operator(std::size_t i) const {
  RatMatrix m(do_, dr_);
  for (std::size_t j = 0; j < dr_; ++j)
    for (std::size_t k = 0; k < do_; ++k) m(k, j) = c_[index(i, j, k)];
  return m;
}

RatMatrix Trilinear::left_operator(const Vec& x) const {
  if (x.size() != dl_) throw std::invalid_argument("Trilinear::left_operator: argument length mismatch");
  RatMatrix m(do_, dr_);
  for (std::size_t i = 0; i < dl_; ++i) {
    if (x[i] == 0) continue;
    m = m + x[i] * left_operator(i);
  }
  return m;
}

RatMatrix Trilinear::right_operator(std::size_t j) const {
  RatMatrix m(do_, dl_);
  for (std::size_t i = 0; i < dl_; ++i)
    for (std::size_t k = 0; k < do_; ++k) m(k, i) = c_[index(i, j, k)];
  return m;
}

bool Trilinear::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

}  // namespace valg
