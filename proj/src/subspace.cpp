#include "valg/subspace.hpp"

#include <stdexcept>

namespace valg {

Subspace::Subspace(std::size_t ambient, RatMatrix basis, std::vector<std::size_t> pivots)
    : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

Subspace Subspace::zero(std::size_t ambient) { return Subspace(ambient, RatMatrix(0, ambient), {}); }

Subspace Subspace::full(std::size_t ambient) {
  std::vector<std::size_t> piv(ambient);
  for (std::size_t i = 0; i < ambient; ++i) piv[i] = i;
  return Subspace(ambient, RatMatrix::identity(ambient), std::move(piv));
}

Subspace Subspace::span(std::size_t ambient, std::span<const Vec> vectors) {
  if (vectors.empty()) return zero(ambient);
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw std::invalid_argument("span: vector length does not match ambient dimension");
  }
  auto red = rref(RatMatrix::from_rows(std::vector<Vec>(vectors.begin(), vectors.end()), ambient));
  RatMatrix basis(red.rank, ambient);
  for (std::size_t r = 0; r < red.rank; ++r)
    for (std::size_t c = 0; c < ambient; ++c) basis(r, c) = red.reduced(r, c);
  return Subspace(ambient, std::move(basis), std::move(red.pivots));
}

Subspace Subspace::span(std::size_t ambient, std::initializer_list<Vec> vectors) {
  return span(ambient, std::span<const Vec>(vectors.begin(), vectors.size()));
}

std::vector<std::size_t> Subspace::complement_columns() const {
  std::vector<bool> is_pivot(ambient_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < ambient_; ++c)
    if (!is_pivot[c]) out.push_back(c);
  return out;
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("reduce: vector length does not match ambient dimension");
  Vec r = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    Rat f = r[pivots_[i]];
    if (f == 0) continue;
    for (std::size_t c = 0; c < ambient_; ++c) {
      if (basis_(i, c) != 0) r[c] -= f * basis_(i, c);
    }
  }
  return r;
}

bool Subspace::contains(const Vec& w) const { return valg::is_zero(reduce(w)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("contains: ambient dimension mismatch");
  for (std::size_t r = 0; r < other.dim(); ++r) {
    if (!contains(other.basis_.row(r))) return false;
  }
  return true;
}

Vec Subspace::quotient_coords(const Vec& v) const {
  Vec r = reduce(v);
  auto cols = complement_columns();
  Vec out(cols.size());
  for (std::size_t i = 0; i < cols.size(); ++i) out[i] = r[cols[i]];
  return out;
}

Vec Subspace::lift(const Vec& q) const {
  auto cols = complement_columns();
  if (q.size() != cols.size()) throw std::invalid_argument("lift: quotient coordinate length mismatch");
  Vec out = zero_vec(ambient_);
  for (std::size_t i = 0; i < cols.size(); ++i) out[cols[i]] = q[i];
  return out;
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw std::invalid_argument("subspace_sum: ambient dimension mismatch");
  auto rows = u.basis_vectors();
  for (auto& r : v.basis_vectors()) rows.push_back(std::move(r));
  return Subspace::span(u.ambient_dim(), rows);
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw std::invalid_argument("subspace_intersect: ambient dimension mismatch");
  const std::size_t n = u.ambient_dim();
  const std::size_t du = u.dim();
  const std::size_t dv = v.dim();
  // columns: basis of u, then minus basis of v; kernel pairs (x, y) with Ux = Vy
  RatMatrix stacked(n, du + dv);
  for (std::size_t i = 0; i < du; ++i)
    for (std::size_t c = 0; c < n; ++c) stacked(c, i) = u.basis()(i, c);
  for (std::size_t j = 0; j < dv; ++j)
    for (std::size_t c = 0; c < n; ++c) stacked(c, du + j) = -v.basis()(j, c);
  std::vector<Vec> out;
  for (const auto& k : kernel_basis(stacked)) {
    Vec w = zero_vec(n);
    for (std::size_t i = 0; i < du; ++i) axpy(w, k[i], u.basis().row(i));
    out.push_back(std::move(w));
  }
  return Subspace::span(n, out);
}

bool contains(const Subspace& u, const Vec& w) {
  if (w.size() != u.ambient_dim()) throw std::invalid_argument("contains: ambient dimension mismatch");
  return u.contains(w);
}

Subspace image(const RatMatrix& map, const Subspace& s) {
  if (map.cols() != s.ambient_dim()) throw std::invalid_argument("image: shape mismatch");
  std::vector<Vec> out;
  for (const auto& b : s.basis_vectors()) out.push_back(map * b);
  return Subspace::span(map.rows(), out);
}

Subspace column_space(const RatMatrix& m) { return image(m, Subspace::full(m.cols())); }

Subspace kernel(const RatMatrix& m) { return Subspace::span(m.cols(), kernel_basis(m)); }

Subspace spin(std::size_t ambient, std::span<const Vec> seed, std::span<const RatMatrix> ops) {
  for (const auto& op : ops) {
    if (op.rows() != ambient || op.cols() != ambient) throw std::invalid_argument("spin: operator is not square of ambient dimension");
  }
  Subspace current = Subspace::span(ambient, seed);
  std::vector<Vec> frontier = current.basis_vectors();
  std::size_t rounds = 0;
  while (!frontier.empty()) {
    if (++rounds > ambient + 1) throw std::logic_error("spin: closure did not stabilize within ambient_dim + 1 rounds");
    std::vector<Vec> next;
    std::vector<Vec> grown = current.basis_vectors();
    for (const auto& v : frontier) {
      for (const auto& op : ops) {
        Vec w = op * v;
        Vec r = current.reduce(w);
        if (is_zero(r)) continue;
        grown.push_back(w);
        current = Subspace::span(ambient, grown);
        next.push_back(std::move(w));
      }
    }
    frontier = std::move(next);
  }
  return current;
}

Subspace envelope(std::span<const RatMatrix> ops, std::size_t dim) {
  for (const auto& op : ops) {
    if (op.rows() != dim || op.cols() != dim) throw std::invalid_argument("envelope: operator is not square of the given size");
  }
  const std::size_t ambient = dim * dim;
  RatMatrix id = RatMatrix::identity(dim);
  std::vector<Vec> grown{id.entries()};
  Subspace current = Subspace::span(ambient, grown);
  std::vector<RatMatrix> frontier{id};
  std::size_t rounds = 0;
  while (!frontier.empty()) {
    if (++rounds > ambient + 1) throw std::logic_error("envelope: closure did not stabilize within dim^2 + 1 rounds");
    std::vector<RatMatrix> next;
    for (const auto& b : frontier) {
      for (const auto& g : ops) {
        RatMatrix p = g * b;
        if (current.contains(p.entries())) continue;
        grown.push_back(p.entries());
        current = Subspace::span(ambient, grown);
        next.push_back(std::move(p));
      }
    }
    frontier = std::move(next);
  }
  return current;
}

std::string to_string(const Subspace& s) {
  if (s.is_zero()) return "0";
  std::string out = "span{";
  for (std::size_t r = 0; r < s.dim(); ++r) {
    if (r) out += ", ";
    out += to_string(s.basis().row(r));
  }
  return out + "}";
}

}  // namespace valg
