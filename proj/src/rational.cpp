#include "valg/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace valg {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  if (text.front() == '-') n = -n;
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(10); }

Vec zero_vec(std::size_t n) { return Vec(n, Rat(0)); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n, Rat(0));
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

Vec operator+(const Vec& a, const Vec& b) {
  Vec out = a;
  out += b;
  return out;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec operator-(const Vec& a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

Vec operator*(const Rat& s, const Vec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

Vec& operator+=(Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

void axpy(Vec& a, const Rat& s, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  if (s == 0) return;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] != 0) a[i] += s * b[i];
  }
}

std::string to_string(const Vec& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  out += "]";
  return out;
}

}  // namespace valg
