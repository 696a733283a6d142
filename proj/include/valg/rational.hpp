#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace valg {

/// Exact rational scalar. GMP keeps every arithmetic result in lowest terms
/// with a positive denominator; zero is 0/1.
using Rat = mpq_class;

/// Dense coordinate vector with respect to some fixed basis.
using Vec = std::vector<Rat>;

/// Parses "p/q" or "p" (optional leading '-'), canonicalizing the result.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rat parse_rat(std::string_view text);

/// Canonical string: "p/q", or "p" when q = 1; the sign sits on p.
std::string to_string(const Rat& r);

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Rat& s, const Vec& v);
Vec& operator+=(Vec& a, const Vec& b);

/// a += s * b
void axpy(Vec& a, const Rat& s, const Vec& b);

std::string to_string(const Vec& v);

}  // namespace valg
