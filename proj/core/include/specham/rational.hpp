#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace specham {

using Int = mpz_class;
using Rational = mpq_class;

// mpq_class(p, q) does not canonicalize; every construction goes through here.
Rational make_rational(long num, long den = 1);
Rational make_rational(const Int& num, const Int& den);

// Accepts "p/q", plain integers, decimals ("0.25") and scientific
// notation ("1e-12", "2.5e3"); the result is exact.
Rational parse_rational(const std::string& text);

std::string to_fraction_string(const Rational& q);  // always "p/q"
double to_double(const Rational& q);

// ceil(x * 2^bits) / 2^bits
Rational round_up_dyadic(const Rational& x, unsigned bits);

// Upper bound on sqrt(r) with error < 2^-bits; exact when r is a
// perfect square of a rational. r must be >= 0.
Rational sqrt_upper_bound(const Rational& r, unsigned bits = 64);

// Value a + sqrt(b) with b >= 0, compared exactly.
struct QuadVal {
  Rational a;
  Rational b;

  bool operator>=(const QuadVal& o) const;
  bool operator<=(const QuadVal& o) const { return o >= *this; }
  double approx() const;
};

}  // namespace specham
