#include "specham/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace specham {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    // explicit base 10: leading zeros must not trigger octal auto-detection
    Int num(text.substr(0, slash), 10);
    Int den(text.substr(slash + 1), 10);
    return make_rational(num, den);
  }
  // decimal / scientific form: sign, digits, optional '.', optional exponent
  std::string s = text;
  bool neg = false;
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') {
    neg = s[i] == '-';
    ++i;
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_dot = false;
  for (; i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.'); ++i) {
    if (s[i] == '.') {
      if (seen_dot) throw std::invalid_argument("bad rational literal: " + text);
      seen_dot = true;
    } else {
      digits.push_back(s[i]);
      if (seen_dot) ++frac_digits;
    }
  }
  long exp10 = 0;
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') throw std::invalid_argument("bad rational literal: " + text);
    exp10 = std::stol(s.substr(i + 1));
    i = s.size();
  }
  if (digits.empty()) throw std::invalid_argument("bad rational literal: " + text);
  Int mant(digits, 10);
  if (neg) mant = -mant;
  long e = exp10 - frac_digits;
  Int pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
  return e >= 0 ? make_rational(mant * pow10, Int(1)) : make_rational(mant, pow10);
}

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rational& q) { return q.get_d(); }

Rational round_up_dyadic(const Rational& x, unsigned bits) {
  Int num = x.get_num() << bits;
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), x.get_den().get_mpz_t());
  return make_rational(q, Int(1) << bits);
}

Rational sqrt_upper_bound(const Rational& r, unsigned bits) {
  if (r < 0) throw std::domain_error("sqrt of negative rational");
  // sqrt(a/b) = sqrt(a*b)/b; scale by 2^bits for the error bound.
  Int n = r.get_num() * r.get_den();
  Int scaled = n << (2 * bits);
  Int s;
  mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
  if (s * s != scaled) s += 1;
  return make_rational(s, r.get_den() << bits);
}

namespace {

// sign of a + sqrt(b): decided without approximation
int sign_quad(const Rational& a, const Rational& b) {
  if (a >= 0) return (a > 0 || b > 0) ? 1 : 0;
  // a < 0: compare sqrt(b) with |a|
  Rational a2 = a * a;
  if (b > a2) return 1;
  if (b == a2) return 0;
  return -1;
}

}  // namespace

bool QuadVal::operator>=(const QuadVal& o) const {
  // a1 + sqrt(b1) >= a2 + sqrt(b2)  <=>  d + sqrt(b1) >= sqrt(b2), d = a1-a2
  Rational d = a - o.a;
  int lhs_sign = sign_quad(d, b);
  if (lhs_sign < 0) return false;
  // both sides nonnegative; compare squares: d^2 + b1 + 2 d sqrt(b1) >= b2
  Rational e = o.b - d * d - b;  // need 2 d sqrt(b1) >= e
  if (d >= 0) {
    if (e <= 0) return true;
    return 4 * d * d * b >= e * e;
  }
  if (e > 0) return false;
  return 4 * d * d * b <= e * e;
}

double QuadVal::approx() const { return to_double(a) + std::sqrt(to_double(b)); }

}  // namespace specham
