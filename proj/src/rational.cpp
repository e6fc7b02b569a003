#include "plancherel/rational.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>

#include "plancherel/errors.hpp"

namespace plancherel {

namespace {

[[noreturn]] void parse_fail(std::string_view text, std::size_t pos, const char* what) {
  throw DomainError("invalid rational \"" + std::string(text) + "\" at position " +
                    std::to_string(pos) + ": " + what);
}

Integer ten_pow(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  const auto n = text.size();
  bool negative = false;
  if (pos < n && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::string int_digits;
  while (pos < n && std::isdigit(static_cast<unsigned char>(text[pos]))) int_digits += text[pos++];

  if (pos < n && text[pos] == '/') {
    if (int_digits.empty()) parse_fail(text, pos, "expected digits before '/'");
    ++pos;
    std::string den_digits;
    while (pos < n && std::isdigit(static_cast<unsigned char>(text[pos]))) den_digits += text[pos++];
    if (den_digits.empty()) parse_fail(text, pos, "expected denominator digits");
    if (pos != n) parse_fail(text, pos, "unexpected character");
    Integer den(den_digits, 10);
    if (den == 0) parse_fail(text, pos - 1, "zero denominator");
    Rational r(Integer(int_digits, 10), den);
    r.canonicalize();
    return negative ? Rational(-r) : r;
  }

  std::string frac_digits;
  if (pos < n && text[pos] == '.') {
    ++pos;
    while (pos < n && std::isdigit(static_cast<unsigned char>(text[pos]))) frac_digits += text[pos++];
  }
  if (int_digits.empty() && frac_digits.empty()) parse_fail(text, pos, "expected digits");

  long exponent = 0;
  if (pos < n && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    bool exp_negative = false;
    if (pos < n && (text[pos] == '+' || text[pos] == '-')) {
      exp_negative = text[pos] == '-';
      ++pos;
    }
    std::string exp_digits;
    while (pos < n && std::isdigit(static_cast<unsigned char>(text[pos]))) exp_digits += text[pos++];
    if (exp_digits.empty()) parse_fail(text, pos, "expected exponent digits");
    if (exp_digits.size() > 6) parse_fail(text, pos - exp_digits.size(), "exponent too large");
    exponent = std::strtol(exp_digits.c_str(), nullptr, 10);
    if (exp_negative) exponent = -exponent;
  }
  if (pos != n) parse_fail(text, pos, "unexpected character");

  Integer mantissa(int_digits.empty() && frac_digits.empty() ? std::string("0")
                                                               : int_digits + frac_digits,
                   10);
  exponent -= static_cast<long>(frac_digits.size());
  Rational r = exponent >= 0 ? Rational(mantissa * ten_pow(exponent))
                             : Rational(mantissa, ten_pow(-exponent));
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& x) { return x.get_str(); }

std::string to_decimal(const Rational& x, int digits, Rounding mode) {
  if (digits < 1) digits = 1;
  if (x == 0) return "0";
  const bool negative = x < 0;
  Rational a = negative ? Rational(-x) : x;

  // Decimal exponent e with 10^e <= a < 10^(e+1).
  long e = static_cast<long>(mpz_sizeinbase(a.get_num_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(a.get_den_mpz_t(), 10));
  auto scaled_by = [](const Rational& v, long p) {
    return p >= 0 ? Rational(v * ten_pow(p)) : Rational(v / ten_pow(-p));
  };
  while (scaled_by(a, -e) >= 10) ++e;
  while (scaled_by(a, -e) < 1) --e;

  // Integer mantissa with `digits` digits.
  Rational m = scaled_by(a, digits - 1 - e);
  Integer q = m.get_num() / m.get_den();  // floor for positive
  const bool exact = (Rational(q) == m);
  // Direction in magnitude space.
  bool away = false;
  switch (mode) {
    case Rounding::Nearest:
      away = (m - q) * 2 >= 1;
      break;
    case Rounding::Up:
      away = !exact && !negative;
      break;
    case Rounding::Down:
      away = !exact && negative;
      break;
  }
  if (away) q += 1;
  std::string s = q.get_str();
  if (static_cast<int>(s.size()) > digits) {  // rounding carried, e.g. 9.99 -> 10.0
    s.pop_back();
    ++e;
  }
  std::string out = negative ? "-" : "";
  out += s[0];
  if (s.size() > 1) {
    out += '.';
    out += s.substr(1);
  }
  char buf[16];
  std::snprintf(buf, sizeof buf, "e%+03ld", e);
  out += buf;
  return out;
}

Rational pow(const Rational& base, long exponent) {
  const unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  if (exponent < 0) {
    if (num == 0) throw DomainError("zero raised to a negative power");
    std::swap(num, den);
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational round_down_dyadic(const Rational& x, unsigned long bits) {
  Integer scaled = x.get_num();
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), bits);
  Integer floored;
  mpz_fdiv_q(floored.get_mpz_t(), scaled.get_mpz_t(), x.get_den_mpz_t());
  Integer den;
  mpz_setbit(den.get_mpz_t(), bits);
  Rational r(floored, den);
  r.canonicalize();
  return r;
}

Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

bool is_integer_at_least_two(const Rational& q) { return q.get_den() == 1 && q >= 2; }

}  // namespace plancherel
