#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "plancherel/rational.hpp"

namespace plancherel {

/// Power series in v truncated after v^order, with exact rational coefficients.
///
/// Binary operations require equal orders; use truncate() to bring operands to
/// a common order explicitly.
class TruncatedSeries {
 public:
  /// The zero series of the given order.
  explicit TruncatedSeries(std::size_t order);
  /// Coefficients c_0..c_N; must be nonempty.
  explicit TruncatedSeries(std::vector<Rational> coeffs);

  static TruncatedSeries one(std::size_t order);
  /// c * v^k (zero if k > order).
  static TruncatedSeries monomial(std::size_t order, std::size_t k, const Rational& c = 1);

  std::size_t order() const { return coeffs_.size() - 1; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  /// c_n; throws DomainError when n > order (never silently zero).
  const Rational& coeff(std::size_t n) const;
  void set_coeff(std::size_t n, Rational value);

  TruncatedSeries truncate(std::size_t order) const;

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const TruncatedSeries& other);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) { return a *= b; }
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

TruncatedSeries scale(const TruncatedSeries& a, const Rational& c);
/// Multiply by v^k, dropping terms above the order.
TruncatedSeries shift(const TruncatedSeries& a, std::size_t k);
/// Multiplicative inverse; requires c_0 != 0.
TruncatedSeries invert(const TruncatedSeries& a);
/// a^e for any integer e. Unit-constant series use exp(e log a), so huge
/// exponents (e.g. irreducible counts) are cheap; otherwise binary powering.
TruncatedSeries power(const TruncatedSeries& a, const Integer& e);
inline TruncatedSeries power(const TruncatedSeries& a, long e) { return power(a, Integer(e)); }
/// Logarithm of a series with c_0 == 1.
TruncatedSeries log(const TruncatedSeries& a);
/// Exponential of a series with c_0 == 0.
TruncatedSeries exp(const TruncatedSeries& a);

inline const Rational& coeff_extract(const TruncatedSeries& s, std::size_t n) { return s.coeff(n); }

/// Describes prod_{r >= r0} (1 - (v q^{-r})^d)^{c_lin * r + c_const}.
struct ProductFactorSpec {
  unsigned d = 1;
  unsigned r0 = 1;
  long c_lin = 0;
  long c_const = 0;
  Rational q = 2;
};

/// Exact truncated expansion of the infinite product described by `spec`.
///
/// The logarithm of the product is
///   -sum_{k>=1} v^{dk}/k * (c_lin * A_k + c_const * B_k),
/// A_k = sum_{r>=r0} r x^r = x/(1-x)^2 and B_k = sum_{r>=r0} x^r = x^{r0}/(1-x)
/// with x = q^{-dk}, so every coefficient is a finite rational expression.
TruncatedSeries pochhammer_series(const ProductFactorSpec& spec, std::size_t order);

}  // namespace plancherel
