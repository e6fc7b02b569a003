#include "plancherel/series.hpp"

#include <string>
#include <utility>

#include "plancherel/errors.hpp"

namespace plancherel {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) {
    throw DomainError("series order mismatch: " + std::to_string(a.order()) + " vs " +
                      std::to_string(b.order()) + " (truncate explicitly)");
  }
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("a truncated series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::one(std::size_t order) { return monomial(order, 0); }

TruncatedSeries TruncatedSeries::monomial(std::size_t order, std::size_t k, const Rational& c) {
  TruncatedSeries s(order);
  if (k <= order) s.coeffs_[k] = c;
  return s;
}

const Rational& TruncatedSeries::coeff(std::size_t n) const {
  if (n > order()) {
    throw DomainError("coefficient index " + std::to_string(n) + " exceeds series order " +
                      std::to_string(order()));
  }
  return coeffs_[n];
}

void TruncatedSeries::set_coeff(std::size_t n, Rational value) {
  if (n > order()) throw DomainError("coefficient index exceeds series order");
  coeffs_[n] = std::move(value);
}

TruncatedSeries TruncatedSeries::truncate(std::size_t order) const {
  if (order > this->order()) throw DomainError("cannot truncate to a higher order");
  return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  require_same_order(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  require_same_order(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& other) {
  require_same_order(*this, other);
  const std::size_t n = order();
  std::vector<Rational> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (other.coeffs_[j] != 0) out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  return *this;
}

TruncatedSeries scale(const TruncatedSeries& a, const Rational& c) {
  std::vector<Rational> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : out) x *= c;
  return TruncatedSeries(std::move(out));
}

TruncatedSeries shift(const TruncatedSeries& a, std::size_t k) {
  TruncatedSeries out(a.order());
  for (std::size_t i = 0; i + k <= a.order(); ++i) out.set_coeff(i + k, a.coeff(i));
  return out;
}

TruncatedSeries invert(const TruncatedSeries& a) {
  const auto c = a.coeffs();
  if (c[0] == 0) throw DomainError("series with zero constant term is not invertible");
  const std::size_t n = a.order();
  std::vector<Rational> b(n + 1);
  const Rational inv0 = 1 / c[0];
  b[0] = inv0;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= k; ++j) {
      if (c[j] != 0) acc += c[j] * b[k - j];
    }
    b[k] = -acc * inv0;
  }
  return TruncatedSeries(std::move(b));
}

TruncatedSeries log(const TruncatedSeries& a) {
  const auto f = a.coeffs();
  if (f[0] != 1) throw DomainError("series logarithm needs constant term 1");
  const std::size_t n = a.order();
  // g' f = f'  =>  k g_k = k f_k - sum_{j=1}^{k-1} j g_j f_{k-j}
  std::vector<Rational> g(n + 1);
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc = Rational(k) * f[k];
    for (std::size_t j = 1; j < k; ++j) {
      if (g[j] != 0 && f[k - j] != 0) acc -= Rational(j) * g[j] * f[k - j];
    }
    g[k] = acc / k;
  }
  return TruncatedSeries(std::move(g));
}

TruncatedSeries exp(const TruncatedSeries& a) {
  const auto g = a.coeffs();
  if (g[0] != 0) throw DomainError("series exponential needs constant term 0");
  const std::size_t n = a.order();
  // f' = g' f  =>  k f_k = sum_{j=1}^{k} j g_j f_{k-j}
  std::vector<Rational> f(n + 1);
  f[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= k; ++j) {
      if (g[j] != 0) acc += Rational(j) * g[j] * f[k - j];
    }
    f[k] = acc / k;
  }
  return TruncatedSeries(std::move(f));
}

TruncatedSeries power(const TruncatedSeries& a, const Integer& e) {
  const auto c = a.coeffs();
  if (e < 0 && c[0] == 0) throw DomainError("negative power of a series with zero constant term");
  if (e == 0) return TruncatedSeries::one(a.order());
  if (c[0] == 1) return exp(scale(log(a), Rational(e)));

  if (!e.fits_slong_p()) throw ResourceError("series exponent too large for binary powering");
  long k = e.get_si();
  TruncatedSeries base = k < 0 ? invert(a) : a;
  unsigned long m = static_cast<unsigned long>(k < 0 ? -k : k);
  TruncatedSeries result = TruncatedSeries::one(a.order());
  while (m > 0) {
    if (m & 1UL) result *= base;
    m >>= 1;
    if (m > 0) base *= base;
  }
  return result;
}

TruncatedSeries pochhammer_series(const ProductFactorSpec& spec, std::size_t order) {
  if (spec.q <= 1) throw DomainError("pochhammer_series needs q > 1");
  if (spec.d == 0) throw DomainError("pochhammer_series needs d >= 1");
  if (spec.r0 > 1) throw DomainError("pochhammer_series supports r0 in {0, 1}");

  TruncatedSeries g(order);
  for (std::size_t k = 1; k * spec.d <= order; ++k) {
    const Rational x = pow(spec.q, -static_cast<long>(k * spec.d));
    const Rational one_minus = 1 - x;
    const Rational sum_r_xr = x / (one_minus * one_minus);
    const Rational sum_xr = (spec.r0 == 0 ? Rational(1) : x) / one_minus;
    const Rational log_coeff =
        -(Rational(spec.c_lin) * sum_r_xr + Rational(spec.c_const) * sum_xr) / Rational(k);
    g.set_coeff(k * spec.d, log_coeff);
  }
  return exp(g);
}

}  // namespace plancherel
