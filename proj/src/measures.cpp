#include "plancherel/measures.hpp"

#include <algorithm>

#include "plancherel/errors.hpp"

namespace plancherel {

CertifiedReal operator*(const CertifiedReal& a, const CertifiedReal& b) {
  return {a.value * b.value,
          abs(a.value) * b.error_bound + abs(b.value) * a.error_bound + a.error_bound * b.error_bound};
}

CertifiedReal operator*(const CertifiedReal& a, const Rational& c) {
  return {a.value * c, a.error_bound * abs(c)};
}

CertifiedReal certified_product(const ProductFactorSpec& spec, const Rational& v, const Rational& tol) {
  if (tol <= 0) throw DomainError("tolerance must be positive");
  if (spec.q <= 1) throw DomainError("certified product needs q > 1");
  if (spec.d == 0 || spec.r0 > 1) throw DomainError("certified product needs d >= 1 and r0 in {0, 1}");
  if (v <= 0) throw DomainError("certified product needs v > 0");
  if (spec.c_lin < 0 || spec.c_lin * static_cast<long>(spec.r0) + spec.c_const < 0) {
    throw UnsupportedError("certified product needs nonnegative exponents");
  }
  const long d = spec.d;
  const Rational vd = pow(v, d);
  const Rational big_x = pow(spec.q, -d);  // q^{-d}
  const auto x_at = [&](unsigned long r) -> Rational { return vd * pow(big_x, static_cast<long>(r)); };
  if (x_at(spec.r0) >= 1) throw DomainError("certified product factor vanishes or changes sign");

  const Rational one_minus_x = 1 - big_x;
  const Rational half_tol = tol / 2;

  // Smallest R >= r0 whose tail bound is within tol/2.
  unsigned long R = spec.r0;
  Rational x_pow = pow(big_x, static_cast<long>(R + 1));  // X^{R+1}
  Rational tail;
  for (;;) {
    const Rational s0 = x_pow / one_minus_x;
    const Rational s1 = x_pow * (Rational(R + 1) - Rational(R) * big_x) / (one_minus_x * one_minus_x);
    const Rational x_next = vd * x_pow;
    tail = vd / (1 - x_next) * (Rational(spec.c_lin) * s1 + Rational(spec.c_const) * s0);
    if (tail <= half_tol) break;
    ++R;
    x_pow *= big_x;
    if (R > 100000) throw ResourceError("certified product did not reach the requested tolerance");
  }

  const unsigned long steps = R - spec.r0 + 1;
  unsigned long bits = 1;
  while (Rational(steps) / pow(Rational(2), static_cast<long>(bits)) > half_tol) ++bits;
  bits += 2;

  Rational partial = 1;
  for (unsigned long r = spec.r0; r <= R; ++r) {
    const long e = spec.c_lin * static_cast<long>(r) + spec.c_const;
    if (e == 0) continue;
    partial = round_down_dyadic(partial * pow(1 - x_at(r), e), bits);
  }
  const Rational rounding = Rational(steps) / pow(Rational(2), static_cast<long>(bits));
  return {partial, std::max(Rational(partial * tail), rounding)};
}

Rational schur_special(const Partition& lambda, unsigned d, const Rational& q) {
  if (d == 0) throw DomainError("schur_special needs d >= 1");
  if (q <= 1) throw DomainError("schur_special needs q > 1");
  const Rational big_q = pow(q, static_cast<long>(d));
  const auto stats = partition_stats(lambda);
  Rational denom = 1;
  for (unsigned h : stats.hooks) denom *= pow(big_q, static_cast<long>(h)) - 1;
  return pow(big_q, static_cast<long>(stats.n_conjugate)) / denom;
}

Rational m_weight_exact_part(const Partition& lambda, const Rational& v, const Rational& q) {
  if (q <= 1) throw DomainError("M_{v,q} needs q > 1");
  if (v <= 0 || v >= q) throw DomainError("M_{v,q} needs 0 < v < q");
  const auto stats = partition_stats(lambda);
  Rational hook_product = 1;
  for (unsigned h : stats.hooks) hook_product *= pow(q, static_cast<long>(h)) - 1;
  return pow(q, static_cast<long>(2 * stats.n_conjugate + stats.size)) / (hook_product * hook_product) *
         pow(v, static_cast<long>(stats.size));
}

MWeight m_weight(const Partition& lambda, const Rational& v, const Rational& q, const Rational& tol) {
  if (tol <= 0) throw DomainError("tolerance must be positive");
  MWeight w;
  w.exact_part = m_weight_exact_part(lambda, v, q);
  const Rational prefactor_tol = w.exact_part > 1 ? Rational(tol / w.exact_part) : tol;
  w.prefactor = certified_product(ProductFactorSpec{1, 1, 1, 0, q}, v, prefactor_tol);
  w.value = w.prefactor * w.exact_part;
  return w;
}

Integer gl_order(unsigned long n, unsigned long q) {
  if (q < 2) throw DomainError("gl_order needs q >= 2");
  const Integer qz(q);
  Integer order = pow(qz, n * (n - 1) / 2);
  for (unsigned long i = 1; i <= n; ++i) order *= pow(qz, i) - 1;
  return order;
}

Integer irrep_degree(const PartitionCollection& collection, unsigned long q) {
  if (q < 2) throw DomainError("irrep_degree needs q >= 2");
  const unsigned long n = collection.total();
  const Rational qr(q);
  Rational degree = 1;
  for (unsigned long i = 1; i <= n; ++i) degree *= pow(qr, static_cast<long>(i)) - 1;
  for (const auto& [label, lambda] : collection.assignments()) {
    const Rational big_q = pow(qr, static_cast<long>(label.degree));
    const auto stats = partition_stats(lambda);
    degree *= pow(big_q, static_cast<long>(stats.n_conjugate));
    for (unsigned h : stats.hooks) degree /= pow(big_q, static_cast<long>(h)) - 1;
  }
  if (degree.get_den() != 1 || degree <= 0) {
    throw ConsistencyError("irreducible degree is not a positive integer: " + to_string(degree));
  }
  return degree.get_num();
}

Rational plancherel_weight_schur(const PartitionCollection& collection, unsigned long q) {
  if (q < 2) throw DomainError("plancherel weight needs q >= 2");
  const unsigned long n = collection.total();
  const Rational qr(q);
  Rational w = pow(qr, -static_cast<long>(n * (n - 1) / 2));
  for (unsigned long i = 1; i <= n; ++i) w *= pow(qr, static_cast<long>(i)) - 1;
  for (const auto& [label, lambda] : collection.assignments()) {
    const Rational s = schur_special(lambda, label.degree, qr);
    w *= s * s;
  }
  return w;
}

Rational plancherel_weight(const PartitionCollection& collection, unsigned long q) {
  const Integer d = irrep_degree(collection, q);
  Rational direct(d * d, gl_order(collection.total(), q));
  direct.canonicalize();
  const Rational via_schur = plancherel_weight_schur(collection, q);
  if (direct != via_schur) {
    throw ConsistencyError("Plancherel weight routes disagree: " + to_string(direct) + " vs " +
                           to_string(via_schur));
  }
  return direct;
}

Rational euler_coefficient(unsigned long n, const Rational& q) {
  Rational c = pow(q, static_cast<long>(n * (n + 1) / 2));
  for (unsigned long i = 1; i <= n; ++i) c /= pow(q, static_cast<long>(i)) - 1;
  return c;
}

CertifiedReal grand_prefactor(const Rational& v, const Rational& q, const Rational& tol) {
  if (v <= 0 || v >= 1) throw DomainError("P_{v,q} needs 0 < v < 1");
  return certified_product(ProductFactorSpec{1, 0, 0, 1, q}, v, tol);
}

GrandWeight grand_weight(const PartitionCollection& collection, const Rational& v, unsigned long q,
                         const Rational& tol) {
  if (v <= 0 || v >= 1) throw DomainError("P_{v,q} needs 0 < v < 1");
  if (tol <= 0) throw DomainError("tolerance must be positive");
  const unsigned long n = collection.total();
  GrandWeight w;
  w.exact_part = euler_coefficient(n, Rational(q)) * pow(v, static_cast<long>(n)) *
                 plancherel_weight(collection, q);
  const Rational prefactor_tol = w.exact_part > 1 ? Rational(tol / w.exact_part) : tol;
  w.prefactor = grand_prefactor(v, Rational(q), prefactor_tol);
  w.value = w.prefactor * w.exact_part;
  return w;
}

}  // namespace plancherel
