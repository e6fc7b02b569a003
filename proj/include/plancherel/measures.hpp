#pragma once

#include "plancherel/collection.hpp"
#include "plancherel/partitions.hpp"
#include "plancherel/rational.hpp"
#include "plancherel/series.hpp"

namespace plancherel {

/// A real number known to lie in [value - error_bound, value + error_bound].
struct CertifiedReal {
  Rational value;
  Rational error_bound;

  Rational lower() const { return value - error_bound; }
  Rational upper() const { return value + error_bound; }
  bool contains(const Rational& x) const { return lower() <= x && x <= upper(); }
};

CertifiedReal operator*(const CertifiedReal& a, const CertifiedReal& b);
CertifiedReal operator*(const CertifiedReal& a, const Rational& c);

/// prod_{r >= r0} (1 - v^d q^{-dr})^{c_lin r + c_const} to within `tol`.
///
/// Requires 0 < v^d q^{-d r0} < 1 and nonnegative exponents for every r >= r0.
/// Uses an exact partial product up to R (rounded down to dyadics) and the
/// tail bound |log(1-x)| <= x/(1-x) summed in closed form over r > R.
CertifiedReal certified_product(const ProductFactorSpec& spec, const Rational& v, const Rational& tol);

/// s_lambda(Q^{-1}, Q^{-2}, ...) = Q^{n(lambda')} prod_x (Q^{h(x)} - 1)^{-1}, Q = q^d.
Rational schur_special(const Partition& lambda, unsigned d, const Rational& q);

struct MWeight {
  /// q^{2n(lambda')+|lambda|} prod_x (q^{h(x)} - 1)^{-2} v^{|lambda|}
  Rational exact_part;
  /// prod_{r>=1} (1 - v q^{-r})^r
  CertifiedReal prefactor;
  /// prefactor * exact_part, with error <= tol
  CertifiedReal value;
};

/// Weight of lambda under M_{v,q}; needs 0 < v < q and q > 1.
MWeight m_weight(const Partition& lambda, const Rational& v, const Rational& q, const Rational& tol);

/// Exact part of m_weight alone.
Rational m_weight_exact_part(const Partition& lambda, const Rational& v, const Rational& q);

/// |GL(n,q)| = q^{n(n-1)/2} prod_{i=1}^n (q^i - 1)
Integer gl_order(unsigned long n, unsigned long q);

/// Degree of the irreducible representation of GL(n,q) labelled by the collection.
/// Throws ConsistencyError if the hook-formula value is not a positive integer.
Integer irrep_degree(const PartitionCollection& collection, unsigned long q);

/// mu_n(Lambda) = d^2 / |GL(n,q)|. Also evaluates the Schur-product form and
/// throws ConsistencyError if the two disagree.
Rational plancherel_weight(const PartitionCollection& collection, unsigned long q);

/// q^{-n(n-1)/2} prod (q^i - 1) prod_phi s_{Lambda_phi}(q^{-deg}, ...)^2
Rational plancherel_weight_schur(const PartitionCollection& collection, unsigned long q);

/// q^{n(n+1)/2} / prod_{i=1}^n (q^i - 1): the size-n coefficient of the Euler product.
Rational euler_coefficient(unsigned long n, const Rational& q);

struct GrandWeight {
  /// q^{n(n+1)/2} prod (q^i-1)^{-1} v^n mu_n(Lambda)
  Rational exact_part;
  /// prod_{r>=0} (1 - v q^{-r})
  CertifiedReal prefactor;
  CertifiedReal value;
};

/// P_{v,q}(Lambda); needs 0 < v < 1.
GrandWeight grand_weight(const PartitionCollection& collection, const Rational& v, unsigned long q,
                         const Rational& tol);

/// prod_{r >= 0} (1 - v q^{-r}) certified to tol; needs 0 < v < 1.
CertifiedReal grand_prefactor(const Rational& v, const Rational& q, const Rational& tol);

}  // namespace plancherel
