#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plancherel/collection.hpp"
#include "plancherel/measures.hpp"
#include "plancherel/series.hpp"

namespace plancherel {

inline constexpr unsigned kDefaultCollectionCap = 6;
inline constexpr std::size_t kDefaultIdentityOrder = 25;

// --- enumeration of collections of total size n ---

/// Visits every collection of total size n exactly once. Labels are bare
/// (degree, index) pairs. Order: degrees ascending, and within a degree,
/// slot indices ascending with partitions in reverse-lex order.
void for_each_collection(unsigned n, unsigned long q,
                         const std::function<void(const PartitionCollection&)>& visit,
                         unsigned cap = kDefaultCollectionCap);

std::vector<PartitionCollection> enumerate_collections(unsigned n, unsigned long q,
                                                       unsigned cap = kDefaultCollectionCap);

/// Fills in coefficient vectors for every label (prime q only).
PartitionCollection with_polynomials(const PartitionCollection& collection, unsigned long q);

// --- generating functions ---

/// H_d(v) = prod_{r>=1} (1 - (v q^{-r})^d)^{-r}, truncated at `order`.
TruncatedSeries class_gf(unsigned d, const Rational& q, std::size_t order);

/// prod_{r>=0} (1 - v q^{-r})^{-1}
TruncatedSeries euler_series(const Rational& q, std::size_t order);

// --- marginals ---

struct SlotConstraint {
  PolynomialLabel slot;
  Partition lambda;  // may be empty: slot carries nothing
};
using MarginalConstraint = std::vector<SlotConstraint>;

struct MarginalResult {
  Rational value;
  /// The constrained sizes exceed n; value is 0.
  bool exceeds_size = false;
};

/// Series F with mu_n(constraint) = prod_{i<=n} (1 - q^{-i}) [v^n] F for every n <= order.
TruncatedSeries marginal_series(unsigned long q, const MarginalConstraint& constraints, std::size_t order);

/// Exact mu_n-probability that each constrained slot carries exactly its partition.
MarginalResult marginal(unsigned n, unsigned long q, const MarginalConstraint& constraints);

/// prod_{i=1}^n (1 - q^{-i})
Rational finite_euler_factor(unsigned n, const Rational& q);

/// M_{1, q^d}(lambda) certified to tol.
CertifiedReal limit_weight(const Partition& lambda, unsigned d, unsigned long q, const Rational& tol);

struct ConvergenceRow {
  unsigned n = 0;
  Rational exact_marginal;
  CertifiedReal limit_value;
  CertifiedReal abs_error;
};

/// Exact marginals for n in [n_from, n_to] against the product of limit weights.
std::vector<ConvergenceRow> convergence_table(unsigned long q, const MarginalConstraint& constraints,
                                              unsigned n_from, unsigned n_to, const Rational& tol);

/// Builds constraints from (degree, partition) pairs, giving repeated degrees
/// consecutive indices.
MarginalConstraint degree_constraints(const std::vector<std::pair<unsigned, Partition>>& items);

// --- identity verification ---

enum class IdentityKind { Euler, Factorization, Cauchy, PlancherelNormalization };

std::string to_string(IdentityKind kind);
IdentityKind parse_identity_kind(const std::string& text);

struct Discrepancy {
  std::size_t index = 0;
  Rational lhs;
  Rational rhs;
  std::optional<unsigned> degree;  // cauchy: which class series
};

struct GaussCount {
  unsigned k = 0;
  Integer sum;       // sum_{d|k} d N(d)
  Integer expected;  // q^k - 1
};

struct IdentityReport {
  IdentityKind kind = IdentityKind::Euler;
  Rational q;
  std::size_t order = 0;
  bool ok = true;
  std::optional<Discrepancy> first_discrepancy;
  std::vector<GaussCount> gauss_counts;  // factorization only

  friend bool operator==(const IdentityReport&, const IdentityReport&);
};

struct VerifyOptions {
  std::size_t order = kDefaultIdentityOrder;
  /// Largest n for the enumeration route of plancherel_normalization.
  unsigned enumeration_n = 5;
};

IdentityReport verify_identity(IdentityKind kind, const Rational& q, const VerifyOptions& options = {});

}  // namespace plancherel
