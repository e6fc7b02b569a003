#include "plancherel/ensembles.hpp"

#include <map>
#include <set>

#include "plancherel/errors.hpp"

namespace plancherel {

namespace {

std::uint64_t slot_count(unsigned d, unsigned long q) {
  const Integer count = count_irreducibles(d, q).count;
  if (!count.fits_ulong_p()) {
    throw ResourceError("too many degree-" + std::to_string(d) + " polynomials to label individually");
  }
  return count.get_ui();
}

unsigned long require_integer_q(const Rational& q, const char* what) {
  if (!is_integer_at_least_two(q) || !q.get_num().fits_ulong_p()) {
    throw DomainError(std::string(what) + " needs an integer q >= 2");
  }
  return q.get_num().get_ui();
}

}  // namespace

void for_each_collection(unsigned n, unsigned long q,
                         const std::function<void(const PartitionCollection&)>& visit, unsigned cap) {
  if (n > cap) {
    throw ResourceError("collection enumeration at n=" + std::to_string(n) + " exceeds cap " +
                        std::to_string(cap));
  }
  if (q < 2) throw DomainError("collection enumeration needs q >= 2");
  std::vector<std::uint64_t> counts(n + 1, 0);
  std::vector<std::vector<Partition>> shapes(n + 1);
  for (unsigned d = 1; d <= n; ++d) counts[d] = slot_count(d, q);
  for (unsigned m = 1; m <= n; ++m) shapes[m] = enumerate_partitions(m);

  PartitionCollection current;
  std::function<void(unsigned, std::uint64_t, unsigned)> fill = [&](unsigned d, std::uint64_t start,
                                                                     unsigned rem) {
    if (rem == 0) {
      visit(current);
      return;
    }
    if (d > rem) return;
    fill(d + 1, 0, rem);
    for (std::uint64_t idx = start; idx < counts[d]; ++idx) {
      for (unsigned m = 1; d * m <= rem; ++m) {
        for (const auto& lambda : shapes[m]) {
          PolynomialLabel label{d, idx, std::nullopt};
          current.assign(label, lambda);
          fill(d, idx + 1, rem - d * m);
          current.assign(label, Partition{});
        }
      }
    }
  };
  fill(1, 0, n);
}

std::vector<PartitionCollection> enumerate_collections(unsigned n, unsigned long q, unsigned cap) {
  std::vector<PartitionCollection> out;
  for_each_collection(n, q, [&](const PartitionCollection& c) { out.push_back(c); }, cap);
  return out;
}

PartitionCollection with_polynomials(const PartitionCollection& collection, unsigned long q) {
  std::map<unsigned, std::vector<PolynomialLabel>> by_degree;
  PartitionCollection out;
  for (const auto& [label, lambda] : collection.assignments()) {
    auto it = by_degree.find(label.degree);
    if (it == by_degree.end()) it = by_degree.emplace(label.degree, enumerate_irreducibles(label.degree, q)).first;
    if (label.index >= it->second.size()) throw DomainError("polynomial index out of range");
    out.assign(it->second[label.index], lambda);
  }
  return out;
}

TruncatedSeries class_gf(unsigned d, const Rational& q, std::size_t order) {
  return pochhammer_series(ProductFactorSpec{d, 1, -1, 0, q}, order);
}

TruncatedSeries euler_series(const Rational& q, std::size_t order) {
  return pochhammer_series(ProductFactorSpec{1, 0, 0, -1, q}, order);
}

Rational finite_euler_factor(unsigned n, const Rational& q) {
  Rational f = 1;
  for (unsigned i = 1; i <= n; ++i) f *= 1 - pow(q, -static_cast<long>(i));
  return f;
}

namespace {

void validate_constraints(unsigned long q, const MarginalConstraint& constraints) {
  std::set<PolynomialLabel> seen;
  for (const auto& c : constraints) {
    if (c.slot.degree == 0) throw DomainError("constraint slot needs a positive degree");
    const Integer count = count_irreducibles(c.slot.degree, q).count;
    if (Integer(static_cast<unsigned long>(c.slot.index)) >= count) {
      throw DomainError("slot " + std::to_string(c.slot.degree) + ":" + std::to_string(c.slot.index) +
                        " does not exist (only " + count.get_str() + " polynomials of that degree)");
    }
    if (!seen.insert(c.slot).second) throw DomainError("constraint slots must be pairwise distinct");
  }
}

}  // namespace

TruncatedSeries marginal_series(unsigned long q, const MarginalConstraint& constraints, std::size_t order) {
  if (q < 2) throw DomainError("marginal needs q >= 2");
  validate_constraints(q, constraints);
  const Rational qr(q);
  TruncatedSeries f = euler_series(qr, order);
  for (const auto& c : constraints) {
    const unsigned d = c.slot.degree;
    const Rational big_q = pow(qr, static_cast<long>(d));
    const Rational s = schur_special(c.lambda, d, qr);
    const Rational constant = pow(big_q, static_cast<long>(c.lambda.size())) * s * s;
    const std::size_t lead = static_cast<std::size_t>(d) * c.lambda.size();
    const TruncatedSeries prefactor = pochhammer_series(ProductFactorSpec{d, 1, 1, 0, qr}, order);
    f *= scale(shift(prefactor, lead), constant);
  }
  return f;
}

MarginalResult marginal(unsigned n, unsigned long q, const MarginalConstraint& constraints) {
  unsigned long used = 0;
  for (const auto& c : constraints) used += static_cast<unsigned long>(c.slot.degree) * c.lambda.size();
  if (used > n) {
    validate_constraints(q, constraints);
    return {Rational(0), true};
  }
  const TruncatedSeries f = marginal_series(q, constraints, n);
  return {finite_euler_factor(n, Rational(q)) * f.coeff(n), false};
}

CertifiedReal limit_weight(const Partition& lambda, unsigned d, unsigned long q, const Rational& tol) {
  if (d == 0) throw DomainError("limit_weight needs d >= 1");
  if (q < 2) throw DomainError("limit_weight needs q >= 2");
  return m_weight(lambda, Rational(1), pow(Rational(q), static_cast<long>(d)), tol).value;
}

std::vector<ConvergenceRow> convergence_table(unsigned long q, const MarginalConstraint& constraints,
                                              unsigned n_from, unsigned n_to, const Rational& tol) {
  if (n_from > n_to) throw DomainError("convergence table needs n_from <= n_to");
  if (tol <= 0) throw DomainError("tolerance must be positive");
  const TruncatedSeries f = marginal_series(q, constraints, n_to);

  const Rational per_factor_tol = tol / (2 * std::max<std::size_t>(1, constraints.size()));
  CertifiedReal limit{Rational(1), Rational(0)};
  for (const auto& c : constraints) limit = limit * limit_weight(c.lambda, c.slot.degree, q, per_factor_tol);
  if (limit.error_bound > tol) throw ConsistencyError("limit product error exceeds tolerance");

  unsigned long used = 0;
  for (const auto& c : constraints) used += static_cast<unsigned long>(c.slot.degree) * c.lambda.size();

  std::vector<ConvergenceRow> rows;
  for (unsigned n = n_from; n <= n_to; ++n) {
    ConvergenceRow row;
    row.n = n;
    row.exact_marginal = used > n ? Rational(0) : Rational(finite_euler_factor(n, Rational(q)) * f.coeff(n));
    row.limit_value = limit;
    row.abs_error = {abs(row.exact_marginal - limit.value), limit.error_bound};
    rows.push_back(std::move(row));
  }
  return rows;
}

MarginalConstraint degree_constraints(const std::vector<std::pair<unsigned, Partition>>& items) {
  std::map<unsigned, std::uint64_t> next_index;
  MarginalConstraint out;
  for (const auto& [d, lambda] : items) {
    out.push_back({PolynomialLabel{d, next_index[d]++, std::nullopt}, lambda});
  }
  return out;
}

// --- identities ---

std::string to_string(IdentityKind kind) {
  switch (kind) {
    case IdentityKind::Euler: return "euler";
    case IdentityKind::Factorization: return "factorization";
    case IdentityKind::Cauchy: return "cauchy";
    case IdentityKind::PlancherelNormalization: return "plancherel_normalization";
  }
  return "unknown";
}

IdentityKind parse_identity_kind(const std::string& text) {
  if (text == "euler") return IdentityKind::Euler;
  if (text == "factorization") return IdentityKind::Factorization;
  if (text == "cauchy") return IdentityKind::Cauchy;
  if (text == "plancherel_normalization" || text == "plancherel-normalization") {
    return IdentityKind::PlancherelNormalization;
  }
  throw DomainError("unknown identity kind \"" + text + "\"");
}

bool operator==(const IdentityReport& a, const IdentityReport& b) {
  auto same_disc = [](const std::optional<Discrepancy>& x, const std::optional<Discrepancy>& y) {
    if (x.has_value() != y.has_value()) return false;
    if (!x) return true;
    return x->index == y->index && x->lhs == y->lhs && x->rhs == y->rhs && x->degree == y->degree;
  };
  if (a.gauss_counts.size() != b.gauss_counts.size()) return false;
  for (std::size_t i = 0; i < a.gauss_counts.size(); ++i) {
    const auto& x = a.gauss_counts[i];
    const auto& y = b.gauss_counts[i];
    if (x.k != y.k || x.sum != y.sum || x.expected != y.expected) return false;
  }
  return a.kind == b.kind && a.q == b.q && a.order == b.order && a.ok == b.ok &&
         same_disc(a.first_discrepancy, b.first_discrepancy);
}

namespace {

void record(IdentityReport& report, std::size_t index, const Rational& lhs, const Rational& rhs,
            std::optional<unsigned> degree = std::nullopt) {
  if (lhs == rhs || !report.ok) return;
  report.ok = false;
  report.first_discrepancy = Discrepancy{index, lhs, rhs, degree};
}

void compare_series(IdentityReport& report, const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  for (std::size_t i = 0; i <= lhs.order(); ++i) record(report, i, lhs.coeff(i), rhs.coeff(i));
}

void verify_euler(IdentityReport& report) {
  if (report.q <= 1) throw DomainError("euler identity needs q > 1");
  TruncatedSeries sum(report.order);
  for (std::size_t n = 0; n <= report.order; ++n) sum.set_coeff(n, euler_coefficient(n, report.q));
  compare_series(report, sum, euler_series(report.q, report.order));
}

void verify_factorization(IdentityReport& report) {
  const unsigned long q = require_integer_q(report.q, "factorization identity");
  const Integer qz(q);
  for (unsigned k = 1; k <= report.order; ++k) {
    GaussCount g{k, Integer(0), pow(qz, k) - 1};
    for (unsigned d = 1; d <= k; ++d) {
      if (k % d == 0) g.sum += d * count_irreducibles(d, q).count;
    }
    record(report, k, Rational(g.sum), Rational(g.expected));
    report.gauss_counts.push_back(std::move(g));
  }
  TruncatedSeries product = TruncatedSeries::one(report.order);
  for (unsigned d = 1; d <= report.order; ++d) {
    product *= power(class_gf(d, report.q, report.order), count_irreducibles(d, q).count);
  }
  compare_series(report, euler_series(report.q, report.order), product);
}

void verify_cauchy(IdentityReport& report) {
  if (report.q <= 1) throw DomainError("cauchy identity needs q > 1");
  const auto order = report.order;
  for (unsigned d = 1; d <= order; ++d) {
    const TruncatedSeries gf = class_gf(d, report.q, order);
    const Rational big_q = pow(report.q, static_cast<long>(d));
    for (std::size_t i = 0; i <= order; ++i) {
      Rational partition_sum = 0;
      if (i % d == 0) {
        const unsigned m = static_cast<unsigned>(i / d);
        for_each_partition(m, [&](const Partition& lambda) {
          const Rational s = schur_special(lambda, d, report.q);
          partition_sum += s * s;
        });
        partition_sum *= pow(big_q, static_cast<long>(m));
      }
      record(report, i, gf.coeff(i), partition_sum, d);
    }
  }
}

void verify_plancherel_normalization(IdentityReport& report, unsigned enumeration_n) {
  const unsigned long q = require_integer_q(report.q, "plancherel normalization");
  const unsigned max_enum = static_cast<unsigned>(std::min<std::size_t>(enumeration_n, report.order));
  for (unsigned n = 0; n <= max_enum; ++n) {
    Rational total = 0;
    Integer degree_squares = 0;
    for_each_collection(
        n, q,
        [&](const PartitionCollection& c) {
          total += plancherel_weight(c, q);
          const Integer d = irrep_degree(c, q);
          degree_squares += d * d;
        },
        std::max(enumeration_n, kDefaultCollectionCap));
    record(report, n, total, Rational(1));
    record(report, n, Rational(degree_squares), Rational(gl_order(n, q)));
  }
  // Generating-function route: sum_Lambda prod_phi Q^{|l|} s^2 v^{|Lambda|} = prod_d H_d^{N(d)}.
  TruncatedSeries product = TruncatedSeries::one(report.order);
  for (unsigned d = 1; d <= report.order; ++d) {
    product *= power(class_gf(d, report.q, report.order), count_irreducibles(d, q).count);
  }
  const Rational qr(q);
  for (std::size_t n = 0; n <= report.order; ++n) {
    Rational total = product.coeff(n) * pow(qr, -static_cast<long>(n * (n - 1) / 2 + n));
    for (std::size_t i = 1; i <= n; ++i) total *= pow(qr, static_cast<long>(i)) - 1;
    record(report, n, total, Rational(1));
  }
}

}  // namespace

IdentityReport verify_identity(IdentityKind kind, const Rational& q, const VerifyOptions& options) {
  IdentityReport report;
  report.kind = kind;
  report.q = q;
  report.order = options.order;
  switch (kind) {
    case IdentityKind::Euler: verify_euler(report); break;
    case IdentityKind::Factorization: verify_factorization(report); break;
    case IdentityKind::Cauchy: verify_cauchy(report); break;
    case IdentityKind::PlancherelNormalization:
      verify_plancherel_normalization(report, options.enumeration_n);
      break;
  }
  return report;
}

}  // namespace plancherel
