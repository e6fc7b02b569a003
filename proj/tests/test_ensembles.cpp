#include "plancherel/ensembles.hpp"

#include <set>

#include <gtest/gtest.h>

#include "plancherel/errors.hpp"

using namespace plancherel;

namespace {

PolynomialLabel slot(unsigned d, std::uint64_t i) { return {d, i, std::nullopt}; }

// Marginal by summing Plancherel weights over the explicit enumeration.
Rational enumerated_marginal(unsigned n, unsigned long q, const MarginalConstraint& constraints) {
  Rational total = 0;
  for_each_collection(n, q, [&](const PartitionCollection& c) {
    for (const auto& k : constraints) {
      if (c.at(k.slot) != k.lambda) return;
    }
    total += plancherel_weight(c, q);
  });
  return total;
}

}  // namespace

TEST(EnumerateCollections, SmallCases) {
  const auto one = enumerate_collections(1, 2);
  ASSERT_EQ(one.size(), 1U);
  EXPECT_EQ(one[0].at(slot(1, 0)), Partition({1}));

  const auto two = enumerate_collections(2, 2);
  ASSERT_EQ(two.size(), 3U);
  std::set<PartitionCollection> expected;
  for (const auto& [d, shape] : std::vector<std::pair<unsigned, Partition>>{
           {1, Partition({2})}, {1, Partition({1, 1})}, {2, Partition({1})}}) {
    PartitionCollection c;
    c.assign(slot(d, 0), shape);
    expected.insert(c);
  }
  EXPECT_EQ(std::set<PartitionCollection>(two.begin(), two.end()), expected);
  EXPECT_EQ(enumerate_collections(3, 2).size(), 6U);
}

// Collections of size n count conjugacy classes of GL(n,2): 1, 3, 6, 14, 27, 60.
TEST(EnumerateCollections, ClassNumbersOfGLn2) {
  const std::vector<std::size_t> classes{1, 1, 3, 6, 14, 27, 60};
  for (unsigned n = 0; n <= 6; ++n) {
    const auto all = enumerate_collections(n, 2);
    EXPECT_EQ(all.size(), classes[n]) << n;
    EXPECT_EQ(std::set<PartitionCollection>(all.begin(), all.end()).size(), all.size());
    for (const auto& c : all) EXPECT_EQ(c.total(), n);
  }
  EXPECT_THROW(enumerate_collections(7, 2), ResourceError);
}

TEST(EnumerateCollections, AttachesPolynomials) {
  PartitionCollection c;
  c.assign(slot(2, 0), Partition({1}));
  const auto labelled = with_polynomials(c, 2);
  ASSERT_EQ(labelled.assignments().size(), 1U);
  EXPECT_EQ(render_polynomial(*labelled.assignments().begin()->first.coeffs), "x^2+x+1");
}

TEST(ClassGf, Examples) {
  const auto h1 = class_gf(1, Rational(2), 4);
  EXPECT_EQ(h1.coeff(0), 1);
  EXPECT_EQ(h1.coeff(1), 2);
  const auto h2 = class_gf(2, Rational(2), 4);
  EXPECT_EQ(h2.coeff(1), 0);
  EXPECT_EQ(h2.coeff(2), Rational(4, 9));
  EXPECT_THROW(class_gf(1, Rational(1), 3), DomainError);
}

// [v^{dm}] H_d = sum_{|l|=m} Q^m s_l^2 and other coefficients vanish.
TEST(ClassGfProperty, CauchyPartitionSum) {
  for (const Rational q : {Rational(2), Rational(3), Rational(3, 2)}) {
    for (unsigned d = 1; d <= 4; ++d) {
      const auto h = class_gf(d, q, 16);
      for (std::size_t i = 0; i <= 16; ++i) {
        Rational expected = 0;
        if (i % d == 0) {
          const unsigned m = static_cast<unsigned>(i / d);
          for_each_partition(m, [&](const Partition& lambda) {
            const Rational s = schur_special(lambda, d, q);
            expected += s * s;
          });
          expected *= pow(pow(q, static_cast<long>(d)), static_cast<long>(m));
        }
        EXPECT_EQ(h.coeff(i), expected) << "q=" << q << " d=" << d << " i=" << i;
      }
    }
  }
}

TEST(Marginal, Examples) {
  EXPECT_EQ(marginal(1, 2, {{slot(1, 0), Partition({1})}}).value, 1);
  EXPECT_EQ(marginal(2, 2, {{slot(1, 0), Partition({2})}}).value, Rational(2, 3));
  EXPECT_EQ(marginal(2, 2, {{slot(1, 0), Partition({1})}}).value, 0);
  EXPECT_EQ(marginal(2, 2, {{slot(1, 0), Partition{}}}).value, Rational(1, 6));
}

TEST(Marginal, ExceedingSizeIsZeroAndFlagged) {
  const auto r = marginal(2, 2, {{slot(1, 0), Partition({3})}});
  EXPECT_EQ(r.value, 0);
  EXPECT_TRUE(r.exceeds_size);
  EXPECT_FALSE(marginal(3, 2, {{slot(1, 0), Partition({3})}}).exceeds_size);
}

TEST(Marginal, InputErrors) {
  EXPECT_THROW(marginal(3, 2, {{slot(1, 0), Partition({1})}, {slot(1, 0), Partition({1})}}), DomainError);
  EXPECT_THROW(marginal(3, 2, {{slot(1, 1), Partition({1})}}), DomainError);
  EXPECT_THROW(marginal(3, 2, {{slot(2, 1), Partition({1})}}), DomainError);
  EXPECT_THROW(marginal(1, 2, {{slot(2, 1), Partition({1})}}), DomainError);
}

TEST(MarginalProperty, SlotDistributionSumsToOne) {
  for (unsigned long q : {2UL, 3UL}) {
    for (unsigned n = 0; n <= 6; ++n) {
      for (unsigned d : {1U, 2U}) {
        Rational total = 0;
        for (unsigned m = 0; d * m <= n; ++m) {
          for_each_partition(m, [&](const Partition& lambda) {
            total += marginal(n, q, {{slot(d, 0), lambda}}).value;
          });
        }
        EXPECT_EQ(total, 1) << "q=" << q << " n=" << n << " d=" << d;
      }
    }
  }
}

TEST(MarginalProperty, AgreesWithEnumeration) {
  for (unsigned long q : {2UL, 3UL, 5UL}) {
    for (unsigned n = 0; n <= (q == 5 ? 4U : 5U); ++n) {
      for (unsigned d = 1; d <= std::min(n, 2U); ++d) {
        for (unsigned m = 0; d * m <= n; ++m) {
          for_each_partition(m, [&](const Partition& lambda) {
            const MarginalConstraint c{{slot(d, 0), lambda}};
            ASSERT_EQ(marginal(n, q, c).value, enumerated_marginal(n, q, c))
                << "q=" << q << " n=" << n << " d=" << d << " lambda=" << lambda.to_string();
          });
        }
      }
      if (n >= 3) {
        const MarginalConstraint joint{{slot(1, 0), Partition({1})}, {slot(2, 0), Partition({1})}};
        EXPECT_EQ(marginal(n, q, joint).value, enumerated_marginal(n, q, joint));
        if (q > 2) {
          const MarginalConstraint same_degree{{slot(1, 0), Partition{}}, {slot(1, 1), Partition({1})}};
          EXPECT_EQ(marginal(n, q, same_degree).value, enumerated_marginal(n, q, same_degree));
        }
      }
    }
  }
}

// The marginal of a slot depends on the polynomial only through its degree.
TEST(MarginalProperty, DependsOnlyOnDegree) {
  for (unsigned long q : {2UL, 3UL, 5UL}) {
    for (unsigned n = 1; n <= 4; ++n) {
      for (unsigned d = 1; d <= 2; ++d) {
        const auto count = count_irreducibles(d, q).count.get_ui();
        if (count < 2) continue;
        for (unsigned m = 0; d * m <= n; ++m) {
          for_each_partition(m, [&](const Partition& lambda) {
            const Rational a = enumerated_marginal(n, q, {{slot(d, 0), lambda}});
            const Rational b = enumerated_marginal(n, q, {{slot(d, count - 1), lambda}});
            ASSERT_EQ(a, b);
            ASSERT_EQ(marginal(n, q, {{slot(d, count - 1), lambda}}).value, a);
          });
        }
      }
    }
  }
}

TEST(LimitWeight, Examples) {
  const Rational tol(1, 1000000000);
  const auto empty = limit_weight(Partition{}, 2, 3, tol);
  const auto prefactor = certified_product({2, 1, 1, 0, Rational(3)}, Rational(1), tol);
  EXPECT_LE(abs(empty.value - prefactor.value), empty.error_bound + prefactor.error_bound);

  const auto one = limit_weight(Partition({1}), 1, 2, tol);
  const auto c = certified_product({1, 1, 1, 0, Rational(2)}, Rational(1), tol);
  EXPECT_LE(abs(one.value - 2 * c.value), one.error_bound + 2 * c.error_bound);
  EXPECT_LE(one.error_bound, tol);
}

TEST(LimitWeightProperty, TotalMassApproachesOne) {
  const Rational tol = pow(Rational(10), -12);
  for (unsigned d : {1U, 2U}) {
    const auto prefactor = limit_weight(Partition{}, d, 2, tol);
    const auto h = class_gf(d, Rational(2), 60 * d);
    Rational partial = 0;
    Rational previous = -1;
    for (unsigned m = 0; m <= 60; ++m) {
      partial += h.coeff(m * d);  // sum over |lambda| = m of Q^m s^2 with v = 1
      const Rational mass = prefactor.value * partial;
      EXPECT_GT(mass, previous);
      EXPECT_LE(prefactor.lower() * partial, 1);
      previous = mass;
    }
    EXPECT_LT(abs(prefactor.value * partial - 1), Rational(1, 1000000000));
  }
}

TEST(ConvergenceTable, RowsAndErrors) {
  const auto rows = convergence_table(2, degree_constraints({{1, Partition({1})}}), 1, 12, Rational(1, 1000000000));
  ASSERT_EQ(rows.size(), 12U);
  EXPECT_EQ(rows[0].n, 1U);
  EXPECT_EQ(rows[0].exact_marginal, 1);
  EXPECT_EQ(rows[1].exact_marginal, 0);
  for (const auto& r : rows) {
    EXPECT_EQ(r.abs_error.value, abs(r.exact_marginal - r.limit_value.value));
    EXPECT_EQ(r.abs_error.error_bound, r.limit_value.error_bound);
    EXPECT_EQ(r.exact_marginal, marginal(r.n, 2, degree_constraints({{1, Partition({1})}})).value);
  }
  EXPECT_THROW(convergence_table(2, {}, 5, 4, Rational(1, 10)), DomainError);
}

TEST(ConvergenceTable, JointCaseApproachesProductOfLimits) {
  const Rational tol(1, 1000000000);
  const auto constraints = degree_constraints({{1, Partition({1})}, {2, Partition({1})}});
  const auto rows = convergence_table(2, constraints, 20, 25, tol);
  const auto product = limit_weight(Partition({1}), 1, 2, tol) * limit_weight(Partition({1}), 2, 2, tol);
  for (const auto& r : rows) EXPECT_LE(abs(r.limit_value.value - product.value), 2 * tol);
  EXPECT_LT(rows.back().abs_error.upper(), Rational(1, 10000));
}

TEST(DegreeConstraints, RepeatedDegreesGetDistinctSlots) {
  const auto c = degree_constraints({{1, Partition({1})}, {2, Partition{}}, {1, Partition({2})}});
  EXPECT_EQ(c[0].slot, slot(1, 0));
  EXPECT_EQ(c[1].slot, slot(2, 0));
  EXPECT_EQ(c[2].slot, slot(1, 1));
}

TEST(VerifyIdentity, AllKindsPass) {
  EXPECT_TRUE(verify_identity(IdentityKind::Euler, Rational(2), {25, 5}).ok);
  EXPECT_TRUE(verify_identity(IdentityKind::Euler, Rational(5, 3), {12, 5}).ok);
  const auto fact = verify_identity(IdentityKind::Factorization, Rational(2), {20, 5});
  EXPECT_TRUE(fact.ok);
  ASSERT_EQ(fact.gauss_counts.size(), 20U);
  EXPECT_EQ(fact.gauss_counts[3].sum, 15);
  EXPECT_TRUE(verify_identity(IdentityKind::Cauchy, Rational(3), {12, 5}).ok);
  EXPECT_TRUE(verify_identity(IdentityKind::PlancherelNormalization, Rational(2), {2, 2}).ok);
  EXPECT_TRUE(verify_identity(IdentityKind::PlancherelNormalization, Rational(3), {12, 4}).ok);
  EXPECT_FALSE(verify_identity(IdentityKind::Euler, Rational(2), {5, 5}).first_discrepancy.has_value());
}

TEST(VerifyIdentity, DomainChecks) {
  EXPECT_THROW(verify_identity(IdentityKind::Euler, Rational(1)), DomainError);
  EXPECT_THROW(verify_identity(IdentityKind::Factorization, Rational(5, 2)), DomainError);
  EXPECT_THROW(parse_identity_kind("nope"), DomainError);
  EXPECT_EQ(parse_identity_kind("plancherel-normalization"), IdentityKind::PlancherelNormalization);
}
