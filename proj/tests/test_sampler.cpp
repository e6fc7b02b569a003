#include "plancherel/sampler.hpp"

#include <map>

#include <boost/math/distributions/chi_squared.hpp>
#include <gtest/gtest.h>

#include "plancherel/ensembles.hpp"
#include "plancherel/errors.hpp"

using namespace plancherel;

namespace {

SamplerConfig config(std::uint64_t seed, std::size_t count) {
  SamplerConfig cfg;
  cfg.seed = seed;
  cfg.count = count;
  return cfg;
}

double to_double(const Rational& x) { return x.get_d(); }

// Pearson chi-square p-value of observed counts against expected
// probabilities; bins with expected count < 5 are pooled.
double chi_square_p_value(const std::vector<double>& observed, const std::vector<double>& probs) {
  double total = 0;
  for (double o : observed) total += o;
  double stat = 0;
  int bins = 0;
  double pooled_obs = 0, pooled_exp = 0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const double e = probs[i] * total;
    if (e < 5) {
      pooled_obs += observed[i];
      pooled_exp += e;
      continue;
    }
    stat += (observed[i] - e) * (observed[i] - e) / e;
    ++bins;
  }
  if (pooled_exp > 0) {
    stat += (pooled_obs - pooled_exp) * (pooled_obs - pooled_exp) / std::max(pooled_exp, 1e-12);
    ++bins;
  }
  boost::math::chi_squared dist(bins - 1);
  return boost::math::cdf(boost::math::complement(dist, stat));
}

}  // namespace

TEST(Rng, StandardPinnedStream) {
  // The 10000th output of a default-seeded mt19937_64 is fixed by the standard.
  std::mt19937_64 engine;
  engine.discard(9999);
  EXPECT_EQ(engine(), 9981545732273789042ULL);
  Rng a(5), b(5), c(6);
  EXPECT_EQ(a.uniform128(), b.uniform128());
  EXPECT_NE(a.uniform128(), c.uniform128());
}

TEST(ExactCategorical, NeverPicksZeroWeight) {
  const ExactCategorical law({Rational(0), Rational(1, 3), Rational(0), Rational(2, 3), Rational(0)});
  Rng rng(1);
  std::map<std::size_t, int> seen;
  for (int i = 0; i < 3000; ++i) ++seen[law.draw(rng)];
  EXPECT_EQ(seen.size(), 2U);
  EXPECT_TRUE(seen.contains(1));
  EXPECT_TRUE(seen.contains(3));
  EXPECT_NEAR(seen[3] / 3000.0, 2.0 / 3.0, 0.04);
  EXPECT_THROW(ExactCategorical({Rational(0)}), DomainError);
  EXPECT_THROW(ExactCategorical({Rational(-1), Rational(2)}), DomainError);
}

TEST(SamplePlancherel, SingletonSpace) {
  for (const auto& c : sample_plancherel(1, 2, config(3, 50))) {
    EXPECT_EQ(c.total(), 1U);
    EXPECT_EQ(c.at({1, 0, std::nullopt}), Partition({1}));
  }
}

TEST(SamplePlancherel, DeterministicStreams) {
  const auto a = sample_plancherel(5, 3, config(99, 200));
  const auto b = sample_plancherel(5, 3, config(99, 200));
  const auto c = sample_plancherel(5, 3, config(100, 200));
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
}

TEST(PlancherelSampler, DpConsistency) {
  for (unsigned long q : {2UL, 3UL}) {
    PlancherelSampler dp(q, 20, config(0, 1));
    for (unsigned d = 1; d <= 20; ++d) {
      for (unsigned n = 0; n <= 20; ++n) {
        Rational sum = 0;
        for (unsigned m = 0; m <= n; ++m) sum += dp.class_coeff(d, m) * dp.suffix_coeff(d + 1, n - m);
        ASSERT_EQ(sum, dp.suffix_coeff(d, n)) << "q=" << q << " d=" << d << " n=" << n;
      }
    }
  }
}

TEST(PlancherelSampler, PathProbabilitiesEqualPlancherelWeights) {
  for (unsigned long q : {2UL, 3UL, 4UL}) {
    PlancherelSampler dp(q, 4, config(0, 1));
    for (unsigned n = 0; n <= 4; ++n) {
      Rational total = 0;
      for_each_collection(n, q, [&](const PartitionCollection& c) {
        const Rational p = dp.path_probability(c);
        ASSERT_EQ(p, plancherel_weight(c, q)) << "q=" << q << " n=" << n;
        total += p;
      });
      EXPECT_EQ(total, 1);
    }
  }
}

TEST(PlancherelSampler, TotalVariationAtN3) {
  const auto exact = enumerate_collections(3, 2);
  std::map<PartitionCollection, double> freq;
  const std::size_t draws = 100000;
  for (const auto& c : sample_plancherel(3, 2, config(7, draws))) freq[c] += 1.0 / draws;
  double tv = 0;
  for (const auto& c : exact) tv += std::abs(freq[c] - to_double(plancherel_weight(c, 2)));
  EXPECT_EQ(freq.size(), exact.size());
  EXPECT_LE(tv / 2, 0.02);
}

TEST(PlancherelSampler, MarginalFrequencyAtN2) {
  const std::size_t draws = 50000;
  std::size_t hits = 0;
  for (const auto& c : sample_plancherel(2, 2, config(11, draws))) {
    if (c.at({1, 0, std::nullopt}) == Partition({2})) ++hits;
  }
  EXPECT_NEAR(static_cast<double>(hits) / draws, 2.0 / 3.0, 0.01);
}

TEST(PlancherelSampler, PolynomialLabels) {
  auto cfg = config(4, 20);
  cfg.with_polynomials = true;
  for (const auto& c : sample_plancherel(4, 2, cfg)) {
    for (const auto& [label, lambda] : c.assignments()) {
      ASSERT_TRUE(label.coeffs.has_value());
      EXPECT_EQ(label.coeffs->size(), label.degree + 1);
    }
  }
  EXPECT_THROW(PlancherelSampler(4, 3, cfg), UnsupportedError);
}

TEST(PlancherelSampler, Errors) {
  EXPECT_THROW(PlancherelSampler(6, 3, config(0, 1)), DomainError);
  EXPECT_THROW(PlancherelSampler(2, 41, config(0, 1)), ResourceError);
  auto cfg = config(0, 1);
  cfg.tail_eps = Rational(1, 100);
  EXPECT_THROW(PlancherelSampler(2, 3, cfg), DomainError);
}

TEST(PlancherelSampler, LargerSizesAreConsistent) {
  const auto draws = sample_plancherel(30, 5, config(2024, 20));
  for (const auto& c : draws) EXPECT_EQ(c.total(), 30U);
}

TEST(SampleMPartition, SmallFugacityFavoursEmpty) {
  MPartitionSampler sampler(Rational(1, 8), Rational(2), config(0, 1));
  // P(empty) = prefactor, the other size masses together are much smaller.
  Rational rest = 0;
  for (std::size_t m = 1; m < sampler.size_weights().size(); ++m) rest += sampler.size_weights()[m];
  EXPECT_GT(sampler.prefactor().lower(), Rational(3, 4));
  EXPECT_GT(sampler.size_weights()[0], 3 * rest);
  std::size_t empties = 0;
  for (const auto& p : sample_m_partition(Rational(1, 8), Rational(2), config(5, 2000))) empties += p.empty();
  EXPECT_GT(empties, 1400U);
}

TEST(SampleMPartition, SizeHistogramChiSquare) {
  const Rational v(1), q(2);
  MPartitionSampler sampler(v, q, config(42, 100000));
  std::vector<double> probs;
  Rational total = 0;
  for (const auto& w : sampler.size_weights()) total += w;
  for (const auto& w : sampler.size_weights()) probs.push_back(to_double(w / total));
  std::vector<double> observed(probs.size(), 0);
  for (const auto& p : sample_m_partition(v, q, config(42, 100000))) observed.at(p.size()) += 1;
  EXPECT_GE(chi_square_p_value(observed, probs), 1e-3);
}

TEST(SampleMPartition, ConditionalShapeLaw) {
  const Rational v(1), q(2);
  const std::vector<Partition> shapes{Partition({3}), Partition({2, 1}), Partition({1, 1, 1})};
  std::vector<double> probs;
  Rational total = 0;
  for (const auto& s : shapes) total += m_weight_exact_part(s, v, q);
  for (const auto& s : shapes) probs.push_back(to_double(m_weight_exact_part(s, v, q) / total));
  std::vector<double> observed(3, 0);
  for (const auto& p : sample_m_partition(v, q, config(8, 60000))) {
    for (std::size_t i = 0; i < 3; ++i) {
      if (p == shapes[i]) observed[i] += 1;
    }
  }
  EXPECT_GT(observed[0] + observed[1] + observed[2], 2000);
  EXPECT_GE(chi_square_p_value(observed, probs), 1e-3);
}

TEST(SampleMPartition, Errors) {
  EXPECT_THROW(MPartitionSampler(Rational(2), Rational(2), config(0, 1)), DomainError);
  auto cfg = config(0, 1);
  cfg.size_cap = 5;
  EXPECT_THROW(MPartitionSampler(Rational(19, 10), Rational(2), cfg), ResourceError);
  try {
    MPartitionSampler(Rational(19, 10), Rational(2), cfg);
  } catch (const ResourceError& e) {
    EXPECT_NE(std::string(e.what()).find("only"), std::string::npos);
  }
}

TEST(SampleGrand, SizeLaw) {
  GrandSampler sampler(Rational(1, 2), 2, config(0, 1));
  EXPECT_EQ(sampler.size_weights()[0], 1);  // P(n=0) is the prefactor itself
  Rational total = 0;
  for (const auto& w : sampler.size_weights()) total += w;
  EXPECT_GE(sampler.prefactor().lower() * total, 1 - Rational(1, 1000000));
  EXPECT_LE(sampler.prefactor().lower() * total, 1);
}

TEST(SampleGrand, SizeHistogramChiSquare) {
  GrandSampler sampler(Rational(1, 2), 2, config(0, 1));
  Rational total = 0;
  for (const auto& w : sampler.size_weights()) total += w;
  std::vector<double> probs;
  for (const auto& w : sampler.size_weights()) probs.push_back(to_double(w / total));
  std::vector<double> observed(probs.size(), 0);
  for (const auto& c : sample_grand(Rational(1, 2), 2, config(17, 100000))) observed.at(c.total()) += 1;
  EXPECT_GE(chi_square_p_value(observed, probs), 1e-3);
}

TEST(SampleGrand, Errors) {
  EXPECT_THROW(GrandSampler(Rational(1), 2, config(0, 1)), DomainError);
  auto cfg = config(0, 1);
  cfg.n_cap = 3;
  EXPECT_THROW(GrandSampler(Rational(1, 2), 2, cfg), ResourceError);
}
