#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <tuple>
#include <vector>

#include "plancherel/collection.hpp"
#include "plancherel/measures.hpp"
#include "plancherel/series.hpp"

namespace plancherel {

struct SamplerConfig {
  std::uint64_t seed = 0;
  std::size_t count = 1;
  Rational tail_eps = Rational(1, 1000000);
  unsigned size_cap = 60;
  /// Largest collection size for the Plancherel and grand-canonical samplers.
  unsigned n_cap = 40;
  /// Attach coefficient vectors to labels (prime q only).
  bool with_polynomials = false;
};

/// std::mt19937_64 seeded with the config seed. Its output sequence is fixed
/// by the C++ standard, so streams are identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform integer in [0, 2^128): high word drawn first.
  Integer uniform128();

 private:
  std::mt19937_64 engine_;
};

/// Inverse-CDF draw against exact rational weights.
///
/// With k uniform in [0, 2^128), returns the first i whose normalized
/// cumulative weight is >= (k+1)/2^128. Thresholds are precomputed exactly,
/// so zero-weight entries are never returned.
class ExactCategorical {
 public:
  ExactCategorical() = default;
  explicit ExactCategorical(const std::vector<Rational>& weights);

  std::size_t draw(Rng& rng) const;
  std::size_t size() const { return thresholds_.size(); }

 private:
  std::vector<Integer> thresholds_;
};

/// Draws from M_{v,q} restricted to {|lambda| <= max_size()}, an event whose
/// probability is certified to be at least 1 - tail_eps.
class MPartitionSampler {
 public:
  MPartitionSampler(const Rational& v, const Rational& q, const SamplerConfig& cfg);

  Partition draw(Rng& rng);

  unsigned max_size() const { return max_size_; }
  /// v^m [u^m] prod_{r>=1} (1 - u q^{-r})^{-r}; multiply by prefactor() for P(|lambda| = m).
  const std::vector<Rational>& size_weights() const { return size_weights_; }
  const CertifiedReal& prefactor() const { return prefactor_; }

 private:
  Rational v_, q_;
  unsigned max_size_ = 0;
  std::vector<Rational> size_weights_;
  CertifiedReal prefactor_;
  ExactCategorical size_law_;
  std::map<unsigned, std::pair<std::vector<Partition>, ExactCategorical>> shapes_;
};

/// Exact backward dynamic-programming sampler for mu_n, n <= max_n.
///
/// Stages: (1) total size carried by each degree class, weighted by
/// [v^m] G_d [v^{rem-m}] T_{d+1} with G_d = H_d^{N(d)} and T_d = prod_{e>=d} G_e;
/// (2) binary splitting of a class total among its N(d) labelled slots using
/// powers of H_d; (3) a partition of each slot's size, weighted by
/// Q^m s_lambda(Q^{-1}, ...)^2.
class PlancherelSampler {
 public:
  PlancherelSampler(unsigned long q, unsigned max_n, const SamplerConfig& cfg);

  PartitionCollection draw(unsigned n, Rng& rng);

  /// Probability that draw(n) returns exactly this collection, as the
  /// product of the exact stage-wise choice probabilities.
  Rational path_probability(const PartitionCollection& collection);

  /// [v^n] T_d
  const Rational& suffix_coeff(unsigned d, unsigned n) const;
  /// [v^m] G_d
  const Rational& class_coeff(unsigned d, unsigned m) const;
  unsigned max_n() const { return max_n_; }

 private:
  struct Choice {
    std::vector<unsigned> values;
    std::vector<Rational> weights;
    ExactCategorical law;
  };
  struct ShapeChoice {
    std::vector<Partition> shapes;
    std::vector<Rational> weights;
    ExactCategorical law;
  };

  const Choice& size_choice(unsigned d, unsigned rem);
  const Choice& split_choice(unsigned d, const Integer& count, unsigned m);
  const ShapeChoice& shape_choice(unsigned d, unsigned k);
  const TruncatedSeries& class_power(unsigned d, const Integer& count);

  void split(unsigned d, const Integer& lo, const Integer& count, unsigned m, Rng& rng,
             PartitionCollection& out);
  Rational split_probability(unsigned d, const Integer& lo, const Integer& count, unsigned m,
                             const std::map<Integer, unsigned>& sizes);
  PolynomialLabel make_label(unsigned d, const Integer& index);

  unsigned long q_;
  unsigned max_n_;
  bool with_polynomials_;
  std::vector<Integer> counts_;              // N(d)
  std::vector<TruncatedSeries> class_gfs_;   // H_d
  std::vector<TruncatedSeries> classes_;     // G_d
  std::vector<TruncatedSeries> suffixes_;    // T_d, index max_n+1 is 1
  std::map<std::pair<unsigned, unsigned>, Choice> size_cache_;
  std::map<std::tuple<unsigned, Integer, unsigned>, Choice> split_cache_;
  std::map<std::pair<unsigned, unsigned>, ShapeChoice> shape_cache_;
  std::map<std::pair<unsigned, Integer>, TruncatedSeries> power_cache_;
  std::map<unsigned, std::vector<PolynomialLabel>> polynomials_;
};

/// Draws from P_{v,q}: total size from its exact law (truncated with
/// certified tail), then a Plancherel draw of that size.
class GrandSampler {
 public:
  GrandSampler(const Rational& v, unsigned long q, const SamplerConfig& cfg);

  PartitionCollection draw(Rng& rng);

  unsigned max_size() const { return max_size_; }
  /// q^{n(n+1)/2} prod (q^i - 1)^{-1} v^n; times prefactor() gives P(|Lambda| = n).
  const std::vector<Rational>& size_weights() const { return size_weights_; }
  const CertifiedReal& prefactor() const { return prefactor_; }

 private:
  unsigned max_size_ = 0;
  std::vector<Rational> size_weights_;
  CertifiedReal prefactor_;
  ExactCategorical size_law_;
  std::optional<PlancherelSampler> plancherel_;
};

std::vector<Partition> sample_m_partition(const Rational& v, const Rational& q, const SamplerConfig& cfg);
std::vector<PartitionCollection> sample_plancherel(unsigned n, unsigned long q, const SamplerConfig& cfg);
std::vector<PartitionCollection> sample_grand(const Rational& v, unsigned long q, const SamplerConfig& cfg);

}  // namespace plancherel
