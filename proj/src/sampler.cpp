#include "plancherel/sampler.hpp"

#include <algorithm>

#include "plancherel/ensembles.hpp"
#include "plancherel/errors.hpp"
#include "plancherel/fieldpolys.hpp"

namespace plancherel {

namespace {

void validate_config(const SamplerConfig& cfg) {
  if (cfg.tail_eps <= 0 || cfg.tail_eps > Rational(1, 1000)) {
    throw DomainError("tail_eps must lie in (0, 1e-3]");
  }
}

Integer two_pow_128() {
  Integer r;
  mpz_setbit(r.get_mpz_t(), 128);
  return r;
}

}  // namespace

Integer Rng::uniform128() {
  const std::uint64_t hi = engine_();
  const std::uint64_t lo = engine_();
  Integer r(static_cast<unsigned long>(hi));
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), 64);
  r += Integer(static_cast<unsigned long>(lo));
  return r;
}

ExactCategorical::ExactCategorical(const std::vector<Rational>& weights) {
  Rational total = 0;
  for (const auto& w : weights) {
    if (w < 0) throw DomainError("categorical weights must be nonnegative");
    total += w;
  }
  if (total <= 0) throw DomainError("categorical weights must have positive total");
  const Integer scale = two_pow_128();
  Rational cumulative = 0;
  thresholds_.reserve(weights.size());
  for (const auto& w : weights) {
    cumulative += w;
    const Rational t = cumulative * scale / total;
    Integer floored;
    mpz_fdiv_q(floored.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
    thresholds_.push_back(std::move(floored));
  }
}

std::size_t ExactCategorical::draw(Rng& rng) const {
  if (thresholds_.empty()) throw DomainError("draw from an empty categorical law");
  const Integer k = rng.uniform128();
  auto it = std::upper_bound(thresholds_.begin(), thresholds_.end(), k);
  return static_cast<std::size_t>(it - thresholds_.begin());
}

// --- M_{v,q} ---

MPartitionSampler::MPartitionSampler(const Rational& v, const Rational& q, const SamplerConfig& cfg)
    : v_(v), q_(q) {
  validate_config(cfg);
  if (q <= 1) throw DomainError("M_{v,q} needs q > 1");
  if (v <= 0 || v >= q) throw DomainError("M_{v,q} needs 0 < v < q");

  const unsigned cap = cfg.size_cap;
  const TruncatedSeries gf = class_gf(1, q, cap);
  std::vector<Rational> weights(cap + 1);
  for (unsigned m = 0; m <= cap; ++m) weights[m] = pow(v, static_cast<long>(m)) * gf.coeff(m);

  // Product-route size masses must match direct partition sums before use.
  for (unsigned m = 0; m <= std::min(cap, 16U); ++m) {
    Rational direct = 0;
    for_each_partition(m, [&](const Partition& lambda) { direct += m_weight_exact_part(lambda, v, q); });
    if (direct != weights[m]) {
      throw ConsistencyError("M_{v,q} size mass at m=" + std::to_string(m) + " disagrees with partition sum");
    }
  }

  prefactor_ = certified_product(ProductFactorSpec{1, 1, 1, 0, q}, v, cfg.tail_eps / 4);
  const Rational c_low = prefactor_.lower();
  Rational partial = 0;
  bool found = false;
  for (unsigned m = 0; m <= cap; ++m) {
    partial += weights[m];
    if (1 - c_low * partial <= cfg.tail_eps) {
      max_size_ = m;
      found = true;
      break;
    }
  }
  if (!found) {
    throw ResourceError("M_{v,q} tail within size cap " + std::to_string(cap) + " is only " +
                        to_decimal(1 - c_low * partial, 6, Rounding::Up) + ", above tail_eps");
  }
  size_weights_.assign(weights.begin(), weights.begin() + max_size_ + 1);
  size_law_ = ExactCategorical(size_weights_);
}

Partition MPartitionSampler::draw(Rng& rng) {
  const auto m = static_cast<unsigned>(size_law_.draw(rng));
  auto it = shapes_.find(m);
  if (it == shapes_.end()) {
    std::vector<Partition> shapes = enumerate_partitions(m, std::max(m, kDefaultPartitionCap));
    std::vector<Rational> weights;
    weights.reserve(shapes.size());
    for (const auto& lambda : shapes) weights.push_back(m_weight_exact_part(lambda, v_, q_));
    ExactCategorical law(weights);
    it = shapes_.emplace(m, std::make_pair(std::move(shapes), std::move(law))).first;
  }
  return it->second.first[it->second.second.draw(rng)];
}

// --- mu_n ---

PlancherelSampler::PlancherelSampler(unsigned long q, unsigned max_n, const SamplerConfig& cfg)
    : q_(q), max_n_(max_n), with_polynomials_(cfg.with_polynomials) {
  validate_config(cfg);
  if (!is_prime_power(q)) throw DomainError("Plancherel sampler needs a prime power q");
  if (max_n > cfg.n_cap) {
    throw ResourceError("collection size " + std::to_string(max_n) + " exceeds cap " +
                        std::to_string(cfg.n_cap));
  }
  if (with_polynomials_ && !is_prime(q)) {
    throw UnsupportedError("polynomial coefficients are only available over prime fields");
  }
  const Rational qr(q);
  counts_.assign(max_n + 1, Integer(0));
  class_gfs_.assign(max_n + 1, TruncatedSeries::one(max_n));
  classes_.assign(max_n + 1, TruncatedSeries::one(max_n));
  suffixes_.assign(max_n + 2, TruncatedSeries::one(max_n));
  for (unsigned d = 1; d <= max_n; ++d) {
    counts_[d] = count_irreducibles(d, q).count;
    class_gfs_[d] = class_gf(d, qr, max_n);
    classes_[d] = power(class_gfs_[d], counts_[d]);
  }
  for (unsigned d = max_n; d >= 1; --d) suffixes_[d] = classes_[d] * suffixes_[d + 1];
}

const Rational& PlancherelSampler::suffix_coeff(unsigned d, unsigned n) const {
  return suffixes_.at(d).coeff(n);
}

const Rational& PlancherelSampler::class_coeff(unsigned d, unsigned m) const {
  return classes_.at(d).coeff(m);
}

const PlancherelSampler::Choice& PlancherelSampler::size_choice(unsigned d, unsigned rem) {
  const auto key = std::make_pair(d, rem);
  if (auto it = size_cache_.find(key); it != size_cache_.end()) return it->second;
  Choice c;
  for (unsigned m = 0; m <= rem; m += d) {
    c.values.push_back(m);
    c.weights.push_back(classes_[d].coeff(m) * suffixes_[d + 1].coeff(rem - m));
  }
  c.law = ExactCategorical(c.weights);
  return size_cache_.emplace(key, std::move(c)).first->second;
}

const TruncatedSeries& PlancherelSampler::class_power(unsigned d, const Integer& count) {
  const auto key = std::make_pair(d, count);
  if (auto it = power_cache_.find(key); it != power_cache_.end()) return it->second;
  return power_cache_.emplace(key, power(class_gfs_[d], count)).first->second;
}

const PlancherelSampler::Choice& PlancherelSampler::split_choice(unsigned d, const Integer& count, unsigned m) {
  const auto key = std::make_tuple(d, count, m);
  if (auto it = split_cache_.find(key); it != split_cache_.end()) return it->second;
  const Integer left = count / 2;
  const Integer right = count - left;
  const TruncatedSeries& left_gf = class_power(d, left);
  const TruncatedSeries& right_gf = class_power(d, right);
  Choice c;
  for (unsigned m1 = 0; m1 <= m; m1 += d) {
    c.values.push_back(m1);
    c.weights.push_back(left_gf.coeff(m1) * right_gf.coeff(m - m1));
  }
  c.law = ExactCategorical(c.weights);
  return split_cache_.emplace(key, std::move(c)).first->second;
}

const PlancherelSampler::ShapeChoice& PlancherelSampler::shape_choice(unsigned d, unsigned k) {
  const auto key = std::make_pair(d, k);
  if (auto it = shape_cache_.find(key); it != shape_cache_.end()) return it->second;
  ShapeChoice c;
  c.shapes = enumerate_partitions(k, std::max(k, kDefaultPartitionCap));
  const Rational qr(q_);
  for (const auto& lambda : c.shapes) {
    const Rational s = schur_special(lambda, d, qr);
    c.weights.push_back(s * s);
  }
  c.law = ExactCategorical(c.weights);
  return shape_cache_.emplace(key, std::move(c)).first->second;
}

PolynomialLabel PlancherelSampler::make_label(unsigned d, const Integer& index) {
  if (!index.fits_ulong_p()) throw ResourceError("polynomial index does not fit in 64 bits");
  PolynomialLabel label{d, index.get_ui(), std::nullopt};
  if (with_polynomials_) {
    auto it = polynomials_.find(d);
    if (it == polynomials_.end()) it = polynomials_.emplace(d, enumerate_irreducibles(d, q_)).first;
    label.coeffs = it->second.at(label.index).coeffs;
  }
  return label;
}

void PlancherelSampler::split(unsigned d, const Integer& lo, const Integer& count, unsigned m, Rng& rng,
                              PartitionCollection& out) {
  if (m == 0) return;
  if (count == 1) {
    const ShapeChoice& c = shape_choice(d, m / d);
    out.assign(make_label(d, lo), c.shapes[c.law.draw(rng)]);
    return;
  }
  const Choice& c = split_choice(d, count, m);
  const unsigned m1 = c.values[c.law.draw(rng)];
  const Integer left = count / 2;
  split(d, lo, left, m1, rng, out);
  split(d, lo + left, count - left, m - m1, rng, out);
}

PartitionCollection PlancherelSampler::draw(unsigned n, Rng& rng) {
  if (n > max_n_) throw ResourceError("requested size exceeds the sampler's precomputed range");
  PartitionCollection out;
  unsigned rem = n;
  for (unsigned d = 1; d <= max_n_ && rem > 0; ++d) {
    const Choice& c = size_choice(d, rem);
    const unsigned m = c.values[c.law.draw(rng)];
    split(d, Integer(0), counts_[d], m, rng, out);
    rem -= m;
  }
  if (rem != 0 || out.total() != n) throw ConsistencyError("allocated sizes do not sum to n");
  return out;
}

Rational PlancherelSampler::split_probability(unsigned d, const Integer& lo, const Integer& count, unsigned m,
                                              const std::map<Integer, unsigned>& sizes) {
  if (m == 0) return 1;
  // Single slot: the shape factor is applied by the caller.
  if (count == 1) return 1;
  const Integer left = count / 2;
  unsigned m1 = 0;
  for (auto it = sizes.lower_bound(lo); it != sizes.end() && it->first < lo + left; ++it) m1 += it->second;
  const Choice& c = split_choice(d, count, m);
  Rational total = 0;
  Rational chosen = 0;
  for (std::size_t i = 0; i < c.values.size(); ++i) {
    total += c.weights[i];
    if (c.values[i] == m1) chosen = c.weights[i];
  }
  return chosen / total * split_probability(d, lo, left, m1, sizes) *
         split_probability(d, lo + left, count - left, m - m1, sizes);
}

Rational PlancherelSampler::path_probability(const PartitionCollection& collection) {
  const unsigned long n = collection.total();
  if (n > max_n_) throw ResourceError("collection exceeds the sampler's precomputed range");
  std::vector<std::map<Integer, unsigned>> sizes(max_n_ + 1);
  for (const auto& [label, lambda] : collection.assignments()) {
    if (Integer(static_cast<unsigned long>(label.index)) >= counts_.at(label.degree)) return 0;
    sizes[label.degree][Integer(static_cast<unsigned long>(label.index))] = label.degree * lambda.size();
  }
  Rational p = 1;
  unsigned rem = static_cast<unsigned>(n);
  for (unsigned d = 1; d <= max_n_ && rem > 0; ++d) {
    unsigned m = 0;
    for (const auto& [idx, s] : sizes[d]) m += s;
    const Choice& c = size_choice(d, rem);
    Rational total = 0;
    Rational chosen = 0;
    for (std::size_t i = 0; i < c.values.size(); ++i) {
      total += c.weights[i];
      if (c.values[i] == m) chosen = c.weights[i];
    }
    p *= chosen / total;
    if (p == 0) return 0;
    p *= split_probability(d, Integer(0), counts_[d], m, sizes[d]);
    rem -= m;
  }
  // Shape stage.
  for (const auto& [label, lambda] : collection.assignments()) {
    const ShapeChoice& c = shape_choice(label.degree, lambda.size());
    Rational total = 0;
    Rational chosen = 0;
    for (std::size_t i = 0; i < c.shapes.size(); ++i) {
      total += c.weights[i];
      if (c.shapes[i] == lambda) chosen = c.weights[i];
    }
    p *= chosen / total;
  }
  return p;
}

// --- P_{v,q} ---

GrandSampler::GrandSampler(const Rational& v, unsigned long q, const SamplerConfig& cfg) {
  validate_config(cfg);
  if (v <= 0 || v >= 1) throw DomainError("P_{v,q} needs 0 < v < 1");
  if (q < 2) throw DomainError("P_{v,q} needs q >= 2");
  const Rational qr(q);
  prefactor_ = grand_prefactor(v, qr, cfg.tail_eps / 4);
  const Rational p_low = prefactor_.lower();
  Rational partial = 0;
  bool found = false;
  for (unsigned n = 0; n <= cfg.n_cap; ++n) {
    size_weights_.push_back(euler_coefficient(n, qr) * pow(v, static_cast<long>(n)));
    partial += size_weights_.back();
    if (1 - p_low * partial <= cfg.tail_eps) {
      max_size_ = n;
      found = true;
      break;
    }
  }
  if (!found) {
    throw ResourceError("P_{v,q} tail within size cap " + std::to_string(cfg.n_cap) + " is only " +
                        to_decimal(1 - p_low * partial, 6, Rounding::Up) + ", above tail_eps");
  }
  size_law_ = ExactCategorical(size_weights_);
  plancherel_.emplace(q, max_size_, cfg);
}

PartitionCollection GrandSampler::draw(Rng& rng) {
  const auto n = static_cast<unsigned>(size_law_.draw(rng));
  return plancherel_->draw(n, rng);
}

std::vector<Partition> sample_m_partition(const Rational& v, const Rational& q, const SamplerConfig& cfg) {
  MPartitionSampler sampler(v, q, cfg);
  Rng rng(cfg.seed);
  std::vector<Partition> out;
  out.reserve(cfg.count);
  for (std::size_t i = 0; i < cfg.count; ++i) out.push_back(sampler.draw(rng));
  return out;
}

std::vector<PartitionCollection> sample_plancherel(unsigned n, unsigned long q, const SamplerConfig& cfg) {
  PlancherelSampler sampler(q, n, cfg);
  Rng rng(cfg.seed);
  std::vector<PartitionCollection> out;
  out.reserve(cfg.count);
  for (std::size_t i = 0; i < cfg.count; ++i) out.push_back(sampler.draw(n, rng));
  return out;
}

std::vector<PartitionCollection> sample_grand(const Rational& v, unsigned long q, const SamplerConfig& cfg) {
  GrandSampler sampler(v, q, cfg);
  Rng rng(cfg.seed);
  std::vector<PartitionCollection> out;
  out.reserve(cfg.count);
  for (std::size_t i = 0; i < cfg.count; ++i) out.push_back(sampler.draw(rng));
  return out;
}

}  // namespace plancherel
