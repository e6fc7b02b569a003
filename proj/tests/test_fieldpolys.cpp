#include "plancherel/fieldpolys.hpp"

#include <set>

#include <gtest/gtest.h>

#include "plancherel/errors.hpp"

using namespace plancherel;

namespace {

using Poly = std::vector<unsigned>;

Poly multiply(const Poly& a, const Poly& b, unsigned p) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  return out;
}

std::vector<Poly> monic_polys(unsigned d, unsigned p) {
  std::vector<Poly> out;
  unsigned long total = 1;
  for (unsigned i = 0; i < d; ++i) total *= p;
  for (unsigned long code = 0; code < total; ++code) {
    Poly f(d + 1);
    f[d] = 1;
    unsigned long rest = code;
    for (unsigned i = 0; i < d; ++i) {
      f[i] = rest % p;
      rest /= p;
    }
    out.push_back(f);
  }
  return out;
}

// Brute-force sieve: a monic degree-d polynomial is reducible iff it is a
// product of two monic polynomials of positive degree.
std::set<Poly> reducible_monics(unsigned d, unsigned p) {
  std::set<Poly> out;
  for (unsigned a = 1; 2 * a <= d; ++a) {
    for (const auto& f : monic_polys(a, p)) {
      for (const auto& g : monic_polys(d - a, p)) out.insert(multiply(f, g, p));
    }
  }
  return out;
}

unsigned long brute_force_count(unsigned d, unsigned p) {
  const auto reducible = reducible_monics(d, p);
  unsigned long count = 0;
  for (const auto& f : monic_polys(d, p)) {
    if (f[0] != 0 && !reducible.contains(f)) ++count;
  }
  // x itself is irreducible with zero constant term; it is excluded above.
  return count;
}

}  // namespace

TEST(CountIrreducibles, Examples) {
  EXPECT_EQ(count_irreducibles(1, 7).count, 6);
  EXPECT_EQ(count_irreducibles(2, 2).count, 1);
  EXPECT_EQ(count_irreducibles(3, 2).count, 2);
  EXPECT_EQ(count_irreducibles(4, 2).count, 3);
  EXPECT_FALSE(count_irreducibles(4, 2).formal);
  EXPECT_TRUE(count_irreducibles(2, 6).formal);
  EXPECT_FALSE(count_irreducibles(2, 9).formal);
  EXPECT_THROW(count_irreducibles(0, 2), DomainError);
}

TEST(CountIrreducibles, MatchBruteForce) {
  for (unsigned p : {2U, 3U}) {
    for (unsigned d = 1; d <= (p == 2 ? 8U : 6U); ++d) {
      EXPECT_EQ(count_irreducibles(d, p).count, brute_force_count(d, p)) << "p=" << p << " d=" << d;
    }
  }
}

TEST(CountIrreducibles, GaussIdentity) {
  for (unsigned long q : {2UL, 3UL, 4UL, 5UL}) {
    for (unsigned k = 1; k <= 20; ++k) {
      Integer sum = 0;
      for (unsigned d = 1; d <= k; ++d) {
        if (k % d == 0) sum += d * count_irreducibles(d, q).count;
      }
      EXPECT_EQ(sum, pow(Integer(q), k) - 1) << "q=" << q << " k=" << k;
    }
  }
}

TEST(EnumerateIrreducibles, Examples) {
  const auto lin = enumerate_irreducibles(1, 3);
  ASSERT_EQ(lin.size(), 2U);
  EXPECT_EQ(render_polynomial(*lin[0].coeffs), "x+1");
  EXPECT_EQ(render_polynomial(*lin[1].coeffs), "x+2");

  const auto quad = enumerate_irreducibles(2, 2);
  ASSERT_EQ(quad.size(), 1U);
  EXPECT_EQ(render_polynomial(*quad[0].coeffs), "x^2+x+1");

  const auto cubic = enumerate_irreducibles(3, 2);
  ASSERT_EQ(cubic.size(), 2U);
  EXPECT_EQ(render_polynomial(*cubic[0].coeffs), "x^3+x+1");
  EXPECT_EQ(render_polynomial(*cubic[1].coeffs), "x^3+x^2+1");
  EXPECT_EQ(cubic[1].index, 1U);
}

TEST(EnumerateIrreducibles, Errors) {
  EXPECT_THROW(enumerate_irreducibles(2, 4), UnsupportedError);
  EXPECT_THROW(enumerate_irreducibles(21, 2), ResourceError);
  EXPECT_THROW(enumerate_irreducibles(3, 5, 100), ResourceError);
}

TEST(EnumerateIrreducibles, AgreesWithCountAndSieve) {
  for (unsigned p : {2U, 3U, 5U}) {
    for (unsigned d = 1; d <= (p == 2 ? 8U : 4U); ++d) {
      const auto list = enumerate_irreducibles(d, p);
      EXPECT_EQ(Integer(static_cast<unsigned long>(list.size())), count_irreducibles(d, p).count);
      const auto reducible = reducible_monics(d, p);
      for (std::size_t i = 0; i < list.size(); ++i) {
        const auto& f = *list[i].coeffs;
        EXPECT_NE(f[0], 0U);
        EXPECT_EQ(f[d], 1U);
        EXPECT_FALSE(reducible.contains(f));
        if (i > 0) {
          const auto& g = *list[i - 1].coeffs;
          EXPECT_TRUE(std::lexicographical_compare(g.rbegin(), g.rend(), f.rbegin(), f.rend()));
        }
      }
    }
  }
}

TEST(Render, Formats) {
  EXPECT_EQ(render_polynomial({1, 0, 2, 1}), "x^3+2x^2+1");
  EXPECT_EQ(render_polynomial({0, 1}), "x");
  EXPECT_EQ(render_polynomial({3, 4, 1}), "x^2+4x+3");
}

TEST(Arithmetic, MobiusAndPrimes) {
  EXPECT_EQ(mobius(1), 1);
  EXPECT_EQ(mobius(6), 1);
  EXPECT_EQ(mobius(12), 0);
  EXPECT_EQ(mobius(30), -1);
  EXPECT_TRUE(is_prime_power(8));
  EXPECT_TRUE(is_prime_power(9));
  EXPECT_FALSE(is_prime_power(12));
  EXPECT_FALSE(is_prime_power(1));
}
