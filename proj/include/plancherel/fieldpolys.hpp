#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plancherel/rational.hpp"

namespace plancherel {

/// Number of monic irreducible polynomials of degree d over F_q, excluding x.
struct DegreeClass {
  unsigned d = 0;
  Integer count;
  /// Set when q is not a prime power: the count is the formal necklace value only.
  bool formal = false;
};

/// Member of the index set: a degree and a position in the canonical order of
/// that degree. Coefficients (c_0..c_d, ascending, c_d = 1) are attached only
/// when explicitly enumerated; ordering and equality ignore them.
struct PolynomialLabel {
  unsigned degree = 0;
  std::uint64_t index = 0;
  std::optional<std::vector<unsigned>> coeffs;

  friend bool operator==(const PolynomialLabel& a, const PolynomialLabel& b) {
    return a.degree == b.degree && a.index == b.index;
  }
  friend std::strong_ordering operator<=>(const PolynomialLabel& a, const PolynomialLabel& b) {
    if (auto c = a.degree <=> b.degree; c != 0) return c;
    return a.index <=> b.index;
  }
};

bool is_prime(unsigned long n);
/// True for p^k with p prime and k >= 1.
bool is_prime_power(unsigned long n);

int mobius(unsigned long n);

DegreeClass count_irreducibles(unsigned d, unsigned long q);

inline constexpr unsigned long kDefaultPolynomialCap = 1UL << 20;

/// All degree-d members of the index set over the prime field F_q, in
/// lexicographic order of (c_{d-1}, ..., c_0). Throws UnsupportedError for
/// non-prime q and ResourceError when q^d exceeds `cap`.
std::vector<PolynomialLabel> enumerate_irreducibles(unsigned d, unsigned long q,
                                                    unsigned long cap = kDefaultPolynomialCap);

/// "x^3+x+1" style, descending powers.
std::string render_polynomial(const std::vector<unsigned>& coeffs);

}  // namespace plancherel
