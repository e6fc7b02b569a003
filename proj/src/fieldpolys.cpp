#include "plancherel/fieldpolys.hpp"

#include "plancherel/errors.hpp"

namespace plancherel {

namespace {

using Poly = std::vector<unsigned>;  // ascending coefficients, monic

// Remainder of a modulo monic b over F_p.
Poly poly_mod(Poly a, const Poly& b, unsigned long p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const unsigned long lead = a.back();
    if (lead != 0) {
      const std::size_t off = a.size() - 1 - db;
      for (std::size_t i = 0; i <= db; ++i) {
        a[off + i] = static_cast<unsigned>((a[off + i] + (p - lead) * b[i]) % p);
      }
    }
    a.pop_back();
  }
  return a;
}

bool is_zero(const Poly& a) {
  for (unsigned c : a) {
    if (c) return false;
  }
  return true;
}

}  // namespace

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

bool is_prime_power(unsigned long n) {
  if (n < 2) return false;
  unsigned long p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

int mobius(unsigned long n) {
  int result = 1;
  for (unsigned long f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      n /= f;
      if (n % f == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

DegreeClass count_irreducibles(unsigned d, unsigned long q) {
  if (d == 0) throw DomainError("polynomial degree must be positive");
  if (q < 2) throw DomainError("field size must be at least 2");
  DegreeClass cls;
  cls.d = d;
  cls.formal = !is_prime_power(q);
  const Integer qz(q);
  if (d == 1) {
    cls.count = qz - 1;
    return cls;
  }
  Integer sum = 0;
  for (unsigned e = 1; e <= d; ++e) {
    if (d % e == 0) sum += mobius(e) * pow(qz, d / e);
  }
  cls.count = sum / d;
  return cls;
}

std::vector<PolynomialLabel> enumerate_irreducibles(unsigned d, unsigned long q, unsigned long cap) {
  if (d == 0) throw DomainError("polynomial degree must be positive");
  if (!is_prime(q)) {
    throw UnsupportedError("explicit polynomials are only enumerated over prime fields (q=" +
                           std::to_string(q) + ")");
  }
  const Integer total = pow(Integer(q), d);
  if (total > cap) {
    throw ResourceError("q^d = " + total.get_str() + " exceeds polynomial cap " + std::to_string(cap));
  }

  // Divisors: irreducibles of each degree up to d/2 (computed recursively).
  std::vector<Poly> divisors;
  for (unsigned e = 1; 2 * e <= d; ++e) {
    for (auto& lab : enumerate_irreducibles(e, q, cap)) divisors.push_back(*lab.coeffs);
  }

  std::vector<PolynomialLabel> out;
  const unsigned long count = total.get_ui();
  // Counter over (c_{d-1}, ..., c_0) in lexicographic order; c_0 is the fastest digit.
  for (unsigned long code = 0; code < count; ++code) {
    Poly f(d + 1);
    f[d] = 1;
    unsigned long rest = code;
    for (unsigned i = 0; i < d; ++i) {
      f[i] = static_cast<unsigned>(rest % q);
      rest /= q;
    }
    if (f[0] == 0) continue;
    bool irreducible = true;
    for (const auto& g : divisors) {
      if (is_zero(poly_mod(f, g, q))) {
        irreducible = false;
        break;
      }
    }
    if (!irreducible) continue;
    PolynomialLabel lab;
    lab.degree = d;
    lab.index = out.size();
    lab.coeffs = std::move(f);
    out.push_back(std::move(lab));
  }
  return out;
}

std::string render_polynomial(const std::vector<unsigned>& coeffs) {
  std::string out;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const unsigned c = coeffs[k];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (k == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += 'x';
    if (k > 1) out += '^' + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

}  // namespace plancherel
