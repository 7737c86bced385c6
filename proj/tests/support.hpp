// Helpers and independent oracles shared by the test binaries.
#pragma once

#include <random>
#include <vector>

#include "binconv/ratfun.hpp"
#include "binconv/resultant.hpp"

namespace support {

using namespace binconv;

inline RatFun rf(std::initializer_list<long> num, std::initializer_list<long> den) {
  return RatFun::make(Poly::from_ints(num), Poly::from_ints(den));
}

inline long uniform(std::mt19937& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// Coefficients in [-5, 5]; the top one is nonzero when deg > 0.
inline Poly random_poly(std::mt19937& rng, std::size_t deg, bool unit_constant = false) {
  std::vector<Rational> c(deg + 1);
  for (auto& v : c) v = uniform(rng, -5, 5);
  if (unit_constant) c[0] = 1;
  if (deg > 0 && c[deg] == 0) c[deg] = uniform(rng, 1, 5);
  return Poly(std::move(c));
}

/// Proper, nonzero, den(0) = 1, den degree 1..max_den_deg (before reduction).
inline RatFun random_proper(std::mt19937& rng, std::size_t max_den_deg = 3) {
  for (;;) {
    const auto m = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_den_deg)));
    const Poly den = random_poly(rng, m, true);
    const Poly num = random_poly(rng, static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(m) - 1)));
    if (num.is_zero()) continue;
    return RatFun::make(num, den);
  }
}

/// Any nonzero rational power series with num, den degrees up to max_deg.
inline RatFun random_ratfun(std::mt19937& rng, std::size_t max_deg = 4) {
  for (;;) {
    const Poly den = random_poly(rng, static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_deg))), true);
    const Poly num = random_poly(rng, static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_deg))));
    if (num.is_zero()) continue;
    return RatFun::make(num, den);
  }
}

/// C(n, k) from GMP, independent of the library's Pascal rows.
inline Integer binom(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline std::vector<Rational> brute_binomial(const Series& a, const Series& b) {
  std::vector<Rational> out(std::min(a.order(), b.order()));
  for (std::size_t n = 0; n < out.size(); ++n) {
    for (std::size_t k = 0; k <= n; ++k) out[n] += Rational(binom(n, k)) * a[k] * b[n - k];
  }
  return out;
}

inline std::vector<Rational> brute_termwise(const Series& a, const Series& b) {
  std::vector<Rational> out(std::min(a.order(), b.order()));
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = a[n] * b[n];
  return out;
}

/// Laplace expansion along the first row.
inline Poly cofactor_det(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Poly(1);
  if (n == 1) return m.at(0, 0);
  Poly acc;
  for (std::size_t j = 0; j < n; ++j) {
    PolyMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t c = 0, cc = 0; c < n; ++c) {
        if (c != j) minor.at(r - 1, cc++) = m.at(r, c);
      }
    }
    const Poly term = m.at(0, j) * cofactor_det(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

/// prod (1 - r x) over explicit reciprocal roots.
inline Poly from_roots(std::initializer_list<long> roots) {
  Poly p(1);
  for (long r : roots) p *= Poly::from_ints({1, -r});
  return p;
}

}  // namespace support
