#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "binconv/poly.hpp"

namespace binconv {

/// Truncated power series: coeffs[n] is the coefficient of x^n and the
/// series is known for exactly coeffs.size() terms.
struct Series {
  std::vector<Rational> coeffs;

  std::size_t order() const { return coeffs.size(); }
  const Rational& operator[](std::size_t n) const { return coeffs[n]; }
  friend bool operator==(const Series&, const Series&) = default;
};

/// A rational power series num/den in lowest terms with den(0) = 1.
/// Reciprocal roots of den are never materialised. The zero function is
/// 0/1. Because the representation is canonical, == is equality of
/// functions.
class RatFun {
 public:
  RatFun() : den_(1) {}
  // Polynomial (denominator 1); implicit so polynomials mix into expressions.
  RatFun(const Poly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)

  /// Normalizing constructor. Rejects den = 0 (InvalidInput) and
  /// den(0) = 0 (NotAPowerSeries) before any cancellation, then divides by
  /// den(0) and removes the gcd.
  static RatFun make(Poly num, Poly den);
  /// Cancels common factors first and only then requires den(0) != 0, so
  /// x/x is accepted. Used for arithmetic on already-valid functions.
  static RatFun reduce(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  /// deg num < deg den (the zero function counts as proper).
  bool is_proper() const { return num_.is_zero() || num_.degree() < den_.degree(); }

  friend bool operator==(const RatFun&, const RatFun&) = default;

 private:
  RatFun(Poly num, Poly den, int) : num_(std::move(num)), den_(std::move(den)) {}

  Poly num_;
  Poly den_;
};

/// Strict constructor under its contract name.
inline RatFun ratfun_new(Poly num, Poly den) { return RatFun::make(std::move(num), std::move(den)); }

RatFun operator+(const RatFun& a, const RatFun& b);
RatFun operator-(const RatFun& a, const RatFun& b);
RatFun operator-(const RatFun& a);
RatFun operator*(const RatFun& a, const RatFun& b);
/// Throws DivisionByZero for b = 0 and NotAPowerSeries when the reduced
/// quotient has no expansion at 0.
RatFun operator/(const RatFun& a, const RatFun& b);
RatFun operator*(const Rational& c, const RatFun& f);
/// Negative exponents invert f (NotAPowerSeries when f(0) = 0).
RatFun pow(const RatFun& f, long exp);

/// First `order` coefficients, from the recurrence den carries.
Series expand(const RatFun& f, std::size_t order);

/// f = poly + proper with deg(proper.num) < deg(proper.den).
std::pair<Poly, RatFun> proper_split(const RatFun& f);

/// Number of extra coefficients reconstruct_rational checks beyond the
/// ones its linear system needs.
inline constexpr std::size_t kReconstructionMargin = 2;

/// Finds num/den with deg den <= max_den_deg and deg num <= max_num_deg
/// whose expansion matches every coefficient of s. Needs
/// s.order() >= max_num_deg + max_den_deg + 1 + kReconstructionMargin
/// (InvalidInput otherwise); throws ReconstructionFailed when no such
/// function exists.
RatFun reconstruct_rational(const Series& s, std::size_t max_den_deg, std::size_t max_num_deg);

/// f(a*x).
RatFun compose_scale(const RatFun& f, const Rational& a);
/// (1/(1 - beta x)) f(x/(1 - beta x)), which is f binomially multiplied
/// by the geometric series 1/(1 - beta x).
RatFun compose_mobius(const RatFun& f, const Rational& beta);
/// f(c*x^k), k >= 1.
RatFun compose_monomial(const RatFun& f, const Rational& c, std::size_t k);

RatFun derivative(const RatFun& f);

/// "(num) / (den)", or just the numerator when den = 1.
std::string to_string(const RatFun& f, const std::string& var = "x");

/// Smallest N such that the coefficients from index N on satisfy the
/// recurrence given by den: max(deg num + 1, deg den).
std::size_t recurrence_start(const RatFun& f);

}  // namespace binconv
