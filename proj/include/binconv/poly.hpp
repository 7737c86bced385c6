#pragma once

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "binconv/rational.hpp"

namespace binconv {

/// Dense univariate polynomial over Q. Index i of coeffs() is the
/// coefficient of x^i. The zero polynomial is the empty coefficient vector;
/// every other value has a nonzero highest stored coefficient.
class Poly {
 public:
  /// Degree reported for the zero polynomial. Test is_zero() instead of
  /// doing arithmetic on it.
  static constexpr std::ptrdiff_t kZeroDegree = std::numeric_limits<std::ptrdiff_t>::min();

  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);
  // Constant polynomial; implicit so scalars mix into polynomial expressions.
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static Poly x() { return monomial(1, 1); }
  static Poly monomial(const Rational& c, std::size_t k);
  /// Polynomial with small integer coefficients, lowest degree first.
  static Poly from_ints(std::initializer_list<long> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  std::ptrdiff_t degree() const {
    return coeffs_.empty() ? kZeroDegree : static_cast<std::ptrdiff_t>(coeffs_.size()) - 1;
  }
  /// Number of stored coefficients (degree + 1, or 0 for zero).
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Coefficient of x^i; zero beyond the stored range.
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }
  Rational constant_term() const { return coeff(0); }

  Rational operator()(const Rational& at) const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(Poly a, const Rational& c);
Poly operator*(const Rational& c, Poly a);
inline Poly operator*(Poly a, long c) { return a *= Rational(c); }
inline Poly operator*(long c, Poly a) { return a *= Rational(c); }

/// Quotient and remainder with deg(remainder) < deg(divisor).
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// a / b, throwing DivisibilityError when b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) is rejected with InvalidInput.
Poly gcd(const Poly& a, const Poly& b);

Poly monic(const Poly& p);
/// Scales p to integer coefficients with content 1 and positive leading
/// coefficient.
Poly primitive_part(const Poly& p);

Poly derivative(const Poly& p);
Poly pow(const Poly& p, std::size_t exp);
/// p mod x^n.
Poly truncate(const Poly& p, std::size_t n);
/// p(c*x).
Poly scale_argument(const Poly& p, const Rational& c);
/// p(q(x)).
Poly compose(const Poly& p, const Poly& q);

/// Ascending-power text such as "2*x^2 - 3*x^3"; "0" for zero.
std::string to_string(const Poly& p, const std::string& var = "x");

}  // namespace binconv
