#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "binconv/ratfun.hpp"
#include "binconv/resultant.hpp"

namespace binconv {

/// Element num/den of the field Q(x). Unlike RatFun there is no
/// den(0) condition. Normalization is lazy: a common factor is cancelled
/// once the combined degree passes a threshold (or on demand), so
/// intermediate Euclidean steps do not spend their time in gcds.
class RatFunField {
 public:
  RatFunField() : den_(1) {}
  RatFunField(long c) : num_(c), den_(1) {}               // NOLINT(google-explicit-constructor)
  RatFunField(const Rational& c) : num_(c), den_(1) {}    // NOLINT(google-explicit-constructor)
  RatFunField(const Poly& p) : num_(p), den_(1) {}        // NOLINT(google-explicit-constructor)
  /// Throws DivisionByZero for den = 0.
  RatFunField(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Lowest terms with monic denominator.
  RatFunField normalized() const;

  friend bool operator==(const RatFunField& a, const RatFunField& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

 private:
  static constexpr std::ptrdiff_t kNormalizeDegree = 24;
  void maybe_normalize();
  friend RatFunField operator+(const RatFunField&, const RatFunField&);
  friend RatFunField operator-(const RatFunField&, const RatFunField&);
  friend RatFunField operator*(const RatFunField&, const RatFunField&);
  friend RatFunField operator/(const RatFunField&, const RatFunField&);

  Poly num_;
  Poly den_;
};

inline bool is_zero(const RatFunField& f) { return f.is_zero(); }
RatFunField operator-(const RatFunField& a);

/// Polynomial in t with coefficients in Q(x); coeffs()[k] multiplies t^k.
class TPoly {
 public:
  TPoly() = default;
  explicit TPoly(std::vector<RatFunField> coeffs);
  /// Reads y as t.
  static TPoly from_bipoly(const BiPoly& p);

  bool is_zero() const { return coeffs_.empty(); }
  std::ptrdiff_t degree() const {
    return coeffs_.empty() ? Poly::kZeroDegree : static_cast<std::ptrdiff_t>(coeffs_.size()) - 1;
  }
  const std::vector<RatFunField>& coeffs() const { return coeffs_; }
  RatFunField coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : RatFunField(); }
  RatFunField leading() const { return coeffs_.empty() ? RatFunField() : coeffs_.back(); }
  /// Value at t = 0.
  RatFunField at_zero() const { return coeff(0); }
  TPoly normalized() const;

  friend bool operator==(const TPoly& a, const TPoly& b) = default;

 private:
  std::vector<RatFunField> coeffs_;
};

TPoly operator+(const TPoly& a, const TPoly& b);
TPoly operator-(const TPoly& a, const TPoly& b);
TPoly operator*(const TPoly& a, const TPoly& b);
TPoly operator*(const TPoly& a, const RatFunField& c);
std::pair<TPoly, TPoly> divmod(const TPoly& a, const TPoly& b);

struct TPolyXgcd {
  TPoly g;  ///< monic gcd
  TPoly s;
  TPoly t;  ///< s*a + t*b = g
};

/// Extended Euclidean algorithm in t over Q(x).
TPolyXgcd tpoly_xgcd(const TPoly& a, const TPoly& b);

struct BezoutSplit {
  TPoly l;  ///< pairs with dB: l*dB + m*dA = target
  TPoly m;
};

/// Solves l*dB + m*dA = target with deg l < deg dA and deg m < deg dB as a
/// linear system (the transposed Sylvester system of dA, dB). Throws
/// CoprimalityViolation when the system is singular.
BezoutSplit solve_bezout_system(const TPoly& dA, const TPoly& dB, const TPoly& target);

/// How the two-term partial-fraction split is found.
enum class SplitRoute { kEuclid, kLinearSystem };

/// num/(g1*g2) = r1/g1 + r2/g2 with deg r1 < deg g1 and deg r2 < deg g2.
/// Needs g1, g2 coprime and deg num < deg g1 + deg g2.
std::pair<TPoly, TPoly> two_term_split(const TPoly& num, const TPoly& g1, const TPoly& g2, SplitRoute route);

/// a * b as the constant term in t of a(t) b(x/t). Proper inputs go
/// straight to the split; improper ones are separated into polynomial and
/// proper parts first.
RatFun hadamard_via_constant_term(const RatFun& a, const RatFun& b, SplitRoute route = SplitRoute::kEuclid);

/// a (.) b as the constant term in t of (1/(1-t)) a(x/(1-t)) b(x/t), with the
/// same treatment of improper inputs.
RatFun binomial_via_constant_term(const RatFun& a, const RatFun& b, SplitRoute route = SplitRoute::kEuclid);

/// The nonnegative-power part R_A(t, x) of the Hadamard split of proper a, b:
/// a(t) b(x/t) = R_A/D_A(t) + R_B/(t^n D_B(x/t)).
TPoly hadamard_split_numerator(const RatFun& a, const RatFun& b, SplitRoute route = SplitRoute::kEuclid);

}  // namespace binconv
