#pragma once

#include <cstddef>
#include <vector>

#include "binconv/poly.hpp"

namespace binconv {

/// Polynomial in an auxiliary variable y with coefficients in Q[x].
/// ycoeffs()[k] is the coefficient of y^k; the leading one is nonzero
/// unless the whole polynomial is zero (empty).
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<Poly> ycoeffs);

  bool is_zero() const { return ycoeffs_.empty(); }
  std::ptrdiff_t degree() const {
    return ycoeffs_.empty() ? Poly::kZeroDegree : static_cast<std::ptrdiff_t>(ycoeffs_.size()) - 1;
  }
  const std::vector<Poly>& ycoeffs() const { return ycoeffs_; }
  Poly coeff(std::size_t k) const { return k < ycoeffs_.size() ? ycoeffs_[k] : Poly(); }

  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  std::vector<Poly> ycoeffs_;
};

BiPoly operator*(const BiPoly& a, const BiPoly& b);

/// The three ways a univariate polynomial enters the resultant formulas.
enum class Substitution {
  kShiftedReciprocal,  ///< (1-y)^m p(x/(1-y))
  kHomogenized,        ///< y^m p(x/y)
  kLifted,             ///< p(y), constant in x
};

/// Applies `kind` with m = deg p. Throws InvalidInput for p = 0.
BiPoly substitute(const Poly& p, Substitution kind);
/// Same, with an explicit exponent m >= deg p (numerators paired with a
/// larger denominator use the denominator's degree).
BiPoly substitute(const Poly& p, Substitution kind, std::size_t m);

/// Rectangular grid of polynomials, row-major.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  PolyMatrix(std::initializer_list<std::initializer_list<Poly>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Poly& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Poly& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Poly> entries_;
};

/// Sylvester matrix of a (degree m in y) and b (degree n in y): n shifted
/// rows of a's coefficients in descending powers of y, then m shifted rows
/// of b's. Both constant gives the empty matrix.
PolyMatrix sylvester(const BiPoly& a, const BiPoly& b);

/// Determinant by one-step fraction-free (Bareiss) elimination over Q[x]:
/// every intermediate entry is a minor of the input, and each step divides
/// exactly by the previous pivot. The empty matrix has determinant 1.
Poly det_fraction_free(PolyMatrix m);

/// Res(a, b, y) = a_m^n b_n^m prod(alpha_i - beta_j), computed as
/// det(sylvester(a, b)). Throws InvalidInput when either argument is zero.
Poly resultant(const BiPoly& a, const BiPoly& b);

}  // namespace binconv
