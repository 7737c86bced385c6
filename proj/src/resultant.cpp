#include "binconv/resultant.hpp"

#include <utility>

#include "binconv/errors.hpp"

namespace binconv {

BiPoly::BiPoly(std::vector<Poly> ycoeffs) : ycoeffs_(std::move(ycoeffs)) {
  while (!ycoeffs_.empty() && ycoeffs_.back().is_zero()) ycoeffs_.pop_back();
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Poly> out(a.ycoeffs().size() + b.ycoeffs().size() - 1);
  for (std::size_t i = 0; i < a.ycoeffs().size(); ++i) {
    for (std::size_t j = 0; j < b.ycoeffs().size(); ++j) out[i + j] += a.ycoeffs()[i] * b.ycoeffs()[j];
  }
  return BiPoly(std::move(out));
}

BiPoly substitute(const Poly& p, Substitution kind) {
  if (p.is_zero()) throw InvalidInput("substitution into the zero polynomial");
  return substitute(p, kind, static_cast<std::size_t>(p.degree()));
}

BiPoly substitute(const Poly& p, Substitution kind, std::size_t m) {
  if (p.is_zero()) throw InvalidInput("substitution into the zero polynomial");
  if (static_cast<std::ptrdiff_t>(m) < p.degree()) {
    throw InvalidInput("substitution exponent below the polynomial degree");
  }
  std::vector<Poly> out(m + 1);
  switch (kind) {
    case Substitution::kShiftedReciprocal: {
      // sum_k p_k x^k (1-y)^(m-k)
      for (std::size_t k = 0; k < p.size(); ++k) {
        const Rational& pk = p.coeffs()[k];
        if (is_zero(pk)) continue;
        const std::size_t e = m - k;
        for (std::size_t j = 0; j <= e; ++j) {
          Rational c = pk * Rational(binomial(e, j));
          if (j % 2 == 1) c = -c;
          out[j] += Poly::monomial(c, k);
        }
      }
      break;
    }
    case Substitution::kHomogenized:
      for (std::size_t k = 0; k < p.size(); ++k) out[m - k] += Poly::monomial(p.coeffs()[k], k);
      break;
    case Substitution::kLifted:
      out.resize(p.size());
      for (std::size_t k = 0; k < p.size(); ++k) out[k] = Poly(p.coeffs()[k]);
      break;
  }
  return BiPoly(std::move(out));
}

PolyMatrix::PolyMatrix(std::initializer_list<std::initializer_list<Poly>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw InvalidInput("ragged matrix rows");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

PolyMatrix sylvester(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) throw InvalidInput("Sylvester matrix of a zero polynomial");
  const auto m = static_cast<std::size_t>(a.degree());
  const auto n = static_cast<std::size_t>(b.degree());
  const std::size_t size = m + n;
  PolyMatrix s(size, size);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k <= m; ++k) s.at(r, r + k) = a.ycoeffs()[m - k];
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t k = 0; k <= n; ++k) s.at(n + r, r + k) = b.ycoeffs()[n - k];
  }
  return s;
}

Poly det_fraction_free(PolyMatrix m) {
  if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Poly(1);
  bool negate = false;
  Poly prev_pivot(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k).is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m.at(swap_row, k).is_zero()) ++swap_row;
      if (swap_row == n) return {};
      for (std::size_t j = k; j < n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
      negate = !negate;
    }
    const Poly& pivot = m.at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly num = pivot * m.at(i, j) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = exact_div(num, prev_pivot);
      }
      m.at(i, k) = Poly();
    }
    prev_pivot = m.at(k, k);
  }
  Poly det = m.at(n - 1, n - 1);
  return negate ? -det : det;
}

Poly resultant(const BiPoly& a, const BiPoly& b) { return det_fraction_free(sylvester(a, b)); }

}  // namespace binconv
