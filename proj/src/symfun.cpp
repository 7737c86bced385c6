#include "binconv/symfun.hpp"

#include "binconv/errors.hpp"

namespace binconv {

std::vector<Rational> elementary_from_denominator(const Poly& den) {
  std::vector<Rational> e = den.coeffs();
  for (std::size_t k = 1; k < e.size(); k += 2) e[k] = -e[k];
  return e;
}

Poly denominator_from_elementary(const std::vector<Rational>& e) {
  std::vector<Rational> c = e;
  for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
  return Poly(std::move(c));
}

PowerSums elementary_to_power(const std::vector<Rational>& e, std::size_t upto) {
  if (e.empty() || e.front() != 1) throw InvalidInput("elementary symmetric list must start with e_0 = 1");
  const auto e_at = [&](std::size_t k) { return k < e.size() ? e[k] : Rational(0); };
  std::size_t roots = 0;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (!is_zero(e[k])) roots = k;
  }
  PowerSums p;
  p.values.resize(upto + 1);
  p.values[0] = static_cast<long>(roots);
  // (-1)^(k-1) p_k = k e_k - sum_{i=1..k-1} (-1)^(i-1) e_{k-i} p_i
  for (std::size_t k = 1; k <= upto; ++k) {
    Rational acc = e_at(k) * static_cast<long>(k);
    for (std::size_t i = 1; i < k; ++i) {
      const Rational term = e_at(k - i) * p.values[i];
      if (i % 2 == 1) {
        acc -= term;
      } else {
        acc += term;
      }
    }
    p.values[k] = (k % 2 == 1) ? acc : Rational(-acc);
  }
  return p;
}

std::vector<Rational> power_to_elementary(const PowerSums& p, std::size_t upto) {
  if (p.values.size() <= upto) throw InvalidInput("power sums not known up to the requested index");
  std::vector<Rational> e(upto + 1);
  e[0] = 1;
  for (std::size_t k = 1; k <= upto; ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      const Rational term = e[k - i] * p.values[i];
      if (i % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    e[k] = acc / static_cast<long>(k);
  }
  return e;
}

PowerSums powersum_hadamard(const PowerSums& pa, const PowerSums& pb, std::size_t upto) {
  if (pa.values.size() <= upto || pb.values.size() <= upto) {
    throw InvalidInput("power sums not known up to the requested index");
  }
  PowerSums out;
  out.values.resize(upto + 1);
  for (std::size_t k = 0; k <= upto; ++k) out.values[k] = pa.values[k] * pb.values[k];
  return out;
}

PowerSums powersum_binomial(const PowerSums& pa, const PowerSums& pb, std::size_t upto) {
  if (pa.values.size() <= upto || pb.values.size() <= upto) {
    throw InvalidInput("power sums not known up to the requested index");
  }
  PascalTriangle pascal;
  PowerSums out;
  out.values.resize(upto + 1);
  for (std::size_t k = 0; k <= upto; ++k) {
    const auto& row = pascal.row(k);
    Rational acc = 0;
    for (std::size_t l = 0; l <= k; ++l) acc += Rational(row[l]) * pa.values[l] * pb.values[k - l];
    out.values[k] = acc;
  }
  return out;
}

Poly denominator_via_symfun(const Poly& uden, const Poly& vden, ProductKind kind) {
  if (uden.is_zero() || vden.is_zero() || uden.constant_term() != 1 || vden.constant_term() != 1) {
    throw InvalidInput("denominators must have constant term 1");
  }
  const auto m = static_cast<std::size_t>(uden.degree());
  const auto n = static_cast<std::size_t>(vden.degree());
  const std::size_t upto = m * n;
  if (upto == 0) return Poly(1);
  const PowerSums pa = elementary_to_power(elementary_from_denominator(uden), upto);
  const PowerSums pb = elementary_to_power(elementary_from_denominator(vden), upto);
  const PowerSums pc =
      kind == ProductKind::kBinomial ? powersum_binomial(pa, pb, upto) : powersum_hadamard(pa, pb, upto);
  const std::vector<Rational> e = power_to_elementary(pc, upto);
  Poly den = denominator_from_elementary(e);
  if (den.constant_term() != 1 || den.degree() > static_cast<std::ptrdiff_t>(upto)) {
    throw InternalInvariantViolation("symmetric-function denominator has the wrong shape");
  }
  return den;
}

}  // namespace binconv
