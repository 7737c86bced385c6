#pragma once

#include <cstddef>
#include <vector>

#include "binconv/poly.hpp"

namespace binconv {

/// Power sums p_k = u_1^k + ... + u_r^k of a multiset of reciprocal roots.
/// values[k] holds p_k, so values[0] = p_0 is the number of roots.
struct PowerSums {
  std::vector<Rational> values;

  const Rational& p0() const { return values.front(); }
  std::size_t upto() const { return values.size() - 1; }
  friend bool operator==(const PowerSums&, const PowerSums&) = default;
};

/// e_k read off a denominator prod(1 - u_i x): the x^k coefficient is
/// (-1)^k e_k.
std::vector<Rational> elementary_from_denominator(const Poly& den);
/// Inverse of elementary_from_denominator.
Poly denominator_from_elementary(const std::vector<Rational>& e);

/// Newton's identities k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} p_i solved
/// for p_1..p_upto. `e` starts with e_0 = 1; missing entries are zero and
/// p_0 is the index of the last nonzero e_k.
PowerSums elementary_to_power(const std::vector<Rational>& e, std::size_t upto);

/// The same identities solved for e_0..e_upto.
std::vector<Rational> power_to_elementary(const PowerSums& p, std::size_t upto);

/// p_k(alpha * beta) = p_k(alpha) p_k(beta).
PowerSums powersum_hadamard(const PowerSums& pa, const PowerSums& pb, std::size_t upto);

/// p_k(alpha + beta) = sum_l C(k, l) p_l(alpha) p_{k-l}(beta).
PowerSums powersum_binomial(const PowerSums& pa, const PowerSums& pb, std::size_t upto);

enum class ProductKind { kBinomial, kHadamard };

/// prod_{i,j}(1 - (alpha_i + beta_j) x) or prod_{i,j}(1 - alpha_i beta_j x)
/// from the coefficients of uden = prod(1 - alpha_i x) and
/// vden = prod(1 - beta_j x), working through power sums up to m*n.
Poly denominator_via_symfun(const Poly& uden, const Poly& vden, ProductKind kind);

}  // namespace binconv
