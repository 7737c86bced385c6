#pragma once

#include <cstddef>
#include <utility>

#include "binconv/ratfun.hpp"
#include "binconv/symfun.hpp"

namespace binconv {

/// Ways of computing a product. The resultant engine is the reference;
/// the other three are independent routes used for cross-checking.
enum class Method { kResultant, kSymfun, kPfrac, kReconstruct };

/// Everything the numerator-recovery step needs: a denominator for the
/// product (not necessarily reduced) and a count `num_terms` such that the
/// numerator has degree < num_terms.
struct ProductPlan {
  Method method = Method::kResultant;
  Poly den_bound;
  std::size_t num_terms = 0;
};

// --- brute-force series products -------------------------------------------

/// c_n = sum_k C(n, k) a_k b_{n-k} over the common known range.
Series binomial_convolve(const Series& a, const Series& b);
/// c_n = a_n b_n over the common known range.
Series termwise_product(const Series& a, const Series& b);

// --- denominators ------------------------------------------------------------

/// prod_{i,j}(1 - (alpha_i + beta_j) x)
///   = (-1)^{mn} Res((1-y)^m U(x/(1-y)), y^n V(x/y), y).
Poly binomial_denominator(const Poly& uden, const Poly& vden);
/// prod_{i,j}(1 - alpha_i beta_j x) = (-1)^{mn} Res(U(y), y^n V(x/y), y).
Poly hadamard_denominator(const Poly& uden, const Poly& vden);

/// Denominator and numerator-degree bound for a (*) b or a (.) b, with the
/// core denominator taken from `den_source` (kResultant or kSymfun).
/// Improper inputs are covered by the exponents
/// u = max(deg R + 1 - m, 0), v = max(deg S + 1 - n, 0) for binomial
/// products and by the polynomial-part degree for Hadamard products.
ProductPlan plan_product(const RatFun& a, const RatFun& b, ProductKind kind, Method den_source = Method::kResultant);

/// Multiplies the brute-force product series by plan.den_bound, keeps the
/// first plan.num_terms coefficients and checks that the following ones
/// vanish (InternalInvariantViolation otherwise). Result is reduced.
RatFun product_from_plan(const RatFun& a, const RatFun& b, ProductKind kind, const ProductPlan& plan);

// --- engines -----------------------------------------------------------------

/// a (.) b by the resultant method.
RatFun binomial_product(const RatFun& a, const RatFun& b);
/// a * b (termwise) by the resultant method.
RatFun hadamard_product(const RatFun& a, const RatFun& b);

// --- closed forms ------------------------------------------------------------

/// x^j/(1-alpha x)^{j+1} (.) x^k/(1-beta x)^{k+1}
///   = C(j+k, j) x^{j+k} / (1-(alpha+beta)x)^{j+k+1}.
RatFun closed_form_bprod(std::size_t j, const Rational& alpha, std::size_t k, const Rational& beta);

/// x^m (.) a = (x^m/m!) d^m/dx^m (x^m a).
RatFun poly_bprod(std::size_t m, const RatFun& a);
/// p (.) a for a polynomial p, by linearity over poly_bprod.
RatFun poly_bprod(const Poly& p, const RatFun& a);

/// x^i/(1-ax)^{m+1} * x^j/(1-bx)^{n+1} (termwise) in closed form:
///   sum_k C(m+j-i, k-i) C(n+i-j, k-j) a^{k-i} b^{k-j} x^k / (1-abx)^{m+n+1}
/// with k from max(i, j) to min(n+i, m+j). Requires i <= m+j and j <= n+i.
RatFun closed_form_hprod(std::size_t i, const Rational& a, std::size_t m, std::size_t j, const Rational& b,
                         std::size_t n);

/// Termwise product of a polynomial with any power series.
Poly hadamard_with_poly(const Poly& p, const RatFun& f);

// --- cubic split -------------------------------------------------------------

struct KomatsuSplit {
  Poly u;  ///< numerator over D(2x)
  Poly v;  ///< numerator over D(-x)
  Rational shift;  ///< the geometric-series parameter: second term is 1/(1 - shift x) (.) v/D(-x)
};

/// For proper r, s over a shared cubic D = 1 + Ax + Bx^2 + Cx^3 (C != 0):
///   r (.) s = u/D(2x) + 1/(1 + Ax) (.) v/D(-x),  deg u, deg v <= 2.
/// The split needs D squarefree and D(2x) coprime to
/// prod_{i<j}(1 - (alpha_i + alpha_j) x); otherwise DecompositionUnavailable.
KomatsuSplit komatsu_decompose(const RatFun& r, const RatFun& s);
/// Rebuilds r (.) s from a split (for verification).
RatFun komatsu_reassemble(const KomatsuSplit& split, const Poly& cubic);

}  // namespace binconv
