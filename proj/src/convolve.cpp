#include "binconv/convolve.hpp"

#include <algorithm>

#include "binconv/errors.hpp"
#include "binconv/linsolve.hpp"
#include "binconv/resultant.hpp"

namespace binconv {

Series binomial_convolve(const Series& a, const Series& b) {
  const std::size_t order = std::min(a.order(), b.order());
  PascalTriangle pascal;
  Series c;
  c.coeffs.resize(order);
  for (std::size_t n = 0; n < order; ++n) {
    const auto& row = pascal.row(n);
    Rational acc = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      if (is_zero(a[k]) || is_zero(b[n - k])) continue;
      acc += Rational(row[k]) * a[k] * b[n - k];
    }
    c.coeffs[n] = acc;
  }
  return c;
}

Series termwise_product(const Series& a, const Series& b) {
  const std::size_t order = std::min(a.order(), b.order());
  Series c;
  c.coeffs.resize(order);
  for (std::size_t n = 0; n < order; ++n) c.coeffs[n] = a[n] * b[n];
  return c;
}

namespace {

void require_unit_constant(const Poly& p, const char* what) {
  if (p.is_zero() || p.constant_term() != 1) {
    throw InvalidInput(std::string(what) + " must have constant term 1");
  }
}

Poly signed_resultant(const BiPoly& a, const BiPoly& b, std::size_t m, std::size_t n) {
  Poly r = resultant(a, b);
  return (m * n) % 2 == 1 ? -r : r;
}

// Degree of the polynomial part of num/den (negative when proper).
std::ptrdiff_t excess_degree(const RatFun& f) {
  if (f.num().is_zero()) return -1;
  return f.num().degree() - f.den().degree();
}

}  // namespace

Poly binomial_denominator(const Poly& uden, const Poly& vden) {
  require_unit_constant(uden, "first denominator");
  require_unit_constant(vden, "second denominator");
  const auto m = static_cast<std::size_t>(uden.degree());
  const auto n = static_cast<std::size_t>(vden.degree());
  if (m == 0 || n == 0) return Poly(1);
  return signed_resultant(substitute(uden, Substitution::kShiftedReciprocal),
                          substitute(vden, Substitution::kHomogenized), m, n);
}

Poly hadamard_denominator(const Poly& uden, const Poly& vden) {
  require_unit_constant(uden, "first denominator");
  require_unit_constant(vden, "second denominator");
  const auto m = static_cast<std::size_t>(uden.degree());
  const auto n = static_cast<std::size_t>(vden.degree());
  if (m == 0 || n == 0) return Poly(1);
  return signed_resultant(substitute(uden, Substitution::kLifted), substitute(vden, Substitution::kHomogenized), m,
                          n);
}

ProductPlan plan_product(const RatFun& a, const RatFun& b, ProductKind kind, Method den_source) {
  if (den_source != Method::kResultant && den_source != Method::kSymfun) {
    throw InvalidInput("denominators come from the resultant or symmetric-function route");
  }
  const Poly& uden = a.den();
  const Poly& vden = b.den();
  const auto m = static_cast<std::size_t>(uden.degree());
  const auto n = static_cast<std::size_t>(vden.degree());
  Poly core;
  if (den_source == Method::kSymfun) {
    core = denominator_via_symfun(uden, vden, kind);
  } else {
    core = kind == ProductKind::kBinomial ? binomial_denominator(uden, vden) : hadamard_denominator(uden, vden);
  }
  ProductPlan plan;
  plan.method = den_source;
  if (kind == ProductKind::kBinomial) {
    const auto u = static_cast<std::size_t>(std::max<std::ptrdiff_t>(excess_degree(a) + 1, 0));
    const auto v = static_cast<std::size_t>(std::max<std::ptrdiff_t>(excess_degree(b) + 1, 0));
    plan.den_bound = pow(uden, v) * pow(vden, u) * core;
    plan.num_terms = (u + m) * (v + n);
  } else {
    const std::ptrdiff_t poly_part = std::max(excess_degree(a), excess_degree(b));
    plan.den_bound = core;
    plan.num_terms = m * n + static_cast<std::size_t>(std::max<std::ptrdiff_t>(poly_part + 1, 0));
  }
  return plan;
}

RatFun product_from_plan(const RatFun& a, const RatFun& b, ProductKind kind, const ProductPlan& plan) {
  if (a.is_zero() || b.is_zero()) return {};
  const std::size_t order = plan.num_terms + static_cast<std::size_t>(plan.den_bound.degree()) + 2;
  const Series sa = expand(a, order);
  const Series sb = expand(b, order);
  const Series prod = kind == ProductKind::kBinomial ? binomial_convolve(sa, sb) : termwise_product(sa, sb);
  const Poly full = truncate(Poly(prod.coeffs) * plan.den_bound, order);
  for (std::size_t k = plan.num_terms; k < order; ++k) {
    if (!is_zero(full.coeff(k))) {
      throw InternalInvariantViolation("numerator recovery: coefficient " + std::to_string(k) +
                                       " of series * denominator is nonzero");
    }
  }
  return RatFun::make(truncate(full, plan.num_terms), plan.den_bound);
}

RatFun binomial_product(const RatFun& a, const RatFun& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return product_from_plan(a, b, ProductKind::kBinomial, plan_product(a, b, ProductKind::kBinomial));
}

RatFun hadamard_product(const RatFun& a, const RatFun& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return product_from_plan(a, b, ProductKind::kHadamard, plan_product(a, b, ProductKind::kHadamard));
}

RatFun closed_form_bprod(std::size_t j, const Rational& alpha, std::size_t k, const Rational& beta) {
  const Poly den = pow(Poly{Rational(1), Rational(-(alpha + beta))}, j + k + 1);
  return RatFun::make(Poly::monomial(Rational(binomial(j + k, j)), j + k), den);
}

RatFun poly_bprod(std::size_t m, const RatFun& a) {
  if (m == 0) return a;
  RatFun f = RatFun(Poly::monomial(1, m)) * a;
  for (std::size_t i = 0; i < m; ++i) f = derivative(f);
  Integer factorial = 1;
  for (std::size_t i = 2; i <= m; ++i) factorial *= static_cast<unsigned long>(i);
  return RatFun(Poly::monomial(make_rational(1, factorial), m)) * f;
}

RatFun poly_bprod(const Poly& p, const RatFun& a) {
  RatFun acc;
  for (std::size_t m = 0; m < p.size(); ++m) {
    if (is_zero(p.coeffs()[m])) continue;
    acc = acc + p.coeffs()[m] * poly_bprod(m, a);
  }
  return acc;
}

RatFun closed_form_hprod(std::size_t i, const Rational& a, std::size_t m, std::size_t j, const Rational& b,
                         std::size_t n) {
  if (i > m + j || j > n + i) throw InvalidInput("closed-form Hadamard product needs i <= m + j and j <= n + i");
  const std::size_t lo = std::max(i, j);
  const std::size_t hi = std::min(n + i, m + j);
  std::vector<Rational> num(hi + 1);
  for (std::size_t k = lo; k <= hi; ++k) {
    num[k] = Rational(binomial(m + j - i, k - i) * binomial(n + i - j, k - j)) * pow(a, k - i) * pow(b, k - j);
  }
  const Poly den = pow(Poly{Rational(1), Rational(-(a * b))}, m + n + 1);
  return RatFun::make(Poly(std::move(num)), den);
}

Poly hadamard_with_poly(const Poly& p, const RatFun& f) {
  if (p.is_zero()) return {};
  const Series s = expand(f, p.size());
  std::vector<Rational> out(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) out[k] = p.coeffs()[k] * s[k];
  return Poly(std::move(out));
}

namespace {

// prod_k (1 + (A + alpha_k) x) = sum_k d_k (-x)^k (1 + A x)^{3-k}: the
// pairwise-sum factor of D (.) D for a cubic D.
Poly pair_sum_factor(const Poly& cubic) {
  const Rational a = cubic.coeff(1);
  const Poly shift{Rational(1), a};
  Poly out;
  for (std::size_t k = 0; k <= 3; ++k) {
    const Rational dk = k % 2 == 1 ? Rational(-cubic.coeff(k)) : cubic.coeff(k);
    out += Poly::monomial(dk, k) * pow(shift, 3 - k);
  }
  return out;
}

}  // namespace

KomatsuSplit komatsu_decompose(const RatFun& r, const RatFun& s) {
  const Poly& d = r.den();
  if (d != s.den() || d.degree() != 3) {
    throw InvalidInput("cubic split needs two functions over the same cubic denominator");
  }
  if (!r.is_proper() || !s.is_proper()) throw InvalidInput("cubic split needs proper functions");
  if (is_zero(d.coeff(3))) throw InvalidInput("cubic split needs a nonzero x^3 coefficient");
  if (gcd(d, derivative(d)).degree() > 0) {
    throw DecompositionUnavailable("denominator " + to_string(d) + " has a repeated factor");
  }
  const Poly d1 = scale_argument(d, 2);
  const Poly d2 = pair_sum_factor(d);
  if (gcd(d1, d2).degree() > 0) {
    throw DecompositionUnavailable("D(2x) and the pairwise-sum factor share a root");
  }

  // u/D1 + w/D2 has the expansion of r (.) s; fit the six unknowns on eight
  // coefficients.
  const RatFun prod = binomial_product(r, s);
  constexpr std::size_t kTerms = 8;
  const Series target = expand(prod, kTerms);
  std::vector<Series> basis;
  for (std::size_t k = 0; k < 3; ++k) basis.push_back(expand(RatFun::make(Poly::monomial(1, k), d1), kTerms));
  for (std::size_t k = 0; k < 3; ++k) basis.push_back(expand(RatFun::make(Poly::monomial(1, k), d2), kTerms));
  std::vector<std::vector<Rational>> a(kTerms, std::vector<Rational>(6));
  for (std::size_t row = 0; row < kTerms; ++row) {
    for (std::size_t col = 0; col < 6; ++col) a[row][col] = basis[col][row];
  }
  auto sol = solve_linear(std::move(a), target.coeffs);
  if (!sol.values || sol.rank != 6) throw InternalInvariantViolation("cubic split system is inconsistent");
  const auto& c = *sol.values;
  const Poly u{c[0], c[1], c[2]};
  const Poly w{c[3], c[4], c[5]};

  // w/D2 has reciprocal roots -A - alpha_k; shifting by +A lands on D(-x).
  const Rational a_coeff = d.coeff(1);
  const Poly d_neg = scale_argument(d, -1);
  const RatFun shifted = compose_mobius(RatFun::make(w, d2), a_coeff);
  const RatFun v_frac = shifted * RatFun(d_neg);
  if (!v_frac.is_polynomial() || v_frac.num().degree() > 2) {
    throw InternalInvariantViolation("shifted pairwise-sum term is not over D(-x)");
  }
  KomatsuSplit split{u, v_frac.num(), Rational(-a_coeff)};
  if (komatsu_reassemble(split, d) != prod) throw InternalInvariantViolation("cubic split does not reassemble");
  return split;
}

RatFun komatsu_reassemble(const KomatsuSplit& split, const Poly& cubic) {
  const RatFun first = RatFun::make(split.u, scale_argument(cubic, 2));
  const RatFun second = compose_mobius(RatFun::make(split.v, scale_argument(cubic, -1)), split.shift);
  return first + second;
}

}  // namespace binconv
