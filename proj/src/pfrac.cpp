#include "binconv/pfrac.hpp"

#include <algorithm>

#include "binconv/convolve.hpp"
#include "binconv/errors.hpp"
#include "binconv/linsolve.hpp"

namespace binconv {

// --- RatFunField ---------------------------------------------------------------

RatFunField::RatFunField(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("zero denominator in Q(x)");
  maybe_normalize();
}

RatFunField RatFunField::normalized() const {
  RatFunField out;
  if (num_.is_zero()) return out;
  const Poly g = gcd(num_, den_);
  Poly n = exact_div(num_, g);
  Poly d = exact_div(den_, g);
  const Rational lead = 1 / d.leading();
  out.num_ = n * lead;
  out.den_ = d * lead;
  return out;
}

void RatFunField::maybe_normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (num_.degree() + den_.degree() > kNormalizeDegree) *this = normalized();
}

RatFunField operator+(const RatFunField& a, const RatFunField& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunField(a.num_ + b.num_, a.den_);
  return RatFunField(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunField operator-(const RatFunField& a) { return RatFunField(-a.num(), a.den()); }

RatFunField operator-(const RatFunField& a, const RatFunField& b) { return a + (-b); }

RatFunField operator*(const RatFunField& a, const RatFunField& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return RatFunField(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunField operator/(const RatFunField& a, const RatFunField& b) {
  if (b.is_zero()) throw DivisionByZero("division by zero in Q(x)");
  if (a.is_zero()) return {};
  return RatFunField(a.num_ * b.den_, a.den_ * b.num_);
}

// --- TPoly ---------------------------------------------------------------------

TPoly::TPoly(std::vector<RatFunField> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

TPoly TPoly::from_bipoly(const BiPoly& p) {
  std::vector<RatFunField> coeffs;
  coeffs.reserve(p.ycoeffs().size());
  for (const auto& c : p.ycoeffs()) coeffs.emplace_back(c);
  return TPoly(std::move(coeffs));
}

TPoly TPoly::normalized() const {
  std::vector<RatFunField> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.normalized());
  return TPoly(std::move(out));
}

TPoly operator+(const TPoly& a, const TPoly& b) {
  std::vector<RatFunField> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(k) + b.coeff(k);
  return TPoly(std::move(out));
}

TPoly operator-(const TPoly& a, const TPoly& b) {
  std::vector<RatFunField> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(k) - b.coeff(k);
  return TPoly(std::move(out));
}

TPoly operator*(const TPoly& a, const TPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<RatFunField> out(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) out[i + j] = out[i + j] + a.coeffs()[i] * b.coeffs()[j];
  }
  return TPoly(std::move(out));
}

TPoly operator*(const TPoly& a, const RatFunField& c) {
  std::vector<RatFunField> out;
  out.reserve(a.coeffs().size());
  for (const auto& x : a.coeffs()) out.push_back(x * c);
  return TPoly(std::move(out));
}

std::pair<TPoly, TPoly> divmod(const TPoly& a, const TPoly& b) {
  if (b.is_zero()) throw DivisionByZero("division by the zero polynomial in t");
  if (a.degree() < b.degree()) return {TPoly(), a};
  std::vector<RatFunField> rem = a.coeffs();
  const std::size_t db = b.coeffs().size() - 1;
  std::vector<RatFunField> quot(rem.size() - db);
  const RatFunField lead = b.leading();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const RatFunField q = (rem[k + db] / lead).normalized();
    quot[k] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] = rem[k + j] - q * b.coeffs()[j];
  }
  rem.resize(db);
  return {TPoly(std::move(quot)), TPoly(std::move(rem)).normalized()};
}

TPolyXgcd tpoly_xgcd(const TPoly& a, const TPoly& b) {
  if (a.is_zero() && b.is_zero()) throw InvalidInput("xgcd(0, 0) is undefined");
  TPoly r0 = a, r1 = b;
  TPoly s0(std::vector<RatFunField>{RatFunField(1)}), s1;
  TPoly t0, t1(std::vector<RatFunField>{RatFunField(1)});
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    TPoly s2 = (s0 - q * s1).normalized();
    TPoly t2 = (t0 - q * t1).normalized();
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const RatFunField inv = RatFunField(1) / r0.leading();
  return {(r0 * inv).normalized(), (s0 * inv).normalized(), (t0 * inv).normalized()};
}

BezoutSplit solve_bezout_system(const TPoly& dA, const TPoly& dB, const TPoly& target) {
  if (dA.is_zero() || dB.is_zero()) throw InvalidInput("Bezout system with a zero polynomial");
  const auto na = static_cast<std::size_t>(dA.degree());
  const auto nb = static_cast<std::size_t>(dB.degree());
  const std::size_t size = na + nb;
  if (!target.is_zero() && static_cast<std::size_t>(target.degree()) >= std::max<std::size_t>(size, 1)) {
    throw InvalidInput("Bezout target degree must be below deg dA + deg dB");
  }
  if (size == 0) throw InvalidInput("Bezout system needs a nonconstant polynomial");
  // Row k equates the t^k coefficients; columns are l_0..l_{na-1}, m_0..m_{nb-1}.
  std::vector<std::vector<RatFunField>> sys(size, std::vector<RatFunField>(size));
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j <= nb; ++j) sys[i + j][i] = dB.coeff(j);
  }
  for (std::size_t i = 0; i < nb; ++i) {
    for (std::size_t j = 0; j <= na; ++j) sys[i + j][na + i] = dA.coeff(j);
  }
  std::vector<RatFunField> rhs(size);
  for (std::size_t k = 0; k < size; ++k) rhs[k] = target.coeff(k);
  auto sol = solve_linear(std::move(sys), std::move(rhs));
  if (!sol.values || sol.rank < size) {
    throw CoprimalityViolation("Bezout system is singular: the two polynomials share a factor in t");
  }
  const auto& v = *sol.values;
  std::vector<RatFunField> l(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(na));
  std::vector<RatFunField> m(v.begin() + static_cast<std::ptrdiff_t>(na), v.end());
  return {TPoly(std::move(l)).normalized(), TPoly(std::move(m)).normalized()};
}

std::pair<TPoly, TPoly> two_term_split(const TPoly& num, const TPoly& g1, const TPoly& g2, SplitRoute route) {
  if (!num.is_zero() && num.degree() >= g1.degree() + g2.degree()) {
    throw InvalidInput("two-term split needs a proper rational function in t");
  }
  if (route == SplitRoute::kLinearSystem) {
    auto split = solve_bezout_system(g1, g2, num);
    return {std::move(split.l), std::move(split.m)};
  }
  const TPolyXgcd e = tpoly_xgcd(g1, g2);
  if (e.g.degree() > 0) throw CoprimalityViolation("split denominators share a factor in t");
  // num = (num t) g2 + (num s) g1, reduced modulo g1 in the first slot.
  TPoly r1 = divmod(num * e.t, g1).second;
  auto [r2, rem] = divmod(num - r1 * g2, g1);
  if (!rem.is_zero()) throw InternalInvariantViolation("two-term split remainder is nonzero");
  return {r1, r2.normalized()};
}

namespace {

void check_split_shape(const TPoly& r1, const TPoly& g1, const TPoly& r2, std::size_t n) {
  // Nonnegative t-powers live in r1/g1, negative ones in r2/(t^n D_B(x/t)).
  if ((!r1.is_zero() && r1.degree() >= g1.degree()) ||
      (!r2.is_zero() && static_cast<std::size_t>(r2.degree()) >= n)) {
    throw InternalInvariantViolation("partial-fraction split violates the Laurent separation");
  }
}

RatFun field_to_series(const RatFunField& f) {
  const RatFunField g = f.normalized();
  return RatFun::reduce(g.num(), g.den());
}

// Both a and b proper and nonzero.
TPoly proper_hadamard_split(const RatFun& a, const RatFun& b, SplitRoute route, TPoly* g1_out) {
  const auto n = static_cast<std::size_t>(b.den().degree());
  const TPoly g1 = TPoly::from_bipoly(substitute(a.den(), Substitution::kLifted));
  const TPoly g2 = TPoly::from_bipoly(substitute(b.den(), Substitution::kHomogenized));
  const TPoly num = TPoly::from_bipoly(substitute(a.num(), Substitution::kLifted)) *
                    TPoly::from_bipoly(substitute(b.num(), Substitution::kHomogenized, n));
  auto [r1, r2] = two_term_split(num, g1, g2, route);
  check_split_shape(r1, g1, r2, n);
  if (g1_out != nullptr) *g1_out = g1;
  return r1;
}

RatFun proper_hadamard(const RatFun& a, const RatFun& b, SplitRoute route) {
  if (a.is_zero() || b.is_zero()) return {};
  TPoly g1;
  const TPoly r1 = proper_hadamard_split(a, b, route, &g1);
  return field_to_series(r1.at_zero() / g1.at_zero());
}

RatFun proper_binomial(const RatFun& a, const RatFun& b, SplitRoute route) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto m = static_cast<std::size_t>(a.den().degree());
  const auto n = static_cast<std::size_t>(b.den().degree());
  const TPoly one_minus_t(std::vector<RatFunField>{RatFunField(1), RatFunField(-1)});
  const TPoly g1 = one_minus_t * TPoly::from_bipoly(substitute(a.den(), Substitution::kShiftedReciprocal, m));
  const TPoly g2 = TPoly::from_bipoly(substitute(b.den(), Substitution::kHomogenized, n));
  const TPoly num = TPoly::from_bipoly(substitute(a.num(), Substitution::kShiftedReciprocal, m)) *
                    TPoly::from_bipoly(substitute(b.num(), Substitution::kHomogenized, n));
  auto [r1, r2] = two_term_split(num, g1, g2, route);
  check_split_shape(r1, g1, r2, n);
  return field_to_series(r1.at_zero() / g1.at_zero());
}

}  // namespace

TPoly hadamard_split_numerator(const RatFun& a, const RatFun& b, SplitRoute route) {
  if (!a.is_proper() || !b.is_proper() || a.is_zero() || b.is_zero()) {
    throw InvalidInput("the Hadamard split is defined for nonzero proper functions");
  }
  return proper_hadamard_split(a, b, route, nullptr);
}

RatFun hadamard_via_constant_term(const RatFun& a, const RatFun& b, SplitRoute route) {
  const auto [pa, fa] = proper_split(a);
  const auto [pb, fb] = proper_split(b);
  // (pa + fa) * (pb + fb) = pa * b + pb * fa + fa * fb
  return RatFun(hadamard_with_poly(pa, b)) + RatFun(hadamard_with_poly(pb, fa)) + proper_hadamard(fa, fb, route);
}

RatFun binomial_via_constant_term(const RatFun& a, const RatFun& b, SplitRoute route) {
  const auto [pa, fa] = proper_split(a);
  const auto [pb, fb] = proper_split(b);
  // (pa + fa) (.) (pb + fb) = pa (.) b + pb (.) fa + fa (.) fb
  return poly_bprod(pa, b) + poly_bprod(pb, fa) + proper_binomial(fa, fb, route);
}

}  // namespace binconv
