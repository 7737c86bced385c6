#include "binconv/ratfun.hpp"

#include <algorithm>

#include "binconv/errors.hpp"
#include "binconv/linsolve.hpp"

namespace binconv {

RatFun RatFun::make(Poly num, Poly den) {
  if (den.is_zero()) throw InvalidInput("rational function with zero denominator");
  if (binconv::is_zero(den.constant_term())) {
    throw NotAPowerSeries("denominator " + to_string(den) + " vanishes at x = 0");
  }
  if (num.is_zero()) return {};
  const Poly g = gcd(num, den);
  if (g.degree() > 0) {
    num = exact_div(num, g);
    den = exact_div(den, g);
  }
  const Rational scale = 1 / den.constant_term();
  return RatFun(num * scale, den * scale, 0);
}

RatFun RatFun::reduce(Poly num, Poly den) {
  if (den.is_zero()) throw InvalidInput("rational function with zero denominator");
  if (num.is_zero()) return {};
  const Poly g = gcd(num, den);
  if (g.degree() > 0) {
    num = exact_div(num, g);
    den = exact_div(den, g);
  }
  return make(std::move(num), std::move(den));
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.den() == b.den()) return RatFun::reduce(a.num() + b.num(), a.den());
  return RatFun::reduce(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

RatFun operator-(const RatFun& a) { return RatFun::reduce(-a.num(), a.den()); }

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  return RatFun::reduce(a.num() * b.num(), a.den() * b.den());
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw DivisionByZero("division by the zero function");
  return RatFun::reduce(a.num() * b.den(), a.den() * b.num());
}

RatFun operator*(const Rational& c, const RatFun& f) { return RatFun::reduce(f.num() * c, f.den()); }

RatFun pow(const RatFun& f, long exp) {
  if (exp >= 0) {
    const auto e = static_cast<std::size_t>(exp);
    return RatFun::reduce(pow(f.num(), e), pow(f.den(), e));
  }
  if (f.is_zero()) throw DivisionByZero("negative power of the zero function");
  const auto e = static_cast<std::size_t>(-exp);
  return RatFun::reduce(pow(f.den(), e), pow(f.num(), e));
}

Series expand(const RatFun& f, std::size_t order) {
  Series s;
  s.coeffs.resize(order);
  const auto& den = f.den().coeffs();
  // den(0) = 1, so c_n = num_n - sum_{j>=1} den_j c_{n-j}.
  for (std::size_t n = 0; n < order; ++n) {
    Rational c = f.num().coeff(n);
    const std::size_t jmax = std::min(n, den.size() - 1);
    for (std::size_t j = 1; j <= jmax; ++j) c -= den[j] * s.coeffs[n - j];
    s.coeffs[n] = c;
  }
  return s;
}

std::pair<Poly, RatFun> proper_split(const RatFun& f) {
  auto [q, r] = divmod(f.num(), f.den());
  return {q, RatFun::make(r, f.den())};
}

RatFun reconstruct_rational(const Series& s, std::size_t max_den_deg, std::size_t max_num_deg) {
  const std::size_t needed = max_num_deg + max_den_deg + 1 + kReconstructionMargin;
  if (s.order() < needed) {
    throw InvalidInput("reconstruction needs " + std::to_string(needed) + " coefficients, got " +
                       std::to_string(s.order()));
  }
  // Denominator q with q_0 = 1 must kill every coefficient of q*s above
  // max_num_deg that the series determines:
  //   sum_{j=1..d} q_j s_{n-j} = -s_n  for n in (max_num_deg, order).
  // Any solution yields the same reduced function once the series is long
  // enough, so the smallest working denominator degree is taken.
  for (std::size_t d = 0; d <= max_den_deg; ++d) {
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (std::size_t n = max_num_deg + 1; n < s.order(); ++n) {
      std::vector<Rational> row(d);
      for (std::size_t j = 1; j <= d; ++j) {
        if (j <= n) row[j - 1] = s[n - j];
      }
      a.push_back(std::move(row));
      b.push_back(-s[n]);
    }
    auto sol = solve_linear(std::move(a), std::move(b));
    if (!sol.values) continue;
    std::vector<Rational> q(d + 1);
    q[0] = 1;
    for (std::size_t j = 1; j <= d; ++j) q[j] = (*sol.values)[j - 1];
    const Poly den(std::move(q));
    const Poly series_poly(s.coeffs);
    const Poly num = truncate(series_poly * den, max_num_deg + 1);
    RatFun f = RatFun::make(num, den);
    if (expand(f, s.order()) != s) {
      throw InternalInvariantViolation("reconstructed function does not reproduce its series");
    }
    return f;
  }
  throw ReconstructionFailed("no rational function with denominator degree <= " + std::to_string(max_den_deg) +
                             " and numerator degree <= " + std::to_string(max_num_deg) + " matches " +
                             std::to_string(s.order()) + " coefficients");
}

RatFun compose_scale(const RatFun& f, const Rational& a) {
  return RatFun::reduce(scale_argument(f.num(), a), scale_argument(f.den(), a));
}

namespace {

// sum_k p_k x^k (1 - beta x)^(m - k)
Poly mobius_numerator(const Poly& p, const Rational& beta, std::size_t m) {
  const Poly one_minus = Poly{Rational(1), Rational(-beta)};
  Poly out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (is_zero(p.coeffs()[k])) continue;
    out += Poly::monomial(p.coeffs()[k], k) * pow(one_minus, m - k);
  }
  return out;
}

}  // namespace

RatFun compose_mobius(const RatFun& f, const Rational& beta) {
  const std::size_t m = std::max(f.num().size(), f.den().size()) - 1;
  const Poly num = mobius_numerator(f.num(), beta, m);
  const Poly den = mobius_numerator(f.den(), beta, m) * Poly{Rational(1), Rational(-beta)};
  if (binconv::is_zero(den.constant_term())) {
    throw InternalInvariantViolation("Mobius composition produced den(0) = 0");
  }
  return RatFun::reduce(num, den);
}

RatFun compose_monomial(const RatFun& f, const Rational& c, std::size_t k) {
  if (k == 0) throw InvalidInput("compose_monomial needs a positive exponent");
  const Poly sub = Poly::monomial(c, k);
  return RatFun::reduce(compose(f.num(), sub), compose(f.den(), sub));
}

RatFun derivative(const RatFun& f) {
  return RatFun::reduce(derivative(f.num()) * f.den() - f.num() * derivative(f.den()), f.den() * f.den());
}

std::string to_string(const RatFun& f, const std::string& var) {
  if (f.is_polynomial()) return to_string(f.num(), var);
  const auto wrap = [&](const Poly& p) {
    const auto terms =
        std::count_if(p.coeffs().begin(), p.coeffs().end(), [](const Rational& c) { return !is_zero(c); });
    const std::string text = to_string(p, var);
    const bool bare = terms == 1 && text.find('/') == std::string::npos && text.front() != '-';
    return bare ? text : "(" + text + ")";
  };
  return wrap(f.num()) + " / " + wrap(f.den());
}

std::size_t recurrence_start(const RatFun& f) {
  const std::size_t after_num = f.num().is_zero() ? 0 : f.num().size();
  return std::max(after_num, f.den().size() - 1);
}

}  // namespace binconv
