#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "binconv/convolve.hpp"
#include "binconv/errors.hpp"
#include "support.hpp"

using namespace binconv;
using support::rf;
using support::uniform;

namespace {

const RatFun kFib = rf({0, 1}, {1, -1, -1});
const RatFun kPell = rf({0, 1}, {1, -2, -1});

RatFun geom(const Rational& a) { return RatFun::make(Poly(1), Poly{Rational(1), Rational(-a)}); }

Poly lin(long a) { return Poly::from_ints({1, -a}); }

}  // namespace

TEST_CASE("binomial products from the worked examples") {
  CHECK(binomial_product(kFib, kPell) == rf({0, 0, 2, -3}, {1, -6, 7, 6, -9}));
  CHECK(binomial_product(RatFun::make(Poly::monomial(1, 3), lin(1)), geom(2)) ==
        RatFun::make(Poly::monomial(1, 3), pow(lin(2), 3) * lin(3)));
  CHECK(binomial_product(RatFun::make(Poly::monomial(1, 2), pow(lin(1), 2)),
                         RatFun::make(Poly::monomial(1, 2), pow(lin(2), 2))) ==
        RatFun::make(Poly::from_ints({0, 0, 0, 0, 6, -30, 49, -27}),
                     pow(lin(1), 2) * pow(lin(2), 2) * pow(lin(3), 3)));
  CHECK(binomial_product(RatFun(Poly(1)), kFib) == kFib);
  for (long a : {1L, 2L, -3L}) CHECK(binomial_product(geom(a), geom(-a)) == RatFun(Poly(1)));
  CHECK(binomial_product(RatFun(), kFib) == RatFun());
}

TEST_CASE("binomial denominators") {
  CHECK(binomial_denominator(Poly::from_ints({1, -1, -1}), Poly::from_ints({1, -2, -1})) ==
        Poly::from_ints({1, -6, 7, 6, -9}));
  // alpha_i + alpha_j over the golden pair: 2 phi, 1, 1, 2 psi.
  CHECK(binomial_denominator(Poly::from_ints({1, -1, -1}), Poly::from_ints({1, -1, -1})) ==
        Poly::from_ints({1, -2, -4}) * pow(lin(1), 2));
  // Tribonacci: D(2x) from the diagonal, then each alpha_i + alpha_j (i < j) twice.
  const Poly sextic = Poly::from_ints({1, -4, 0, 2, 12, -8, -16});
  const Poly trib_den = Poly::from_ints({1, -1, -1, -1});
  const Poly doubled = scale_argument(trib_den, 2);
  CHECK(binomial_denominator(trib_den, trib_den) == sextic * exact_div(sextic, doubled));
  CHECK(binomial_product(RatFun::make(Poly::x(), trib_den), RatFun::make(Poly::x(), trib_den)).den() == sextic);
  CHECK(binomial_denominator(Poly(1), Poly::from_ints({1, -1, -1})) == Poly(1));
  CHECK_THROWS_AS(binomial_denominator(Poly::from_ints({2, 1}), Poly::from_ints({1, 1})), InvalidInput);
  CHECK(binomial_denominator(support::from_roots({1, 2}), support::from_roots({3, 5})) ==
        support::from_roots({4, 6, 5, 7}));
}

TEST_CASE("Hadamard products and denominators") {
  CHECK(hadamard_product(kFib, kPell) == rf({0, 1, 0, -1}, {1, -2, -7, -2, 1}));
  CHECK(hadamard_product(kFib, kFib) == rf({0, 1, -1}, {1, -2, -2, 1}));
  CHECK(hadamard_product(kPell, geom(1)) == kPell);
  CHECK(hadamard_denominator(Poly::from_ints({1, -1, -1}), Poly::from_ints({1, -2, -1})) ==
        Poly::from_ints({1, -2, -7, -2, 1}));
  CHECK(hadamard_denominator(lin(1), lin(1)) == lin(1));
  std::mt19937 rng(41);
  for (int trial = 0; trial < 5; ++trial) {
    const long a = uniform(rng, -5, 5), b = uniform(rng, 1, 5), c = uniform(rng, -5, 5), d = uniform(rng, -5, -1);
    CHECK(hadamard_denominator(Poly::from_ints({1, -a, -b}), Poly::from_ints({1, -c, -d})) ==
          Poly::from_ints({1, -a * c, -(a * a * d + b * c * c + 2 * b * d), -a * b * c * d, b * b * d * d}));
  }
  // Polynomial parts are termwise products on finitely many terms.
  CHECK(hadamard_with_poly(Poly::from_ints({1, 1, 1, 1}), kFib) == Poly::from_ints({0, 1, 1, 2}));
  CHECK(hadamard_product(rf({1, 2, 3}, {1}), kPell) == RatFun(Poly::from_ints({0, 2, 6})));
}

TEST_CASE("products agree with brute force on random inputs") {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 30; ++trial) {
    const RatFun a = support::random_ratfun(rng, 3);
    const RatFun b = support::random_ratfun(rng, 3);
    const Series sa = expand(a, 25), sb = expand(b, 25);
    const RatFun bp = binomial_product(a, b);
    const RatFun hp = hadamard_product(a, b);
    CHECK(expand(bp, 25).coeffs == support::brute_binomial(sa, sb));
    CHECK(expand(hp, 25).coeffs == support::brute_termwise(sa, sb));
    CHECK(binomial_convolve(sa, sb).coeffs == support::brute_binomial(sa, sb));
    if (a.is_proper() && b.is_proper()) CHECK(hp.is_proper());
  }
}

TEST_CASE("numerator degree stays below the improper-input bound") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    const RatFun a = support::random_ratfun(rng, 3);
    const RatFun b = support::random_ratfun(rng, 3);
    const auto m = static_cast<long>(a.den().degree());
    const auto n = static_cast<long>(b.den().degree());
    const long u = std::max<long>(a.num().degree() + 1 - m, 0);
    const long v = std::max<long>(b.num().degree() + 1 - n, 0);
    const ProductPlan plan = plan_product(a, b, ProductKind::kBinomial);
    CHECK(plan.num_terms == static_cast<std::size_t>((u + m) * (v + n)));
    CHECK(binomial_product(a, b).num().degree() < (u + m) * (v + n));
  }
}

TEST_CASE("algebraic laws") {
  std::mt19937 rng(55);
  for (int trial = 0; trial < 20; ++trial) {
    const RatFun a = support::random_proper(rng, 2);
    const RatFun b = support::random_proper(rng, 2);
    const RatFun c = support::random_proper(rng, 2);
    CHECK(binomial_product(a, b) == binomial_product(b, a));
    CHECK(binomial_product(binomial_product(a, b), c) == binomial_product(a, binomial_product(b, c)));
    CHECK(hadamard_product(a, b) == hadamard_product(b, a));
    CHECK(hadamard_product(hadamard_product(a, b), c) == hadamard_product(a, hadamard_product(b, c)));
    CHECK(binomial_product(a, RatFun(Poly(1))) == a);
    CHECK(hadamard_product(a, geom(1)) == a);
    const Rational beta(uniform(rng, -3, 3));
    CHECK(binomial_product(binomial_product(a, geom(beta)), geom(-beta)) == a);
    CHECK(compose_mobius(a, beta) == binomial_product(a, geom(beta)));
  }
}

TEST_CASE("binomial closed form") {
  CHECK(closed_form_bprod(0, 1, 0, 1) == geom(2));
  CHECK(closed_form_bprod(1, 1, 1, -1) == RatFun(Poly::monomial(2, 2)));
  CHECK(closed_form_bprod(2, 0, 0, 2) == RatFun::make(Poly::monomial(1, 2), pow(lin(2), 3)));
  for (std::size_t j = 0; j < 5; ++j) {
    for (std::size_t k = 0; k < 5; ++k) {
      const Rational alpha = make_rational(static_cast<long>(j) - 2, 3);
      const Rational beta = make_rational(5 - static_cast<long>(k), 2);
      const RatFun a = RatFun::make(Poly::monomial(1, j), pow(Poly{Rational(1), Rational(-alpha)}, j + 1));
      const RatFun b = RatFun::make(Poly::monomial(1, k), pow(Poly{Rational(1), Rational(-beta)}, k + 1));
      CHECK(closed_form_bprod(j, alpha, k, beta) == binomial_product(a, b));
    }
  }
}

TEST_CASE("monomial binomial products") {
  CHECK(poly_bprod(0, kFib) == kFib);
  CHECK(poly_bprod(1, geom(1)) == rf({0, 1}, {1, -2, 1}));
  CHECK(poly_bprod(3, geom(2)) == binomial_product(RatFun(Poly::monomial(1, 3)), geom(2)));
  // x^3/(1-x) (.) 1/(1-2x) again, through proper_split and linearity.
  auto [p, r] = proper_split(RatFun::make(Poly::monomial(1, 3), lin(1)));
  CHECK(poly_bprod(p, geom(2)) + binomial_product(r, geom(2)) ==
        RatFun::make(Poly::monomial(1, 3), pow(lin(2), 3) * lin(3)));
}

TEST_CASE("Hadamard closed form") {
  CHECK(closed_form_hprod(0, 2, 0, 0, 3, 0) == geom(6));
  CHECK(closed_form_hprod(0, 1, 1, 0, 1, 0) == rf({1}, {1, -2, 1}));
  const auto term = [](std::size_t i, const Rational& a, std::size_t m) {
    return RatFun::make(Poly::monomial(1, i), pow(Poly{Rational(1), Rational(-a)}, m + 1));
  };
  CHECK(closed_form_hprod(1, 1, 1, 0, 2, 1) == hadamard_product(term(1, 1, 1), term(0, 2, 1)));
  CHECK_THROWS_AS(closed_form_hprod(3, 1, 0, 0, 1, 0), InvalidInput);
  std::mt19937 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const auto m = static_cast<std::size_t>(uniform(rng, 0, 3));
    const auto n = static_cast<std::size_t>(uniform(rng, 0, 3));
    const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(m)));
    const auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n)));
    const Rational a = make_rational(uniform(rng, 1, 4), uniform(rng, 1, 3));
    const Rational b(uniform(rng, -4, -1));
    CHECK(closed_form_hprod(i, a, m, j, b, n) == hadamard_product(term(i, a, m), term(j, b, n)));
  }
}

TEST_CASE("cubic split") {
  const RatFun trib = rf({0, 1}, {1, -1, -1, -1});
  const KomatsuSplit split = komatsu_decompose(trib, trib);
  CHECK(split.u == Poly{Rational(1, 11), Rational(1, 11), Rational(10, 11)});
  CHECK(RatFun::make(split.u, scale_argument(trib.den(), 2)) ==
        Rational(1, 11) * rf({1, 1, 10}, {1, -2, -4, -8}));
  CHECK(komatsu_reassemble(split, trib.den()) == binomial_product(trib, trib));

  const RatFun perrin = rf({3, 0, -1}, {1, 0, -1, -1});
  const KomatsuSplit ps = komatsu_decompose(perrin, perrin);
  CHECK(ps.shift == 0);
  CHECK(komatsu_reassemble(ps, perrin.den()) == compose_scale(perrin, 2) + Rational(2) * compose_scale(perrin, -1));

  const RatFun repeated = RatFun::make(Poly(1), pow(lin(1), 2) * lin(2));
  CHECK_THROWS_AS(komatsu_decompose(repeated, repeated), DecompositionUnavailable);
  CHECK_THROWS_AS(komatsu_decompose(kFib, kFib), InvalidInput);
  CHECK_THROWS_AS(komatsu_decompose(trib, perrin), InvalidInput);
}
