#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "binconv/errors.hpp"
#include "binconv/ratfun.hpp"
#include "support.hpp"

using namespace binconv;
using support::rf;

namespace {

std::vector<Rational> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("construction normalizes") {
  const RatFun fib = rf({0, 1}, {1, -1, -1});
  CHECK(fib.num() == Poly::from_ints({0, 1}));
  CHECK(fib.den() == Poly::from_ints({1, -1, -1}));
  const RatFun f = rf({0, 2}, {2, -2});
  CHECK(f.num() == Poly::from_ints({0, 1}));
  CHECK(f.den() == Poly::from_ints({1, -1}));
  CHECK_THROWS_AS(rf({0, 0, 1}, {0, 1, 0, -1}), NotAPowerSeries);
  CHECK_THROWS_AS(RatFun::make(Poly(1), Poly()), InvalidInput);
  CHECK(RatFun::make(Poly(), Poly::from_ints({3, 1})) == RatFun());
  // reduce cancels first, so x/x is fine there.
  CHECK(RatFun::reduce(Poly::x(), Poly::x()) == RatFun(Poly(1)));
  CHECK_THROWS_AS(RatFun::reduce(Poly(1), Poly::x()), NotAPowerSeries);
  CHECK(rf({-1, 0, 1}, {-1, 1}) == RatFun(Poly::from_ints({1, 1})));
}

TEST_CASE("expansion") {
  CHECK(expand(rf({0, 1}, {1, -1, -1}), 7).coeffs == ints({0, 1, 1, 2, 3, 5, 8}));
  CHECK(expand(rf({0, 1}, {1, -2, -1}), 5).coeffs == ints({0, 1, 2, 5, 12}));
  CHECK(expand(rf({1}, {1}), 3).coeffs == ints({1, 0, 0}));
  CHECK(expand(RatFun(), 2).coeffs == ints({0, 0}));
  CHECK(expand(rf({1}, {1, -1}), 0).order() == 0);
}

TEST_CASE("expansions satisfy the denominator recurrence") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const RatFun f = support::random_ratfun(rng);
    const Series s = expand(f, 30);
    const auto& d = f.den().coeffs();
    const auto start = static_cast<std::size_t>(std::max<std::ptrdiff_t>(f.num().degree() + 1, 0));
    for (std::size_t n = start; n < 30; ++n) {
      Rational acc = 0;
      for (std::size_t j = 0; j < d.size() && j <= n; ++j) acc += d[j] * s[n - j];
      CHECK(acc == 0);
    }
    CHECK(recurrence_start(f) >= start);
  }
}

TEST_CASE("arithmetic") {
  const RatFun a = rf({1}, {1, -1});
  const RatFun b = rf({1}, {1, 1});
  CHECK(a + b == rf({2}, {1, 0, -1}));
  CHECK(a - a == RatFun());
  CHECK(a * b == rf({1}, {1, 0, -1}));
  CHECK(a / b == rf({1, 1}, {1, -1}));
  CHECK_THROWS_AS(a / RatFun(), DivisionByZero);
  CHECK_THROWS_AS(a / RatFun(Poly::x()), NotAPowerSeries);
  CHECK(pow(a, -2) == RatFun(Poly::from_ints({1, -2, 1})));
  CHECK(pow(a, 0) == RatFun(Poly(1)));
  CHECK(Rational(3) * a == rf({3}, {1, -1}));
  CHECK(derivative(a) == rf({1}, {1, -2, 1}));
}

TEST_CASE("proper split") {
  const RatFun f = rf({0, 0, 0, 1}, {1, -1});
  auto [p, r] = proper_split(f);
  CHECK(p == Poly::from_ints({-1, -1, -1}));
  CHECK(r == rf({1}, {1, -1}));
  CHECK(RatFun(p) + r == f);
  const RatFun fib = rf({0, 1}, {1, -1, -1});
  CHECK(proper_split(fib).first.is_zero());
  CHECK(proper_split(fib).second == fib);
  auto [q, zero] = proper_split(rf({1, 0, -1}, {1, -1}));
  CHECK(q == Poly::from_ints({1, 1}));
  CHECK(zero == RatFun());

  std::mt19937 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const RatFun g = support::random_ratfun(rng);
    auto [gp, gr] = proper_split(g);
    CHECK(gr.is_proper());
    CHECK(RatFun(gp) + gr == g);
  }
}

TEST_CASE("reconstruction") {
  const RatFun target = rf({0, 0, 2, -3}, {1, -6, 7, 6, -9});
  CHECK(reconstruct_rational(expand(target, 12), 4, 3) == target);
  CHECK(reconstruct_rational(expand(rf({1}, {1, -1}), 4), 1, 0) == rf({1}, {1, -1}));
  Series ff;
  ff.coeffs = ints({0, 0, 2, 6, 22, 70, 230, 742});
  CHECK(reconstruct_rational(ff, 3, 2) == rf({0, 0, 2}, {1, -3, -2, 4}));
  CHECK_THROWS_AS(reconstruct_rational(expand(target, 12), 3, 3), ReconstructionFailed);
  CHECK_THROWS_AS(reconstruct_rational(expand(target, 9), 4, 3), InvalidInput);
}

TEST_CASE("reconstruction round trip") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const RatFun f = support::random_ratfun(rng);
    const auto d = static_cast<std::size_t>(f.den().degree());
    const auto e = static_cast<std::size_t>(f.num().degree());
    CHECK(reconstruct_rational(expand(f, d + e + 1 + kReconstructionMargin), d, e) == f);
  }
}

TEST_CASE("compositions") {
  const RatFun fib = rf({0, 1}, {1, -1, -1});
  CHECK(compose_scale(fib, 2) == rf({0, 2}, {1, -2, -4}));
  CHECK(compose_mobius(fib, 1) == rf({0, 1}, {1, -3, 1}));
  CHECK(compose_mobius(RatFun(Poly(1)), Rational(-3, 2)) == RatFun::make(Poly(1), Poly{Rational(1), Rational(3, 2)}));
  CHECK(compose_monomial(fib, 4, 2) == rf({0, 0, 4}, {1, 0, -4, 0, -16}));
  CHECK_THROWS_AS(compose_monomial(fib, 1, 0), InvalidInput);

  std::mt19937 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const RatFun f = support::random_ratfun(rng);
    const Rational beta = make_rational(support::uniform(rng, -4, 4), support::uniform(rng, 1, 3));
    Series geo;
    Rational p = 1;
    for (int n = 0; n < 20; ++n, p *= beta) geo.coeffs.push_back(p);
    CHECK(expand(compose_mobius(f, beta), 20).coeffs == support::brute_binomial(expand(f, 20), geo));
  }
}

TEST_CASE("printing") {
  CHECK(to_string(rf({0, 0, 2, -3}, {1, -6, 7, 6, -9})) == "(2*x^2 - 3*x^3) / (1 - 6*x + 7*x^2 + 6*x^3 - 9*x^4)");
  CHECK(to_string(rf({0, 1}, {1, -1, -1})) == "x / (1 - x - x^2)");
  CHECK(to_string(rf({1, 1}, {1})) == "1 + x");
  CHECK(to_string(RatFun()) == "0");
}
