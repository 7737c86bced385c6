// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "binconv/errors.hpp"
#include "binconv/expr.hpp"
#include "binconv/products.hpp"
#include "binconv/resultant.hpp"
#include "binconv/seqlib.hpp"
#include "support.hpp"

using namespace binconv;
using support::rf;
using support::uniform;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects the first failure of a criterion.
struct Outcome {
  std::string failure;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && failure.empty()) failure = what;
  }
};

std::vector<std::pair<RatFun, RatFun>> random_pairs() {
  std::mt19937 rng(20240917);
  std::vector<std::pair<RatFun, RatFun>> pairs;
  for (int i = 0; i < 30; ++i) {
    RatFun a = support::random_proper(rng, 3);
    RatFun b = support::random_proper(rng, 3);
    pairs.emplace_back(std::move(a), std::move(b));
  }
  return pairs;
}

RatFun geom(const Rational& a) { return RatFun::make(Poly(1), Poly{Rational(1), Rational(-a)}); }

Poly lin(long a) { return Poly::from_ints({1, -a}); }

void ac1(Outcome& o) {
  const auto start = Clock::now();
  const RatFun a = eval(parse("x/(1-x-x^2)"));
  const RatFun b = eval(parse("x/(1-2x-x^2)"));
  const RatFun want = rf({0, 0, 2, -3}, {1, -6, 7, 6, -9});
  for (Method m : kAllMethods) {
    o.require(product(a, b, ProductKind::kBinomial, m) == want, std::string(method_name(m)) + " differs");
  }
  const double t = seconds_since(start);
  o.require(t < 1.0, "took " + std::to_string(t) + " s");
  o.detail = "Fibonacci (.) Pell, 4 methods, " + std::to_string(t) + " s";
}

void ac2(Outcome& o) {
  const BiPoly a = substitute(Poly::from_ints({1, -1, -1}), Substitution::kShiftedReciprocal);
  const BiPoly b = substitute(Poly::from_ints({1, -2, -1}), Substitution::kHomogenized);
  const PolyMatrix s = sylvester(a, b);
  o.require(s.rows() == 4 && s.cols() == 4, "matrix is not 4x4");
  const Poly d = det_fraction_free(s);
  o.require(d == Poly::from_ints({1, -6, 7, 6, -9}), "determinant is " + to_string(d));
  o.detail = "det = " + to_string(d);
}

void ac3(Outcome& o) {
  const auto start = Clock::now();
  const SuiteReport report = run_identity_suite();
  const double t = seconds_since(start);
  std::size_t checks = 0;
  for (const auto& r : report.results) {
    checks += r.checks;
    o.require(r.passed, "(" + r.id + ") " + r.witness);
  }
  o.require(report.results.size() == identity_ids().size() && identity_ids().size() == 12, "catalog incomplete");
  for (const auto& r : report.results) {
    if (r.id == "j") o.require(r.params.size() == 10, "(j) sampled " + std::to_string(r.params.size()) + " tuples");
  }
  o.require(t < 30.0, "took " + std::to_string(t) + " s");
  o.detail = std::to_string(report.results.size()) + " identities, " + std::to_string(checks) + " checks, " +
             std::to_string(t) + " s";
}

void ac4(Outcome& o) {
  const Poly fib = Poly::from_ints({1, -1, -1});
  const Poly pell = Poly::from_ints({1, -2, -1});
  const auto padded = [](std::vector<Rational> v) {
    v.resize(5);
    return v;
  };
  const auto row = [](std::initializer_list<long> v) { return std::vector<Rational>(v.begin(), v.end()); };
  const PowerSums pa = elementary_to_power(elementary_from_denominator(fib), 4);
  const PowerSums pb = elementary_to_power(elementary_from_denominator(pell), 4);
  const PowerSums ph = powersum_hadamard(pa, pb, 4);
  const PowerSums pbin = powersum_binomial(pa, pb, 4);
  const std::vector<std::pair<std::string, bool>> rows = {
      {"e_n(alpha)", padded(elementary_from_denominator(fib)) == row({1, 1, -1, 0, 0})},
      {"e_n(beta)", padded(elementary_from_denominator(pell)) == row({1, 2, -1, 0, 0})},
      {"p_n(alpha)", pa.values == row({2, 1, 3, 4, 7})},
      {"p_n(beta)", pb.values == row({2, 2, 6, 14, 34})},
      {"p_n(alpha*beta)", ph.values == row({4, 2, 18, 56, 238})},
      {"p_n(alpha(.)beta)", pbin.values == row({4, 6, 22, 72, 278})},
      {"e_n(alpha*beta)", power_to_elementary(ph, 4) == row({1, 2, -7, 2, 1})},
      {"e_n(alpha(.)beta)", power_to_elementary(pbin, 4) == row({1, 6, 7, -6, -9})},
  };
  for (const auto& [name, ok] : rows) o.require(ok, "row " + name);
  o.detail = "8 rows, n = 0..4";
}

void ac5(Outcome& o, const std::vector<std::pair<RatFun, RatFun>>& pairs) {
  const auto start = Clock::now();
  std::size_t agreed = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (ProductKind kind : {ProductKind::kBinomial, ProductKind::kHadamard}) {
      const CrossCheckReport r = cross_check(pairs[i].first, pairs[i].second, kind);
      std::string why;
      for (const auto& m : r.results) {
        if (!m.value) why = std::string(method_name(m.method)) + ": " + m.error;
      }
      o.require(r.agree, "pair " + std::to_string(i) + " " + std::string(kind_name(kind)) + " " + why);
      agreed += r.agree ? 1 : 0;
    }
  }
  const double t = seconds_since(start);
  o.require(t < 60.0, "took " + std::to_string(t) + " s");
  o.detail = std::to_string(agreed) + "/" + std::to_string(2 * pairs.size()) + " products agree, " +
             std::to_string(t) + " s";
}

void ac6(Outcome& o, const std::vector<std::pair<RatFun, RatFun>>& pairs) {
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [a, b] = pairs[i];
    const Series sa = expand(a, 25);
    const Series sb = expand(b, 25);
    o.require(expand(binomial_product(a, b), 25).coeffs == support::brute_binomial(sa, sb),
              "binomial pair " + std::to_string(i));
    o.require(expand(hadamard_product(a, b), 25).coeffs == support::brute_termwise(sa, sb),
              "Hadamard pair " + std::to_string(i));
  }
  o.detail = std::to_string(pairs.size()) + " pairs to order 25";
}

void ac7(Outcome& o) {
  const RatFun first =
      binomial_product(RatFun::make(Poly::x(), lin(1) * lin(2)), RatFun::make(Poly::x(), lin(3) * lin(5)));
  o.require(first == RatFun::make(Poly::from_ints({0, 0, 2, -11}), lin(4) * lin(5) * lin(6) * lin(7)),
            "distinct linear factors: " + to_string(first));
  const RatFun a3 = RatFun::make(Poly::monomial(1, 3), lin(1));
  const RatFun second = binomial_product(a3, geom(2));
  o.require(second == RatFun::make(Poly::monomial(1, 3), pow(lin(2), 3) * lin(3)), "x^3/(1-x): " + to_string(second));
  const RatFun a2 = RatFun::make(Poly::monomial(1, 2), pow(lin(1), 2));
  const RatFun b2 = RatFun::make(Poly::monomial(1, 2), pow(lin(2), 2));
  const RatFun third = binomial_product(a2, b2);
  o.require(third == RatFun::make(Poly::from_ints({0, 0, 0, 0, 6, -30, 49, -27}),
                                  pow(lin(1), 2) * pow(lin(2), 2) * pow(lin(3), 3)),
            "double poles: " + to_string(third));
  // The improper-input exponents: u = 3 for x^3/(1-x), u = v = 1 for the squares.
  const ProductPlan p2 = plan_product(a3, geom(2), ProductKind::kBinomial);
  o.require(p2.num_terms == 4 && p2.den_bound == pow(lin(1), 0) * pow(lin(2), 3) * lin(3), "plan for x^3/(1-x)");
  const ProductPlan p3 = plan_product(a2, b2, ProductKind::kBinomial);
  o.require(p3.num_terms == 9, "plan for the double poles");
  o.detail = "3 worked examples";
}

void ac8(Outcome& o) {
  std::size_t grid = 0;
  for (std::size_t j = 0; j < 5; ++j) {
    for (std::size_t k = 0; k < 5; ++k) {
      const Rational alpha = make_rational(2 * static_cast<long>(j) - 3, 2);
      const Rational beta = make_rational(static_cast<long>(k) + 1, 3);
      const RatFun a = RatFun::make(Poly::monomial(1, j), pow(Poly{Rational(1), Rational(-alpha)}, j + 1));
      const RatFun b = RatFun::make(Poly::monomial(1, k), pow(Poly{Rational(1), Rational(-beta)}, k + 1));
      o.require(closed_form_bprod(j, alpha, k, beta) == binomial_product(a, b),
                "binomial (j,k) = (" + std::to_string(j) + "," + std::to_string(k) + ")");
      ++grid;
    }
  }
  std::mt19937 rng(8);
  std::size_t tuples = 0;
  while (tuples < 10) {
    const auto m = static_cast<std::size_t>(uniform(rng, 0, 3));
    const auto n = static_cast<std::size_t>(uniform(rng, 0, 3));
    const auto i = static_cast<std::size_t>(uniform(rng, 0, 4));
    const auto j = static_cast<std::size_t>(uniform(rng, 0, 4));
    if (i > m + j || j > n + i) continue;
    const Rational a = make_rational(uniform(rng, -4, 4), uniform(rng, 1, 3));
    const Rational b = make_rational(uniform(rng, -4, 4), uniform(rng, 1, 3));
    if (a == 0 || b == 0) continue;
    const RatFun fa = RatFun::make(Poly::monomial(1, i), pow(Poly{Rational(1), Rational(-a)}, m + 1));
    const RatFun fb = RatFun::make(Poly::monomial(1, j), pow(Poly{Rational(1), Rational(-b)}, n + 1));
    o.require(closed_form_hprod(i, a, m, j, b, n) == hadamard_product(fa, fb), "Hadamard tuple " + std::to_string(tuples));
    ++tuples;
  }
  o.detail = std::to_string(grid) + " binomial grid points, " + std::to_string(tuples) + " Hadamard tuples";
}

void ac9(Outcome& o) {
  std::mt19937 rng(99);
  const RatFun one(Poly(1));
  const RatFun ones = geom(1);
  for (int t = 0; t < 20; ++t) {
    const RatFun a = support::random_proper(rng, 2);
    const RatFun b = support::random_proper(rng, 2);
    const RatFun c = support::random_proper(rng, 2);
    const Rational alpha = make_rational(uniform(rng, -4, 4), uniform(rng, 1, 2));
    const std::string tag = " on triple " + std::to_string(t);
    o.require(binomial_product(a, b) == binomial_product(b, a), "(.) commutative" + tag);
    o.require(binomial_product(binomial_product(a, b), c) == binomial_product(a, binomial_product(b, c)),
              "(.) associative" + tag);
    o.require(binomial_product(a, one) == a, "(.) unit" + tag);
    o.require(binomial_product(geom(alpha), geom(-alpha)) == one, "(.) inverse" + tag);
    o.require(binomial_product(binomial_product(a, geom(alpha)), geom(-alpha)) == a, "(.) cancel" + tag);
  }
  for (int t = 0; t < 20; ++t) {
    const RatFun a = support::random_proper(rng, 2);
    const RatFun b = support::random_proper(rng, 2);
    const RatFun c = support::random_proper(rng, 2);
    const std::string tag = " on triple " + std::to_string(t);
    o.require(hadamard_product(a, b) == hadamard_product(b, a), "* commutative" + tag);
    o.require(hadamard_product(hadamard_product(a, b), c) == hadamard_product(a, hadamard_product(b, c)),
              "* associative" + tag);
    o.require(hadamard_product(a, ones) == a, "* unit" + tag);
  }
  o.detail = "20 triples for each product";
}

void ac10(Outcome& o) {
  std::mt19937 rng(1010);
  int trials = 0;
  int rejected = 0;
  while (trials < 20) {
    const RatFun f = support::random_ratfun(rng, 4);
    if (f.den().degree() < 1 || f.num().degree() < 1) continue;
    const auto d = static_cast<std::size_t>(f.den().degree());
    const auto e = static_cast<std::size_t>(f.num().degree());
    const Series s = expand(f, d + e + 1 + kReconstructionMargin);
    o.require(reconstruct_rational(s, d, e) == f, "round trip of " + to_string(f));
    for (auto [dd, ee] : {std::pair{d - 1, e}, std::pair{d, e - 1}}) {
      try {
        reconstruct_rational(s, dd, ee);
        o.require(false, "bounds (" + std::to_string(dd) + "," + std::to_string(ee) + ") accepted for " + to_string(f));
      } catch (const ReconstructionFailed&) {
        ++rejected;
      }
    }
    ++trials;
  }
  o.detail = std::to_string(trials) + " round trips, " + std::to_string(rejected) + " undersized fits rejected";
}

}  // namespace

int main() {
  const auto pairs = random_pairs();
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"AC1 Fibonacci (.) Pell end to end", ac1},
      {"AC2 Sylvester determinant", ac2},
      {"AC3 identity suite", ac3},
      {"AC4 power sum table", ac4},
      {"AC5 four-way method agreement", [&](Outcome& o) { ac5(o, pairs); }},
      {"AC6 brute-force oracle", [&](Outcome& o) { ac6(o, pairs); }},
      {"AC7 improper inputs", ac7},
      {"AC8 closed forms", ac8},
      {"AC9 algebraic laws", ac9},
      {"AC10 reconstruction round trip", ac10},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const bool ok = o.failure.empty();
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS " : "FAIL ") << name << ": " << (ok ? o.detail : o.failure) << std::endl;
  }
  std::cout << (10 - failed) << "/10 acceptance criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
