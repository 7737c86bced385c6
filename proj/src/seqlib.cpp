#include "binconv/seqlib.hpp"

#include <algorithm>
#include <future>
#include <json.hpp>
#include <random>
#include <array>
#include <sstream>

#include "binconv/convolve.hpp"
#include "binconv/errors.hpp"

namespace binconv {

// --- scalar sequences ----------------------------------------------------------

namespace {

std::pair<Integer, Integer> fib_pair(unsigned long n) {
  Integer f, g;
  mpz_fib2_ui(f.get_mpz_t(), g.get_mpz_t(), n);
  return {f, g};  // F_n, F_{n-1}
}

}  // namespace

Integer fibonacci(long n) {
  if (n >= 0) return fib_pair(static_cast<unsigned long>(n)).first;
  const Integer f = fib_pair(static_cast<unsigned long>(-n)).first;
  return (-n) % 2 == 0 ? Integer(-f) : f;
}

Integer lucas(long n) {
  if (n >= 0) {
    Integer l;
    mpz_lucnum_ui(l.get_mpz_t(), static_cast<unsigned long>(n));
    return l;
  }
  Integer l;
  mpz_lucnum_ui(l.get_mpz_t(), static_cast<unsigned long>(-n));
  return (-n) % 2 == 0 ? l : Integer(-l);
}

namespace {

Rational sign_pow(long e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

Poly multisection_den(long p) { return Poly{Rational(1), Rational(-lucas(p)), sign_pow(p)}; }

}  // namespace

RatFun fibonacci_multisection(long p, long q) {
  const Poly num{Rational(fibonacci(q)), sign_pow(q) * Rational(fibonacci(p - q))};
  return RatFun::make(num, multisection_den(p));
}

RatFun lucas_multisection(long p, long q) {
  const Poly num{Rational(lucas(q)), -sign_pow(q) * Rational(lucas(p - q))};
  return RatFun::make(num, multisection_den(p));
}

RatFun tribonacci_gf(const Rational& s0, const Rational& s1, const Rational& s2) {
  return RatFun::make(Poly{s0, s1 - s0, s2 - s1 - s0}, Poly::from_ints({1, -1, -1, -1}));
}

// --- registry --------------------------------------------------------------------

namespace {

RatFun ints(std::initializer_list<long> num, std::initializer_list<long> den) {
  return RatFun::make(Poly::from_ints(num), Poly::from_ints(den));
}

long as_long(const Rational& r, std::string_view what) {
  if (r.get_den() != 1 || !r.get_num().fits_slong_p()) {
    throw InvalidInput(std::string(what) + " needs integer parameters");
  }
  return r.get_num().get_si();
}

Registry::Entry constant(RatFun gf, std::string summary) {
  return {0, 0, [gf](std::span<const Rational>) { return gf; }, std::move(summary)};
}

}  // namespace

Registry Registry::standard() {
  Registry r;
  r.define("fib", constant(ints({0, 1}, {1, -1, -1}), "Fibonacci x/(1-x-x^2)"));
  r.define("lucas", constant(ints({2, -1}, {1, -1, -1}), "Lucas (2-x)/(1-x-x^2)"));
  r.define("pell", constant(ints({0, 1}, {1, -2, -1}), "Pell x/(1-2x-x^2)"));
  r.define("pell_lucas", constant(ints({2, -2}, {1, -2, -1}), "companion Pell (2-2x)/(1-2x-x^2)"));
  r.define("perrin", constant(ints({3, 0, -1}, {1, 0, -1, -1}), "Perrin (3-x^2)/(1-x^2-x^3)"));
  r.define("jacobsthal", constant(ints({0, 1}, {1, -1, -2}), "Jacobsthal x/(1-x-2x^2)"));
  r.define("jacobsthal_lucas", constant(ints({2, -1}, {1, -1, -2}), "Jacobsthal-Lucas (2-x)/(1-x-2x^2)"));
  r.define("r", constant(ints({1, 0, 0, -2}, {1, 0, 0, -8, 4}), "quartic (1-2x^3)/(1-8x^3+4x^4)"));
  r.define("trib", {0, 3,
                    [](std::span<const Rational> p) {
                      if (p.empty()) return tribonacci_gf(0, 1, 1);
                      if (p.size() != 3) throw InvalidInput("trib takes 0 or 3 parameters");
                      return tribonacci_gf(p[0], p[1], p[2]);
                    },
                    "tribonacci x/(1-x-x^2-x^3); trib(s0,s1,s2) starts from s0, s1, s2"});
  r.define("q", {1, 1,
                 [](std::span<const Rational> p) {
                   return RatFun::make(Poly{Rational(3), Rational(0), Rational(-1)},
                                       Poly{Rational(1), Rational(0), Rational(-1), Rational(-p[0])});
                 },
                 "generalised Perrin (3-x^2)/(1-x^2-a x^3)"});
  r.define("g", {2, 2,
                 [](std::span<const Rational> p) {
                   return RatFun::make(Poly{Rational(2), Rational(-p[0])},
                                       Poly{Rational(1), Rational(-p[0]), Rational(-p[1])});
                 },
                 "Lucas-type (2-ax)/(1-ax-bx^2)"});
  r.define("geom", {1, 1,
                    [](std::span<const Rational> p) {
                      return RatFun::make(Poly(1), Poly{Rational(1), Rational(-p[0])});
                    },
                    "geometric 1/(1-ax)"});
  r.define("fibsec", {2, 2,
                      [](std::span<const Rational> p) {
                        return fibonacci_multisection(as_long(p[0], "fibsec"), as_long(p[1], "fibsec"));
                      },
                      "sum F_{pn+q} x^n"});
  r.define("lucsec", {2, 2,
                      [](std::span<const Rational> p) {
                        return lucas_multisection(as_long(p[0], "lucsec"), as_long(p[1], "lucsec"));
                      },
                      "sum L_{pn+q} x^n"});
  return r;
}

void Registry::define(std::string name, Entry entry) { entries_[std::move(name)] = std::move(entry); }

void Registry::define_constant(std::string name, RatFun gf, std::string summary) {
  define(std::move(name), constant(std::move(gf), std::move(summary)));
}

bool Registry::contains(std::string_view name) const { return entries_.find(name) != entries_.end(); }

NamedGF Registry::get(std::string_view name, std::vector<Rational> params) const {
  const auto it = entries_.find(name);
  if (it == entries_.end()) throw InvalidInput("unknown sequence '" + std::string(name) + "'");
  const Entry& e = it->second;
  if (params.size() < e.min_params || params.size() > e.max_params) {
    throw InvalidInput("sequence '" + std::string(name) + "' takes " + std::to_string(e.min_params) +
                       (e.max_params != e.min_params ? " to " + std::to_string(e.max_params) : "") +
                       " parameters, got " + std::to_string(params.size()));
  }
  RatFun gf = e.build(params);
  return {std::string(name), std::move(params), std::move(gf)};
}

// --- identity suite --------------------------------------------------------------

namespace {

constexpr std::size_t kCoeffs = 40;

class Checker {
 public:
  explicit Checker(IdentityResult& r) : r_(r) {}

  void same(const std::string& label, const RatFun& lhs, const RatFun& rhs) {
    ++r_.checks;
    if (lhs != rhs) fail(label + ": " + to_string(lhs) + " != " + to_string(rhs));
    ++r_.checks;
    const Series a = expand(lhs, kCoeffs);
    const Series b = expand(rhs, kCoeffs);
    for (std::size_t n = 0; n < kCoeffs; ++n) {
      if (a[n] != b[n]) {
        fail(label + ": coefficient " + std::to_string(n) + " is " + a[n].get_str() + " vs " + b[n].get_str());
        break;
      }
    }
  }

  void sequence(const std::string& label, const std::function<Rational(std::size_t)>& lhs,
                const std::function<Rational(std::size_t)>& rhs) {
    ++r_.checks;
    for (std::size_t n = 0; n < kCoeffs; ++n) {
      const Rational a = lhs(n);
      const Rational b = rhs(n);
      if (a != b) {
        fail(label + ": term " + std::to_string(n) + " is " + a.get_str() + " vs " + b.get_str());
        return;
      }
    }
  }

  void expect(const std::string& label, bool ok) {
    ++r_.checks;
    if (!ok) fail(label);
  }

  void fail(const std::string& witness) {
    if (r_.witness.empty()) r_.witness = witness;
  }

 private:
  IdentityResult& r_;
};

// Terms of a sequence given by its recurrence and initial values, computed
// directly (no generating functions involved).
std::vector<Rational> recur(std::vector<Rational> init, const std::vector<Rational>& coeffs, std::size_t count) {
  std::vector<Rational> s = std::move(init);
  while (s.size() < count) {
    Rational next = 0;
    for (std::size_t j = 0; j < coeffs.size(); ++j) next += coeffs[j] * s[s.size() - 1 - j];
    s.push_back(next);
  }
  s.resize(count);
  return s;
}

Rational binomial_sum(std::size_t n, const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational acc = 0;
  for (std::size_t k = 0; k <= n; ++k) acc += Rational(binomial(n, k)) * a[k] * b[n - k];
  return acc;
}

Rational ipow(long base, std::size_t e) { return pow(Rational(base), e); }

RatFun geom(const Rational& a) { return RatFun::make(Poly(1), Poly{Rational(1), Rational(-a)}); }

struct Identity {
  std::string id;
  std::string name;
  std::function<void(Checker&, IdentityResult&, const Registry&)> run;
};

std::string str(long v) { return std::to_string(v); }

std::vector<std::array<long, 4>> random_tuples(unsigned seed, std::size_t count, bool nonzero) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> dist(-5, 5);
  std::vector<std::array<long, 4>> out;
  while (out.size() < count) {
    std::array<long, 4> t{dist(rng), dist(rng), dist(rng), dist(rng)};
    if (nonzero && std::count(t.begin(), t.end(), 0L) > 0) continue;
    out.push_back(t);
  }
  return out;
}

const std::vector<Identity>& catalog() {
  static const std::vector<Identity> kCatalog = {
      {"a", "Church-Bicknell: sum C(n,k) F_k F_{n-k} = (2^n L_n - 2)/5",
       [](Checker& c, IdentityResult& r, const Registry& reg) {
         r.params = {"n = 0..39"};
         const RatFun fib = reg.gf("fib");
         const RatFun lhs = binomial_product(fib, fib);
         c.same("F (.) F", lhs, Rational(1, 5) * (compose_scale(reg.gf("lucas"), 2) - 2 * geom(1)));
         const auto f = recur({0, 1}, {1, 1}, kCoeffs);
         const auto l = recur({2, 1}, {1, 1}, kCoeffs);
         c.sequence("binomial convolution of F with itself", [&](std::size_t n) -> Rational { return binomial_sum(n, f, f); },
                    [&](std::size_t n) -> Rational { return (ipow(2, n) * l[n] - 2) / 5; });
       }},
      {"b", "generalised Church-Bicknell with a = F_{p-1}, b = F_{p+1}",
       [](Checker& c, IdentityResult& r, const Registry& reg) {
         const RatFun fib = reg.gf("fib");
         const RatFun lucas_gf = reg.gf("lucas");
         for (long p = -3; p <= 5; ++p) {
           r.params.push_back("p=" + str(p));
           const Rational a(fibonacci(p - 1));
           const Rational b(fibonacci(p + 1));
           const Rational lp(lucas(p));
           const RatFun lhs = 5 * binomial_product(compose_scale(fib, a), compose_scale(fib, b));
           c.same("p=" + str(p), lhs, compose_scale(lucas_gf, lp) - lucas_multisection(p, 0));
           const auto f = recur({0, 1}, {1, 1}, kCoeffs);
           const auto l = recur({2, 1}, {1, 1}, kCoeffs);
           std::vector<Rational> fa(kCoeffs), fb(kCoeffs);
           for (std::size_t k = 0; k < kCoeffs; ++k) {
             fa[k] = pow(a, k) * f[k];
             fb[k] = pow(b, k) * f[k];
           }
           c.sequence("p=" + str(p) + " coefficientwise", [&](std::size_t n) -> Rational { return binomial_sum(n, fa, fb); },
                      [&](std::size_t n) -> Rational {
                        return (pow(lp, n) * l[n] - Rational(lucas(p * static_cast<long>(n)))) / 5;
                      });
         }
         // The two-parameter form the choice of a, b comes from.
         for (auto [a, b] : std::vector<std::pair<long, long>>{{1, 2}, {2, 3}, {-1, 3}, {3, 3}}) {
           r.params.push_back("(a,b)=(" + str(a) + "," + str(b) + ")");
           const long s = a + b;
           const RatFun lhs = 5 * binomial_product(compose_scale(fib, a), compose_scale(fib, b));
           const RatFun rhs = ints({2, -s}, {1, -s, -s * s}) - ints({2, -s}, {1, -s, -(a * a - 3 * a * b + b * b)});
           c.same("5 f(ax) (.) f(bx) at a=" + str(a) + ", b=" + str(b), lhs, rhs);
         }
       }},
      {"c", "sum C(n,2k) F_{n-2k} = ((-1)^{n-1} F_n + F_{2n})/2",
       [](Checker& c, IdentityResult& r, const Registry& reg) {
         r.params = {"n = 0..39"};
         const RatFun fib = reg.gf("fib");
         const RatFun lhs = binomial_product(fib, ints({1}, {1, 0, -1}));
         c.same("display", lhs, ints({0, 1, -1}, {1, -2, -3, 4, -1}));
         c.same("split", lhs, Rational(1, 2) * (ints({0, 1}, {1, 1, -1}) + ints({0, 1}, {1, -3, 1})));
         c.same("multisection form", lhs,
                Rational(1, 2) * (-compose_scale(fib, -1) + fibonacci_multisection(2, 0)));
         const auto f = recur({0, 1}, {1, 1}, 2 * kCoeffs);
         c.sequence(
             "coefficientwise",
             [&](std::size_t n) -> Rational {
               Rational acc = 0;
               for (std::size_t k = 0; 2 * k <= n; ++k) acc += Rational(binomial(n, 2 * k)) * f[n - 2 * k];
               return acc;
             },
             [&](std::size_t n) -> Rational { return (-ipow(-1, n) * f[n] + f[2 * n]) / 2; });
       }},
      {"d", "10 sum C(n,2k) 5^k F_{n-2k}^2 = L_{2n} + (3^n + (-2)^{n+1}) L_n",
       [](Checker& c, IdentityResult& r, const Registry& reg) {
         r.params = {"n = 0..39"};
         const RatFun fib = reg.gf("fib");
         const RatFun lucas_gf = reg.gf("lucas");
         const RatFun squares = hadamard_product(fib, fib);
         const RatFun lhs = binomial_product(squares, ints({10}, {1, 0, -5}));
         c.same("display", lhs, ints({0, 10, -30, 0, -20, -60}, {1, -4, -15, 50, 35, -114, 36}));
         c.same("split", lhs,
                ints({2, -3}, {1, -3, 1}) - ints({4, 4}, {1, 2, -4}) + ints({2, -3}, {1, -3, -9}));
         c.same("Lucas form", lhs,
                lucas_multisection(2, 0) + Rational(-2) * compose_scale(lucas_gf, -2) + compose_scale(lucas_gf, 3));
         const auto f = recur({0, 1}, {1, 1}, kCoeffs);
         const auto l = recur({2, 1}, {1, 1}, 2 * kCoeffs);
         c.sequence(
             "coefficientwise",
             [&](std::size_t n) -> Rational {
               Rational acc = 0;
               for (std::size_t k = 0; 2 * k <= n; ++k) {
                 acc += Rational(binomial(n, 2 * k)) * ipow(5, k) * f[n - 2 * k] * f[n - 2 * k];
               }
               return 10 * acc;
             },
             [&](std::size_t n) -> Rational { return l[2 * n] + (ipow(3, n) + ipow(-2, n + 1)) * l[n]; });
       }},
      {"e", "g (.) g = 2/(1-ax) + g(2x) for g = (2-ax)/(1-ax-bx^2)",
       [](Checker& c, IdentityResult& r, const Registry& reg) {
         std::vector<std::pair<long, long>> grid{{1, 1}, {1, 2}, {2, 1}};
         for (const auto& t : random_tuples(51, 5, true)) grid.emplace_back(t[0], t[1]);
         for (auto [a, b] : grid) {
           const std::string tag = "(a,b)=(" + str(a) + "," + str(b) + ")";
           r.params.push_back(tag);
           const RatFun g = reg.gf("g", {a, b});
           c.same(tag, binomial_product(g, g), 2 * geom(a) + compose_scale(g, 2));
           const auto seq = recur({2, a}, {a, b}, kCoeffs);
           c.sequence(tag + " coefficientwise", [&](std::size_t n) -> Rational { return binomial_sum(n, seq, seq); },
                      [&](std::size_t n) -> Rational { return 2 * ipow(a, n) + ipow(2, n) * seq[n]; });
         }
       }},
      {"f", "Komatsu: tribonacci binomial self-convolution",
       [](Checker& c, IdentityResult& r, const Registry& reg) {
         r.params = {"T^(2,3,10)", "T^(-1,2,7)", "T^(1,-2,-7)"};
         const RatFun t = reg.gf("trib");
         const RatFun lhs = binomial_product(t, t);
         c.same("display", lhs, ints({0, 0, 2, -2, -2, -4}, {1, -4, 0, 2, 12, -8, -16}));
         const RatFun first = Rational(1, 11) * ints({1, 1, 10}, {1, -2, -4, -8});
         const RatFun second = Rational(1, 11) * ints({1, 1, -8}, {1, -2, 0, 2});
         c.same("two-term split", lhs, first - second);
         c.same("first term", first, Rational(1, 22) * compose_scale(reg.gf("trib", {2, 3, 10}), 2));
         const RatFun inner = ints({1, 3, -6}, {1, 1, -1, 1});
         c.same("second term", ints({1, 1, -8}, {1, -2, 0, 2}), binomial_product(geom(1), inner));
         c.same("inner as T^(1,-2,-7)(-x)", inner, compose_scale(reg.gf("trib", {1, -2, -7}), -1));
         c.same("inner as -T^(-1,2,7)(-x)", inner, -compose_scale(reg.gf("trib", {-1, 2, 7}), -1));
         c.same("Komatsu formula", lhs,
                Rational(1, 22) * (compose_scale(reg.gf("trib", {2, 3, 10}), 2) +
                                   2 * binomial_product(geom(1), compose_scale(reg.gf("trib", {-1, 2, 7}), -1))));
         const KomatsuSplit split = komatsu_decompose(t, t);
         c.expect("cubic split numerator u = (1+x+10x^2)/11",
                  split.u == Poly{Rational(1, 11), Rational(1, 11), Rational(10, 11)});
         c.same("cubic split reassembles", komatsu_reassemble(split, t.den()), lhs);
         const Rational s0[] = {0, 1, 1};
         const auto seq = [](Rational a, Rational b, Rational d) { return recur({a, b, d}, {1, 1, 1}, kCoeffs); };
         const auto tr = seq(s0[0], s0[1], s0[2]);
         const auto t2310 = seq(2, 3, 10);
         const auto tm127 = seq(-1, 2, 7);
         c.sequence(
             "coefficientwise", [&](std::size_t n) -> Rational { return binomial_sum(n, tr, tr); },
             [&](std::size_t n) -> Rational {
               Rational alt = 0;
               for (std::size_t k = 0; k <= n; ++k) alt += Rational(binomial(n, k)) * ipow(-1, k) * tm127[k];
               return (ipow(2, n) * t2310[n] + 2 * alt) / 22;
             });
       }},
      {"g", "Perrin: P (.) P = P(2x) + 2P(-x), and Q (.) Q = Q(2x) + 2Q(-x)",
       [](Checker& c, IdentityResult& r, const Registry& reg) {
         const RatFun p = reg.gf("perrin");
         const RatFun lhs = binomial_product(p, p);
         r.params.push_back("Perrin");
         c.same("display", lhs, 3 * ints({3, 0, -11, -15, 4, 4}, {1, 0, -5, -7, 4, 4, -8}));
         c.same("split", lhs, ints({3, 0, -4}, {1, 0, -4, -8}) + ints({6, 0, -2}, {1, 0, -1, 1}));
         c.same("P(2x) + 2P(-x)", lhs, compose_scale(p, 2) + 2 * compose_scale(p, -1));
         const KomatsuSplit split = komatsu_decompose(p, p);
         c.same("cubic split reassembles", komatsu_reassemble(split, p.den()),
                compose_scale(p, 2) + 2 * compose_scale(p, -1));
         const auto seq = recur({3, 0, 2}, {0, 1, 1}, kCoeffs);
         c.sequence("coefficientwise", [&](std::size_t n) -> Rational { return binomial_sum(n, seq, seq); },
                    [&](std::size_t n) -> Rational { return (ipow(2, n) + 2 * ipow(-1, n)) * seq[n]; });
         for (long a : {-2L, -1L, 1L, 2L, 3L}) {
           r.params.push_back("Q a=" + str(a));
           const RatFun q = reg.gf("q", {a});
           c.same("Q a=" + str(a), binomial_product(q, q), compose_scale(q, 2) + 2 * compose_scale(q, -1));
         }
       }},
      {"h", "Jacobsthal: 3 J (.) J = J(2x) + 2J(-x)",
       [](Checker& c, IdentityResult& r, const Registry& reg) {
         r.params = {"n = 0..39"};
         const RatFun j = reg.gf("jacobsthal");
         c.same("3 J (.) J", 3 * binomial_product(j, j), compose_scale(j, 2) + 2 * compose_scale(j, -1));
         const auto seq = recur({0, 1}, {1, 2}, kCoeffs);
         c.sequence("coefficientwise", [&](std::size_t n) -> Rational { return 3 * binomial_sum(n, seq, seq); },
                    [&](std::size_t n) -> Rational { return (ipow(2, n) + 2 * ipow(-1, n)) * seq[n]; });
       }},
      {"i", "quartic: R (.) R = (R(2x) + P(4x^2))/4",
       [](Checker& c, IdentityResult& r, const Registry& reg) {
         r.params = {"R = (1-2x^3)/(1-8x^3+4x^4)"};
         const RatFun rr = reg.gf("r");
         c.same("R (.) R", binomial_product(rr, rr),
                Rational(1, 4) * (compose_scale(rr, 2) + compose_monomial(reg.gf("perrin"), 4, 2)));
       }},
      {"j", "Hadamard product of two second-order sequences",
       [](Checker& c, IdentityResult& r, const Registry& reg) {
         c.same("Fibonacci * Pell", hadamard_product(reg.gf("fib"), reg.gf("pell")),
                ints({0, 1, 0, -1}, {1, -2, -7, -2, 1}));
         for (const auto& t : random_tuples(97, 10, false)) {
           const auto [a, b, cc, d] = t;
           const std::string tag = "(a,b,c,d)=(" + str(a) + "," + str(b) + "," + str(cc) + "," + str(d) + ")";
           r.params.push_back(tag);
           const RatFun lhs = hadamard_product(ints({0, 1}, {1, -a, -b}), ints({0, 1}, {1, -cc, -d}));
           const Poly den{Rational(1), Rational(-a * cc), Rational(-(a * a * d + b * cc * cc + 2 * b * d)),
                          Rational(-a * b * cc * d), Rational(b * b * d * d)};
           c.same(tag, lhs, RatFun::make(Poly{Rational(0), Rational(1), Rational(0), Rational(-b * d)}, den));
           if (b != 0 && d != 0) {
             c.expect(tag + " resultant denominator",
                      hadamard_denominator(Poly::from_ints({1, -a, -b}), Poly::from_ints({1, -cc, -d})) == den);
           }
           const auto sa = recur({0, 1}, {a, b}, kCoeffs);
           const auto sb = recur({0, 1}, {cc, d}, kCoeffs);
           const Series rhs = expand(lhs, kCoeffs);
           c.sequence(tag + " termwise", [&](std::size_t n) -> Rational { return sa[n] * sb[n]; },
                      [&](std::size_t n) -> Rational { return rhs[n]; });
         }
       }},
      {"k", "squares of Fibonacci numbers",
       [](Checker& c, IdentityResult& r, const Registry& reg) {
         r.params = {"n = 0..39"};
         const RatFun fib = reg.gf("fib");
         const RatFun sq = hadamard_product(fib, fib);
         c.same("F * F", sq, ints({0, 1, -1}, {1, -2, -2, 1}));
         c.same("unreduced form", sq, ints({0, 1, 0, -1}, {1, -1, -4, -1, 1}));
         const auto f = recur({0, 1}, {1, 1}, kCoeffs);
         const Series s = expand(sq, kCoeffs);
         c.sequence("termwise", [&](std::size_t n) -> Rational { return f[n] * f[n]; }, [&](std::size_t n) -> Rational { return s[n]; });
       }},
      {"l", "worked binomial products",
       [](Checker& c, IdentityResult& r, const Registry& reg) {
         r.params = {"Fibonacci", "Fibonacci/Pell", "distinct linear factors", "x^3/(1-x)", "double poles"};
         const RatFun fib = reg.gf("fib");
         c.same("F (.) F", binomial_product(fib, fib), ints({0, 0, 2}, {1, -3, -2, 4}));
         c.same("F (.) F partial fractions", binomial_product(fib, fib),
                Rational(1, 5) * (ints({2, -2}, {1, -2, -4}) - 2 * geom(1)));
         c.same("F (.) Pell", binomial_product(fib, reg.gf("pell")),
                ints({0, 0, 2, -3}, {1, -6, 7, 6, -9}));
         const Poly one_minus_x = Poly::from_ints({1, -1});
         const Poly one_minus_2x = Poly::from_ints({1, -2});
         const auto lin = [](long a) { return Poly::from_ints({1, -a}); };
         c.same("x/((1-x)(1-2x)) (.) x/((1-3x)(1-5x))",
                binomial_product(RatFun::make(Poly::x(), lin(1) * lin(2)), RatFun::make(Poly::x(), lin(3) * lin(5))),
                RatFun::make(Poly::from_ints({0, 0, 2, -11}), lin(4) * lin(5) * lin(6) * lin(7)));
         c.same("x^3/(1-x) (.) 1/(1-2x)",
                binomial_product(RatFun::make(Poly::monomial(1, 3), one_minus_x), geom(2)),
                RatFun::make(Poly::monomial(1, 3), pow(one_minus_2x, 3) * lin(3)));
         c.same("x^2/(1-x)^2 (.) x^2/(1-2x)^2",
                binomial_product(RatFun::make(Poly::monomial(1, 2), pow(one_minus_x, 2)),
                                 RatFun::make(Poly::monomial(1, 2), pow(one_minus_2x, 2))),
                RatFun::make(Poly::from_ints({0, 0, 0, 0, 6, -30, 49, -27}),
                             pow(one_minus_x, 2) * pow(one_minus_2x, 2) * pow(lin(3), 3)));
         for (auto [j, k] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {2, 3}}) {
           const RatFun lhs = binomial_product(RatFun::make(Poly::monomial(1, j), pow(lin(1), j + 1)),
                                               RatFun::make(Poly::monomial(1, k), pow(lin(-1), k + 1)));
           c.same("improper product j=" + std::to_string(j) + ", k=" + std::to_string(k), lhs,
                  RatFun(Poly::monomial(Rational(binomial(j + k, j)), j + k)));
         }
       }},
  };
  return kCatalog;
}

IdentityResult run_one(const Identity& identity, const Registry& registry) {
  IdentityResult r;
  r.id = identity.id;
  r.name = identity.name;
  Checker c(r);
  try {
    identity.run(c, r, registry);
  } catch (const std::exception& e) {
    c.fail(std::string("exception: ") + e.what());
  }
  r.passed = r.witness.empty();
  return r;
}

}  // namespace

std::vector<std::string> identity_ids() {
  std::vector<std::string> ids;
  for (const auto& i : catalog()) ids.push_back(i.id);
  return ids;
}

SuiteReport run_identity_suite(const Registry& registry, std::span<const std::string> only) {
  const auto& all = catalog();
  for (const auto& id : only) {
    if (std::none_of(all.begin(), all.end(), [&](const Identity& i) { return i.id == id; })) {
      throw InvalidInput("unknown identity id '" + id + "'");
    }
  }
  std::vector<std::future<IdentityResult>> jobs;
  for (const auto& identity : all) {
    if (!only.empty() && std::find(only.begin(), only.end(), identity.id) == only.end()) continue;
    jobs.push_back(std::async(std::launch::async, [&identity, &registry] { return run_one(identity, registry); }));
  }
  SuiteReport report;
  for (auto& j : jobs) report.results.push_back(j.get());
  return report;
}

bool SuiteReport::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const IdentityResult& r) { return r.passed; });
}

std::string SuiteReport::text() const {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& r : results) {
    out << (r.passed ? "PASS" : "FAIL") << "  (" << r.id << ") " << r.name << "  [" << r.checks << " checks]\n";
    if (!r.params.empty()) {
      out << "        params:";
      for (const auto& p : r.params) out << " " << p;
      out << "\n";
    }
    if (!r.passed) out << "        witness: " << r.witness << "\n";
    passed += r.passed ? 1 : 0;
  }
  out << passed << "/" << results.size() << " identities verified\n";
  return out.str();
}

std::string SuiteReport::json() const {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : results) {
    nlohmann::json rec{{"id", r.id},           {"name", r.name},     {"params", r.params},
                       {"status", r.passed ? "pass" : "fail"}, {"checks", r.checks}};
    if (!r.passed) rec["witness"] = r.witness;
    records.push_back(std::move(rec));
  }
  return nlohmann::json{{"identities", records}, {"all_passed", all_passed()}}.dump(2);
}

}  // namespace binconv
