#include "binconv/poly.hpp"

#include <algorithm>
#include <sstream>

#include "binconv/errors.hpp"

namespace binconv {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly::Poly(const Rational& c) {
  if (!binconv::is_zero(c)) coeffs_.push_back(c);
}

Poly Poly::monomial(const Rational& c, std::size_t k) {
  if (binconv::is_zero(c)) return {};
  std::vector<Rational> coeffs(k + 1);
  coeffs[k] = c;
  return Poly(std::move(coeffs));
}

Poly Poly::from_ints(std::initializer_list<long> coeffs) {
  std::vector<Rational> out;
  out.reserve(coeffs.size());
  for (long c : coeffs) out.emplace_back(c);
  return Poly(std::move(out));
}

void Poly::trim() {
  while (!coeffs_.empty() && binconv::is_zero(coeffs_.back())) coeffs_.pop_back();
}

Rational Poly::operator()(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (binconv::is_zero(c)) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }
Poly operator-(const Poly& a) { return a * Rational(-1); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Rational& ai = a.coeffs()[i];
    if (is_zero(ai)) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += ai * b.coeffs()[j];
  }
  return Poly(std::move(out));
}

Poly operator*(Poly a, const Rational& c) { return a *= c; }
Poly operator*(const Rational& c, Poly a) { return a *= c; }

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rational> rem = a.coeffs();
  const std::size_t db = b.size() - 1;
  std::vector<Rational> quot(rem.size() - db);
  const Rational lead = b.leading();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational q = rem[k + db] / lead;
    quot[k] = q;
    if (is_zero(q)) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b.coeffs()[j];
  }
  rem.resize(db);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) {
    throw DivisibilityError("(" + to_string(b) + ") does not divide (" + to_string(a) + ")");
  }
  return q;
}

Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p * Rational(1 / p.leading());
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw InvalidInput("gcd(0, 0) is undefined");
  Poly u = a;
  Poly v = b;
  while (!v.is_zero()) {
    Poly r = divmod(u, v).second;
    u = std::move(v);
    // Keeping the remainder monic stops coefficient heights from drifting.
    v = monic(r);
  }
  return monic(u);
}

Poly primitive_part(const Poly& p) {
  if (p.is_zero()) return p;
  Integer den_lcm = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer num_gcd = 0;
  for (const auto& c : p.coeffs()) {
    Integer scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational factor = make_rational(den_lcm, num_gcd);
  if (sgn(p.leading()) < 0) factor = -factor;
  return p * factor;
}

Poly derivative(const Poly& p) {
  if (p.size() <= 1) return {};
  std::vector<Rational> out(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) out[i - 1] = p.coeffs()[i] * static_cast<long>(i);
  return Poly(std::move(out));
}

Poly pow(const Poly& p, std::size_t exp) {
  Poly result = 1;
  Poly base = p;
  while (exp > 0) {
    if (exp & 1U) result *= base;
    exp >>= 1U;
    if (exp > 0) base *= base;
  }
  return result;
}

Poly truncate(const Poly& p, std::size_t n) {
  if (p.size() <= n) return p;
  return Poly(std::vector<Rational>(p.coeffs().begin(), p.coeffs().begin() + static_cast<std::ptrdiff_t>(n)));
}

Poly scale_argument(const Poly& p, const Rational& c) {
  std::vector<Rational> out = p.coeffs();
  Rational factor = 1;
  for (auto& a : out) {
    a *= factor;
    factor *= c;
  }
  return Poly(std::move(out));
}

Poly compose(const Poly& p, const Poly& q) {
  Poly acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * q + Poly(*it);
  return acc;
}

namespace {

std::string monomial_text(const std::string& var, std::size_t k) {
  if (k == 0) return "";
  if (k == 1) return var;
  return var + "^" + std::to_string(k);
}

}  // namespace

std::string to_string(const Poly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const Rational& c = p.coeffs()[k];
    if (is_zero(c)) continue;
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const std::string mono = monomial_text(var, k);
    if (mono.empty()) {
      out << mag.get_str();
    } else if (mag == 1) {
      out << mono;
    } else {
      out << mag.get_str() << "*" << mono;
    }
  }
  return out.str();
}

}  // namespace binconv
