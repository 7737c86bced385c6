#include "binconv/rational.hpp"

#include <cctype>

#include "binconv/errors.hpp"

namespace binconv {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidInput("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw InvalidInput("malformed rational '" + std::string(whole) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw InvalidInput("malformed rational '" + std::string(whole) + "'");
    }
  }
  Integer value(std::string(text.substr(i)), 10);
  return negative ? Integer(-value) : value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view body = trim(text);
  const auto slash = body.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(body, text));
  const Integer num = parse_integer(trim(body.substr(0, slash)), text);
  const Integer den = parse_integer(trim(body.substr(slash + 1)), text);
  return make_rational(num, den);
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational pow(const Rational& base, std::size_t exp) {
  Rational result = 1;
  Rational b = base;
  while (exp > 0) {
    if (exp & 1U) result *= b;
    exp >>= 1U;
    if (exp > 0) b *= b;
  }
  return result;
}

const std::vector<Integer>& PascalTriangle::row(std::size_t n) {
  if (rows_.empty()) rows_.push_back({Integer(1)});
  while (rows_.size() <= n) {
    const auto& prev = rows_.back();
    std::vector<Integer> next(prev.size() + 1);
    next.front() = 1;
    next.back() = 1;
    for (std::size_t k = 1; k + 1 < next.size(); ++k) next[k] = prev[k - 1] + prev[k];
    rows_.push_back(std::move(next));
  }
  return rows_[n];
}

Integer binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  // Multiplicative form keeps single lookups cheap; the convolution engines
  // use PascalTriangle rows directly.
  Integer result = 1;
  if (k > n - k) k = n - k;
  for (std::size_t i = 1; i <= k; ++i) {
    result *= static_cast<unsigned long>(n - k + i);
    result /= static_cast<unsigned long>(i);
  }
  return result;
}

}  // namespace binconv
