#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace binconv {

/// Exact rational scalar. GMP keeps it canonical (reduced, positive
/// denominator, zero as 0/1) as long as it is built through the helpers
/// below or through mpq arithmetic.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den = 1);

/// Parses "p/q" or an integer, with optional sign and surrounding blanks.
/// Throws InvalidInput on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

Rational pow(const Rational& base, std::size_t exp);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// Row n of Pascal's triangle, grown from row 0 by the additive recurrence.
class PascalTriangle {
 public:
  const std::vector<Integer>& row(std::size_t n);
  const Integer& operator()(std::size_t n, std::size_t k) { return row(n).at(k); }

 private:
  std::vector<std::vector<Integer>> rows_;
};

/// C(n, k) with C(n, k) = 0 outside 0 <= k <= n.
Integer binomial(std::size_t n, std::size_t k);

}  // namespace binconv
