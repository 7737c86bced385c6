#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "binconv/ratfun.hpp"

namespace binconv {

/// F_n and L_n for any integer n, using F_{-n} = (-1)^{n-1} F_n and
/// L_{-n} = (-1)^n L_n.
Integer fibonacci(long n);
Integer lucas(long n);

/// sum_n F_{pn+q} x^n = (F_q + (-1)^q F_{p-q} x) / (1 - L_p x + (-1)^p x^2).
RatFun fibonacci_multisection(long p, long q);
/// sum_n L_{pn+q} x^n = (L_q - (-1)^q L_{p-q} x) / (1 - L_p x + (-1)^p x^2).
RatFun lucas_multisection(long p, long q);

/// (s0 + (s1 - s0) x + (s2 - s1 - s0) x^2) / (1 - x - x^2 - x^3): the
/// tribonacci recurrence started from s0, s1, s2.
RatFun tribonacci_gf(const Rational& s0, const Rational& s1, const Rational& s2);

struct NamedGF {
  std::string name;
  std::vector<Rational> params;
  RatFun gf;
};

/// Named generating functions, looked up by name and parameter list.
class Registry {
 public:
  using Builder = std::function<RatFun(std::span<const Rational>)>;

  struct Entry {
    std::size_t min_params = 0;
    std::size_t max_params = 0;
    Builder build;
    std::string summary;
  };

  /// fib, lucas, pell, pell_lucas, trib, trib(s0,s1,s2), perrin, q(a),
  /// jacobsthal, jacobsthal_lucas, r, g(a,b), geom(a), fibsec(p,q),
  /// lucsec(p,q).
  static Registry standard();

  /// Adds or replaces an entry.
  void define(std::string name, Entry entry);
  /// Replaces a parameterless entry by a fixed function.
  void define_constant(std::string name, RatFun gf, std::string summary);

  bool contains(std::string_view name) const;
  /// Throws InvalidInput for unknown names or a wrong parameter count.
  NamedGF get(std::string_view name, std::vector<Rational> params = {}) const;
  RatFun gf(std::string_view name, std::vector<Rational> params = {}) const { return get(name, std::move(params)).gf; }
  const std::map<std::string, Entry, std::less<>>& entries() const { return entries_; }

 private:
  std::map<std::string, Entry, std::less<>> entries_;
};

struct IdentityResult {
  std::string id;    ///< "a" .. "l"
  std::string name;
  std::vector<std::string> params;  ///< the parameter grid that was sampled
  bool passed = false;
  std::size_t checks = 0;           ///< number of individual comparisons made
  std::string witness;              ///< first failing comparison, if any
};

struct SuiteReport {
  std::vector<IdentityResult> results;  ///< ordered by id

  bool all_passed() const;
  std::string text() const;
  std::string json() const;
};

/// Identity ids in report order.
std::vector<std::string> identity_ids();

/// Runs the identity catalog (all ids, or only those listed) against the
/// generating functions in `registry`. Each comparison is made twice: as
/// reduced rational functions and on 40 expanded coefficients; identities
/// stated coefficientwise are also checked on directly computed sequences.
/// Throws InvalidInput for an unknown id in `only`.
SuiteReport run_identity_suite(const Registry& registry = Registry::standard(),
                               std::span<const std::string> only = {});

}  // namespace binconv
