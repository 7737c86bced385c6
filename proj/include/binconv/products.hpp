#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "binconv/convolve.hpp"

namespace binconv {

inline constexpr std::array<Method, 4> kAllMethods = {Method::kResultant, Method::kSymfun, Method::kPfrac,
                                                      Method::kReconstruct};

std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);
std::string_view kind_name(ProductKind k);

/// a (.) b or a * b through the chosen method:
///   resultant   - resultant denominator, numerator from the series
///   symfun      - power-sum denominator, numerator from the series
///   pfrac       - constant term of a two-term partial-fraction split
///   reconstruct - brute-force coefficients fitted by reconstruct_rational
///                 within the resultant plan's degree bounds
RatFun product(const RatFun& a, const RatFun& b, ProductKind kind, Method method);

struct MethodResult {
  Method method;
  std::optional<RatFun> value;
  std::string error;  ///< set when the method threw
};

struct CrossCheckReport {
  std::vector<MethodResult> results;  ///< in kAllMethods order
  bool agree = false;                 ///< every method succeeded with the same value
};

/// Runs every method (concurrently) and compares the reduced results.
CrossCheckReport cross_check(const RatFun& a, const RatFun& b, ProductKind kind);

}  // namespace binconv
