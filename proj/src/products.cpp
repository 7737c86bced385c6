#include "binconv/products.hpp"

#include <future>

#include "binconv/errors.hpp"
#include "binconv/pfrac.hpp"

namespace binconv {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::kResultant:
      return "resultant";
    case Method::kSymfun:
      return "symfun";
    case Method::kPfrac:
      return "pfrac";
    case Method::kReconstruct:
      return "reconstruct";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : kAllMethods) {
    if (method_name(m) == name) return m;
  }
  return std::nullopt;
}

std::string_view kind_name(ProductKind k) { return k == ProductKind::kBinomial ? "binomial" : "hadamard"; }

namespace {

RatFun via_reconstruction(const RatFun& a, const RatFun& b, ProductKind kind) {
  if (a.is_zero() || b.is_zero()) return {};
  const ProductPlan plan = plan_product(a, b, kind);
  const auto den_deg = static_cast<std::size_t>(plan.den_bound.degree());
  const std::size_t num_deg = plan.num_terms == 0 ? 0 : plan.num_terms - 1;
  const std::size_t order = den_deg + num_deg + 1 + kReconstructionMargin;
  const Series sa = expand(a, order);
  const Series sb = expand(b, order);
  const Series s = kind == ProductKind::kBinomial ? binomial_convolve(sa, sb) : termwise_product(sa, sb);
  return reconstruct_rational(s, den_deg, num_deg);
}

}  // namespace

RatFun product(const RatFun& a, const RatFun& b, ProductKind kind, Method method) {
  switch (method) {
    case Method::kResultant:
      return kind == ProductKind::kBinomial ? binomial_product(a, b) : hadamard_product(a, b);
    case Method::kSymfun:
      if (a.is_zero() || b.is_zero()) return {};
      return product_from_plan(a, b, kind, plan_product(a, b, kind, Method::kSymfun));
    case Method::kPfrac:
      return kind == ProductKind::kBinomial ? binomial_via_constant_term(a, b) : hadamard_via_constant_term(a, b);
    case Method::kReconstruct:
      return via_reconstruction(a, b, kind);
  }
  throw InvalidInput("unknown method");
}

CrossCheckReport cross_check(const RatFun& a, const RatFun& b, ProductKind kind) {
  std::vector<std::future<RatFun>> jobs;
  jobs.reserve(kAllMethods.size());
  for (Method m : kAllMethods) {
    jobs.push_back(std::async(std::launch::async, [&a, &b, kind, m] { return product(a, b, kind, m); }));
  }
  CrossCheckReport report;
  for (std::size_t i = 0; i < kAllMethods.size(); ++i) {
    MethodResult r{kAllMethods[i], std::nullopt, {}};
    try {
      r.value = jobs[i].get();
    } catch (const std::exception& e) {
      r.error = e.what();
    }
    report.results.push_back(std::move(r));
  }
  const auto& first = report.results.front().value;
  report.agree = first.has_value();
  for (const auto& r : report.results) {
    if (!r.value || (first && *r.value != *first)) report.agree = false;
  }
  return report;
}

}  // namespace binconv
