// Command-line front end for binomial and Hadamard products of rational
// generating functions.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "binconv/errors.hpp"
#include "binconv/expr.hpp"
#include "binconv/products.hpp"
#include "binconv/seqlib.hpp"

using namespace binconv;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kComputeError = 1;
constexpr int kParseError = 2;
constexpr int kVerifyFailed = 3;

// Coefficient-file problems are reported like expression syntax errors.
class InputFormatError : public Error {
 public:
  using Error::Error;
};

json coeff_array(const Poly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.get_str());
  if (out.empty()) out.push_back("0");
  return out;
}

json to_json(const RatFun& f) { return {{"num", coeff_array(f.num())}, {"den", coeff_array(f.den())}}; }

RatFun eval_text(const std::string& text) { return eval(parse(text)); }

std::string recurrence_text(const RatFun& f) {
  const std::size_t start = recurrence_start(f);
  std::ostringstream out;
  out << "a(n) =";
  const auto& den = f.den().coeffs();
  bool first = true;
  for (std::size_t j = 1; j < den.size(); ++j) {
    const Rational c = -den[j];
    if (c == 0) continue;
    const bool neg = sgn(c) < 0;
    out << (first ? (neg ? " -" : " ") : (neg ? " - " : " + "));
    first = false;
    const Rational mag = abs(c);
    if (mag != 1) out << mag.get_str() << "*";
    out << "a(n-" << j << ")";
  }
  if (first) out << " 0";
  out << "  for n >= " << start << "\n";
  const Series s = expand(f, start);
  out << "initial terms:";
  for (std::size_t n = 0; n < start; ++n) out << " a(" << n << ") = " << s[n].get_str() << (n + 1 < start ? "," : "");
  if (start == 0) out << " none";
  out << "\n";
  return out.str();
}

std::vector<Rational> read_coeffs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::vector<Rational> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    try {
      out.push_back(parse_rational(std::string_view(line).substr(b, e - b + 1)));
    } catch (const InvalidInput& err) {
      throw InputFormatError(path + ":" + std::to_string(lineno) + ": " + err.what());
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Binomial and Hadamard products of rational generating functions"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit JSON with exact rational strings")->capture_default_str();

  std::string expr_a, expr_b, method_text = "resultant", kind_text = "binomial", coeff_file, only_text;
  std::size_t count = 10, den_deg = 0, num_deg = 0;
  bool cross = false;

  auto* eval_cmd = app.add_subcommand("eval", "Print the reduced rational function");
  eval_cmd->add_option("expr", expr_a, "Expression")->required();

  auto* coeffs_cmd = app.add_subcommand("coeffs", "Print the first N coefficients");
  coeffs_cmd->add_option("expr", expr_a, "Expression")->required();
  coeffs_cmd->add_option("-n", count, "Number of coefficients")->capture_default_str();

  CLI::App* prod_cmds[2];
  for (int i = 0; i < 2; ++i) {
    auto* cmd = app.add_subcommand(i == 0 ? "bprod" : "hprod",
                                   i == 0 ? "Binomial product A (.) B" : "Hadamard product A * B");
    cmd->add_option("a", expr_a, "First operand")->required();
    cmd->add_option("b", expr_b, "Second operand")->required();
    cmd->add_option("--method", method_text, "resultant, symfun, pfrac or reconstruct")
        ->check(CLI::IsMember({"resultant", "symfun", "pfrac", "reconstruct"}))
        ->capture_default_str();
    cmd->add_flag("--cross-check", cross, "Run every method and compare");
    prod_cmds[i] = cmd;
  }

  auto* den_cmd = app.add_subcommand("denominator", "Resultant denominator bound for a product");
  den_cmd->add_option("a", expr_a, "First operand")->required();
  den_cmd->add_option("b", expr_b, "Second operand")->required();
  den_cmd->add_option("--kind", kind_text, "binomial or hadamard")
      ->check(CLI::IsMember({"binomial", "hadamard"}))
      ->capture_default_str();

  auto* rec_cmd = app.add_subcommand("reconstruct", "Fit a rational function to coefficients");
  rec_cmd->add_option("--coeffs", coeff_file, "File with one rational per line")->required();
  rec_cmd->add_option("--den-deg", den_deg, "Denominator degree bound")->required();
  rec_cmd->add_option("--num-deg", num_deg, "Numerator degree bound")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run the identity suite");
  verify_cmd->add_option("--only", only_text, "Comma-separated identity ids");

  auto* recur_cmd = app.add_subcommand("recurrence", "Print the linear recurrence and initial terms");
  recur_cmd->add_option("expr", expr_a, "Expression")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParseError;
  }

  const auto emit = [&](const RatFun& f) {
    if (as_json) {
      std::cout << to_json(f).dump() << "\n";
    } else {
      std::cout << to_string(f) << "\n";
    }
  };

  try {
    if (*eval_cmd) {
      emit(eval_text(expr_a));
    } else if (*coeffs_cmd) {
      const Series s = expand(eval_text(expr_a), count);
      if (as_json) {
        json out = json::array();
        for (const auto& c : s.coeffs) out.push_back(c.get_str());
        std::cout << out.dump() << "\n";
      } else {
        for (std::size_t n = 0; n < s.order(); ++n) std::cout << (n ? " " : "") << s[n].get_str();
        std::cout << "\n";
      }
    } else if (*prod_cmds[0] || *prod_cmds[1]) {
      const ProductKind kind = *prod_cmds[0] ? ProductKind::kBinomial : ProductKind::kHadamard;
      const RatFun a = eval_text(expr_a);
      const RatFun b = eval_text(expr_b);
      if (!cross) {
        emit(product(a, b, kind, *parse_method(method_text)));
        return kOk;
      }
      const CrossCheckReport report = cross_check(a, b, kind);
      if (as_json) {
        json methods = json::array();
        for (const auto& r : report.results) {
          json rec{{"method", method_name(r.method)}};
          if (r.value) {
            rec["value"] = to_json(*r.value);
          } else {
            rec["error"] = r.error;
          }
          methods.push_back(std::move(rec));
        }
        std::cout << json{{"methods", methods}, {"agree", report.agree}}.dump() << "\n";
      } else {
        for (const auto& r : report.results) {
          std::cout << method_name(r.method) << ": " << (r.value ? to_string(*r.value) : "error: " + r.error) << "\n";
        }
        std::cout << (report.agree ? "all methods agree" : "methods DISAGREE") << "\n";
      }
      return report.agree ? kOk : kVerifyFailed;
    } else if (*den_cmd) {
      const RatFun a = eval_text(expr_a);
      const RatFun b = eval_text(expr_b);
      const Poly d = kind_text == "binomial" ? binomial_denominator(a.den(), b.den())
                                             : hadamard_denominator(a.den(), b.den());
      if (as_json) {
        std::cout << json{{"den", coeff_array(d)}}.dump() << "\n";
      } else {
        std::cout << to_string(d) << "\n";
      }
    } else if (*rec_cmd) {
      Series s;
      s.coeffs = read_coeffs(coeff_file);
      emit(reconstruct_rational(s, den_deg, num_deg));
    } else if (*verify_cmd) {
      std::vector<std::string> only;
      std::stringstream ids(only_text);
      for (std::string id; std::getline(ids, id, ',');) {
        if (!id.empty()) only.push_back(id);
      }
      const SuiteReport report = run_identity_suite(Registry::standard(), only);
      std::cout << (as_json ? report.json() + "\n" : report.text());
      return report.all_passed() ? kOk : kVerifyFailed;
    } else if (*recur_cmd) {
      const RatFun f = eval_text(expr_a);
      if (as_json) {
        const std::size_t start = recurrence_start(f);
        json coeffs = json::array();
        for (std::size_t j = 1; j < f.den().size(); ++j) coeffs.push_back(Rational(-f.den().coeffs()[j]).get_str());
        json init = json::array();
        for (const auto& c : expand(f, start).coeffs) init.push_back(c.get_str());
        std::cout << json{{"coefficients", coeffs}, {"start", start}, {"initial", init}}.dump() << "\n";
      } else {
        std::cout << recurrence_text(f);
      }
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const InputFormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kComputeError;
  }
  return kOk;
}
