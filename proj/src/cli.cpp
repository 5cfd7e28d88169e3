#include "igusa/cli.hpp"

#include <cstdlib>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "igusa/counting.hpp"
#include "igusa/render.hpp"
#include "igusa/resolution.hpp"
#include "igusa/verify.hpp"
#include "igusa/zeta_closed.hpp"
#include "igusa/zeta_spf.hpp"

namespace igusa {

namespace {

struct InstanceArgs {
  std::uint32_t n = 0;
  std::uint32_t m = 0;
  std::uint64_t p = 0;
  std::string format = "text";
};

void add_instance_options(CLI::App* cmd, InstanceArgs& args) {
  cmd->add_option("--n", args.n, "exponent of x")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--m", args.m, "exponent of y")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--p", args.p, "prime")->required();
  cmd->add_option("--format", args.format, "output format")->check(CLI::IsMember({"text", "json"}));
}

nlohmann::json function_json(const RationalFunction& rf) {
  return {{"numerator", coefficients_json(rf.num())}, {"denominator", coefficients_json(rf.den())}};
}

struct ComputeArgs {
  InstanceArgs instance;
  std::string method = "closed";
  std::optional<std::uint32_t> terms;
  bool trace = false;
};

int compute(const ComputeArgs& args, std::uint64_t budget, std::ostream& out, std::ostream& err) {
  const ZetaParams params(args.instance.n, args.instance.m, args.instance.p);
  const bool json = args.instance.format == "json";

  std::optional<RationalFunction> zeta;
  std::optional<SpfTrace> trace;
  std::vector<BigRational> series;

  if (args.method == "closed") {
    zeta = zeta_closed_form(params);
  } else if (args.method == "spf") {
    trace = zeta_spf(params);
    zeta = trace->result;
  } else if (args.method == "resolution") {
    const bool fixture = (params.n() == 3 && params.m() == 2) || (params.n() == 2 && params.m() == 3);
    if (!fixture) {
      err << "error: --method resolution is only available for (n, m) = (3, 2) or (2, 3)\n";
      return kExitUsage;
    }
    zeta = resolution_zeta(params.p());
  } else {
    if (!args.terms) {
      err << "error: --method series requires --terms\n";
      return kExitUsage;
    }
    series = measure_coeffs(params, *args.terms, budget);
  }
  if (zeta && args.terms) series = zeta->taylor(*args.terms);

  const auto condition = paper_condition(params);
  if (json) {
    nlohmann::json doc;
    doc["n"] = params.n();
    doc["m"] = params.m();
    doc["p"] = params.p();
    doc["method"] = args.method;
    if (zeta) {
      doc.update(function_json(*zeta));
    } else {
      doc.update(function_json(RationalFunction(Polynomial(series))));
    }
    if (args.terms) doc["series"] = series_json(series);
    if (trace) doc["applications"] = trace->applications;
    if (condition) doc["paper_condition"] = *condition;
    if (trace && args.trace) doc["trace"] = trace_json(*trace);
    out << doc.dump(2) << "\n";
    return kExitOk;
  }

  if (zeta) {
    out << "Z(t) = " << rational_function_text(*zeta) << "\n";
  } else {
    out << "Z(t) = " << polynomial_text(Polynomial(series)) << " + O(t^" << series.size() << ")\n";
  }
  if (args.terms) out << "series: " << series_text(series) << "\n";
  if (trace) out << "applications: " << trace->applications << "\n";
  if (condition) out << "paper_condition: " << *condition << "\n";
  if (trace && args.trace) out << trace_text(*trace);
  return kExitOk;
}

struct CountArgs {
  InstanceArgs instance;
  std::uint32_t e = 1;
};

int count(const CountArgs& args, std::uint64_t budget, std::ostream& out) {
  const ZetaParams params(args.instance.n, args.instance.m, args.instance.p);
  const std::uint64_t solutions = count_ne(params, args.e, budget);
  const BigRational normalized = from_count(solutions) * inverse_power(params.p(), 2ULL * args.e);

  if (args.instance.format == "json") {
    nlohmann::json doc;
    doc["n"] = params.n();
    doc["m"] = params.m();
    doc["p"] = params.p();
    doc["e"] = args.e;
    doc["count"] = solutions;
    doc["normalized"] = rational_json(normalized);
    if (args.e == 1) {
      const auto theorem = n0_theorem(params);
      const auto brute = n0_bruteforce(params);
      doc["n0_theorem"] = theorem;
      doc["n0_bruteforce"] = brute;
      doc["agree"] = theorem == brute;
    }
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  out << "N_" << args.e << " = " << solutions << "\n";
  out << "N_" << args.e << " * p^(-" << 2 * args.e << ") = " << rational_text(normalized) << "\n";
  if (args.e == 1) {
    const auto theorem = n0_theorem(params);
    const auto brute = n0_bruteforce(params);
    out << "N(0) theorem = " << theorem << "\n";
    out << "N(0) brute force = " << brute << "\n";
    out << "N(0) agree = " << (theorem == brute ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

}  // namespace

std::optional<std::uint64_t> parse_budget(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
  try {
    const std::uint64_t v = std::stoull(text);
    if (v == 0) return std::nullopt;
    return v;
  } catch (const std::out_of_range&) {
    return std::nullopt;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Igusa local zeta functions of x^n + y^m"};
  app.require_subcommand(1);

  ComputeArgs compute_args;
  CLI::App* compute_cmd = app.add_subcommand("compute", "compute Z(t) as an exact rational function");
  add_instance_options(compute_cmd, compute_args.instance);
  compute_cmd->add_option("--method", compute_args.method, "closed, spf, resolution or series")
      ->check(CLI::IsMember({"closed", "spf", "resolution", "series"}));
  compute_cmd->add_option("--terms", compute_args.terms, "number of Taylor coefficients");
  compute_cmd->add_flag("--trace", compute_args.trace, "emit the stationary phase trace (spf only)");

  CountArgs count_args;
  CLI::App* count_cmd = app.add_subcommand("count", "count solutions of x^n + y^m = 0 mod p^e");
  add_instance_options(count_cmd, count_args.instance);
  count_cmd->add_option("--e", count_args.e, "exponent of the modulus p^e");

  VerifyOptions verify_options;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run the cross-check matrix");
  verify_cmd->add_option("--n-max", verify_options.n_max)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--m-max", verify_options.m_max)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--primes", verify_options.primes)->delimiter(',');
  verify_cmd->add_option("--terms", verify_options.terms);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::uint64_t budget = kDefaultBudget;
  if (const char* env = std::getenv("IGUSA_BUDGET")) {
    auto parsed = parse_budget(env);
    if (!parsed) {
      err << "error: IGUSA_BUDGET must be a positive integer, got '" << env << "'\n";
      return kExitUsage;
    }
    budget = *parsed;
  }

  try {
    if (*compute_cmd) return compute(compute_args, budget, out, err);
    if (*count_cmd) return count(count_args, budget, out);
    verify_options.budget = budget;
    for (auto p : verify_options.primes) {
      if (!is_prime(p)) throw InvalidParams(std::to_string(p) + " is not prime");
    }
    const VerifyReport report = run_verification(verify_options);
    print_report(report, out);
    if (!report.passed()) {
      const InstanceReport* bad = report.first_failure();
      err << "verify: mismatch at n=" << bad->params.n() << " m=" << bad->params.m()
          << " p=" << bad->params.p() << " (" << bad->first_failure()->name << ")\n";
      return kExitMismatch;
    }
    return kExitOk;
  } catch (const InvalidParams& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnsupportedPrime& e) {
    err << "error: " << e.what() << "\n";
    return kExitUnsupportedPrime;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
}

}  // namespace igusa
