#include "igusa/verify.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "igusa/render.hpp"
#include "igusa/resolution.hpp"
#include "igusa/series_bridge.hpp"
#include "igusa/zeta_closed.hpp"
#include "igusa/zeta_spf.hpp"

namespace igusa {

namespace {

CheckResult check(std::string name, bool ok, std::string detail = {}) {
  return {std::move(name), ok, ok ? std::string() : std::move(detail)};
}

std::string versus(const std::string& lhs, const std::string& rhs) { return lhs + "  vs  " + rhs; }

// Largest E <= terms whose top level p^{2E} fits the budget.
std::uint32_t feasible_terms(std::uint64_t p, std::uint32_t terms, std::uint64_t budget) {
  std::uint32_t e = terms;
  while (e > 0 && !enumeration_fits(p, e, budget)) --e;
  return e;
}

void check_instance(InstanceReport& report, const VerifyOptions& options) {
  const ZetaParams& params = report.params;
  auto& checks = report.checks;
  const std::uint64_t p = params.p();

  const std::uint64_t n0 = options.n0_source(params);
  const std::uint64_t n0_brute = n0_bruteforce(params);
  checks.push_back(check("n0", n0 == n0_brute,
                         versus("formula " + std::to_string(n0), "brute force " + std::to_string(n0_brute))));

  const RationalFunction zeta = zeta_closed_form(params, n0);

  const SpfTrace spf = zeta_spf(params);
  checks.push_back(check("spf", spf.result == zeta,
                         versus(rational_function_text(zeta), rational_function_text(spf.result))));
  if (params.n() >= 2 && params.m() >= 2) {
    const std::size_t expected = params.n() / params.d() + params.m() / params.d() - 1;
    checks.push_back(check("applications", spf.applications == expected,
                           versus(std::to_string(spf.applications), std::to_string(expected))));
  }

  bool at_one = false;
  std::string at_one_detail;
  try {
    const BigRational v = zeta.eval(1);
    at_one = v == 1;
    at_one_detail = "Z(1) = " + rational_text(v);
  } catch (const PoleError& e) {
    at_one_detail = e.what();
  }
  checks.push_back(check("z1", at_one, at_one_detail));

  const ZetaParams swapped = params.swapped();
  const RationalFunction mirror = zeta_closed_form(swapped, options.n0_source(swapped));
  checks.push_back(check("symmetry", mirror == zeta,
                         versus(rational_function_text(zeta), rational_function_text(mirror))));

  const std::uint32_t shown = std::max<std::uint32_t>(options.terms, 1);
  const auto series = zeta.taylor(shown);
  const BigRational constant = (from_count(p) * from_count(p) - from_count(n0_brute)) * inverse_power(p, 2);
  checks.push_back(check("constant", series[0] == constant,
                         versus(rational_text(series[0]), rational_text(constant))));

  bool bounded = true;
  BigRational partial = 0;
  for (const auto& c : series) {
    partial += c;
    bounded = bounded && c >= 0 && c <= 1 && partial <= 1;
  }
  checks.push_back(check("bounds", bounded, "series " + series_text(series)));

  const std::uint32_t e = feasible_terms(p, options.terms, options.budget);
  if (e > 0) {
    const auto expected = zeta.taylor(e);
    const auto counted = measure_coeffs(params, e, options.budget);
    checks.push_back(check("oracle(E=" + std::to_string(e) + ")", expected == counted,
                           versus(series_text(expected), series_text(counted))));

    const RationalFunction poincare = zeta_to_poincare(zeta);
    const auto p_series = poincare.taylor(e);
    const auto p_counted = poincare_coeffs_oracle(params, e, options.budget);
    checks.push_back(check("poincare", p_series == p_counted,
                           versus(series_text(p_series), series_text(p_counted))));
    const RationalFunction back = poincare_to_zeta(poincare);
    checks.push_back(check("roundtrip", back == zeta,
                           versus(rational_function_text(zeta), rational_function_text(back))));
  }

  if ((params.n() == 3 && params.m() == 2) || (params.n() == 2 && params.m() == 3)) {
    const RationalFunction fixture = resolution_zeta(p);
    RationalFunction pieces;
    for (const auto& piece : resolution_pieces(p)) pieces += piece;
    checks.push_back(check("resolution", fixture == zeta && pieces == fixture,
                           versus(rational_function_text(zeta), rational_function_text(fixture))));
  }
}

}  // namespace

bool InstanceReport::passed() const { return first_failure() == nullptr; }

const CheckResult* InstanceReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

bool VerifyReport::passed() const { return first_failure() == nullptr; }

const InstanceReport* VerifyReport::first_failure() const {
  for (const auto& r : instances)
    if (!r.passed()) return &r;
  return nullptr;
}

VerifyReport run_verification(const VerifyOptions& options) {
  std::vector<std::uint64_t> primes = options.primes;
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  VerifyReport report;
  for (std::uint32_t n = 1; n <= options.n_max; ++n) {
    for (std::uint32_t m = 1; m <= options.m_max; ++m) {
      for (std::uint64_t p : primes) {
        InstanceReport instance{ZetaParams(n, m, p), true, {}};
        if (instance.params.p_divides_both()) {
          instance.supported = false;
        } else {
          check_instance(instance, options);
        }
        report.instances.push_back(std::move(instance));
      }
    }
  }
  return report;
}

void print_report(const VerifyReport& report, std::ostream& out) {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  out << std::left << std::setw(4) << "n" << std::setw(4) << "m" << std::setw(6) << "p" << std::setw(8)
      << "status"
      << "checks\n";
  for (const auto& r : report.instances) {
    out << std::setw(4) << r.params.n() << std::setw(4) << r.params.m() << std::setw(6) << r.params.p();
    if (!r.supported) {
      ++skipped;
      out << std::setw(8) << "SKIP"
          << "p divides n and m\n";
      continue;
    }
    const bool ok = r.passed();
    ok ? ++passed : ++failed;
    out << std::setw(8) << (ok ? "PASS" : "FAIL");
    for (std::size_t i = 0; i < r.checks.size(); ++i) {
      out << (i ? " " : "") << r.checks[i].name << (r.checks[i].passed ? "" : "!");
    }
    out << "\n";
  }
  out << "passed " << passed << ", failed " << failed << ", skipped " << skipped << "\n";
  if (const InstanceReport* bad = report.first_failure()) {
    const CheckResult* c = bad->first_failure();
    out << "counterexample: n=" << bad->params.n() << " m=" << bad->params.m() << " p=" << bad->params.p()
        << " check " << c->name << ": " << c->detail << "\n";
  }
}

}  // namespace igusa
