#include "igusa/render.hpp"

#include <sstream>
#include <stdexcept>

namespace igusa {

std::string rational_text(const BigRational& q) { return q.get_str(); }

std::string rational_json(const BigRational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

BigRational parse_rational(std::string_view text) {
  const std::string s(text);
  if (s.empty() || s.find_first_not_of("-0123456789/") != std::string::npos) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
  BigRational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
  q.canonicalize();
  return q;
}

std::string polynomial_text(const Polynomial& poly) {
  if (poly.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  const auto& c = poly.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    const BigRational magnitude = abs(c[k]);
    if (first) {
      if (c[k] < 0) out << "-";
    } else {
      out << (c[k] < 0 ? " - " : " + ");
    }
    out << rational_text(magnitude);
    if (k == 1) out << "*t";
    if (k > 1) out << "*t^" << k;
    first = false;
  }
  return out.str();
}

std::string rational_function_text(const RationalFunction& rf) {
  if (rf.den() == Polynomial::constant(1)) return polynomial_text(rf.num());
  return "(" + polynomial_text(rf.num()) + ") / (" + polynomial_text(rf.den()) + ")";
}

std::string series_text(const std::vector<BigRational>& coeffs) {
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (k) out += ", ";
    out += rational_text(coeffs[k]);
  }
  return out;
}

nlohmann::json coefficients_json(const Polynomial& poly) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : poly.coeffs()) arr.push_back(rational_json(c));
  // The zero polynomial still needs a value for readers.
  if (arr.empty()) arr.push_back(rational_json(0));
  return arr;
}

nlohmann::json series_json(const std::vector<BigRational>& coeffs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : coeffs) arr.push_back(rational_json(c));
  return arr;
}

RationalFunction rational_function_from_json(const nlohmann::json& doc) {
  auto read = [&](const char* key) {
    std::vector<BigRational> coeffs;
    for (const auto& item : doc.at(key)) coeffs.push_back(parse_rational(item.get<std::string>()));
    return Polynomial(std::move(coeffs));
  };
  return RationalFunction(read("numerator"), read("denominator"));
}

std::string_view locus_name(SingularLocus locus) {
  switch (locus) {
    case SingularLocus::None: return "none";
    case SingularLocus::Origin: return "origin";
    case SingularLocus::LineXZero: return "x=0";
    case SingularLocus::LineYZero: return "y=0";
  }
  return "?";
}

nlohmann::json trace_json(const SpfTrace& trace) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& step : trace.steps) {
    nlohmann::json s;
    s["state"] = {step.state.a, step.state.b};
    s["n0"] = step.counts.n0;
    s["s0"] = step.counts.s0;
    s["locus"] = locus_name(step.locus);
    s["known"] = {{"numerator", coefficients_json(step.known.num())},
                  {"denominator", coefficients_json(step.known.den())}};
    if (step.next) {
      s["carry"] = rational_json(step.carry);
      s["t_power"] = step.t_power;
      s["next"] = {step.next->a, step.next->b};
    } else {
      s["next"] = nullptr;
    }
    steps.push_back(std::move(s));
  }
  return steps;
}

std::string trace_text(const SpfTrace& trace) {
  std::ostringstream out;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& step = trace.steps[i];
    out << "step " << i + 1 << ": J(" << step.state.a << "," << step.state.b << ")"
        << " n0=" << step.counts.n0 << " s0=" << step.counts.s0 << " locus=" << locus_name(step.locus)
        << "\n  known = " << rational_function_text(step.known) << "\n";
    if (step.next) {
      out << "  singular = " << rational_text(step.carry) << "*t^" << step.t_power << " * J("
          << step.next->a << "," << step.next->b << ")\n";
    } else {
      out << "  singular = 0 (terminal)\n";
    }
  }
  return out.str();
}

}  // namespace igusa
