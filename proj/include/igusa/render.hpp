#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "igusa/exact.hpp"
#include "igusa/zeta_spf.hpp"

namespace igusa {

/// "a" for integers, "a/b" otherwise.
std::string rational_text(const BigRational& q);

/// Always "a/b" in lowest terms, including integers ("1/1").
std::string rational_json(const BigRational& q);

/// Accepts "a", "a/b" or "-a/b"; the result is canonicalized. Throws std::invalid_argument.
BigRational parse_rational(std::string_view text);

/// Ascending powers: "16/25 + 16/125*t - 1/5*t^2". The zero polynomial renders as "0".
std::string polynomial_text(const Polynomial& poly);

/// "(num) / (den)", or just the numerator when den = 1.
std::string rational_function_text(const RationalFunction& rf);

/// Comma-separated rationals.
std::string series_text(const std::vector<BigRational>& coeffs);

nlohmann::json coefficients_json(const Polynomial& poly);
nlohmann::json series_json(const std::vector<BigRational>& coeffs);

/// Rebuilds a canonical RationalFunction from "numerator"/"denominator" arrays.
RationalFunction rational_function_from_json(const nlohmann::json& doc);

std::string_view locus_name(SingularLocus locus);

nlohmann::json trace_json(const SpfTrace& trace);
std::string trace_text(const SpfTrace& trace);

}  // namespace igusa
