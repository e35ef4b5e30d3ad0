#pragma once

#include <optional>
#include <string>

#include "indpoly/analysis.hpp"
#include "indpoly/poly.hpp"
#include "indpoly/tree.hpp"

namespace indpoly {

// External data formats. All numbers are decimal strings (coefficients
// routinely exceed 64 bits); key order is fixed so identical inputs yield
// byte-identical output.

// {"coeffs": ["<decimal>", ...]} with index = power.
std::string polynomial_to_json(const DensePolynomial& p);
DensePolynomial polynomial_from_json(const std::string& text);

// Family tag for report payloads: {"kind":"TG","m":2,"t":5} for family
// instances, {"kind":"tree","n":12} for arbitrary trees.
std::string family_tag_json(const std::optional<FamilySpec>& spec, int n);

// {"family": {...}, "degree": n, "coeffs": [...], "violations": [...],
//  "diffs_sign": "...", "unimodal": bool}
std::string report_to_json(const std::optional<FamilySpec>& spec, int n,
                           const DensePolynomial& p,
                           const LogConcavityReport& report);

// CSV columns: t, k, c_k_bitlength, residual, predicted_exponent.
// Residuals are fixed-point with 6 fractional digits.
std::string probe_to_csv(const AsymptoticProbe& probe);

std::string format_residual(double residual);

}  // namespace indpoly
