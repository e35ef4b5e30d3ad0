#include "indpoly/io.hpp"

#include <cstdio>

#include <json.hpp>

namespace indpoly {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json coeffs_array(const DensePolynomial& p) {
  auto arr = ordered_json::array();
  for (const BigInt& c : p.coeffs()) arr.push_back(c.get_str());
  return arr;
}

ordered_json family_tag(const std::optional<FamilySpec>& spec, int n) {
  ordered_json tag;
  if (!spec) {
    tag["kind"] = "tree";
    tag["n"] = n;
    return tag;
  }
  switch (spec->kind) {
    case FamilyKind::Path:
      tag["kind"] = "P";
      tag["m"] = spec->m;
      break;
    case FamilyKind::Star2:
      tag["kind"] = "S2";
      tag["t"] = spec->t;
      break;
    case FamilyKind::TFamily:
      tag["kind"] = "T";
      tag["m"] = spec->m;
      tag["t"] = spec->t;
      break;
    case FamilyKind::TGFamily:
      tag["kind"] = "TG";
      tag["m"] = spec->m;
      tag["t"] = spec->t;
      break;
  }
  return tag;
}

}  // namespace

std::string polynomial_to_json(const DensePolynomial& p) {
  ordered_json j;
  j["coeffs"] = coeffs_array(p);
  return j.dump();
}

DensePolynomial polynomial_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  std::vector<BigInt> coeffs;
  for (const auto& item : j.at("coeffs"))
    coeffs.emplace_back(item.get<std::string>());
  return DensePolynomial(std::move(coeffs));
}

std::string family_tag_json(const std::optional<FamilySpec>& spec, int n) {
  return family_tag(spec, n).dump();
}

std::string report_to_json(const std::optional<FamilySpec>& spec, int n,
                           const DensePolynomial& p,
                           const LogConcavityReport& report) {
  ordered_json j;
  j["family"] = family_tag(spec, n);
  j["degree"] = report.degree;
  j["coeffs"] = coeffs_array(p);
  j["violations"] = report.violations;
  j["diffs_sign"] = report.diffs_sign();
  j["unimodal"] = report.unimodal;
  return j.dump();
}

std::string format_residual(double residual) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", residual);
  return buf;
}

std::string probe_to_csv(const AsymptoticProbe& probe) {
  std::string csv = "t,k,c_k_bitlength,residual,predicted_exponent\n";
  for (size_t i = 0; i < probe.t_values.size(); ++i) {
    csv += std::to_string(probe.t_values[i]);
    csv += ',';
    csv += std::to_string(probe.k);
    csv += ',';
    csv += std::to_string(probe.bit_lengths[i]);
    csv += ',';
    csv += format_residual(probe.residuals[i]);
    csv += ',';
    csv += std::to_string(probe.predicted_exponent);
    csv += '\n';
  }
  return csv;
}

}  // namespace indpoly
