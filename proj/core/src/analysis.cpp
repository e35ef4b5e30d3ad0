#include "indpoly/analysis.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "indpoly/engines.hpp"

namespace indpoly {

std::string LogConcavityReport::diffs_sign() const {
  std::string signs;
  signs.reserve(diffs.size());
  for (const BigInt& d : diffs)
    signs.push_back(d > 0 ? '+' : (d < 0 ? '-' : '0'));
  return signs;
}

LogConcavityReport log_concavity_report(const DensePolynomial& p) {
  if (p.is_zero())
    throw std::invalid_argument("log_concavity_report: zero polynomial");
  for (const BigInt& c : p.coeffs())
    if (c < 0)
      throw std::invalid_argument("log_concavity_report: negative coefficient");

  LogConcavityReport report;
  report.degree = p.degree();

  for (int k = 1; k <= report.degree; ++k)
    if (p[k] > p[report.mode_index]) report.mode_index = k;

  // Unimodal: weakly rises, then weakly falls.
  int i = 0;
  while (i < report.degree && p[i] <= p[i + 1]) ++i;
  while (i < report.degree && p[i] >= p[i + 1]) ++i;
  report.unimodal = (i == report.degree);

  if (report.degree < 2) return report;  // trivially log-concave

  report.diffs.reserve(static_cast<size_t>(report.degree) - 1);
  for (int k = 1; k < report.degree; ++k) {
    BigInt d = p[k] * p[k] - p[k - 1] * p[k + 1];
    if (d < 0) report.violations.push_back(k);
    report.diffs.push_back(std::move(d));
  }
  return report;
}

namespace {

// First index where the coefficient sequences differ; -1 when equal.
int first_difference(const DensePolynomial& a, const DensePolynomial& b) {
  const int hi = std::max(a.is_zero() ? 0 : a.degree(), b.is_zero() ? 0 : b.degree());
  for (int k = 0; k <= hi; ++k)
    if (a[k] != b[k]) return k;
  return -1;
}

}  // namespace

IdentityCheck check_reflected_identities(int m, int t) {
  if (m < 1)
    throw std::invalid_argument("check_reflected_identities: m must be >= 1");
  if (t < 0)
    throw std::invalid_argument("check_reflected_identities: t must be >= 0");

  const DensePolynomial x_plus_1{1, 1};
  const DensePolynomial x_plus_2{2, 1};
  const unsigned long tu = static_cast<unsigned long>(t);
  const unsigned long mu = static_cast<unsigned long>(m);

  const DensePolynomial rs = reflect(closed_form_S(t));
  const DensePolynomial rs_rhs = pow(x_plus_1, tu) + shifted(pow(x_plus_2, tu), 1);

  const DensePolynomial rt = reflect(closed_form_T(3, t));
  const DensePolynomial rt_rhs = pow(rs, 3) + shifted(pow(x_plus_2, 3 * tu), 2);

  const DensePolynomial rtg = reflect(closed_form_TG(m, t));
  const DensePolynomial rtg_rhs = x_plus_1 * pow(rt, mu) + pow(rs, 3 * mu);

  IdentityCheck check;
  check.star_identity = rs == rs_rhs;
  check.t_identity = rt == rt_rhs;
  check.tg_identity = rtg == rtg_rhs;
  if (!check.star_identity) {
    check.failed_identity = "reflected-star";
    check.first_difference_index = first_difference(rs, rs_rhs);
  } else if (!check.t_identity) {
    check.failed_identity = "reflected-T";
    check.first_difference_index = first_difference(rt, rt_rhs);
  } else if (!check.tg_identity) {
    check.failed_identity = "reflected-TG";
    check.first_difference_index = first_difference(rtg, rtg_rhs);
  }
  return check;
}

bool verify_reflected_identities(int m, int t) {
  return check_reflected_identities(m, t).all_hold();
}

BigInt reflected_coefficient(int m, int t, int k) {
  if (m < 1)
    throw std::invalid_argument("reflected_coefficient: m must be >= 1");
  if (t < 0)
    throw std::invalid_argument("reflected_coefficient: t must be >= 0");
  const int alpha = 3 * (t + 1) * m + 1;
  if (k < 0 || k > alpha) {
    std::ostringstream msg;
    msg << "reflected_coefficient: k=" << k << " outside [0, " << alpha << "]";
    throw std::out_of_range(msg.str());
  }
  return reflect(closed_form_TG(m, t))[k];
}

std::vector<int> expected_violation_pattern(int m, int alpha) {
  std::vector<int> pattern;
  pattern.reserve(static_cast<size_t>(m));
  for (int j = m - 1; j >= 0; --j) pattern.push_back(alpha - 1 - 2 * j);
  return pattern;
}

double log2_approx(const BigInt& v) {
  if (v <= 0)
    throw std::invalid_argument("log2_approx: value must be positive");
  const size_t bits = mpz_sizeinbase(v.get_mpz_t(), 2);
  if (bits <= 64) return std::log2(v.get_d());
  const BigInt top = v >> static_cast<mp_bitcnt_t>(bits - 64);
  return static_cast<double>(bits - 64) + std::log2(top.get_d());
}

bool AsymptoticProbe::passes(double slope_tol) const {
  if (std::abs(measured_slope - predicted_exponent) > slope_tol) return false;
  const double last_residual = residuals.back();
  const double t_last = t_values.back();
  for (size_t i = 0; i < residuals.size(); ++i) {
    const double bound = 3.0 * std::log2(t_last / t_values[i]) + 2.0;
    if (std::abs(residuals[i] - last_residual) > bound) return false;
  }
  return true;
}

AsymptoticProbe asymptotic_probe(int m, int k, TRange range) {
  if (m < 1) throw std::invalid_argument("asymptotic_probe: m must be >= 1");
  if (k < 0 || k > 2 * m)
    throw std::invalid_argument(
        "asymptotic_probe: k must lie in [0, 2m], the guaranteed window");
  if (range.t_min < 0 || range.t_min >= range.t_max)
    throw std::invalid_argument("asymptotic_probe: need 0 <= t_min < t_max");
  if (range.t_max > 60)
    throw std::invalid_argument("asymptotic_probe: t_max must be <= 60");

  AsymptoticProbe probe;
  probe.m = m;
  probe.k = k;
  probe.predicted_exponent = k + k / 2;

  std::vector<double> logs;
  for (int t = range.t_min; t <= range.t_max; ++t) {
    const BigInt c = reflected_coefficient(m, t, k);
    probe.t_values.push_back(t);
    probe.bit_lengths.push_back(mpz_sizeinbase(c.get_mpz_t(), 2));
    const double log2c = log2_approx(c);
    logs.push_back(log2c);
    probe.residuals.push_back(log2c -
                              static_cast<double>(probe.predicted_exponent) * t);
  }

  // Least-squares slope of log2 c_k against t.
  const double n = static_cast<double>(probe.t_values.size());
  double sum_t = 0, sum_y = 0, sum_tt = 0, sum_ty = 0;
  for (size_t i = 0; i < probe.t_values.size(); ++i) {
    const double t = probe.t_values[i];
    sum_t += t;
    sum_y += logs[i];
    sum_tt += t * t;
    sum_ty += t * logs[i];
  }
  probe.measured_slope = (n * sum_ty - sum_t * sum_y) / (n * sum_tt - sum_t * sum_t);
  return probe;
}

SweepResult theorem_sweep(int m, int t_max) {
  if (m < 1) throw std::invalid_argument("theorem_sweep: m must be >= 1");
  if (t_max < 0) throw std::invalid_argument("theorem_sweep: t_max must be >= 0");

  SweepResult result;
  result.m = m;
  result.rows.reserve(static_cast<size_t>(t_max) + 1);
  for (int t = 0; t <= t_max; ++t) {
    const DensePolynomial p = closed_form_TG(m, t);
    LogConcavityReport report = log_concavity_report(p);
    SweepRow row;
    row.t = t;
    row.degree = p.degree();
    row.matches_pattern =
        report.violations == expected_violation_pattern(m, row.degree);
    row.violations = std::move(report.violations);
    result.rows.push_back(std::move(row));
  }

  for (int t = t_max; t >= 0; --t) {
    if (result.rows[static_cast<size_t>(t)].violations.size() ==
        static_cast<size_t>(m))
      result.minimal_t = t;
    else
      break;
  }
  return result;
}

std::optional<int> minimal_t(int m, int t_max) {
  return theorem_sweep(m, t_max).minimal_t;
}

}  // namespace indpoly
