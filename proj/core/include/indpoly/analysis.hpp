#pragma once

#include <optional>
#include <string>
#include <vector>

#include "indpoly/poly.hpp"

namespace indpoly {

// Log-concavity audit of a nonnegative coefficient sequence a_0..a_degree.
// diffs[k-1] = a_k^2 - a_{k-1} a_{k+1} for interior indices k = 1..degree-1;
// index k is a violation iff that difference is strictly negative.
struct LogConcavityReport {
  int degree = 0;
  std::vector<BigInt> diffs;
  std::vector<int> violations;  // ascending
  bool unimodal = false;
  int mode_index = 0;  // first position attaining the maximal coefficient

  const BigInt& diff_at(int k) const { return diffs[static_cast<size_t>(k - 1)]; }
  // '+', '-' or '0' per interior index, in order.
  std::string diffs_sign() const;
};

// Rejects polynomials with a negative coefficient and the zero polynomial.
// degree < 2 yields an empty report that is trivially log-concave.
LogConcavityReport log_concavity_report(const DensePolynomial& p);

// Exact checks of the three reflected-polynomial identities tying the TG
// closed form to the star and T closed forms:
//   reflected star:  RI(S_{2,t})   = (x+1)^t + x(x+2)^t
//   reflected T:     RI(T_{3,t})   = RI(S_{2,t})^3 + x^2 (x+2)^{3t}
//   reflected TG:    RI(TG_{m,t})  = (x+1) RI(T_{3,t})^m + RI(S_{2,t})^{3m}
struct IdentityCheck {
  bool star_identity = false;
  bool t_identity = false;
  bool tg_identity = false;
  // On failure: which identity failed first and the first coefficient index
  // where the two sides differ.
  std::string failed_identity;
  int first_difference_index = -1;

  bool all_hold() const { return star_identity && t_identity && tg_identity; }
};

IdentityCheck check_reflected_identities(int m, int t);
bool verify_reflected_identities(int m, int t);

// Coefficient of x^k in the reflected TG polynomial, i.e. the coefficient of
// x^{alpha-k} in the independence polynomial itself. k must lie in
// [0, 3(t+1)m + 1].
BigInt reflected_coefficient(int m, int t, int k);

// alpha - 1 - 2j for j = 0..m-1, ascending: where the violations of a TG
// instance of independence number alpha are predicted to sit.
std::vector<int> expected_violation_pattern(int m, int alpha);

// log2 via the bit length plus a fractional correction from the top 64 bits;
// never converts the full integer to floating point. Requires v > 0.
double log2_approx(const BigInt& v);

struct TRange {
  int t_min = 0;
  int t_max = 0;
};

// Numerical surrogate for the exact-order growth claim on the reflected TG
// coefficients: measures log2 c_k(m,t) across a t window against the
// predicted exponent u_k = k + floor(k/2).
struct AsymptoticProbe {
  int m = 0;
  int k = 0;
  int predicted_exponent = 0;
  std::vector<int> t_values;
  std::vector<size_t> bit_lengths;  // bit length of c_k(m,t), per t
  std::vector<double> residuals;    // log2 c_k(m,t) - u_k * t, per t
  double measured_slope = 0.0;      // least-squares slope of log2 c_k vs t

  // Slope within slope_tol of the predicted exponent, and every residual
  // within 3*log2(t_last/t) + 2 of the residual at the largest probed t.
  bool passes(double slope_tol = 0.05) const;
};

// k is restricted to the guaranteed window k <= 2m; range.t_max <= 60.
AsymptoticProbe asymptotic_probe(int m, int k, TRange range);

struct SweepRow {
  int t = 0;
  int degree = 0;
  std::vector<int> violations;
  bool matches_pattern = false;  // violations == expected_violation_pattern
};

// Violation sets of the TG family for t = 0..t_max, plus the smallest t from
// which every probed instance has exactly m violations. Extra or missing
// violations below the threshold are recorded as-is, never suppressed.
struct SweepResult {
  int m = 0;
  std::vector<SweepRow> rows;
  std::optional<int> minimal_t;
};

SweepResult theorem_sweep(int m, int t_max);

// Smallest t <= t_max such that every t' in [t, t_max] has exactly m
// violations; nullopt when even t_max does not.
std::optional<int> minimal_t(int m, int t_max);

}  // namespace indpoly
