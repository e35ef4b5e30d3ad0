#include <doctest.h>

#include <cmath>
#include <set>

#include "indpoly/analysis.hpp"
#include "indpoly/engines.hpp"
#include "indpoly/tree.hpp"
#include "oracles.hpp"

using namespace indpoly;

TEST_SUITE_BEGIN("analysis");

TEST_CASE("log-concavity report basics") {
  // 1 + x + 2x^2: 1^2 < 1*2 at index 1
  const LogConcavityReport bad = log_concavity_report(DensePolynomial{1, 1, 2});
  CHECK(bad.violations == std::vector<int>{1});
  CHECK(bad.diff_at(1) == -1);
  CHECK(bad.diffs_sign() == "-");
  // nondecreasing, so still unimodal: violations do not imply a dip
  CHECK(bad.unimodal);
  CHECK(bad.mode_index == 2);

  const LogConcavityReport dip = log_concavity_report(DensePolynomial{2, 1, 3});
  CHECK_FALSE(dip.unimodal);
  CHECK(dip.violations == std::vector<int>{1});
  CHECK(dip.mode_index == 2);

  const LogConcavityReport binomials = log_concavity_report(pow(DensePolynomial{1, 1}, 8));
  CHECK(binomials.violations.empty());
  CHECK(binomials.unimodal);
  CHECK(binomials.mode_index == 4);
  CHECK(binomials.diffs_sign() == std::string(7, '+'));

  CHECK(log_concavity_report(DensePolynomial{1, 3, 2}).unimodal);
  CHECK(log_concavity_report(DensePolynomial{1, 3, 2}).violations.empty());
}

TEST_CASE("log-concavity report edge cases") {
  const LogConcavityReport tiny = log_concavity_report(DensePolynomial{1, 5});
  CHECK(tiny.degree == 1);
  CHECK(tiny.diffs.empty());
  CHECK(tiny.violations.empty());
  CHECK(tiny.unimodal);

  CHECK(log_concavity_report(DensePolynomial{7}).unimodal);
  CHECK_THROWS_AS(log_concavity_report(DensePolynomial{1, -1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(log_concavity_report(DensePolynomial::zero()), std::invalid_argument);
}

TEST_CASE("golden violation sets") {
  const LogConcavityReport tg25 = log_concavity_report(closed_form_TG(2, 5));
  CHECK(tg25.degree == 37);
  CHECK(tg25.violations == std::vector<int>{34, 36});
  CHECK(tg25.unimodal);  // the breaks live in the decreasing tail

  CHECK(log_concavity_report(closed_form_TG(4, 6)).violations ==
        std::vector<int>{78, 80, 82, 84});
  CHECK(log_concavity_report(closed_form_TG(5, 6)).violations ==
        std::vector<int>{97, 99, 101, 103, 105});
}

TEST_CASE("reflected identities") {
  CHECK(verify_reflected_identities(1, 0));
  CHECK(verify_reflected_identities(1, 1));
  CHECK(verify_reflected_identities(2, 5));
  const IdentityCheck check = check_reflected_identities(3, 4);
  CHECK(check.all_hold());
  CHECK(check.failed_identity.empty());
  CHECK(check.first_difference_index == -1);
  CHECK_THROWS_AS(check_reflected_identities(0, 1), std::invalid_argument);
}

TEST_CASE("reflected coefficients") {
  // c_0 is the leading coefficient of I: both top-degree summands of the TG
  // closed form contribute 1, so every instance has exactly two maximum
  // independent sets. The highest index k gives the constant term 1 of I.
  for (int m = 1; m <= 2; ++m)
    for (int t = 1; t <= 5; ++t) {
      CHECK(reflected_coefficient(m, t, 0) == 2);
      CHECK(reflected_coefficient(m, t, 3 * (t + 1) * m + 1) == 1);
    }
  // brute force agrees that TG(1,2) has two maximum independent sets
  const DensePolynomial tg12 = indpoly_bruteforce(tree_TG(1, 2));
  CHECK(tg12[tg12.degree()] == 2);

  // against brute force on the 12-vertex instance: c_1(1,1) is the
  // coefficient of x^{alpha-1} = x^6 in I(TG_{1,1})
  const DensePolynomial p = indpoly_bruteforce(tree_TG(1, 1));
  REQUIRE(p.degree() == 7);
  CHECK(reflected_coefficient(1, 1, 1) == p[6]);
  CHECK(reflected_coefficient(1, 1, 1) == 19);

  CHECK_THROWS_AS(reflected_coefficient(1, 1, 8), std::out_of_range);
  CHECK_THROWS_AS(reflected_coefficient(1, 1, -1), std::out_of_range);
}

TEST_CASE("log2_approx") {
  CHECK(log2_approx(BigInt(1)) == 0.0);
  CHECK(log2_approx(BigInt(1) << 100) == doctest::Approx(100.0));
  const BigInt v = (BigInt(1) << 100) + (BigInt(1) << 99);
  CHECK(log2_approx(v) == doctest::Approx(100.0 + std::log2(1.5)));
  for (long small : {2L, 3L, 1000L, 123456789L})
    CHECK(log2_approx(BigInt(small)) == doctest::Approx(std::log2(double(small))));
  CHECK_THROWS_AS(log2_approx(BigInt(0)), std::invalid_argument);
}

TEST_CASE("asymptotic probe") {
  // k = 0: c_0 is the constant 2, so every residual is exactly log2(2) = 1
  const AsymptoticProbe flat = asymptotic_probe(2, 0, {10, 20});
  CHECK(flat.predicted_exponent == 0);
  for (double r : flat.residuals) CHECK(r == 1.0);
  CHECK(flat.measured_slope == doctest::Approx(0.0));
  CHECK(flat.passes());

  const AsymptoticProbe p23 = asymptotic_probe(2, 3, {10, 30});
  CHECK(p23.predicted_exponent == 4);
  CHECK(std::abs(p23.measured_slope - 4.0) < 0.05);
  CHECK(p23.passes());
  CHECK(p23.t_values.size() == 21);
  CHECK(p23.residuals.size() == 21);
  CHECK(p23.bit_lengths.size() == 21);

  CHECK(asymptotic_probe(3, 6, {10, 20}).predicted_exponent == 9);

  CHECK_THROWS_AS(asymptotic_probe(2, 5, {10, 20}), std::invalid_argument);
  CHECK_THROWS_AS(asymptotic_probe(2, 2, {10, 70}), std::invalid_argument);
  CHECK_THROWS_AS(asymptotic_probe(2, 2, {10, 10}), std::invalid_argument);
}

TEST_CASE("theorem sweep") {
  const SweepResult m4 = theorem_sweep(4, 6);
  CHECK(m4.rows.size() == 7);
  CHECK(m4.rows[6].violations == std::vector<int>{78, 80, 82, 84});
  CHECK(m4.rows[6].matches_pattern);
  CHECK(m4.rows[6].degree == 85);

  const SweepResult m2 = theorem_sweep(2, 5);
  CHECK(m2.rows[5].violations == std::vector<int>{34, 36});
  CHECK(m2.minimal_t == 5);

  CHECK(theorem_sweep(5, 6).rows[6].violations ==
        std::vector<int>{97, 99, 101, 103, 105});
}

TEST_CASE("minimal_t") {
  CHECK(minimal_t(1, 10) == 5);
  CHECK(minimal_t(2, 10) == 5);
  CHECK(*minimal_t(2, 10) <= 5);  // the reported instance works at t = 5
  CHECK(minimal_t(5, 10) == 6);
  CHECK(*minimal_t(5, 10) <= 6);
  // a window that ends before the violations start finds nothing
  CHECK_FALSE(minimal_t(2, 3).has_value());
}

TEST_CASE("expected violation pattern") {
  CHECK(expected_violation_pattern(2, 37) == std::vector<int>{34, 36});
  CHECK(expected_violation_pattern(4, 85) == std::vector<int>{78, 80, 82, 84});
  CHECK(expected_violation_pattern(1, 7) == std::vector<int>{6});
}

TEST_CASE("violations reflect across the reversed polynomial") {
  for (int m = 1; m <= 3; ++m)
    for (int t = 0; t <= 6; ++t) {
      const DensePolynomial p = closed_form_TG(m, t);
      const LogConcavityReport front = log_concavity_report(p);
      const LogConcavityReport back = log_concavity_report(reflect(p));
      std::set<int> mapped;
      for (int k : front.violations) mapped.insert(p.degree() - k);
      CHECK(mapped == std::set<int>(back.violations.begin(), back.violations.end()));
    }
}

TEST_CASE("even-index sign property at a fixed t") {
  for (int m = 2; m <= 5; ++m) {
    const DensePolynomial r = reflect(closed_form_TG(m, 8));
    for (int j = 0; 2 * j <= 2 * (m - 1); ++j) {
      const int k = 2 * j;
      CHECK(r[k] * r[k + 2] - r[k + 1] * r[k + 1] > 0);
    }
  }
}

TEST_SUITE_END();
