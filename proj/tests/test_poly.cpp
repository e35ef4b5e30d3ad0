#include <doctest.h>

#include <random>

#include "indpoly/poly.hpp"
#include "oracles.hpp"

using namespace indpoly;

TEST_SUITE_BEGIN("poly");

TEST_CASE("addition") {
  CHECK(DensePolynomial{1, 1} + DensePolynomial{1, 2} == DensePolynomial{2, 3});

  const DensePolynomial p{3, 0, 7};
  CHECK(p + DensePolynomial::zero() == p);

  // cancellation renormalizes down to the empty sequence
  CHECK((DensePolynomial{1, 1} + DensePolynomial{-1, -1}).is_zero());
  CHECK(DensePolynomial{1, 1} - DensePolynomial{1, 1} == DensePolynomial::zero());
}

TEST_CASE("multiplication") {
  CHECK(DensePolynomial{1, 1} * DensePolynomial{1, 2} == DensePolynomial{1, 3, 2});

  const DensePolynomial p{5, 0, 0, 2};
  CHECK(p * DensePolynomial::one() == p);
  CHECK((p * DensePolynomial::zero()).is_zero());

  // coefficient of x^3 in (1+2x)^5 is C(5,3)*2^3 = 80; cross-checked by
  // multiplying out one factor at a time
  DensePolynomial fifth = DensePolynomial::one();
  for (int i = 0; i < 5; ++i) fifth = fifth * DensePolynomial{1, 2};
  CHECK(fifth[3] == 80);
  CHECK(fifth[3] == oracles::binomial(5, 3) * 8);
  CHECK(pow(DensePolynomial{1, 2}, 5) == fifth);
}

TEST_CASE("pow") {
  const DensePolynomial p{1, 2};
  CHECK(pow(p, 0) == DensePolynomial::one());
  CHECK(pow(p, 2) == DensePolynomial{1, 4, 4});
  CHECK(pow(DensePolynomial::zero(), 0) == DensePolynomial::one());

  const DensePolynomial row6 = pow(DensePolynomial{1, 1}, 6);
  REQUIRE(row6.degree() == 6);
  for (int k = 0; k <= 6; ++k) CHECK(row6[k] == oracles::binomial(6, k));
}

TEST_CASE("degree and normalization") {
  CHECK(DensePolynomial{1, 2, 0, 0}.degree() == 1);
  CHECK(DensePolynomial{7}.degree() == 0);
  CHECK(DensePolynomial{0, 0}.is_zero());
  CHECK_THROWS_AS(DensePolynomial::zero().degree(), std::logic_error);

  CHECK(DensePolynomial::monomial(3)[3] == 1);
  CHECK(DensePolynomial::monomial(3).degree() == 3);
  CHECK(DensePolynomial::monomial(2, 0).is_zero());
}

TEST_CASE("reflect") {
  CHECK(reflect(DensePolynomial{1, 2}) == DensePolynomial{2, 1});
  // degree drops when the constant term is zero
  CHECK(reflect(DensePolynomial{0, 1, 3}) == DensePolynomial{3, 1});
  CHECK_THROWS_AS(reflect(DensePolynomial::zero()), std::invalid_argument);
}

TEST_CASE("shift and evaluate") {
  CHECK(shifted(DensePolynomial{1, 2}, 2) == DensePolynomial{0, 0, 1, 2});
  CHECK(shifted(DensePolynomial::zero(), 3).is_zero());
  CHECK(evaluate(DensePolynomial{1, 2}, 3) == 7);
  CHECK(evaluate(DensePolynomial::zero(), 5) == 0);
  CHECK(evaluate(DensePolynomial{1, 4, 3}, 1) == 8);
}

TEST_CASE("reflection properties on random polynomials") {
  std::mt19937_64 rng(20240617);
  for (int round = 0; round < 300; ++round) {
    const int dp = 1 + static_cast<int>(rng() % 12);
    const int dq = 1 + static_cast<int>(rng() % 12);
    const DensePolynomial p = oracles::random_poly(rng, dp, true);
    const DensePolynomial q = oracles::random_poly(rng, dq, true);

    // involution needs a nonzero constant term
    CHECK(reflect(reflect(p)) == p);

    // multiplicativity
    CHECK(reflect(p * q) == reflect(p) * reflect(q));

    // conditional additivity when deg(p+q) = deg p
    if (p.degree() > q.degree()) {
      CHECK(reflect(p + q) ==
            reflect(p) + shifted(reflect(q), p.degree() - q.degree()));
    }
  }
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937_64 rng(731);
  for (int round = 0; round < 100; ++round) {
    const DensePolynomial a = oracles::random_poly(rng, 1 + static_cast<int>(rng() % 8), false);
    const DensePolynomial b = oracles::random_poly(rng, 1 + static_cast<int>(rng() % 8), false);
    const DensePolynomial c = oracles::random_poly(rng, 1 + static_cast<int>(rng() % 8), false);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);

    const unsigned long e = rng() % 5;
    const unsigned long f = rng() % 5;
    CHECK(pow(a, e) * pow(a, f) == pow(a, e + f));
  }
}

TEST_CASE("to_string") {
  CHECK(to_string(DensePolynomial{1, 2, 0, 1}) == "1 + 2*x + x^3");
  CHECK(to_string(DensePolynomial::zero()) == "0");
  CHECK(to_string(DensePolynomial{5}) == "5");
}

TEST_SUITE_END();
