#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace indpoly {

// Coefficients are signed arbitrary-precision integers throughout, even though
// independence polynomials are nonnegative: log-concavity differences
// a_k^2 - a_{k-1} a_{k+1} are signed and far beyond 64 bits.
using BigInt = mpz_class;

// Dense integer polynomial. coeffs()[k] is the coefficient of x^k.
// Normalized at all times: the last stored coefficient is nonzero, and the
// zero polynomial is the empty sequence (its degree is undefined, not -1).
class DensePolynomial {
 public:
  DensePolynomial() = default;
  explicit DensePolynomial(std::vector<BigInt> coeffs);
  DensePolynomial(std::initializer_list<long> coeffs);

  static DensePolynomial zero() { return DensePolynomial{}; }
  static DensePolynomial one() { return DensePolynomial{1}; }
  // c * x^k
  static DensePolynomial monomial(int k, BigInt c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  // Throws std::logic_error on the zero polynomial.
  int degree() const;
  // Coefficient of x^k; zero outside the stored range.
  const BigInt& operator[](int k) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  bool operator==(const DensePolynomial&) const = default;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

DensePolynomial operator+(const DensePolynomial& p, const DensePolynomial& q);
DensePolynomial operator-(const DensePolynomial& p, const DensePolynomial& q);
// Exact schoolbook convolution.
DensePolynomial operator*(const DensePolynomial& p, const DensePolynomial& q);

// p^e by square-and-multiply; pow(p, 0) = 1.
DensePolynomial pow(const DensePolynomial& p, unsigned long e);

// p * x^k
DensePolynomial shifted(const DensePolynomial& p, int k);

// Reversed coefficient sequence: x^deg(p) * p(1/x). Rejects the zero
// polynomial. The degree drops when p(0) = 0.
DensePolynomial reflect(const DensePolynomial& p);

// Exact integer evaluation (Horner).
BigInt evaluate(const DensePolynomial& p, const BigInt& x);

std::string to_string(const DensePolynomial& p);
std::ostream& operator<<(std::ostream& os, const DensePolynomial& p);

}  // namespace indpoly
