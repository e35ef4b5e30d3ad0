#include "indpoly/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace indpoly {

DensePolynomial::DensePolynomial(std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs)) {
  normalize();
}

DensePolynomial::DensePolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

DensePolynomial DensePolynomial::monomial(int k, BigInt c) {
  if (k < 0) throw std::invalid_argument("monomial: negative power");
  if (c == 0) return zero();
  std::vector<BigInt> coeffs(static_cast<size_t>(k) + 1);
  coeffs.back() = std::move(c);
  return DensePolynomial(std::move(coeffs));
}

int DensePolynomial::degree() const {
  if (coeffs_.empty())
    throw std::logic_error("degree of the zero polynomial is undefined");
  return static_cast<int>(coeffs_.size()) - 1;
}

const BigInt& DensePolynomial::operator[](int k) const {
  static const BigInt zero_coeff = 0;
  if (k < 0 || static_cast<size_t>(k) >= coeffs_.size()) return zero_coeff;
  return coeffs_[static_cast<size_t>(k)];
}

void DensePolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

DensePolynomial operator+(const DensePolynomial& p, const DensePolynomial& q) {
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<BigInt> sum(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) sum[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) sum[i] += b[i];
  return DensePolynomial(std::move(sum));
}

DensePolynomial operator-(const DensePolynomial& p, const DensePolynomial& q) {
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<BigInt> diff(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) diff[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) diff[i] -= b[i];
  return DensePolynomial(std::move(diff));
}

DensePolynomial operator*(const DensePolynomial& p, const DensePolynomial& q) {
  if (p.is_zero() || q.is_zero()) return DensePolynomial::zero();
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<BigInt> prod(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      mpz_addmul(prod[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  return DensePolynomial(std::move(prod));
}

DensePolynomial pow(const DensePolynomial& p, unsigned long e) {
  DensePolynomial result = DensePolynomial::one();
  DensePolynomial base = p;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

DensePolynomial shifted(const DensePolynomial& p, int k) {
  if (k < 0) throw std::invalid_argument("shifted: negative power");
  if (p.is_zero() || k == 0) return p;
  std::vector<BigInt> coeffs(p.coeffs().size() + static_cast<size_t>(k));
  std::copy(p.coeffs().begin(), p.coeffs().end(),
            coeffs.begin() + static_cast<std::ptrdiff_t>(k));
  return DensePolynomial(std::move(coeffs));
}

DensePolynomial reflect(const DensePolynomial& p) {
  if (p.is_zero())
    throw std::invalid_argument("reflect: the zero polynomial has no degree");
  std::vector<BigInt> rev(p.coeffs().rbegin(), p.coeffs().rend());
  return DensePolynomial(std::move(rev));
}

BigInt evaluate(const DensePolynomial& p, const BigInt& x) {
  BigInt value = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    value = value * x + *it;
  return value;
}

std::string to_string(const DensePolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = 0; k <= p.degree(); ++k) {
    if (p[k] == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (k == 0) {
      out << p[k].get_str();
    } else {
      if (p[k] != 1) out << p[k].get_str() << "*";
      out << "x";
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const DensePolynomial& p) {
  return os << to_string(p);
}

}  // namespace indpoly
