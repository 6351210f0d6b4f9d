#include "cohomtab/polynomial.hpp"

#include <sstream>

namespace cohomtab {

Polynomial::Polynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::from_roots(std::span<const int> roots) {
  Polynomial p = constant(1);
  for (int z : roots) p = p * Polynomial({Rational(-z), Rational(1)});
  return p;
}

Polynomial Polynomial::binomial(int shift, int k) {
  if (k < 0) return {};
  Polynomial p = constant(1);
  Integer factorial = 1;
  for (int m = 0; m < k; ++m) {
    p = p * Polynomial({Rational(shift - m), Rational(1)});
    factorial *= m + 1;
  }
  return p * Rational(Integer(1), factorial);
}

Rational Polynomial::leading() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::shifted(int a) const {
  // Horner in the polynomial ring: p(d + a).
  Polynomial acc;
  const Polynomial step({Rational(a), Rational(1)});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * step + constant(*it);
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

std::string Polynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rational c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Rational mag = abs(c);
    if (k == 0 || mag != 1) os << format_rational(mag, true);
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

}  // namespace cohomtab
