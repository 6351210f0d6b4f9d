#pragma once

#include <span>
#include <string>
#include <vector>

#include "cohomtab/rational.hpp"

namespace cohomtab {

// Univariate polynomial in the twist variable d with exact rational
// coefficients, stored constant term first with no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  static Polynomial constant(const Rational& c);
  // ∏ (d - root)
  static Polynomial from_roots(std::span<const int> roots);
  // binomial(d + shift, k) as a polynomial in d.
  static Polynomial binomial(int shift, int k);

  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Rational leading() const;

  Rational operator()(const Rational& x) const;
  Rational operator()(long x) const { return (*this)(Rational(x)); }

  // p(d + a)
  Polynomial shifted(int a) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  // Human-readable form in the variable `var`, e.g. "d^2 - d - 6".
  std::string to_string(const std::string& var = "d") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace cohomtab
