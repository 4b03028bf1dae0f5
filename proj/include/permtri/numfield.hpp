// numfield.hpp
//
// Exact arithmetic in the real fields Q(2cos(pi/m)).  A Field is a monic
// minimal polynomial together with an isolating interval for the chosen
// real root theta; a Scalar stores rational coordinates in the power basis.

#pragma once

#include <gmpxx.h>

#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "permtri/errors.hpp"

namespace permtri {

using Rational = mpq_class;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  // min_poly[k] is the coefficient of x^k; the polynomial is monic.
  Field(std::vector<Rational> min_poly, Rational lo, Rational hi, int generator_m);

  int degree() const { return static_cast<int>(min_poly_.size()) - 1; }
  const std::vector<Rational>& min_poly() const { return min_poly_; }
  std::pair<Rational, Rational> isolating_interval() const { return {lo_, hi_}; }
  int generator_m() const { return m_; }
  bool is_rational() const { return degree() == 1; }
  std::string describe() const;

  // Narrow the isolating interval by bisection until its width is at most 2^-bits.
  std::pair<Rational, Rational> refine(const Rational& lo, const Rational& hi) const;
  int poly_sign_at(const Rational& x) const;

 private:
  std::vector<Rational> min_poly_;
  Rational lo_, hi_;  // already refined on construction
  int m_;
};

// The rationals, shared.
FieldPtr rational_field();

// Smallest supported field holding 2cos(pi/m) for every m outside {2,3,4,6}.
// Throws InvalidInput for m < 2 and when the degree exceeds max_degree.
FieldPtr field_make(const std::set<int>& m_values, int max_degree = 8);

// Minimal polynomial of 2cos(pi/m) with integer coefficients, low degree first.
std::vector<Rational> cos_min_poly(int m);

class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(FieldPtr f);
  Scalar(FieldPtr f, const Rational& q);
  Scalar(FieldPtr f, std::vector<Rational> coeffs);

  static Scalar theta(FieldPtr f);

  const FieldPtr& field() const { return f_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;
  const Rational& rational_part() const { return c_[0]; }

  Scalar& operator+=(const Scalar& b);
  Scalar& operator-=(const Scalar& b);
  Scalar& operator*=(const Scalar& b);
  Scalar& operator/=(const Scalar& b);
  Scalar operator-() const;
  Scalar inverse() const;

  int sign() const;
  double to_double() const;
  std::string to_string() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator<(const Scalar& a, const Scalar& b) { return (a - b).sign() < 0; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return (a - b).sign() > 0; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return (a - b).sign() <= 0; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return (a - b).sign() >= 0; }

  Scalar& mul_rational(const Rational& q);

 private:
  void check_same(const Scalar& b) const;
  FieldPtr f_;
  std::vector<Rational> c_;
};

// Chebyshev-style polynomial: 2cos(k x) as a polynomial in 2cos(x), evaluated at theta.
Scalar two_cos_multiple(const FieldPtr& f, int k);

}  // namespace permtri
