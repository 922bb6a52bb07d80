#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <initializer_list>
#include <string>
#include <vector>

namespace wonder {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Univariate polynomial with exact rational coefficients, ascending degree.
/// The zero polynomial has no coefficients.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs);
  RationalPolynomial(std::initializer_list<Rational> coeffs);

  static RationalPolynomial constant(const Rational& c) { return RationalPolynomial({c}); }
  /// a*m + b
  static RationalPolynomial linear(const Rational& a, const Rational& b) { return RationalPolynomial({b, a}); }

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

  Rational operator()(const Rational& m) const;
  /// p(a*m + b).
  RationalPolynomial compose_affine(const Rational& a, const Rational& b) const;

  friend RationalPolynomial operator+(const RationalPolynomial& p, const RationalPolynomial& q);
  friend RationalPolynomial operator*(const RationalPolynomial& p, const RationalPolynomial& q);
  friend RationalPolynomial operator*(const Rational& c, const RationalPolynomial& p);
  friend bool operator==(const RationalPolynomial& p, const RationalPolynomial& q) { return p.coeffs_ == q.coeffs_; }

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace wonder
