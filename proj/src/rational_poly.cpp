#include "wonder/rational_poly.hpp"

#include <algorithm>

namespace wonder {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RationalPolynomial::RationalPolynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::operator()(const Rational& m) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * m + *it;
  return acc;
}

RationalPolynomial RationalPolynomial::compose_affine(const Rational& a, const Rational& b) const {
  // Horner in the polynomial ring
  RationalPolynomial acc;
  const auto x = linear(a, b);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + constant(*it);
  return acc;
}

RationalPolynomial operator+(const RationalPolynomial& p, const RationalPolynomial& q) {
  std::vector<Rational> c(std::max(p.coeffs_.size(), q.coeffs_.size()));
  for (std::size_t k = 0; k < p.coeffs_.size(); ++k) c[k] += p.coeffs_[k];
  for (std::size_t k = 0; k < q.coeffs_.size(); ++k) c[k] += q.coeffs_[k];
  return RationalPolynomial(std::move(c));
}

RationalPolynomial operator*(const RationalPolynomial& p, const RationalPolynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<Rational> c(p.coeffs_.size() + q.coeffs_.size() - 1);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) c[i + j] += p.coeffs_[i] * q.coeffs_[j];
  return RationalPolynomial(std::move(c));
}

RationalPolynomial operator*(const Rational& c, const RationalPolynomial& p) { return RationalPolynomial::constant(c) * p; }

std::string RationalPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const bool unit = mag == 1 && k > 0;
    if (!unit) {
      const std::string s = mag.str();
      out += (k > 0 && s.find('/') != std::string::npos) ? "(" + s + ")" : s;
    }
    if (k >= 1) out += "m";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace wonder
