#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qint/rational.hpp"

namespace qint {

/// Sparse Laurent polynomial in one variable z with exact rational
/// coefficients. Zero coefficients are never stored, so the zero
/// polynomial is the empty term map.
class LaurentPolynomial {
 public:
  using TermMap = std::map<int, Rational>;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(const Rational& constant);

  static LaurentPolynomial monomial(int exponent, const Rational& coeff = 1);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  /// Highest and lowest exponent present; nullopt for the zero polynomial.
  std::optional<int> degree() const;
  std::optional<int> low_degree() const;
  /// Coefficient of the highest-degree term; 0 for the zero polynomial.
  Rational leading_coefficient() const;
  Rational coefficient(int exponent) const;

  void add_term(int exponent, const Rational& coeff);

  LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator-=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator*=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator*=(const Rational& scalar);

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(LaurentPolynomial a, const LaurentPolynomial& b) { return a *= b; }
  friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational& s) { return a *= s; }
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a.terms_ == b.terms_; }

  LaurentPolynomial pow(unsigned k) const;

  std::complex<double> evaluate(std::complex<double> z) const;

  /// Human-readable form, e.g. "z^-4 - 2 + z^4"; "0" for the zero polynomial.
  std::string to_string() const;

  /// Serialization form: ascending [[exponent, "p/q"], ...].
  std::vector<std::pair<int, std::string>> to_pairs() const;
  static LaurentPolynomial from_pairs(const std::vector<std::pair<int, std::string>>& pairs);

 private:
  TermMap terms_;
};

/// z^2 + 1 + z^-2, the ratio of squared triangle coefficients.
const LaurentPolynomial& triangle_ratio();

}  // namespace qint
