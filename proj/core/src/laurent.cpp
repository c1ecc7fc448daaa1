#include "qint/laurent.hpp"

#include <sstream>

#include "qint/errors.hpp"

namespace qint {

Rational parse_rational(std::string_view text) {
  Rational q;
  std::string s(text);
  if (s.empty() || q.set_str(s, 10) != 0) {
    throw DomainError("malformed rational: '" + s + "'");
  }
  if (q.get_den() == 0) throw DomainError("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

LaurentPolynomial::LaurentPolynomial(const Rational& constant) { add_term(0, constant); }

LaurentPolynomial LaurentPolynomial::monomial(int exponent, const Rational& coeff) {
  LaurentPolynomial p;
  p.add_term(exponent, coeff);
  return p;
}

std::optional<int> LaurentPolynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

std::optional<int> LaurentPolynomial::low_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

Rational LaurentPolynomial::leading_coefficient() const {
  if (terms_.empty()) return Rational(0);
  return terms_.rbegin()->second;
}

Rational LaurentPolynomial::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPolynomial::add_term(int exponent, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& rhs) {
  LaurentPolynomial out;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : rhs.terms_) out.add_term(e1 + e2, c1 * c2);
  }
  terms_ = std::move(out.terms_);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned k) const {
  LaurentPolynomial result(Rational(1));
  LaurentPolynomial base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

std::complex<double> LaurentPolynomial::evaluate(std::complex<double> z) const {
  std::complex<double> sum = 0.0;
  for (const auto& [e, c] : terms_) sum += c.get_d() * std::pow(z, e);
  return sum;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << "z";
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

std::vector<std::pair<int, std::string>> LaurentPolynomial::to_pairs() const {
  std::vector<std::pair<int, std::string>> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.emplace_back(e, c.get_str());
  return out;
}

LaurentPolynomial LaurentPolynomial::from_pairs(const std::vector<std::pair<int, std::string>>& pairs) {
  LaurentPolynomial p;
  for (const auto& [e, s] : pairs) p.add_term(e, parse_rational(s));
  return p;
}

const LaurentPolynomial& triangle_ratio() {
  static const LaurentPolynomial ratio = [] {
    LaurentPolynomial r;
    r.add_term(2, 1);
    r.add_term(0, 1);
    r.add_term(-2, 1);
    return r;
  }();
  return ratio;
}

}  // namespace qint
