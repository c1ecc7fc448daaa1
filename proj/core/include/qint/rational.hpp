#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qint {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Canonical text form: "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const BigInt& n) { return n.get_str(); }

/// Parses "p", "p/q" or "-p/q"; throws DomainError on malformed input.
Rational parse_rational(std::string_view text);

}  // namespace qint
