#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qmp {

using Rational = mpq_class;
using Integer = mpz_class;
using QVector = std::vector<mpq_class>;
using ZVector = std::vector<mpz_class>;

/// Clear denominators and divide by the gcd; direction (sign) is preserved.
ZVector primitive(const QVector& v);
ZVector primitive(const ZVector& v);

/// Primitive integer vector whose first nonzero entry is positive.
ZVector canonical_hyperplane(const QVector& v);

Rational dot(const QVector& a, const QVector& b);
Integer dot(const ZVector& a, const ZVector& b);

QVector to_q(const ZVector& v);
QVector to_q(const std::vector<std::int64_t>& v);
std::vector<std::int64_t> to_int64(const ZVector& v);
std::int64_t to_int64(const Integer& z);
double to_double(const Rational& q);

/// "p/q" when q != 1, otherwise "p".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts integers, fractions "p/q" and finite decimals "0.25".
Rational parse_rational(const std::string& text);
QVector parse_rational_list(const std::string& text, char sep = ',');

bool is_zero(const QVector& v);

}  // namespace qmp
