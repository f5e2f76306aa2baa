#include "qmp/exact.hpp"

#include <cctype>
#include <sstream>

#include "qmp/error.hpp"

namespace qmp {

ZVector primitive(const QVector& v) {
  Integer den = 1;
  for (const auto& x : v) den = lcm(den, Integer(x.get_den()));
  ZVector out;
  out.reserve(v.size());
  Integer g = 0;
  for (const auto& x : v) {
    Integer z = Integer(x.get_num()) * (den / Integer(x.get_den()));
    g = gcd(g, z);
    out.push_back(z);
  }
  if (g != 0 && g != 1) {
    for (auto& z : out) z /= g;
  }
  return out;
}

ZVector primitive(const ZVector& v) {
  Integer g = 0;
  for (const auto& z : v) g = gcd(g, z);
  ZVector out = v;
  if (g != 0 && g != 1) {
    for (auto& z : out) z /= g;
  }
  return out;
}

ZVector canonical_hyperplane(const QVector& v) {
  ZVector out = primitive(v);
  for (const auto& z : out) {
    if (z == 0) continue;
    if (z < 0) {
      for (auto& w : out) w = -w;
    }
    break;
  }
  return out;
}

Rational dot(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) fail(ErrorCode::kDimensionMismatch, "dot of unequal lengths");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer dot(const ZVector& a, const ZVector& b) {
  if (a.size() != b.size()) fail(ErrorCode::kDimensionMismatch, "dot of unequal lengths");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QVector to_q(const ZVector& v) { return QVector(v.begin(), v.end()); }

QVector to_q(const std::vector<std::int64_t>& v) {
  QVector out;
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) fail(ErrorCode::kInternal, "integer does not fit in 64 bits");
  return z.get_si();
}

std::vector<std::int64_t> to_int64(const ZVector& v) {
  std::vector<std::int64_t> out;
  for (const auto& z : v) out.push_back(to_int64(z));
  return out;
}

double to_double(const Rational& q) { return q.get_d(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) fail(ErrorCode::kInvalidArgument, "empty rational");
  try {
    const auto dot_pos = s.find('.');
    if (dot_pos != std::string::npos) {
      if (s.find('/') != std::string::npos) throw std::invalid_argument("mixed");
      std::string digits = s.substr(0, dot_pos) + s.substr(dot_pos + 1);
      const std::size_t decimals = s.size() - dot_pos - 1;
      if (digits == "-" || digits == "+" || digits.empty()) throw std::invalid_argument("bad");
      if (digits[0] == '+') digits.erase(0, 1);
      Integer num(digits, 10);
      Integer den = 1;
      for (std::size_t i = 0; i < decimals; ++i) den *= 10;
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    if (s[0] == '+') s.erase(0, 1);
    Rational q(s, 10);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    fail(ErrorCode::kInvalidArgument, "not a rational number: " + text);
  }
}

QVector parse_rational_list(const std::string& text, char sep) {
  QVector out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(parse_rational(item));
  return out;
}

bool is_zero(const QVector& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace qmp
