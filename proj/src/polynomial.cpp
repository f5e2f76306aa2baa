#include "qmp/polynomial.hpp"

#include <algorithm>

#include "qmp/error.hpp"

namespace qmp {
namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::kInternal, "polynomial coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::kInternal, "polynomial coefficient overflow");
  return r;
}

void check_var(int i) {
  if (i < 0 || i >= kMaxVariables) fail(ErrorCode::kInvalidArgument, "variable index out of range");
}

}  // namespace

void IntPolynomial::add_term(const Monomial& m, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

IntPolynomial IntPolynomial::constant(std::int64_t c) {
  IntPolynomial p;
  p.add_term(Monomial{}, c);
  return p;
}

IntPolynomial IntPolynomial::variable(int index) {
  check_var(index);
  Monomial m{};
  m[index] = 1;
  return monomial(m);
}

IntPolynomial IntPolynomial::monomial(const Monomial& m, std::int64_t c) {
  IntPolynomial p;
  p.add_term(m, c);
  return p;
}

bool IntPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

std::int64_t IntPolynomial::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? 0 : it->second;
}

int IntPolynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int s = 0;
    for (auto e : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

bool IntPolynomial::is_homogeneous() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int s = 0;
    for (auto e : m) s += e;
    if (d >= 0 && s != d) return false;
    d = s;
  }
  return true;
}

int IntPolynomial::num_variables() const {
  int n = 0;
  for (const auto& [m, c] : terms_) {
    for (int i = kMaxVariables - 1; i >= n; --i) {
      if (m[i]) {
        n = i + 1;
        break;
      }
    }
  }
  return n;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  IntPolynomial r = *this;
  r += o;
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  IntPolynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, checked_mul(c, -1));
  return r;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  IntPolynomial r;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m{};
      for (int i = 0; i < kMaxVariables; ++i) {
        const int e = m1[i] + m2[i];
        if (e > 255) fail(ErrorCode::kInternal, "exponent overflow");
        m[i] = static_cast<std::uint8_t>(e);
      }
      r.add_term(m, checked_mul(c1, c2));
    }
  }
  return r;
}

IntPolynomial IntPolynomial::scaled(std::int64_t c) const {
  IntPolynomial r;
  for (const auto& [m, x] : terms_) r.add_term(m, checked_mul(x, c));
  return r;
}

IntPolynomial IntPolynomial::swap_variables(int i, int j) const {
  check_var(i);
  check_var(j);
  IntPolynomial r;
  for (const auto& [m0, c] : terms_) {
    Monomial m = m0;
    std::swap(m[i], m[j]);
    r.add_term(m, c);
  }
  return r;
}

IntPolynomial IntPolynomial::substitute_sums(const std::vector<std::vector<int>>& images) const {
  // Powers of each linear form are cached as they are needed.
  std::vector<std::vector<IntPolynomial>> powers(images.size());
  auto power = [&](std::size_t k, int e) -> const IntPolynomial& {
    auto& pk = powers[k];
    if (pk.empty()) pk.push_back(constant(1));
    while (static_cast<int>(pk.size()) <= e) {
      IntPolynomial form;
      for (int v : images[k]) form += variable(v);
      pk.push_back(pk.back() * form);
    }
    return pk[e];
  };
  IntPolynomial r;
  for (const auto& [m, c] : terms_) {
    IntPolynomial t = constant(c);
    for (int i = 0; i < kMaxVariables; ++i) {
      if (!m[i]) continue;
      if (i >= static_cast<int>(images.size())) {
        fail(ErrorCode::kInvalidArgument, "substitution does not cover every variable");
      }
      t = t * power(i, m[i]);
    }
    r += t;
  }
  return r;
}

std::int64_t IntPolynomial::evaluate(const std::vector<std::int64_t>& point) const {
  std::int64_t total = 0;
  for (const auto& [m, c] : terms_) {
    std::int64_t t = c;
    for (int i = 0; i < kMaxVariables; ++i) {
      if (!m[i]) continue;
      if (i >= static_cast<int>(point.size())) fail(ErrorCode::kInvalidArgument, "point too short");
      for (int e = 0; e < m[i]; ++e) t = checked_mul(t, point[i]);
    }
    total = checked_add(total, t);
  }
  return total;
}

std::string IntPolynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string s;
  // Print higher-degree terms first for readability.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono;
    for (int i = 0; i < kMaxVariables; ++i) {
      if (!m[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += i < static_cast<int>(names.size()) ? names[i] : "x" + std::to_string(i + 1);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    std::int64_t a = c;
    if (!s.empty()) {
      s += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    } else if (a < 0 && !mono.empty() && a == -1) {
      s += "-";
      a = 1;
    }
    if (mono.empty()) s += std::to_string(a);
    else if (a == 1) s += mono;
    else s += std::to_string(a) + "*" + mono;
  }
  return s;
}

IntPolynomial divided_difference(int i, const IntPolynomial& p, int offset) {
  const int a = offset + i - 1, b = offset + i;  // 0-based storage indices
  if (i < 1) fail(ErrorCode::kInvalidArgument, "divided difference index must be positive");
  check_var(a);
  check_var(b);
  IntPolynomial r;
  // (x_a^p x_b^q - x_a^q x_b^p) / (x_a - x_b), termwise.
  for (const auto& [m, c] : p.terms()) {
    const int pe = m[a], qe = m[b];
    if (pe == qe) continue;
    const int hi = std::max(pe, qe), lo = std::min(pe, qe);
    const std::int64_t sign = pe > qe ? 1 : -1;
    for (int k = 0; k < hi - lo; ++k) {
      Monomial t = m;
      t[a] = static_cast<std::uint8_t>(hi - 1 - k);
      t[b] = static_cast<std::uint8_t>(lo + k);
      r += IntPolynomial::monomial(t, checked_mul(sign, c));
    }
  }
  return r;
}

IntPolynomial apply_word(const std::vector<int>& word, const IntPolynomial& p, int offset) {
  IntPolynomial r = p;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    r = divided_difference(*it, r, offset);
    if (r.is_zero()) break;
  }
  return r;
}

IntPolynomial apply_divided_differences(const Permutation& w, const IntPolynomial& p, int offset) {
  return apply_word(minimal_word(w), p, offset);
}

}  // namespace qmp
