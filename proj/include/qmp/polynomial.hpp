#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qmp/permutation.hpp"

namespace qmp {

inline constexpr int kMaxVariables = 32;
using Monomial = std::array<std::uint8_t, kMaxVariables>;

/// Exact multivariate polynomial with 64-bit integer coefficients (overflow is
/// detected and reported). Variables are x_0 .. x_{kMaxVariables-1}; terms are
/// kept in a canonical map without zero coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;

  static IntPolynomial constant(std::int64_t c);
  static IntPolynomial variable(int index);
  static IntPolynomial monomial(const Monomial& m, std::int64_t c = 1);

  const std::map<Monomial, std::int64_t>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::int64_t constant_term() const;
  int degree() const;  // -1 for the zero polynomial
  bool is_homogeneous() const;
  int num_variables() const;  // one past the largest index that occurs

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial scaled(std::int64_t c) const;
  IntPolynomial& operator+=(const IntPolynomial& o);

  IntPolynomial swap_variables(int i, int j) const;

  /// Replace x_k by the sum of the variables listed in images[k]. Variables
  /// beyond images.size() must not occur.
  IntPolynomial substitute_sums(const std::vector<std::vector<int>>& images) const;

  std::int64_t evaluate(const std::vector<std::int64_t>& point) const;

  /// Human-readable form using names x1, x2, ... unless names are supplied.
  std::string to_string(const std::vector<std::string>& names = {}) const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void add_term(const Monomial& m, std::int64_t c);
  std::map<Monomial, std::int64_t> terms_;
};

/// d_i f = (f - s_i f) / (x_i - x_{i+1}) on the 1-based variables x_i, x_{i+1}
/// shifted by offset (x_{offset+i} and x_{offset+i+1} as 1-based indices).
IntPolynomial divided_difference(int i, const IntPolynomial& p, int offset = 0);

/// d_w = d_{a1} ... d_{al} for w = s_{a1} ... s_{al}; d_{al} acts first.
IntPolynomial apply_divided_differences(const Permutation& w, const IntPolynomial& p,
                                        int offset = 0);
IntPolynomial apply_word(const std::vector<int>& word, const IntPolynomial& p, int offset = 0);

}  // namespace qmp
