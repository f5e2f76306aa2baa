#pragma once

#include <compare>
#include <string>
#include <vector>

namespace qmp {

/// Permutation of {1..n} in one-line notation. Composition is (p*q)(i) = p(q(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);
  static Permutation longest(int n);          // w0 = (n, ..., 2, 1)
  static Permutation simple(int i, int n);    // s_i = (i, i+1)
  /// w = s_{a1} s_{a2} ... s_{al} in S_n.
  static Permutation from_word(const std::vector<int>& word, int n);
  /// "2,1,3" or, for n <= 9, the compact "213".
  static Permutation parse(const std::string& text);

  int size() const { return static_cast<int>(w_.size()); }
  int operator()(int i) const { return w_[i - 1]; }
  const std::vector<int>& one_line() const { return w_; }

  Permutation inverse() const;
  Permutation operator*(const Permutation& q) const;
  Permutation extended(int n) const;  // embed into S_n, fixing n+1..
  /// Smallest m such that w fixes every i > m (at least 1).
  int support_size() const;
  bool is_identity() const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> w_;
};

int length(const Permutation& w);

/// A reduced word (a1..al) with w = s_{a1} ... s_{al}.
std::vector<int> minimal_word(const Permutation& w);

/// True if the word is reduced and multiplies to w.
bool is_reduced_word_of(const std::vector<int>& word, const Permutation& w);

/// All reduced words of w (exponential; intended for small lengths).
std::vector<std::vector<int>> all_reduced_words(const Permutation& w);

std::vector<Permutation> all_permutations(int n);

}  // namespace qmp
