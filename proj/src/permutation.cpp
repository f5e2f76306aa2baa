#include "qmp/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qmp/error.hpp"

namespace qmp {

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
  std::vector<bool> seen(w_.size() + 1, false);
  for (int x : w_) {
    if (x < 1 || x > static_cast<int>(w_.size()) || seen[x]) {
      fail(ErrorCode::kInvalidArgument, "not a permutation in one-line notation");
    }
    seen[x] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = n - i;
  return Permutation(std::move(w));
}

Permutation Permutation::simple(int i, int n) {
  if (i < 1 || i >= n) fail(ErrorCode::kInvalidArgument, "simple transposition out of range");
  auto p = identity(n);
  std::swap(p.w_[i - 1], p.w_[i]);
  return p;
}

Permutation Permutation::from_word(const std::vector<int>& word, int n) {
  auto p = identity(n);
  for (int a : word) p = p * simple(a, n);
  return p;
}

Permutation Permutation::parse(const std::string& text) {
  std::vector<int> w;
  if (text.find(',') != std::string::npos) {
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
      try {
        w.push_back(std::stoi(item));
      } catch (const std::exception&) {
        fail(ErrorCode::kInvalidArgument, "bad permutation: " + text);
      }
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') fail(ErrorCode::kInvalidArgument, "bad permutation: " + text);
      w.push_back(c - '0');
    }
  }
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<int> r(w_.size());
  for (std::size_t i = 0; i < w_.size(); ++i) r[w_[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(r));
}

Permutation Permutation::operator*(const Permutation& q) const {
  const int n = std::max(size(), q.size());
  const auto a = extended(n), b = q.extended(n);
  std::vector<int> r(n);
  for (int i = 0; i < n; ++i) r[i] = a.w_[b.w_[i] - 1];
  Permutation out;
  out.w_ = std::move(r);
  return out;
}

Permutation Permutation::extended(int n) const {
  if (n < size()) fail(ErrorCode::kInvalidArgument, "cannot shrink a permutation");
  Permutation out = *this;
  for (int i = size() + 1; i <= n; ++i) out.w_.push_back(i);
  return out;
}

int Permutation::support_size() const {
  int m = size();
  while (m > 1 && w_[m - 1] == m) --m;
  return std::max(m, 1);
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i) {
    if (w_[i] != i + 1) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  std::string s;
  for (int i = 0; i < size(); ++i) s += (i ? "," : "") + std::to_string(w_[i]);
  return s;
}

int length(const Permutation& w) {
  int inv = 0;
  const auto& v = w.one_line();
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) inv += v[i] > v[j];
  }
  return inv;
}

std::vector<int> minimal_word(const Permutation& w) {
  // Peel right descents: if w(i) > w(i+1) then w = (w s_i) s_i with shorter w s_i.
  std::vector<int> v = w.one_line();
  std::vector<int> rev;
  bool found = true;
  while (found) {
    found = false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i] > v[i + 1]) {
        std::swap(v[i], v[i + 1]);
        rev.push_back(static_cast<int>(i) + 1);
        found = true;
        break;
      }
    }
  }
  return {rev.rbegin(), rev.rend()};
}

bool is_reduced_word_of(const std::vector<int>& word, const Permutation& w) {
  if (static_cast<int>(word.size()) != length(w)) return false;
  for (int a : word) {
    if (a < 1 || a >= w.size()) return false;
  }
  return Permutation::from_word(word, w.size()) == w;
}

std::vector<std::vector<int>> all_reduced_words(const Permutation& w) {
  if (length(w) == 0) return {{}};
  std::vector<std::vector<int>> out;
  const auto& v = w.one_line();
  for (int i = 1; i < w.size(); ++i) {
    if (v[i - 1] > v[i]) {
      const Permutation shorter = w * Permutation::simple(i, w.size());
      for (auto word : all_reduced_words(shorter)) {
        word.push_back(i);
        out.push_back(std::move(word));
      }
    }
  }
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace qmp
