#include "qmp/plethysm.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>

#include "qmp/error.hpp"

namespace qmp {
namespace {

std::vector<std::vector<int>> subsets(int r, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> s(n);
  std::iota(s.begin(), s.end(), 0);
  while (true) {
    out.push_back(s);
    int i = n - 1;
    while (i >= 0 && s[i] == r - n + i) --i;
    if (i < 0) break;
    ++s[i];
    for (int j = i + 1; j < n; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

void check_caps(int r, int n, int m) {
  if (r < 1 || n < 1 || n > r || m < 1) fail(ErrorCode::kInvalidArgument, "need 1 <= n <= r, m >= 1");
  const auto basis = subsets(r, n).size();
  if (basis > static_cast<std::size_t>(kMaxPlethysmBasis) || m > kMaxPlethysmDegree) {
    fail(ErrorCode::kCapExceeded, "plethysm caps are C(r,n) <= 70 and m <= 4");
  }
}

std::string key_of(const std::vector<int>& w) { return std::string(w.begin(), w.end()); }

std::vector<int> from_key(const std::string& k) {
  std::vector<int> w(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) w[i] = static_cast<unsigned char>(k[i]);
  return w;
}

// Multisets i_1 <= ... <= i_m of subset indices, content accumulated on the way.
template <class Visit>
void for_each_multiset(const std::vector<std::vector<int>>& subs, int r, int m, Visit&& visit) {
  std::vector<int> content(r, 0);
  auto rec = [&](auto&& self, int depth, std::size_t start) -> void {
    if (depth == m) {
      visit(content);
      return;
    }
    for (std::size_t i = start; i < subs.size(); ++i) {
      for (int x : subs[i]) ++content[x];
      self(self, depth + 1, i);
      for (int x : subs[i]) --content[x];
    }
  };
  rec(rec, 0, 0);
}

}  // namespace

std::map<std::vector<int>, std::int64_t> weight_multiplicities(int r, int n, int m) {
  check_caps(r, n, m);
  // Dynamic program over basis subsets: state (number picked, content).
  const auto subs = subsets(r, n);
  std::vector<std::unordered_map<std::string, std::int64_t>> level(m + 1);
  level[0][key_of(std::vector<int>(r, 0))] = 1;
  for (const auto& s : subs) {
    for (int picked = m; picked >= 0; --picked) {
      // Add copies of s to states with fewer picks, highest level first so each
      // subset's multiplicity is chosen once.
      for (int c = 1; picked - c >= 0; ++c) {
        for (const auto& [k, cnt] : level[picked - c]) {
          std::string nk = k;
          for (int x : s) nk[x] = static_cast<char>(nk[x] + c);
          level[picked][nk] += cnt;
        }
      }
    }
  }
  std::map<std::vector<int>, std::int64_t> out;
  for (const auto& [k, cnt] : level[m]) out[from_key(k)] = cnt;
  return out;
}

std::map<std::vector<int>, std::int64_t> dominant_weight_multiplicities(int r, int n, int m) {
  check_caps(r, n, m);
  const auto subs = subsets(r, n);
  std::unordered_map<std::string, std::int64_t> counts;
  for_each_multiset(subs, r, m, [&](const std::vector<int>& content) {
    if (std::is_sorted(content.begin(), content.end(), std::greater<>())) ++counts[key_of(content)];
  });
  std::map<std::vector<int>, std::int64_t> out;
  for (const auto& [k, cnt] : counts) out[from_key(k)] = cnt;
  return out;
}

std::int64_t kostka(const YoungDiagram& lambda, const std::vector<int>& mu) {
  if (lambda.size() != std::accumulate(mu.begin(), mu.end(), 0)) {
    fail(ErrorCode::kSizeMismatch, "|lambda| must equal |mu|");
  }
  for (int x : mu) {
    if (x < 0) fail(ErrorCode::kInvalidArgument, "content must be nonnegative");
  }
  std::map<std::pair<std::vector<int>, std::size_t>, std::int64_t> memo;
  // Remove the cells holding the largest letter (a horizontal strip).
  auto rec = [&](auto&& self, const std::vector<int>& shape, std::size_t letters) -> std::int64_t {
    if (letters == 0) {
      return std::all_of(shape.begin(), shape.end(), [](int x) { return x == 0; }) ? 1 : 0;
    }
    auto key = std::make_pair(shape, letters);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int strip = mu[letters - 1];
    std::int64_t total = 0;
    std::vector<int> inner(shape.size());
    // Choose inner shape nu with shape/nu a horizontal strip of size `strip`:
    // shape[i+1] <= nu[i] <= shape[i].
    auto choose = [&](auto&& ch, std::size_t i, int left) -> void {
      if (i == shape.size()) {
        if (left == 0) total += self(self, inner, letters - 1);
        return;
      }
      const int lo = i + 1 < shape.size() ? shape[i + 1] : 0;
      for (int v = shape[i]; v >= lo; --v) {
        const int used = shape[i] - v;
        if (used > left) break;
        inner[i] = v;
        ch(ch, i + 1, left - used);
      }
    };
    choose(choose, 0, strip);
    memo[key] = total;
    return total;
  };
  return rec(rec, lambda.rows(), mu.size());
}

PlethysmDecomposition decompose(int r, int n, int m) {
  const auto weights = dominant_weight_multiplicities(r, n, m);
  PlethysmDecomposition d{r, n, m, {}};
  std::vector<std::pair<YoungDiagram, std::int64_t>> found;
  // Decreasing lexicographic order refines dominance.
  for (auto it = weights.rbegin(); it != weights.rend(); ++it) {
    const auto& mu = it->first;
    std::int64_t mult = it->second;
    for (const auto& [lambda, ml] : found) mult -= ml * kostka(lambda, mu);
    if (mult < 0) fail(ErrorCode::kInternal, "negative multiplicity in plethysm elimination");
    if (mult > 0) found.emplace_back(YoungDiagram(mu), mult);
  }
  for (const auto& [lambda, ml] : found) d.multiplicities[lambda] = ml;
  return d;
}

Integer weyl_dimension(const YoungDiagram& lambda, int r) {
  if (lambda.length() > r) return 0;
  Integer num = 1, den = 1;
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      num *= lambda.row(i) - lambda.row(j) + j - i;
      den *= j - i;
    }
  }
  return num / den;
}

Integer symmetric_power_dimension(int r, int n, int m) {
  Integer basis, out;
  mpz_bin_uiui(basis.get_mpz_t(), r, n);
  Integer top = basis + m - 1;
  mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), m);
  return out;
}

YoungDiagram complement(const YoungDiagram& lambda, int r, int m) {
  if (lambda.length() > r || lambda.row(0) > m) {
    fail(ErrorCode::kInvalidArgument, "diagram does not fit the rectangle");
  }
  std::vector<int> rows(r);
  for (int i = 0; i < r; ++i) rows[i] = m - lambda.row(r - 1 - i);
  return YoungDiagram(rows);
}

bool selfdual_check(int r, int n, int m) {
  for (const auto& [lambda, mult] : decompose(r, n, m).multiplicities) {
    if (!(complement(lambda, r, m) == lambda)) return false;
  }
  return true;
}

std::vector<QVector> occurring_spectra(int r, int n, int max_m) {
  std::set<QVector> out;
  for (int m = 1; m <= max_m; ++m) {
    for (const auto& [lambda, mult] : decompose(r, n, m).multiplicities) {
      QVector v(r);
      for (int i = 0; i < r; ++i) v[i] = Rational(lambda.row(i), m);
      for (auto& x : v) x.canonicalize();
      out.insert(v);
    }
  }
  return {out.begin(), out.end()};
}

InnerApproximation inner_approximation(int r, int n, int max_m, int max_dimension) {
  InnerApproximation res;
  res.points = occurring_spectra(r, n, max_m);
  res.hull = convex_hull(res.points, max_dimension);
  const auto subs = subsets(r, n);
  for (const auto& f : res.hull.facets) {
    // Shift the normal to zero sum; on trace-n points the bound moves accordingly.
    Rational mean = 0;
    for (const auto& x : f.normal) mean += Rational(x);
    mean /= r;
    QVector a(r);
    for (int i = 0; i < r; ++i) a[i] = Rational(f.normal[i]) - mean;
    const Rational bound = Rational(f.rhs) - mean * n;
    bool fit = false;
    for (const auto& s : subs) {
      Rational sum = 0;
      for (int x : s) sum += a[x];
      if (sum == bound) {
        fit = true;
        break;
      }
    }
    res.fits.push_back(fit);
  }
  return res;
}

}  // namespace qmp
