#include "qmp/schubert.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "qmp/error.hpp"

namespace qmp {
namespace {

IntPolynomial staircase(int m) {
  Monomial mono{};
  for (int i = 0; i + 1 < m; ++i) mono[i] = static_cast<std::uint8_t>(m - 1 - i);
  return IntPolynomial::monomial(mono);
}

Permutation truncated(const Permutation& w, int m) {
  std::vector<int> line(w.one_line().begin(), w.one_line().begin() + m);
  return Permutation(std::move(line));
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::vector<int>, IntPolynomial>& cache() {
  static std::map<std::vector<int>, IntPolynomial> c;
  return c;
}

// S_w for w in S_m with w of full support handled by the caller.
IntPolynomial schubert_rec(const Permutation& w) {
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = cache().find(w.one_line());
    if (it != cache().end()) return it->second;
  }
  const int m = w.size();
  IntPolynomial result;
  int ascent = 0;
  for (int i = 1; i < m; ++i) {
    if (w(i) < w(i + 1)) {
      ascent = i;
      break;
    }
  }
  if (ascent == 0) {
    result = staircase(m);
  } else {
    // l(w s_i) = l(w) + 1 and S_w = d_i S_{w s_i}.
    result = divided_difference(ascent, schubert_rec(w * Permutation::simple(ascent, m)));
  }
  std::lock_guard<std::mutex> lock(cache_mutex());
  cache().emplace(w.one_line(), result);
  return result;
}

void check_test_spectrum(const QVector& a) {
  Rational total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    total += a[i];
    if (i > 0 && a[i] > a[i - 1]) fail(ErrorCode::kInvalidSpectrum, "test spectrum must be nonincreasing");
  }
  if (total != 0) fail(ErrorCode::kInvalidSpectrum, "test spectrum must sum to zero");
}

Integer lcm_of_denominators(const QVector& v) {
  Integer l = 1;
  for (const auto& q : v) {
    Integer d = q.get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

// Permutations of S_n with l <= max_length by breadth-first search from the
// identity; avoids materializing all of S_n when n is large.
std::vector<std::vector<Permutation>> permutations_by_length(int n, int max_length) {
  std::vector<std::vector<Permutation>> levels(max_length + 1);
  levels[0].push_back(Permutation::identity(n));
  for (int l = 1; l <= max_length; ++l) {
    std::set<Permutation> next;
    for (const auto& p : levels[l - 1]) {
      for (int i = 1; i < n; ++i) {
        if (p(i) < p(i + 1)) next.insert(p * Permutation::simple(i, n));
      }
    }
    levels[l].assign(next.begin(), next.end());
  }
  return levels;
}

}  // namespace

IntPolynomial schubert_poly(const Permutation& w) {
  const int m = w.support_size();
  if (m > kMaxSchubertSupport) {
    fail(ErrorCode::kCapExceeded, "Schubert polynomial support " + std::to_string(m) +
                                      " exceeds cap " + std::to_string(kMaxSchubertSupport));
  }
  if (m <= 1) return IntPolynomial::constant(1);
  return schubert_rec(truncated(w, m));
}

IntPolynomial schubert_poly_from_word(const Permutation& w, const std::vector<int>& word) {
  const int n = w.size();
  if (!is_reduced_word_of(word, w.inverse() * Permutation::longest(n))) {
    fail(ErrorCode::kInvalidArgument, "word is not a reduced word of w^-1 w0");
  }
  return apply_word(word, staircase(n));
}

IntPolynomial schubert_poly_bjs(const Permutation& w) {
  IntPolynomial total;
  if (length(w) == 0) return IntPolynomial::constant(1);
  for (const auto& a : all_reduced_words(w)) {
    const int l = static_cast<int>(a.size());
    std::vector<int> idx(l);
    // Depth-first enumeration of compatible sequences.
    auto rec = [&](auto&& self, int j) -> void {
      if (j == l) {
        Monomial m{};
        for (int t : idx) ++m[t - 1];
        total += IntPolynomial::monomial(m);
        return;
      }
      const int lo = j == 0 ? 1 : idx[j - 1] + ((a[j - 1] < a[j]) ? 1 : 0);
      for (int v = lo; v <= a[j]; ++v) {
        idx[j] = v;
        self(self, j + 1);
      }
    };
    rec(rec, 0);
  }
  return total;
}

int JointLayout::num_values() const {
  return std::accumulate(component_sizes.begin(), component_sizes.end(), 0);
}

int JointLayout::offset(int component) const {
  return std::accumulate(component_sizes.begin(), component_sizes.begin() + component, 0);
}

JointLayout JointLayout::tensor(const std::vector<int>& dims) {
  JointLayout l;
  l.component_sizes = dims;
  int total = 1;
  for (int d : dims) {
    if (d < 1) fail(ErrorCode::kInvalidArgument, "dimension must be positive");
    total *= d;
  }
  for (int e = 0; e < total; ++e) {
    auto t = entry_tuple(dims, e);
    std::vector<int> vars;
    int off = 0;
    for (std::size_t s = 0; s < dims.size(); ++s) {
      vars.push_back(off + t[s] - 1);
      off += dims[s];
    }
    l.entries.push_back(std::move(vars));
  }
  return l;
}

JointLayout JointLayout::fermion(int r, int n) {
  if (r < 1 || n < 1 || n > r) fail(ErrorCode::kInvalidArgument, "need 1 <= n <= r");
  JointLayout l;
  l.component_sizes = {r};
  std::vector<int> sub(n);
  std::iota(sub.begin(), sub.end(), 0);
  while (true) {
    l.entries.push_back(sub);
    int i = n - 1;
    while (i >= 0 && sub[i] == r - n + i) --i;
    if (i < 0) break;
    ++sub[i];
    for (int j = i + 1; j < n; ++j) sub[j] = sub[j - 1] + 1;
  }
  return l;
}

std::vector<int> entry_tuple(const std::vector<int>& dims, int entry) {
  std::vector<int> t(dims.size());
  for (int s = static_cast<int>(dims.size()) - 1; s >= 0; --s) {
    t[s] = entry % dims[s] + 1;
    entry /= dims[s];
  }
  return t;
}

QVector joint_sums(const JointLayout& layout, const QVector& values) {
  if (static_cast<int>(values.size()) != layout.num_values()) {
    fail(ErrorCode::kDimensionMismatch, "test values do not match the layout");
  }
  QVector sums;
  sums.reserve(layout.entries.size());
  for (const auto& e : layout.entries) {
    Rational s = 0;
    for (int v : e) s += values[v];
    sums.push_back(s);
  }
  return sums;
}

std::vector<int> joint_order(const JointLayout& layout, const QVector& values) {
  const auto sums = joint_sums(layout, values);
  std::vector<int> order(sums.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return sums[x] > sums[y]; });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (sums[order[k]] == sums[order[k - 1]]) {
      fail(ErrorCode::kWallOfCubicle, "tie between joint sums; point lies on a cubicle wall");
    }
  }
  return order;
}

bool order_compatible(const JointLayout& layout, const QVector& values,
                      const std::vector<int>& order) {
  const auto sums = joint_sums(layout, values);
  if (order.size() != sums.size()) return false;
  std::vector<bool> seen(sums.size(), false);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const int e = order[k];
    if (e < 0 || e >= static_cast<int>(sums.size()) || seen[e]) return false;
    seen[e] = true;
    if (k > 0 && sums[order[k - 1]] < sums[e]) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> sum_order(const QVector& a, const QVector& b) {
  check_test_spectrum(a);
  check_test_spectrum(b);
  QVector values = a;
  values.insert(values.end(), b.begin(), b.end());
  const auto layout = JointLayout::tensor({static_cast<int>(a.size()), static_cast<int>(b.size())});
  std::vector<std::pair<int, int>> out;
  for (int e : joint_order(layout, values)) {
    out.emplace_back(e / static_cast<int>(b.size()) + 1, e % static_cast<int>(b.size()) + 1);
  }
  return out;
}

std::vector<std::vector<int>> subset_sum_order(const QVector& a, int n) {
  check_test_spectrum(a);
  const auto layout = JointLayout::fermion(static_cast<int>(a.size()), n);
  std::vector<std::vector<int>> out;
  for (int e : joint_order(layout, a)) {
    auto sub = layout.entries[e];
    for (int& x : sub) ++x;
    out.push_back(std::move(sub));
  }
  return out;
}

std::int64_t coefficient(const JointLayout& layout, const std::vector<Permutation>& us,
                         const Permutation& w, const std::vector<int>& order) {
  if (us.size() != layout.component_sizes.size()) {
    fail(ErrorCode::kDimensionMismatch, "one permutation per component is required");
  }
  if (order.size() != layout.entries.size()) {
    fail(ErrorCode::kDimensionMismatch, "order must list every joint entry");
  }
  if (w.size() > static_cast<int>(layout.entries.size())) {
    fail(ErrorCode::kDimensionMismatch, "w acts on more positions than there are joint entries");
  }
  int total_length = 0;
  for (std::size_t s = 0; s < us.size(); ++s) {
    if (us[s].size() > layout.component_sizes[s]) {
      fail(ErrorCode::kDimensionMismatch, "component permutation too large");
    }
    total_length += length(us[s]);
  }
  if (layout.num_values() > kMaxVariables) fail(ErrorCode::kCapExceeded, "too many variables");
  if (length(w) != total_length) return 0;

  const IntPolynomial sw = schubert_poly(w);
  std::vector<std::vector<int>> images;
  for (int k = 0; k < std::min(w.support_size(), static_cast<int>(order.size())); ++k) {
    images.push_back(layout.entries.at(order[k]));
  }
  IntPolynomial p = sw.substitute_sums(images);
  for (std::size_t s = 0; s < us.size() && !p.is_zero(); ++s) {
    p = apply_divided_differences(us[s], p, layout.offset(static_cast<int>(s)));
  }
  if (!p.is_constant()) fail(ErrorCode::kInternal, "coefficient residue is not constant");
  return p.constant_term();
}

std::int64_t coeff_two(const Permutation& u, const Permutation& v, const Permutation& w,
                       const std::vector<std::pair<int, int>>& order) {
  int m = 0, n = 0;
  for (auto [i, j] : order) {
    m = std::max(m, i);
    n = std::max(n, j);
  }
  if (static_cast<int>(order.size()) != m * n) {
    fail(ErrorCode::kInvalidArgument, "order must list all index pairs");
  }
  const auto layout = JointLayout::tensor({m, n});
  std::vector<int> entries;
  std::vector<bool> seen(m * n, false);
  for (auto [i, j] : order) {
    const int e = (i - 1) * n + (j - 1);
    if (i < 1 || j < 1 || seen[e]) fail(ErrorCode::kInvalidArgument, "order repeats an index pair");
    seen[e] = true;
    entries.push_back(e);
  }
  return coefficient(layout, {u, v}, w, entries);
}

std::int64_t coeff_fermi(const Permutation& v, const Permutation& w,
                         const std::vector<std::vector<int>>& order) {
  if (order.empty()) fail(ErrorCode::kInvalidArgument, "empty order");
  const int n = static_cast<int>(order.front().size());
  int r = 0;
  for (const auto& s : order) {
    if (static_cast<int>(s.size()) != n) fail(ErrorCode::kInvalidSubset, "subsets differ in size");
    for (int x : s) r = std::max(r, x);
  }
  const auto layout = JointLayout::fermion(r, n);
  if (order.size() != layout.entries.size()) {
    fail(ErrorCode::kInvalidArgument, "order must list every n-subset");
  }
  std::map<std::vector<int>, int> index;
  for (std::size_t e = 0; e < layout.entries.size(); ++e) {
    auto s = layout.entries[e];
    for (int& x : s) ++x;
    index[s] = static_cast<int>(e);
  }
  std::vector<int> entries;
  std::set<int> seen;
  for (const auto& s : order) {
    auto it = index.find(s);
    if (it == index.end() || !seen.insert(it->second).second) {
      fail(ErrorCode::kInvalidSubset, "order contains an invalid or repeated subset");
    }
    entries.push_back(it->second);
  }
  return coefficient(layout, {v}, w, entries);
}

bool passes(CoefficientFilter filter, std::int64_t c) {
  switch (filter) {
    case CoefficientFilter::kUnit: return c == 1;
    case CoefficientFilter::kOdd: return c % 2 != 0;
    case CoefficientFilter::kNonzero: return c != 0;
  }
  return false;
}

std::string to_string(CoefficientFilter filter) {
  switch (filter) {
    case CoefficientFilter::kUnit: return "unit";
    case CoefficientFilter::kOdd: return "odd";
    case CoefficientFilter::kNonzero: return "nonzero";
  }
  return "?";
}

CoefficientFilter parse_filter(const std::string& text) {
  if (text == "unit" || text == "1") return CoefficientFilter::kUnit;
  if (text == "odd") return CoefficientFilter::kOdd;
  if (text == "nonzero") return CoefficientFilter::kNonzero;
  fail(ErrorCode::kInvalidArgument, "unknown coefficient filter: " + text);
}

GeneratedInequality generate(const JointLayout& layout, const std::vector<QVector>& spectra,
                             const std::vector<Permutation>& us, const Permutation& w,
                             const std::vector<int>& order_in) {
  if (spectra.size() != layout.component_sizes.size() || us.size() != spectra.size()) {
    fail(ErrorCode::kDimensionMismatch, "one test spectrum and permutation per component");
  }
  QVector values;
  for (std::size_t s = 0; s < spectra.size(); ++s) {
    if (static_cast<int>(spectra[s].size()) != layout.component_sizes[s]) {
      fail(ErrorCode::kDimensionMismatch, "test spectrum length does not match the component");
    }
    check_test_spectrum(spectra[s]);
    values.insert(values.end(), spectra[s].begin(), spectra[s].end());
  }
  std::vector<int> order = order_in;
  if (order.empty()) {
    order = joint_order(layout, values);
  } else if (!order_compatible(layout, values, order)) {
    fail(ErrorCode::kInvalidArgument, "order is not compatible with the test spectra");
  }
  const int joint = static_cast<int>(layout.entries.size());
  const Permutation wj = w.extended(std::max(w.size(), joint));
  if (wj.size() != joint) fail(ErrorCode::kDimensionMismatch, "w too large for the joint system");

  GeneratedInequality g;
  g.coefficient = coefficient(layout, us, w, order);
  if (g.coefficient == 0) fail(ErrorCode::kZeroCoefficient, "coefficient vanishes; no inequality");
  g.test_spectra = spectra;
  g.w = wj;
  const Integer scale = lcm_of_denominators(values);
  const auto sums = joint_sums(layout, values);
  InequalityRecord& rec = g.record;
  rec.lhs.resize(spectra.size());
  for (std::size_t s = 0; s < spectra.size(); ++s) {
    const int d = layout.component_sizes[s];
    const Permutation u = us[s].extended(d);
    g.perms.push_back(u);
    rec.lhs[s].assign(d, 0);
    for (int i = 1; i <= d; ++i) {
      rec.lhs[s][u(i) - 1] += to_int64(Integer(spectra[s][i - 1] * scale));
    }
  }
  rec.rhs.assign(joint, 0);
  for (int k = 1; k <= joint; ++k) {
    rec.rhs[wj(k) - 1] += to_int64(Integer(sums[order[k - 1]] * scale));
  }
  rec.family = "GENERATED";
  std::string note = "c=" + std::to_string(g.coefficient) + " w=" + wj.to_string();
  for (const auto& u : g.perms) note += " u=" + u.to_string();
  rec.note = note;
  return g;
}

GeneratedInequality generate_inequality(const QVector& a, const QVector& b,
                                        const Permutation& u, const Permutation& v,
                                        const Permutation& w, const std::vector<int>& order) {
  const auto layout = JointLayout::tensor({static_cast<int>(a.size()), static_cast<int>(b.size())});
  return generate(layout, {a, b}, {u, v}, w, order);
}

GeneratedInequality generate_fermi_inequality(const QVector& a, int n, const Permutation& v,
                                              const Permutation& w, const std::vector<int>& order) {
  const auto layout = JointLayout::fermion(static_cast<int>(a.size()), n);
  return generate(layout, {a}, {v}, w, order);
}

std::vector<GeneratedInequality> generate_all(const JointLayout& layout,
                                              const std::vector<QVector>& spectra,
                                              const std::vector<std::vector<int>>& orders_in,
                                              const GenerateOptions& options) {
  QVector values;
  for (const auto& s : spectra) values.insert(values.end(), s.begin(), s.end());
  std::vector<std::vector<int>> orders = orders_in;
  if (orders.empty()) orders.push_back(joint_order(layout, values));

  const int joint = static_cast<int>(layout.entries.size());
  const int ncomp = static_cast<int>(layout.component_sizes.size());
  // Component permutations grouped by length.
  std::vector<std::vector<std::vector<Permutation>>> comp;
  int max_comp_length = 0;
  for (int d : layout.component_sizes) {
    comp.push_back(permutations_by_length(d, std::min(options.max_length, d * (d - 1) / 2)));
    max_comp_length += d * (d - 1) / 2;
  }
  const int lmax = std::min(options.max_length, max_comp_length);
  const auto ws = permutations_by_length(joint, lmax);

  std::vector<GeneratedInequality> out;
  std::set<std::pair<std::vector<std::vector<std::int64_t>>, std::vector<std::int64_t>>> seen;
  for (int l = 0; l <= lmax; ++l) {
    // Tuples (u_1..u_s) with total length l.
    std::vector<std::vector<Permutation>> tuples;
    std::vector<Permutation> cur;
    auto rec = [&](auto&& self, int s, int remaining) -> void {
      if (s == ncomp) {
        if (remaining == 0) tuples.push_back(cur);
        return;
      }
      for (int ls = 0; ls <= remaining && ls < static_cast<int>(comp[s].size()); ++ls) {
        for (const auto& p : comp[s][ls]) {
          cur.push_back(p);
          self(self, s + 1, remaining - ls);
          cur.pop_back();
        }
      }
    };
    rec(rec, 0, l);
    for (const auto& w : ws[l]) {
      for (const auto& us : tuples) {
        for (const auto& order : orders) {
          const auto c = coefficient(layout, us, w, order);
          if (!passes(options.filter, c)) continue;
          auto g = generate(layout, spectra, us, w, order);
          if (seen.insert({g.record.lhs, g.record.rhs}).second) out.push_back(std::move(g));
          break;
        }
      }
    }
  }
  return out;
}

std::vector<GeneratedInequality> generate_qubit_array(
    const QVector& a, const std::vector<std::vector<int>>& orders,
    CoefficientFilter filter) {
  const int n = static_cast<int>(a.size());
  if (n < 1) fail(ErrorCode::kInvalidArgument, "need at least one site");
  for (int i = 0; i < n; ++i) {
    if (a[i] < 0) fail(ErrorCode::kInvalidArgument, "site values must be nonnegative");
    if (i > 0 && a[i] < a[i - 1]) fail(ErrorCode::kInvalidArgument, "site values must be nondecreasing");
  }
  const std::vector<int> dims(n, 2);
  const auto layout = JointLayout::tensor(dims);
  std::vector<QVector> spectra;
  QVector values;
  for (const auto& x : a) {
    spectra.push_back({x, -x});
    values.push_back(x);
    values.push_back(-x);
  }
  const auto sums = joint_sums(layout, values);
  std::vector<Rational> sorted = sums;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  const int joint = static_cast<int>(sums.size());

  std::vector<std::pair<std::vector<Permutation>, Permutation>> candidates;
  candidates.emplace_back(std::vector<Permutation>(n, Permutation::identity(2)),
                          Permutation::identity(joint));
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (int k = 1; k < joint; k += 2) {
      if (sorted[k - 1] == sorted[k]) continue;
      std::vector<Permutation> us(n, Permutation::identity(2));
      us[i] = Permutation::simple(1, 2);
      candidates.emplace_back(us, Permutation::simple(k, joint));
    }
  }

  std::vector<GeneratedInequality> kept;
  for (const auto& [us, w] : candidates) {
    for (const auto& order : orders) {
      if (!order_compatible(layout, values, order)) {
        fail(ErrorCode::kInvalidArgument, "order is not compatible with the site values");
      }
      if (passes(filter, coefficient(layout, us, w, order))) {
        kept.push_back(generate(layout, spectra, us, w, order));
        break;
      }
    }
  }
  // Gap coefficient of site s: lhs[s][0] (lhs[s][1] is its negative).
  auto gaps = [](const GeneratedInequality& g) {
    std::vector<std::int64_t> c;
    for (const auto& site : g.record.lhs) c.push_back(site[0]);
    return c;
  };
  // B implies A when both share the joint side and, with site gaps nondecreasing,
  // every suffix sum of c_B - c_A is nonnegative.
  auto dominates = [&](const GeneratedInequality& b, const GeneratedInequality& a) {
    if (a.record.rhs != b.record.rhs) return false;
    const auto ca = gaps(a), cb = gaps(b);
    std::int64_t suffix = 0;
    for (int s = n - 1; s >= 0; --s) {
      suffix += cb[s] - ca[s];
      if (suffix < 0) return false;
    }
    return true;
  };
  std::vector<GeneratedInequality> out;
  for (std::size_t x = 0; x < kept.size(); ++x) {
    bool drop = false;
    for (std::size_t y = 0; y < kept.size() && !drop; ++y) {
      if (x == y) continue;
      if (kept[x].record == kept[y].record) {
        drop = y < x;  // keep the first copy
      } else if (dominates(kept[y], kept[x])) {
        drop = true;
      }
    }
    if (!drop) out.push_back(kept[x]);
  }
  return out;
}

}  // namespace qmp
