#include "qmp/fermi.hpp"

#include <bit>
#include <cmath>

#include "qmp/error.hpp"

namespace qmp {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

FermionBasis::FermionBasis(int r, int n) : r_(r), n_(n) {
  if (r <= 0 || r > 62 || n < 0 || n > r) {
    fail(ErrorCode::kInvalidArgument, "invalid fermionic system (r, n)");
  }
  // Lexicographic order of sorted subsets: the first orbital varies slowest.
  std::vector<int> cur(n);
  for (int i = 0; i < n; ++i) cur[i] = i;
  while (true) {
    std::uint64_t m = 0;
    for (int x : cur) m |= std::uint64_t{1} << x;
    masks_.push_back(m);
    int i = n - 1;
    while (i >= 0 && cur[i] == r - n + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < n; ++j) cur[j] = cur[j - 1] + 1;
  }
  binom_.assign(r + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (int a = 0; a <= r; ++a) {
    for (int b = 0; b <= n; ++b) binom_[a][b] = binomial(a, b);
  }
}

std::ptrdiff_t FermionBasis::index_of(std::uint64_t mask) const {
  if (std::popcount(mask) != n_ || (r_ < 64 && (mask >> r_) != 0)) return -1;
  // Rank among lexicographically ordered subsets: count subsets preceding it.
  std::uint64_t rank = 0;
  int prev = -1, k = 0;
  for (int p = 0; p < r_ && k < n_; ++p) {
    if (!(mask >> p & 1)) continue;
    for (int q = prev + 1; q < p; ++q) rank += binom_[r_ - q - 1][n_ - k - 1];
    prev = p;
    ++k;
  }
  return static_cast<std::ptrdiff_t>(rank);
}

std::vector<int> FermionBasis::subset(std::size_t index) const {
  std::vector<int> out;
  const auto m = masks_.at(index);
  for (int p = 0; p < r_; ++p) {
    if (m >> p & 1) out.push_back(p + 1);
  }
  return out;
}

std::size_t FermionBasis::index_of_subset(const std::vector<int>& subset) const {
  if (static_cast<int>(subset.size()) != n_) {
    fail(ErrorCode::kInvalidSubset, "subset has the wrong cardinality");
  }
  std::uint64_t m = 0;
  for (int x : subset) {
    if (x < 1 || x > r_) fail(ErrorCode::kInvalidSubset, "orbital out of range");
    const auto bit = std::uint64_t{1} << (x - 1);
    if (m & bit) fail(ErrorCode::kInvalidSubset, "repeated orbital");
    m |= bit;
  }
  return static_cast<std::size_t>(index_of(m));
}

FermionAction apply_fermion_op(std::uint64_t mask, int p, bool create) {
  const auto bit = std::uint64_t{1} << p;
  const bool occupied = mask & bit;
  if (occupied == create) return {};
  const int below = std::popcount(mask & (bit - 1));
  return FermionAction{true, (below % 2) ? -1 : 1, mask ^ bit};
}

FermionState slater(const FermionBasis& basis, const std::vector<int>& subset) {
  const auto idx = basis.index_of_subset(subset);
  CVector amp = CVector::Zero(basis.size());
  amp[idx] = 1.0;
  return FermionState{basis, std::move(amp)};
}

namespace {

void check_state(const FermionState& psi) {
  if (static_cast<std::size_t>(psi.amplitudes.size()) != psi.basis.size()) {
    fail(ErrorCode::kDimensionMismatch, "amplitude count does not match basis");
  }
}

}  // namespace

DensityMatrix one_rdm(const FermionState& psi) {
  check_state(psi);
  const auto& b = psi.basis;
  const int r = b.r();
  CMatrix rho = CMatrix::Zero(r, r);
  for (std::size_t s = 0; s < b.size(); ++s) {
    const Complex amp = psi.amplitudes[s];
    if (amp == Complex(0)) continue;
    for (int i = 0; i < r; ++i) {
      const auto a = apply_fermion_op(b.mask(s), i, false);
      if (!a.nonzero) continue;
      for (int j = 0; j < r; ++j) {
        const auto c = apply_fermion_op(a.mask, j, true);
        if (!c.nonzero) continue;
        // <a_j^+ a_i> picks up conj(psi[target]) psi[source].
        const auto t = static_cast<std::size_t>(b.index_of(c.mask));
        rho(i, j) += static_cast<double>(a.sign * c.sign) * std::conj(psi.amplitudes[t]) * amp;
      }
    }
  }
  return DensityMatrix{std::move(rho), Dims{r}, static_cast<double>(b.n())};
}

DensityMatrix one_rdm(const FermionBasis& b, const CMatrix& state) {
  const auto d = static_cast<Eigen::Index>(b.size());
  if (state.rows() != d || state.cols() != d) {
    fail(ErrorCode::kDimensionMismatch, "density matrix does not match basis");
  }
  const int r = b.r();
  CMatrix rho = CMatrix::Zero(r, r);
  // rho(i,j) = Tr(state a_j^+ a_i) = sum_s sign * state(s, target)
  for (std::size_t s = 0; s < b.size(); ++s) {
    for (int i = 0; i < r; ++i) {
      const auto a = apply_fermion_op(b.mask(s), i, false);
      if (!a.nonzero) continue;
      for (int j = 0; j < r; ++j) {
        const auto c = apply_fermion_op(a.mask, j, true);
        if (!c.nonzero) continue;
        const auto t = b.index_of(c.mask);
        rho(i, j) += static_cast<double>(a.sign * c.sign) * state(s, t);
      }
    }
  }
  return DensityMatrix{std::move(rho), Dims{r}, static_cast<double>(b.n())};
}

TwoRdm two_rdm(const FermionState& psi) {
  check_state(psi);
  const auto& b = psi.basis;
  if (b.n() < 2) fail(ErrorCode::kInvalidArgument, "two-particle matrix needs n >= 2");
  const int r = b.r();
  TwoRdm out;
  std::vector<std::vector<int>> pair_index(r, std::vector<int>(r, -1));
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      pair_index[i][j] = static_cast<int>(out.pairs.size());
      out.pairs.emplace_back(i, j);
    }
  }
  const auto np = static_cast<Eigen::Index>(out.pairs.size());
  out.matrix = CMatrix::Zero(np, np);
  // D[(k,l),(i,j)] = 2 <a_i^+ a_j^+ a_l a_k>: annihilate k then l, create j then i.
  for (std::size_t s = 0; s < b.size(); ++s) {
    const Complex amp = psi.amplitudes[s];
    if (amp == Complex(0)) continue;
    for (const auto& [k, l] : out.pairs) {
      const auto a1 = apply_fermion_op(b.mask(s), k, false);
      if (!a1.nonzero) continue;
      const auto a2 = apply_fermion_op(a1.mask, l, false);
      if (!a2.nonzero) continue;
      for (const auto& [i, j] : out.pairs) {
        const auto c1 = apply_fermion_op(a2.mask, j, true);
        if (!c1.nonzero) continue;
        const auto c2 = apply_fermion_op(c1.mask, i, true);
        if (!c2.nonzero) continue;
        const auto t = static_cast<std::size_t>(b.index_of(c2.mask));
        const int sign = a1.sign * a2.sign * c1.sign * c2.sign;
        out.matrix(pair_index[k][l], pair_index[i][j]) +=
            2.0 * sign * std::conj(psi.amplitudes[t]) * amp;
      }
    }
  }
  out.trace_norm = static_cast<double>(b.n()) * (b.n() - 1);
  out.normalization = "trace n(n-1); entry [(k,l),(i,j)] = 2<a_i^+ a_j^+ a_l a_k>";
  return out;
}

CMatrix contract_two_rdm(const TwoRdm& d, int r) {
  std::vector<std::vector<int>> idx(r, std::vector<int>(r, -1));
  for (std::size_t p = 0; p < d.pairs.size(); ++p) {
    idx[d.pairs[p].first][d.pairs[p].second] = static_cast<int>(p);
  }
  // Gamma(a b, c e) = <a_c^+ a_e^+ a_b a_a> / ... extended antisymmetrically.
  auto gamma = [&](int a, int bb, int c, int e) -> Complex {
    if (a == bb || c == e) return 0;
    int s = 1;
    if (a > bb) { std::swap(a, bb); s = -s; }
    if (c > e) { std::swap(c, e); s = -s; }
    return 0.5 * s * d.matrix(idx[a][bb], idx[c][e]);
  };
  CMatrix out = CMatrix::Zero(r, r);
  for (int i = 0; i < r; ++i) {
    for (int k = 0; k < r; ++k) {
      for (int j = 0; j < r; ++j) out(i, k) += gamma(i, j, k, j);
    }
  }
  return out;
}

CMatrix pair_one_body(const CMatrix& h) {
  const int r = static_cast<int>(h.rows());
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) pairs.emplace_back(i, j);
  }
  const auto np = static_cast<Eigen::Index>(pairs.size());
  CMatrix out(np, np);
  auto delta = [](int a, int b) { return a == b ? 1.0 : 0.0; };
  for (Eigen::Index p = 0; p < np; ++p) {
    const auto [i, j] = pairs[p];
    for (Eigen::Index q = 0; q < np; ++q) {
      const auto [k, l] = pairs[q];
      out(p, q) = h(i, k) * delta(j, l) - h(i, l) * delta(j, k) - h(j, k) * delta(i, l) +
                  h(j, l) * delta(i, k);
    }
  }
  return out;
}

double energy_from_two_rdm(const CMatrix& h1, const CMatrix& h12, const FermionState& psi) {
  const int r = psi.basis.r(), n = psi.basis.n();
  if (n < 2) fail(ErrorCode::kInvalidArgument, "energy formula needs n >= 2");
  const auto np = static_cast<Eigen::Index>(binomial(r, 2));
  if (h1.rows() != r || h1.cols() != r || h12.rows() != np || h12.cols() != np) {
    fail(ErrorCode::kDimensionMismatch, "Hamiltonian shapes do not match the system");
  }
  const TwoRdm d = two_rdm(psi);
  const CMatrix h2 = pair_one_body(h1) / static_cast<double>(n - 1) + h12;
  const CMatrix rho2 = d.matrix / d.trace_norm;
  return static_cast<double>(binomial(n, 2)) * (h2 * rho2).trace().real();
}

FermionState haar_fermion(int r, int n, std::uint64_t seed) {
  if (n <= 0 || n >= r) fail(ErrorCode::kInvalidArgument, "haar_fermion needs 0 < n < r");
  FermionBasis basis(r, n);
  CVector v = complex_gaussian_vector(basis.size(), seed);
  v /= v.norm();
  return FermionState{std::move(basis), std::move(v)};
}

}  // namespace qmp
