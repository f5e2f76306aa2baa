#include "qmp/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "qmp/error.hpp"
#include "qmp/rng.hpp"

namespace qmp {
namespace {

constexpr double kNormTol = 1e-12;
constexpr double kClamp = 1e-12;

void check_dims(const Dims& dims) {
  if (dims.empty()) fail(ErrorCode::kDimensionMismatch, "empty factor list");
  for (int d : dims) {
    if (d <= 0) fail(ErrorCode::kDimensionMismatch, "factor dimension must be positive");
  }
}

std::vector<int> validated_keep(const std::vector<int>& keep, std::size_t factors) {
  std::vector<int> k = keep;
  std::sort(k.begin(), k.end());
  if (k.empty() || k.size() >= factors ||
      std::adjacent_find(k.begin(), k.end()) != k.end() || k.front() < 0 ||
      k.back() >= static_cast<int>(factors)) {
    fail(ErrorCode::kInvalidSubset, "keep must be a nonempty proper subset of factors");
  }
  return k;
}

// Flat index of (kept multi-index, traced multi-index) pairs. table[k][t] is the
// full row-major index.
std::vector<std::vector<std::size_t>> index_table(const Dims& dims,
                                                  const std::vector<int>& keep,
                                                  std::size_t& dk, std::size_t& dt) {
  const std::size_t n = dims.size();
  std::vector<bool> kept(n, false);
  for (int k : keep) kept[k] = true;
  dk = 1;
  dt = 1;
  for (std::size_t i = 0; i < n; ++i) (kept[i] ? dk : dt) *= dims[i];
  std::vector<std::vector<std::size_t>> table(dk, std::vector<std::size_t>(dt));
  const std::size_t total = dk * dt;
  std::vector<int> digit(n, 0);
  for (std::size_t full = 0; full < total; ++full) {
    std::size_t ik = 0, it = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (kept[i]) ik = ik * dims[i] + digit[i];
      else it = it * dims[i] + digit[i];
    }
    table[ik][it] = full;
    for (std::size_t i = n; i-- > 0;) {
      if (++digit[i] < dims[i]) break;
      digit[i] = 0;
    }
  }
  return table;
}

Dims restrict_dims(const Dims& dims, const std::vector<int>& keep) {
  Dims out;
  for (int k : keep) out.push_back(dims[k]);
  return out;
}

void fix_phase(CVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > 1e-8) {
      v *= std::conj(v[i]) / std::abs(v[i]);
      return;
    }
  }
}

}  // namespace

std::size_t total_dim(const Dims& dims) {
  std::size_t d = 1;
  for (int x : dims) d *= static_cast<std::size_t>(x);
  return d;
}

PureState make_pure(CVector amplitudes, Dims dims) {
  check_dims(dims);
  if (total_dim(dims) != static_cast<std::size_t>(amplitudes.size())) {
    fail(ErrorCode::kDimensionMismatch, "amplitude count does not match dims");
  }
  if (std::abs(amplitudes.squaredNorm() - 1.0) > kNormTol) {
    fail(ErrorCode::kInvalidArgument, "pure state is not normalized");
  }
  return PureState{std::move(amplitudes), std::move(dims)};
}

DensityMatrix make_density(CMatrix entries, Dims dims, double trace_tag) {
  check_dims(dims);
  const auto d = static_cast<Eigen::Index>(total_dim(dims));
  if (entries.rows() != d || entries.cols() != d) {
    fail(ErrorCode::kDimensionMismatch, "matrix size does not match dims");
  }
  if ((entries - entries.adjoint()).cwiseAbs().maxCoeff() > kNormTol) {
    fail(ErrorCode::kNotHermitian, "density matrix is not Hermitian");
  }
  if (std::abs(entries.trace().real() - trace_tag) > kNormTol * std::max(1.0, trace_tag)) {
    fail(ErrorCode::kInvalidSpectrum, "trace differs from declared convention");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(entries, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kClamp) {
    fail(ErrorCode::kNotPositive, "density matrix has a negative eigenvalue");
  }
  return DensityMatrix{std::move(entries), std::move(dims), trace_tag};
}

DensityMatrix density_of(const PureState& psi) {
  return DensityMatrix{psi.amplitudes * psi.amplitudes.adjoint(), psi.dims, 1.0};
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
  check_dims(rho.dims);
  const auto d = static_cast<Eigen::Index>(total_dim(rho.dims));
  if (rho.entries.rows() != d || rho.entries.cols() != d) {
    fail(ErrorCode::kDimensionMismatch, "matrix size does not match dims");
  }
  const auto k = validated_keep(keep, rho.dims.size());
  std::size_t dk = 0, dt = 0;
  const auto table = index_table(rho.dims, k, dk, dt);
  CMatrix out = CMatrix::Zero(dk, dk);
  for (std::size_t a = 0; a < dk; ++a) {
    for (std::size_t b = 0; b < dk; ++b) {
      Complex acc = 0;
      for (std::size_t t = 0; t < dt; ++t) acc += rho.entries(table[a][t], table[b][t]);
      out(a, b) = acc;
    }
  }
  return DensityMatrix{std::move(out), restrict_dims(rho.dims, k), rho.trace_tag};
}

DensityMatrix partial_trace(const PureState& psi, const std::vector<int>& keep) {
  check_dims(psi.dims);
  if (total_dim(psi.dims) != static_cast<std::size_t>(psi.amplitudes.size())) {
    fail(ErrorCode::kDimensionMismatch, "amplitude count does not match dims");
  }
  const auto k = validated_keep(keep, psi.dims.size());
  std::size_t dk = 0, dt = 0;
  const auto table = index_table(psi.dims, k, dk, dt);
  CMatrix m(dk, dt);
  for (std::size_t a = 0; a < dk; ++a) {
    for (std::size_t t = 0; t < dt; ++t) m(a, t) = psi.amplitudes[table[a][t]];
  }
  return DensityMatrix{m * m.adjoint(), restrict_dims(psi.dims, k), psi.amplitudes.squaredNorm()};
}

Eigensystem hermitian_eigensystem(const CMatrix& h, double hermitian_tol) {
  if (h.rows() != h.cols()) fail(ErrorCode::kDimensionMismatch, "matrix is not square");
  if (h.size() > 0 && (h - h.adjoint()).cwiseAbs().maxCoeff() > hermitian_tol) {
    fail(ErrorCode::kNotHermitian, "matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  const auto n = h.rows();
  Eigensystem out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values[i] = es.eigenvalues()[n - 1 - i];
    CVector v = es.eigenvectors().col(n - 1 - i);
    fix_phase(v);
    out.vectors.col(i) = v;
  }
  return out;
}

Spectrum spectrum(const CMatrix& h, double trace_tag) {
  auto es = hermitian_eigensystem(h);
  const double tr = h.trace().real();
  if (std::abs(tr - trace_tag) > 1e-10 * std::max(1.0, std::abs(trace_tag))) {
    fail(ErrorCode::kInvalidSpectrum, "trace of matrix differs from trace tag");
  }
  for (double& x : es.values) {
    if (x < 0 && x > -kClamp) x = 0;
  }
  return Spectrum{std::move(es.values), trace_tag};
}

Spectrum spectrum(const DensityMatrix& rho) { return spectrum(rho.entries, rho.trace_tag); }

SchmidtDecomposition schmidt(const PureState& psi) {
  if (psi.dims.size() != 2) {
    fail(ErrorCode::kDimensionMismatch, "Schmidt decomposition needs exactly two factors");
  }
  const int da = psi.dims[0], db = psi.dims[1];
  if (static_cast<Eigen::Index>(da) * db != psi.amplitudes.size()) {
    fail(ErrorCode::kDimensionMismatch, "amplitude count does not match dims");
  }
  CMatrix m(da, db);
  for (int i = 0; i < da; ++i) {
    for (int j = 0; j < db; ++j) m(i, j) = psi.amplitudes[i * db + j];
  }
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double cutoff = 1e-13 * std::max(1.0, sv.size() ? sv[0] : 0.0);
  SchmidtDecomposition out;
  Eigen::Index r = 0;
  while (r < sv.size() && sv[r] > cutoff) ++r;
  out.left.resize(da, r);
  out.right.resize(db, r);
  for (Eigen::Index k = 0; k < r; ++k) {
    CVector u = svd.matrixU().col(k);
    CVector v = svd.matrixV().col(k).conjugate();
    for (Eigen::Index i = 0; i < u.size(); ++i) {
      if (std::abs(u[i]) > 1e-8) {
        const Complex ph = std::conj(u[i]) / std::abs(u[i]);
        u *= ph;
        v /= ph;
        break;
      }
    }
    out.coefficients.push_back(sv[k]);
    out.left.col(k) = u;
    out.right.col(k) = v;
  }
  return out;
}

CVector schmidt_reconstruct(const SchmidtDecomposition& s) {
  const auto da = s.left.rows(), db = s.right.rows();
  CVector out = CVector::Zero(da * db);
  for (std::size_t k = 0; k < s.coefficients.size(); ++k) {
    for (Eigen::Index i = 0; i < da; ++i) {
      for (Eigen::Index j = 0; j < db; ++j) {
        out[i * db + j] += s.coefficients[k] * s.left(i, k) * s.right(j, k);
      }
    }
  }
  return out;
}

PureState purify(const DensityMatrix& rho) {
  const auto d = rho.entries.rows();
  if (rho.entries.cols() != d || (!rho.dims.empty() &&
                                  static_cast<Eigen::Index>(total_dim(rho.dims)) != d)) {
    fail(ErrorCode::kDimensionMismatch, "matrix size does not match dims");
  }
  if (std::abs(rho.entries.trace().real() - 1.0) > kNormTol) {
    fail(ErrorCode::kInvalidSpectrum, "purify needs a trace-one density matrix");
  }
  const auto es = hermitian_eigensystem(rho.entries, kNormTol);
  if (es.values.back() < -kClamp) fail(ErrorCode::kNotPositive, "input is not PSD");
  int rank = 0;
  while (rank < d && es.values[rank] > 1e-14) ++rank;
  CVector amp = CVector::Zero(d * rank);
  for (int k = 0; k < rank; ++k) {
    const double s = std::sqrt(es.values[k]);
    for (Eigen::Index i = 0; i < d; ++i) amp[i * rank + k] = s * es.vectors(i, k);
  }
  amp /= amp.norm();
  return PureState{std::move(amp), Dims{static_cast<int>(d), rank}};
}

CMatrix gram_of_slices(const Array3& a, int axis) {
  if (axis < 1 || axis > 3) fail(ErrorCode::kInvalidArgument, "axis must be 1, 2 or 3");
  const auto& sh = a.shape;
  for (int s : sh) {
    if (s <= 0) fail(ErrorCode::kDimensionMismatch, "array shape must be positive");
  }
  if (a.data.size() != static_cast<std::size_t>(sh[0]) * sh[1] * sh[2]) {
    fail(ErrorCode::kDimensionMismatch, "array data does not match shape");
  }
  const int ax = axis - 1;
  const int n = sh[ax];
  CMatrix g = CMatrix::Zero(n, n);
  std::array<int, 3> idx{};
  for (idx[0] = 0; idx[0] < sh[0]; ++idx[0]) {
    for (idx[1] = 0; idx[1] < sh[1]; ++idx[1]) {
      for (idx[2] = 0; idx[2] < sh[2]; ++idx[2]) {
        const int s = idx[ax];
        const Complex x = a.data[(idx[0] * sh[1] + idx[1]) * sh[2] + idx[2]];
        if (x == Complex(0)) continue;
        std::array<int, 3> jdx = idx;
        for (int t = 0; t < n; ++t) {
          jdx[ax] = t;
          g(s, t) += x * std::conj(a.data[(jdx[0] * sh[1] + jdx[1]) * sh[2] + jdx[2]]);
        }
      }
    }
  }
  return g;
}

CVector complex_gaussian_vector(std::size_t n, std::uint64_t seed) {
  CounterRng rng(seed);
  std::normal_distribution<double> nd(0.0, 1.0);
  CVector v(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double re = nd(rng);
    const double im = nd(rng);
    v[i] = Complex(re, im) / std::sqrt(2.0);
  }
  return v;
}

CMatrix haar_unitary(int d, std::uint64_t seed) {
  if (d <= 0) fail(ErrorCode::kDimensionMismatch, "unitary dimension must be positive");
  const CVector g = complex_gaussian_vector(static_cast<std::size_t>(d) * d, seed);
  CMatrix z(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) z(i, j) = g[i * d + j];
  }
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    const Complex rj = r(j, j);
    if (std::abs(rj) > 0) q.col(j) *= rj / std::abs(rj);
  }
  return q;
}

PureState haar_pure(const Dims& dims, std::uint64_t seed) {
  check_dims(dims);
  CVector v = complex_gaussian_vector(total_dim(dims), seed);
  v /= v.norm();
  return PureState{std::move(v), dims};
}

DensityMatrix random_mixed_with_spectrum(const Spectrum& nu, const Dims& dims,
                                         std::uint64_t seed) {
  check_dims(dims);
  const auto d = total_dim(dims);
  if (nu.values.size() != d) {
    fail(ErrorCode::kDimensionMismatch, "spectrum length does not match dims");
  }
  double sum = 0;
  for (double x : nu.values) {
    if (x < -kClamp) fail(ErrorCode::kInvalidSpectrum, "spectrum has a negative entry");
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-10) fail(ErrorCode::kInvalidSpectrum, "spectrum must sum to one");
  const CMatrix u = haar_unitary(static_cast<int>(d), seed);
  Eigen::VectorXd diag(d);
  for (std::size_t i = 0; i < d; ++i) diag[i] = std::max(0.0, nu.values[i]);
  CMatrix rho = u * diag.cast<Complex>().asDiagonal() * u.adjoint();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix{std::move(rho), dims, 1.0};
}

}  // namespace qmp
