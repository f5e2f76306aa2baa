#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace qmp {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using Dims = std::vector<int>;

/// Amplitudes over a tensor product. Flattening is row-major: the first factor
/// is the slowest index.
struct PureState {
  CVector amplitudes;
  Dims dims;
};

struct DensityMatrix {
  CMatrix entries;
  Dims dims;
  double trace_tag = 1.0;
};

/// Nonincreasing eigenvalues with their declared trace.
struct Spectrum {
  std::vector<double> values;
  double trace_tag = 1.0;
};

std::size_t total_dim(const Dims& dims);

/// Validating constructors.
PureState make_pure(CVector amplitudes, Dims dims);
DensityMatrix make_density(CMatrix entries, Dims dims, double trace_tag = 1.0);

DensityMatrix density_of(const PureState& psi);

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);
/// Same as partial_trace(density_of(psi), keep) without forming the full projector.
DensityMatrix partial_trace(const PureState& psi, const std::vector<int>& keep);

struct Eigensystem {
  std::vector<double> values;  // nonincreasing
  CMatrix vectors;             // columns, phase-fixed
};

/// Hermitian diagonalization. Eigenvalues are sorted nonincreasing and each
/// eigenvector is rotated so its first significant component is real positive.
Eigensystem hermitian_eigensystem(const CMatrix& h, double hermitian_tol = 1e-10);

Spectrum spectrum(const CMatrix& h, double trace_tag);
Spectrum spectrum(const DensityMatrix& rho);

struct SchmidtDecomposition {
  std::vector<double> coefficients;  // nonincreasing, squares sum to 1
  CMatrix left;                      // columns psi_i^A
  CMatrix right;                     // columns psi_i^B
};

SchmidtDecomposition schmidt(const PureState& psi);

/// Reconstruct sum_i c_i left_i (x) right_i as a flat amplitude vector.
CVector schmidt_reconstruct(const SchmidtDecomposition& s);

PureState purify(const DensityMatrix& rho);

/// A three-index array stored row-major with the given shape.
struct Array3 {
  std::vector<Complex> data;
  std::array<int, 3> shape{};
};

/// Gram matrix of the slices along `axis` (1, 2 or 3).
CMatrix gram_of_slices(const Array3& a, int axis);

CVector complex_gaussian_vector(std::size_t n, std::uint64_t seed);
CMatrix haar_unitary(int d, std::uint64_t seed);
PureState haar_pure(const Dims& dims, std::uint64_t seed);
DensityMatrix random_mixed_with_spectrum(const Spectrum& nu, const Dims& dims,
                                         std::uint64_t seed);

}  // namespace qmp
