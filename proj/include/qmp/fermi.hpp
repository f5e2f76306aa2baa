#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qmp/tensor.hpp"

namespace qmp {

/// Occupation-number basis of the n-particle space over r orbitals. Index k
/// corresponds to the k-th n-subset of {1..r} in lexicographic order; each
/// basis vector is a^+_{i1} a^+_{i2} ... a^+_{in} |0> with i1 < i2 < ... < in.
class FermionBasis {
 public:
  FermionBasis(int r, int n);

  int r() const { return r_; }
  int n() const { return n_; }
  std::size_t size() const { return masks_.size(); }

  std::uint64_t mask(std::size_t index) const { return masks_[index]; }
  /// Index of an occupation mask; -1 if the mask is not an n-subset.
  std::ptrdiff_t index_of(std::uint64_t mask) const;

  std::vector<int> subset(std::size_t index) const;  // 1-based orbitals
  std::size_t index_of_subset(const std::vector<int>& subset) const;

 private:
  int r_, n_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::vector<std::uint64_t>> binom_;
};

struct FermionState {
  FermionBasis basis;
  CVector amplitudes;
};

std::uint64_t binomial(int n, int k);

FermionState slater(const FermionBasis& basis, const std::vector<int>& subset);

/// rho(i,j) = <a_j^+ a_i>, i.e. the operator whose expectation against h gives
/// Tr(h rho) for the one-body term sum h_ij a_i^+ a_j. Trace n.
DensityMatrix one_rdm(const FermionState& psi);

/// Same for a density matrix on the n-particle space (trace one in, trace n out).
DensityMatrix one_rdm(const FermionBasis& basis, const CMatrix& rho);

/// Two-particle matrix on ordered pairs (i<j), lexicographic:
/// D[(k,l),(i,j)] = 2 <a_i^+ a_j^+ a_l a_k>, trace n(n-1).
struct TwoRdm {
  CMatrix matrix;
  std::vector<std::pair<int, int>> pairs;  // 0-based orbitals
  double trace_norm = 0;
  std::string normalization;
};

TwoRdm two_rdm(const FermionState& psi);

/// Contract the second index: result(i,k) = sum_j Gamma(i j, k j) = (n-1) rho(i,k).
CMatrix contract_two_rdm(const TwoRdm& d, int r);

/// One-body operator h (x) 1 + 1 (x) h restricted to the antisymmetric pair space.
CMatrix pair_one_body(const CMatrix& h1);

/// E = C(n,2) Tr(H2 rho2) with H2 = (h1 (x) 1 + 1 (x) h1)/(n-1) + h12 and
/// rho2 the trace-one two-particle matrix.
double energy_from_two_rdm(const CMatrix& h1, const CMatrix& h12, const FermionState& psi);

FermionState haar_fermion(int r, int n, std::uint64_t seed);

/// Result of applying a_p (create=false) or a_p^+ to a basis mask.
struct FermionAction {
  bool nonzero = false;
  int sign = 1;
  std::uint64_t mask = 0;
};
FermionAction apply_fermion_op(std::uint64_t mask, int p, bool create);

}  // namespace qmp
