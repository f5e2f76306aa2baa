#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qmp/exact.hpp"
#include "qmp/hull.hpp"
#include "qmp/spectrum_lab.hpp"

namespace qmp {

inline constexpr int kMaxPlethysmBasis = 70;  // C(r, n)
inline constexpr int kMaxPlethysmDegree = 4;  // m

/// S^m(wedge^n C^r) = sum_lambda m_lambda H_lambda.
struct PlethysmDecomposition {
  int r = 0, n = 0, m = 0;
  std::map<YoungDiagram, std::int64_t> multiplicities;  // only positive entries
};

/// Number of size-m multisets of n-subsets of {1..r} with each content vector.
/// Keys have length r.
std::map<std::vector<int>, std::int64_t> weight_multiplicities(int r, int n, int m);

/// Same counts restricted to dominant (nonincreasing) weights.
std::map<std::vector<int>, std::int64_t> dominant_weight_multiplicities(int r, int n, int m);

/// Semistandard tableaux of shape lambda and content mu.
std::int64_t kostka(const YoungDiagram& lambda, const std::vector<int>& mu);

PlethysmDecomposition decompose(int r, int n, int m);

/// Weyl dimension of the GL(r) irreducible with highest weight lambda.
Integer weyl_dimension(const YoungDiagram& lambda, int r);

/// C(C(r,n) + m - 1, m).
Integer symmetric_power_dimension(int r, int n, int m);

/// lambda*_i = m - lambda_{r+1-i} (complement in the r x m rectangle, reversed).
YoungDiagram complement(const YoungDiagram& lambda, int r, int m);

/// True iff every component of S^m(wedge^n C^r) equals its complement.
bool selfdual_check(int r, int n, int m);

/// Distinct normalized highest weights lambda / m (m = 1..max_m, trace n),
/// padded to length r, sorted.
std::vector<QVector> occurring_spectra(int r, int n, int max_m);

struct InnerApproximation {
  std::vector<QVector> points;
  HullResult hull;
  /// Per facet: after removing the trace direction, the bound equals the sum of
  /// the normal over some n-subset, i.e. the facet has the pure-state form of
  /// the generated fermionic inequalities.
  std::vector<bool> fits;
};

InnerApproximation inner_approximation(int r, int n, int max_m, int max_dimension = kDefaultHullCap);

}  // namespace qmp
