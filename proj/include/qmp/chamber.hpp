#pragma once

#include <cstdint>
#include <vector>

#include "qmp/exact.hpp"
#include "qmp/schubert.hpp"
#include "qmp/system.hpp"

namespace qmp {

/// Homogeneous hyperplane normal . t = 0, canonical (primitive, first nonzero positive).
struct Hyperplane {
  ZVector normal;
  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
  friend auto operator<=>(const Hyperplane&, const Hyperplane&) = default;
};

/// Primitive integer direction (canonical up to positive scaling).
struct RationalRay {
  ZVector direction;
  friend bool operator==(const RationalRay&, const RationalRay&) = default;
  friend auto operator<=>(const RationalRay&, const RationalRay&) = default;
};

RationalRay make_ray(const QVector& v);

/// Test spectra are parameterized by t in a simplicial cone (inequalities
/// cone_rows . t >= 0). The concatenated component test spectra are
/// sum_j t_j basis[j]; joint entries follow `layout`.
///
/// Tensor formats use fundamental-weight coordinates (t >= 0 gives exactly the
/// nonincreasing zero-sum test spectra). Qubit arrays use t_i = a_i with site
/// spectrum (a_i, -a_i); with symmetry reduction the cone is 0 <= a_1 <= ... <= a_n.
struct Arrangement {
  SystemDescriptor system;
  int dim = 0;
  bool symmetry_reduced = false;
  JointLayout layout;
  std::vector<QVector> basis;
  std::vector<ZVector> cone_rows;
  std::vector<ZVector> cone_rays;
  std::vector<Hyperplane> hyperplanes;  // only those cutting the cone interior
};

/// Default: symmetry reduction on for qubit arrays, off otherwise.
Arrangement cubicle_arrangement(const SystemDescriptor& system);
Arrangement cubicle_arrangement(const SystemDescriptor& system, bool symmetry_reduced);

/// All distinct tie loci (canonical), before the interior-cut filter.
std::vector<Hyperplane> all_tie_hyperplanes(const Arrangement& arrangement);

QVector values_at(const Arrangement& arrangement, const QVector& t);
std::vector<QVector> component_spectra(const Arrangement& arrangement, const QVector& t);

struct Chamber {
  std::vector<int> signs;  // +1 / -1 per arrangement hyperplane
  std::vector<ZVector> rays;
};

inline constexpr int kDefaultChamberCap = 7;

std::vector<Chamber> enumerate_chambers(const Arrangement& arrangement,
                                        int max_variables = kDefaultChamberCap);

/// Extreme rays of all chambers, deduplicated and sorted.
std::vector<RationalRay> extremal_edges(const std::vector<Chamber>& chambers);

/// Canonical representatives under permutation of qubit sites (sorted entries).
std::vector<RationalRay> reduce_by_site_symmetry(const std::vector<RationalRay>& rays);

/// Strict joint order at the barycenter of a chamber.
std::vector<int> chamber_order(const Arrangement& arrangement, const Chamber& chamber);

/// Distinct orders of all chambers whose closure contains the ray.
std::vector<std::vector<int>> orders_at_edge(const Arrangement& arrangement,
                                             const std::vector<Chamber>& chambers,
                                             const RationalRay& ray);

}  // namespace qmp
