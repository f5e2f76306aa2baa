#pragma once

#include <vector>

#include "qmp/exact.hpp"

namespace qmp {

/// normal . x <= rhs (facets) or normal . x = rhs (span equations).
struct Facet {
  ZVector normal;
  Integer rhs;
  friend bool operator==(const Facet&, const Facet&) = default;
  friend bool operator<(const Facet& a, const Facet& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.rhs < b.rhs;
  }
};

struct HullResult {
  int dimension = -1;             // affine dimension of the hull (-1 when empty)
  std::vector<Facet> facets;      // irredundant, canonical within the affine span
  std::vector<Facet> equalities;  // affine span, reduced echelon form
};

inline constexpr int kDefaultHullCap = 7;

/// Facets of conv(points) inside their affine span. Facet normals are
/// orthogonally projected onto the span direction, so the output depends only
/// on the polytope, not on the order or choice of input points.
HullResult convex_hull(const std::vector<QVector>& points, int max_dimension = kDefaultHullCap);

bool contains(const HullResult& hull, const QVector& x);

}  // namespace qmp
