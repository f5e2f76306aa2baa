#pragma once

// Double-description cone updates shared by chamber enumeration and hulls.

#include <cstdint>
#include <utility>
#include <vector>

#include "qmp/exact.hpp"

namespace qmp::detail {

class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t nbits) : w_((nbits + 63) / 64, 0) {}
  void set(std::size_t i) { w_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1U; }
  Bits operator&(const Bits& o) const;
  bool subset_of(const Bits& o) const;
  int count() const;

 private:
  std::vector<std::uint64_t> w_;
};

/// Pointed polyhedral cone by its extreme rays. zeros[i] marks the constraints
/// (indices into the constraint history) that vanish on rays[i].
struct DDCone {
  int dim = 0;
  std::size_t capacity = 0;  // maximum number of constraints
  std::size_t constraints = 0;
  std::vector<ZVector> rays;
  std::vector<Bits> zeros;
};

/// Simplicial start: the cone {x : A x >= 0} for square invertible integer A.
/// Constraint indices 0..dim-1 are the rows of A.
DDCone simplicial_cone(const std::vector<ZVector>& rows, std::size_t capacity);

/// Intersections with {h.x >= 0} and {h.x <= 0}. Both record the new
/// constraint at the same index. When h does not cut the cone one side keeps
/// every ray (with h recorded as redundant) and the other is empty.
std::pair<DDCone, DDCone> dd_split(const DDCone& cone, const ZVector& h);

/// Keep only the side h.x >= 0.
DDCone dd_intersect(const DDCone& cone, const ZVector& h);

/// Signs of h on the rays: (has positive, has negative).
std::pair<bool, bool> side_signs(const DDCone& cone, const ZVector& h);

/// Inverse of a square rational matrix; throws when singular.
std::vector<QVector> inverse(const std::vector<QVector>& m);

/// Row-reduced echelon form in place; returns pivot columns.
std::vector<int> rref(std::vector<QVector>& m);

}  // namespace qmp::detail
