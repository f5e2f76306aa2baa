#pragma once

#include <vector>

#include "qmp/tensor.hpp"

namespace qmp {

/// Partition with strictly positive, nonincreasing rows. Trailing zeros are
/// dropped on construction.
class YoungDiagram {
 public:
  YoungDiagram() = default;
  explicit YoungDiagram(std::vector<int> rows);

  const std::vector<int>& rows() const { return rows_; }
  int size() const;  // number of cells
  int length() const { return static_cast<int>(rows_.size()); }
  int row(int i) const { return i < length() ? rows_[i] : 0; }

  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
  friend auto operator<=>(const YoungDiagram&, const YoungDiagram&) = default;

 private:
  std::vector<int> rows_;
};

/// True iff lambda is majorized by nu (shorter vector padded with zeros).
bool majorizes(const std::vector<double>& nu, const std::vector<double>& lambda,
               double tol = 1e-10);
bool majorizes(const Spectrum& nu, const Spectrum& lambda, double tol = 1e-10);

/// Exact majorization of integer vectors (both sorted internally).
bool majorizes(const std::vector<int>& nu, const std::vector<int>& lambda);

YoungDiagram transpose(const YoungDiagram& lambda);

/// Existence of a 0/1 matrix with row sums lambda and column sums mu.
bool gale_ryser(const YoungDiagram& lambda, const YoungDiagram& mu);

/// lambda_i -> 1 - lambda_{r+1-i}.
Spectrum particle_hole(const Spectrum& lambda, int r);

Spectrum renormalize(const Spectrum& lambda, double target_trace);

/// Sort nonincreasing; returns true if the input was already sorted.
bool sort_nonincreasing(std::vector<double>& v);

}  // namespace qmp
