#include "qmp/spectrum_lab.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "qmp/error.hpp"

namespace qmp {

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] <= 0 || (i > 0 && rows_[i] > rows_[i - 1])) {
      fail(ErrorCode::kInvalidArgument, "diagram rows must be positive and nonincreasing");
    }
  }
}

int YoungDiagram::size() const { return std::accumulate(rows_.begin(), rows_.end(), 0); }

bool sort_nonincreasing(std::vector<double>& v) {
  const bool sorted = std::is_sorted(v.begin(), v.end(), std::greater<>());
  if (!sorted) std::sort(v.begin(), v.end(), std::greater<>());
  return sorted;
}

bool majorizes(const std::vector<double>& nu, const std::vector<double>& lambda, double tol) {
  std::vector<double> a = lambda, b = nu;
  const std::size_t n = std::max(a.size(), b.size());
  a.resize(n, 0.0);
  b.resize(n, 0.0);
  sort_nonincreasing(a);
  sort_nonincreasing(b);
  const double sa = std::accumulate(a.begin(), a.end(), 0.0);
  const double sb = std::accumulate(b.begin(), b.end(), 0.0);
  if (std::abs(sa - sb) > 1e-10 * std::max(1.0, std::abs(sa))) {
    fail(ErrorCode::kSumMismatch, "majorization needs equal sums");
  }
  double pa = 0, pb = 0;
  for (std::size_t i = 0; i < n; ++i) {
    pa += a[i];
    pb += b[i];
    if (pa > pb + tol) return false;
  }
  return true;
}

bool majorizes(const Spectrum& nu, const Spectrum& lambda, double tol) {
  return majorizes(nu.values, lambda.values, tol);
}

bool majorizes(const std::vector<int>& nu, const std::vector<int>& lambda) {
  std::vector<int> a = lambda, b = nu;
  const std::size_t n = std::max(a.size(), b.size());
  a.resize(n, 0);
  b.resize(n, 0);
  std::sort(a.begin(), a.end(), std::greater<>());
  std::sort(b.begin(), b.end(), std::greater<>());
  if (std::accumulate(a.begin(), a.end(), 0L) != std::accumulate(b.begin(), b.end(), 0L)) {
    fail(ErrorCode::kSumMismatch, "majorization needs equal sums");
  }
  long pa = 0, pb = 0;
  for (std::size_t i = 0; i < n; ++i) {
    pa += a[i];
    pb += b[i];
    if (pa > pb) return false;
  }
  return true;
}

YoungDiagram transpose(const YoungDiagram& lambda) {
  std::vector<int> cols(lambda.length() ? lambda.row(0) : 0, 0);
  for (int r : lambda.rows()) {
    for (int j = 0; j < r; ++j) ++cols[j];
  }
  return YoungDiagram(std::move(cols));
}

bool gale_ryser(const YoungDiagram& lambda, const YoungDiagram& mu) {
  if (lambda.size() != mu.size()) fail(ErrorCode::kSizeMismatch, "margins must have equal size");
  return majorizes(transpose(mu).rows(), lambda.rows());
}

Spectrum particle_hole(const Spectrum& lambda, int r) {
  if (static_cast<int>(lambda.values.size()) != r) {
    fail(ErrorCode::kDimensionMismatch, "spectrum length must equal r");
  }
  Spectrum out;
  out.values.resize(r);
  for (int i = 0; i < r; ++i) {
    const double x = lambda.values[r - 1 - i];
    if (x < -1e-12 || x > 1 + 1e-12) {
      fail(ErrorCode::kInvalidSpectrum, "particle-hole needs entries in [0,1]");
    }
    out.values[i] = 1.0 - x;
  }
  sort_nonincreasing(out.values);
  out.trace_tag = r - lambda.trace_tag;
  return out;
}

Spectrum renormalize(const Spectrum& lambda, double target_trace) {
  const double s = std::accumulate(lambda.values.begin(), lambda.values.end(), 0.0);
  if (s == 0.0) fail(ErrorCode::kInvalidSpectrum, "cannot renormalize a zero-sum spectrum");
  Spectrum out{lambda.values, target_trace};
  for (double& x : out.values) x *= target_trace / s;
  return out;
}

}  // namespace qmp
