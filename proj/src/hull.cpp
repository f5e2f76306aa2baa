#include "qmp/hull.hpp"

#include <algorithm>
#include <set>

#include "dd.hpp"
#include "qmp/error.hpp"

namespace qmp {
namespace {

// Primitive integer scaling of (normal, rhs) by a positive factor.
Facet scaled_facet(const QVector& normal, const Rational& rhs) {
  QVector all = normal;
  all.push_back(rhs);
  const ZVector z = primitive(all);
  Facet f;
  f.normal.assign(z.begin(), z.end() - 1);
  f.rhs = z.back();
  return f;
}

}  // namespace

HullResult convex_hull(const std::vector<QVector>& points, int max_dimension) {
  HullResult res;
  if (points.empty()) return res;
  const std::size_t dim = points.front().size();
  for (const auto& p : points) {
    if (p.size() != dim) fail(ErrorCode::kDimensionMismatch, "points differ in length");
  }
  const QVector& p0 = points.front();
  std::vector<QVector> dirs;
  for (const auto& p : points) {
    QVector d(dim);
    for (std::size_t j = 0; j < dim; ++j) d[j] = p[j] - p0[j];
    dirs.push_back(std::move(d));
  }
  std::vector<QVector> span = dirs;
  const auto pivots = detail::rref(span);
  const int k = static_cast<int>(pivots.size());
  res.dimension = k;
  if (k > max_dimension) {
    fail(ErrorCode::kCapExceeded, "hull dimension " + std::to_string(k) + " exceeds cap " +
                                      std::to_string(max_dimension));
  }

  // Span equations: null space of the direction rows, in reduced echelon form.
  {
    std::vector<QVector> comp;
    std::vector<bool> is_pivot(dim, false);
    for (int c : pivots) is_pivot[c] = true;
    for (std::size_t f = 0; f < dim; ++f) {
      if (is_pivot[f]) continue;
      QVector v(dim, 0);
      v[f] = 1;
      for (int r = 0; r < k; ++r) v[pivots[r]] = -span[r][f];
      comp.push_back(std::move(v));
    }
    detail::rref(comp);
    for (const auto& v : comp) res.equalities.push_back(scaled_facet(v, dot(v, p0)));
  }
  if (k == 0) return res;

  // Projected points y_i = x_i restricted to pivot coordinates.
  std::vector<QVector> ys;
  for (const auto& p : points) {
    QVector y(k);
    for (int j = 0; j < k; ++j) y[j] = p[pivots[j]];
    ys.push_back(std::move(y));
  }
  // Dual cone constraints beta - c.y_i >= 0 in variables (beta, c).
  auto row_of = [&](const QVector& y) {
    QVector row(k + 1);
    row[0] = 1;
    for (int j = 0; j < k; ++j) row[j + 1] = -y[j];
    return primitive(row);
  };
  std::vector<std::size_t> simplex;
  {
    std::vector<QVector> basis;
    for (std::size_t i = 0; i < ys.size() && static_cast<int>(simplex.size()) < k + 1; ++i) {
      auto trial = basis;
      trial.push_back(to_q(row_of(ys[i])));
      auto tmp = trial;
      if (static_cast<int>(detail::rref(tmp).size()) == static_cast<int>(trial.size())) {
        basis = std::move(trial);
        simplex.push_back(i);
      }
    }
  }
  if (static_cast<int>(simplex.size()) != k + 1) fail(ErrorCode::kInternal, "no affine basis found");
  std::vector<ZVector> rows;
  for (auto i : simplex) rows.push_back(row_of(ys[i]));
  auto cone = detail::simplicial_cone(rows, ys.size() + k + 1);
  std::vector<bool> used(ys.size(), false);
  for (auto i : simplex) used[i] = true;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    if (!used[i]) cone = detail::dd_intersect(cone, row_of(ys[i]));
  }

  // Lift facets and project normals onto the span direction.
  std::vector<QVector> gram(k, QVector(k));
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) gram[a][b] = dot(span[a], span[b]);
  }
  const auto gram_inv = detail::inverse(gram);
  std::set<Facet> facets;
  for (const auto& ray : cone.rays) {
    QVector n(dim, 0);
    for (int j = 0; j < k; ++j) n[pivots[j]] = Rational(ray[j + 1]);
    const Rational beta(ray[0]);
    QVector coef(k, 0);
    for (int a = 0; a < k; ++a) {
      const Rational s = dot(span[a], n);
      for (int b = 0; b < k; ++b) coef[b] += gram_inv[b][a] * s;
    }
    QVector proj(dim, 0);
    for (int b = 0; b < k; ++b) {
      for (std::size_t j = 0; j < dim; ++j) proj[j] += coef[b] * span[b][j];
    }
    const Rational rhs = beta - dot(n, p0) + dot(proj, p0);
    facets.insert(scaled_facet(proj, rhs));
  }
  res.facets.assign(facets.begin(), facets.end());
  return res;
}

bool contains(const HullResult& hull, const QVector& x) {
  for (const auto& e : hull.equalities) {
    if (dot(to_q(e.normal), x) != Rational(e.rhs)) return false;
  }
  for (const auto& f : hull.facets) {
    if (dot(to_q(f.normal), x) > Rational(f.rhs)) return false;
  }
  return true;
}

}  // namespace qmp
