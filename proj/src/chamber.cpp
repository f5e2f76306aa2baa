#include "qmp/chamber.hpp"

#include <algorithm>
#include <set>

#include "dd.hpp"
#include "qmp/error.hpp"

namespace qmp {
namespace {

// Fundamental weight omega_j of SL(d), shifted to zero trace.
QVector fundamental_weight(int d, int j) {
  QVector w(d);
  for (int i = 0; i < d; ++i) w[i] = i < j ? Rational(d - j) : Rational(-j);
  return w;
}

std::vector<ZVector> identity_rows(int n) {
  std::vector<ZVector> rows(n, ZVector(n, 0));
  for (int i = 0; i < n; ++i) rows[i][i] = 1;
  return rows;
}

void finish(Arrangement& arr) {
  std::vector<QVector> rows;
  for (const auto& r : arr.cone_rows) rows.push_back(to_q(r));
  const auto inv = detail::inverse(rows);
  arr.cone_rays.clear();
  for (int j = 0; j < arr.dim; ++j) {
    QVector col(arr.dim);
    for (int i = 0; i < arr.dim; ++i) col[i] = inv[i][j];
    arr.cone_rays.push_back(primitive(col));
  }
  for (const auto& h : all_tie_hyperplanes(arr)) {
    bool pos = false, neg = false;
    for (const auto& r : arr.cone_rays) {
      const int s = sgn(dot(h.normal, r));
      pos |= s > 0;
      neg |= s < 0;
    }
    if (pos && neg) arr.hyperplanes.push_back(h);
  }
}

}  // namespace

RationalRay make_ray(const QVector& v) {
  if (is_zero(v)) fail(ErrorCode::kInvalidArgument, "zero ray");
  return RationalRay{primitive(v)};
}

Arrangement cubicle_arrangement(const SystemDescriptor& system) {
  return cubicle_arrangement(system, system.is_qubit_array());
}

Arrangement cubicle_arrangement(const SystemDescriptor& system, bool symmetry_reduced) {
  Arrangement arr;
  arr.system = system;
  if (system.kind == SystemKind::kTensor) {
    if (system.dims.size() < 2) fail(ErrorCode::kUnknownDescriptor, "need at least two factors");
    arr.layout = JointLayout::tensor(system.dims);
    const int nvals = arr.layout.num_values();
    int off = 0;
    for (int d : system.dims) {
      for (int j = 1; j < d; ++j) {
        QVector b(nvals, 0);
        const auto w = fundamental_weight(d, j);
        // For d = 2 this is (1, -1), i.e. t equals the site value a_i.
        for (int i = 0; i < d; ++i) b[off + i] = w[i];
        arr.basis.push_back(b);
      }
      off += d;
    }
    arr.dim = static_cast<int>(arr.basis.size());
    if (symmetry_reduced) {
      if (!system.is_qubit_array()) {
        fail(ErrorCode::kUnsupported, "symmetry reduction is implemented for qubit arrays only");
      }
      arr.symmetry_reduced = true;
      arr.cone_rows.assign(arr.dim, ZVector(arr.dim, 0));
      arr.cone_rows[0][0] = 1;
      for (int i = 1; i < arr.dim; ++i) {
        arr.cone_rows[i][i] = 1;
        arr.cone_rows[i][i - 1] = -1;
      }
    } else {
      arr.cone_rows = identity_rows(arr.dim);
    }
  } else if (system.kind == SystemKind::kFermion) {
    if (symmetry_reduced) fail(ErrorCode::kUnsupported, "no symmetry reduction for fermions");
    arr.layout = JointLayout::fermion(system.r, system.n);
    for (int j = 1; j < system.r; ++j) arr.basis.push_back(fundamental_weight(system.r, j));
    arr.dim = system.r - 1;
    arr.cone_rows = identity_rows(arr.dim);
  } else {
    fail(ErrorCode::kUnsupported, "no cubicle arrangement for this system");
  }
  if (arr.dim < 1) fail(ErrorCode::kUnsupported, "trivial test-spectrum space");
  finish(arr);
  return arr;
}

std::vector<Hyperplane> all_tie_hyperplanes(const Arrangement& arr) {
  std::vector<QVector> forms;
  for (const auto& e : arr.layout.entries) {
    QVector f(arr.dim, 0);
    for (int j = 0; j < arr.dim; ++j) {
      for (int v : e) f[j] += arr.basis[j][v];
    }
    forms.push_back(f);
  }
  std::set<ZVector> seen;
  for (std::size_t x = 0; x < forms.size(); ++x) {
    for (std::size_t y = x + 1; y < forms.size(); ++y) {
      QVector d(arr.dim);
      for (int j = 0; j < arr.dim; ++j) d[j] = forms[x][j] - forms[y][j];
      if (is_zero(d)) continue;
      seen.insert(canonical_hyperplane(d));
    }
  }
  std::vector<Hyperplane> out;
  for (const auto& n : seen) out.push_back(Hyperplane{n});
  return out;
}

QVector values_at(const Arrangement& arr, const QVector& t) {
  if (static_cast<int>(t.size()) != arr.dim) fail(ErrorCode::kDimensionMismatch, "wrong parameter length");
  QVector v(arr.layout.num_values(), 0);
  for (int j = 0; j < arr.dim; ++j) {
    if (t[j] == 0) continue;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += t[j] * arr.basis[j][i];
  }
  return v;
}

std::vector<QVector> component_spectra(const Arrangement& arr, const QVector& t) {
  const auto v = values_at(arr, t);
  std::vector<QVector> out;
  int off = 0;
  for (int d : arr.layout.component_sizes) {
    out.emplace_back(v.begin() + off, v.begin() + off + d);
    off += d;
  }
  return out;
}

std::vector<Chamber> enumerate_chambers(const Arrangement& arr, int max_variables) {
  if (arr.dim > max_variables) {
    fail(ErrorCode::kCapExceeded, "chamber enumeration in " + std::to_string(arr.dim) +
                                      " variables exceeds cap " + std::to_string(max_variables));
  }
  const std::size_t capacity = arr.dim + arr.hyperplanes.size();
  std::vector<std::pair<std::vector<int>, detail::DDCone>> work;
  work.emplace_back(std::vector<int>{}, detail::simplicial_cone(arr.cone_rows, capacity));
  for (const auto& h : arr.hyperplanes) {
    std::vector<std::pair<std::vector<int>, detail::DDCone>> next;
    for (auto& [signs, cone] : work) {
      auto [plus, minus] = detail::dd_split(cone, h.normal);
      const auto [pos, neg] = detail::side_signs(cone, h.normal);
      if (pos) {
        auto s = signs;
        s.push_back(1);
        next.emplace_back(std::move(s), std::move(plus));
      }
      if (neg) {
        auto s = signs;
        s.push_back(-1);
        next.emplace_back(std::move(s), std::move(minus));
      }
    }
    work = std::move(next);
  }
  std::vector<Chamber> out;
  for (auto& [signs, cone] : work) {
    Chamber c;
    c.signs = signs;
    c.rays = cone.rays;
    std::sort(c.rays.begin(), c.rays.end());
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const Chamber& a, const Chamber& b) { return a.signs < b.signs; });
  return out;
}

std::vector<RationalRay> extremal_edges(const std::vector<Chamber>& chambers) {
  std::set<RationalRay> all;
  for (const auto& c : chambers) {
    for (const auto& r : c.rays) all.insert(RationalRay{r});
  }
  return {all.begin(), all.end()};
}

std::vector<RationalRay> reduce_by_site_symmetry(const std::vector<RationalRay>& rays) {
  std::set<RationalRay> all;
  for (auto r : rays) {
    std::sort(r.direction.begin(), r.direction.end());
    all.insert(r);
  }
  return {all.begin(), all.end()};
}

std::vector<int> chamber_order(const Arrangement& arr, const Chamber& chamber) {
  QVector t(arr.dim, 0);
  for (const auto& r : chamber.rays) {
    for (int j = 0; j < arr.dim; ++j) t[j] += Rational(r[j]);
  }
  return joint_order(arr.layout, values_at(arr, t));
}

std::vector<std::vector<int>> orders_at_edge(const Arrangement& arr,
                                             const std::vector<Chamber>& chambers,
                                             const RationalRay& ray) {
  std::set<std::vector<int>> out;
  for (const auto& c : chambers) {
    if (std::find(c.rays.begin(), c.rays.end(), ray.direction) != c.rays.end()) {
      out.insert(chamber_order(arr, c));
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace qmp
