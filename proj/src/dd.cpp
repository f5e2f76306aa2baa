#include "dd.hpp"

#include "qmp/error.hpp"

namespace qmp::detail {

Bits Bits::operator&(const Bits& o) const {
  Bits r = *this;
  for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= o.w_[i];
  return r;
}

bool Bits::subset_of(const Bits& o) const {
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (w_[i] & ~o.w_[i]) return false;
  }
  return true;
}

int Bits::count() const {
  int c = 0;
  for (auto x : w_) c += __builtin_popcountll(x);
  return c;
}

std::vector<int> rref(std::vector<QVector>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size()), cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i) {
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    const Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (int j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

std::vector<QVector> inverse(const std::vector<QVector>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<QVector> aug(n, QVector(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  const auto piv = rref(aug);
  if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) {
    fail(ErrorCode::kInternal, "singular matrix");
  }
  std::vector<QVector> inv(n, QVector(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  }
  return inv;
}

DDCone simplicial_cone(const std::vector<ZVector>& rows, std::size_t capacity) {
  const int n = static_cast<int>(rows.size());
  std::vector<QVector> a;
  for (const auto& r : rows) a.push_back(to_q(r));
  const auto inv = inverse(a);
  DDCone cone;
  cone.dim = n;
  cone.capacity = capacity;
  cone.constraints = n;
  for (int j = 0; j < n; ++j) {
    QVector col(n);
    for (int i = 0; i < n; ++i) col[i] = inv[i][j];
    cone.rays.push_back(primitive(col));
    Bits z(capacity);
    for (int i = 0; i < n; ++i) {
      if (i != j) z.set(i);
    }
    cone.zeros.push_back(z);
  }
  return cone;
}

std::pair<bool, bool> side_signs(const DDCone& cone, const ZVector& h) {
  bool pos = false, neg = false;
  for (const auto& r : cone.rays) {
    const int s = sgn(dot(h, r));
    pos |= s > 0;
    neg |= s < 0;
  }
  return {pos, neg};
}

std::pair<DDCone, DDCone> dd_split(const DDCone& cone, const ZVector& h) {
  if (cone.constraints >= cone.capacity) fail(ErrorCode::kInternal, "constraint capacity exceeded");
  const std::size_t idx = cone.constraints;
  DDCone plus, minus;
  for (auto* c : {&plus, &minus}) {
    c->dim = cone.dim;
    c->capacity = cone.capacity;
    c->constraints = idx + 1;
  }
  std::vector<Integer> val(cone.rays.size());
  std::vector<std::size_t> pos, neg;
  for (std::size_t i = 0; i < cone.rays.size(); ++i) {
    val[i] = dot(h, cone.rays[i]);
    const int s = sgn(val[i]);
    if (s > 0) {
      pos.push_back(i);
      plus.rays.push_back(cone.rays[i]);
      plus.zeros.push_back(cone.zeros[i]);
    } else if (s < 0) {
      neg.push_back(i);
      minus.rays.push_back(cone.rays[i]);
      minus.zeros.push_back(cone.zeros[i]);
    } else {
      Bits z = cone.zeros[i];
      z.set(idx);
      for (auto* c : {&plus, &minus}) {
        c->rays.push_back(cone.rays[i]);
        c->zeros.push_back(z);
      }
    }
  }
  if (pos.empty()) plus.rays.clear(), plus.zeros.clear();
  if (neg.empty()) minus.rays.clear(), minus.zeros.clear();
  if (pos.empty() || neg.empty()) {
    // h does not cut the interior; the surviving side keeps its rays, the other
    // side degenerates to (at most) the face on h, which is not full-dimensional.
    return {plus, minus};
  }
  const int need = cone.dim - 2;
  for (auto p : pos) {
    for (auto q : neg) {
      const Bits common = cone.zeros[p] & cone.zeros[q];
      if (common.count() < need) continue;
      bool adjacent = true;
      for (std::size_t r = 0; r < cone.rays.size() && adjacent; ++r) {
        if (r != p && r != q && common.subset_of(cone.zeros[r])) adjacent = false;
      }
      if (!adjacent) continue;
      ZVector ray(cone.dim);
      const Integer a = -val[q], b = val[p];
      for (int k = 0; k < cone.dim; ++k) ray[k] = a * cone.rays[p][k] + b * cone.rays[q][k];
      ray = primitive(ray);
      Bits z = common;
      z.set(idx);
      for (auto* c : {&plus, &minus}) {
        c->rays.push_back(ray);
        c->zeros.push_back(z);
      }
    }
  }
  return {plus, minus};
}

DDCone dd_intersect(const DDCone& cone, const ZVector& h) { return dd_split(cone, h).first; }

}  // namespace qmp::detail
