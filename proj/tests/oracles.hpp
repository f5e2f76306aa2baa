#pragma once
// Independent reference implementations used by the unit and acceptance tests.
// They share nothing with the library beyond the public types, and favour
// brute force over efficiency.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include <Eigen/Dense>
#include <gmpxx.h>

namespace oracle {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// ---------------------------------------------------------------- tensors

inline std::vector<int> unflatten(std::size_t idx, const std::vector<int>& dims) {
  std::vector<int> out(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    out[k] = static_cast<int>(idx % dims[k]);
    idx /= dims[k];
  }
  return out;
}

/// Partial trace by explicit summation over all index pairs.
inline CMatrix partial_trace(const CMatrix& rho, const std::vector<int>& dims,
                             const std::vector<int>& keep) {
  std::size_t kd = 1;
  for (int k : keep) kd *= dims[k];
  CMatrix out = CMatrix::Zero(kd, kd);
  const std::size_t n = rho.rows();
  for (std::size_t x = 0; x < n; ++x) {
    const auto ix = unflatten(x, dims);
    for (std::size_t y = 0; y < n; ++y) {
      const auto iy = unflatten(y, dims);
      bool traced_equal = true;
      for (std::size_t k = 0; k < dims.size(); ++k) {
        if (std::find(keep.begin(), keep.end(), static_cast<int>(k)) == keep.end() &&
            ix[k] != iy[k]) {
          traced_equal = false;
        }
      }
      if (!traced_equal) continue;
      std::size_t kx = 0, ky = 0;
      for (int k : keep) {
        kx = kx * dims[k] + ix[k];
        ky = ky * dims[k] + iy[k];
      }
      out(kx, ky) += rho(x, y);
    }
  }
  return out;
}

/// Real roots of det(H - x) located by scanning and bisection.
inline std::vector<double> charpoly_roots(const CMatrix& h) {
  const int n = static_cast<int>(h.rows());
  double bound = 0;
  for (int i = 0; i < n; ++i) {
    double row = 0;
    for (int j = 0; j < n; ++j) row += std::abs(h(i, j));
    bound = std::max(bound, row);
  }
  bound += 1;
  auto f = [&](double x) {
    CMatrix m = h - x * CMatrix::Identity(n, n);
    return m.determinant().real();
  };
  std::vector<double> roots;
  const int steps = 200000;
  double x0 = -bound, f0 = f(x0);
  for (int s = 1; s <= steps; ++s) {
    const double x1 = -bound + 2 * bound * s / steps;
    const double f1 = f(x1);
    if (f0 == 0) roots.push_back(x0);
    else if ((f0 < 0) != (f1 < 0)) {
      double lo = x0, hi = x1, flo = f0;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((fm < 0) == (flo < 0)) { lo = mid; flo = fm; } else { hi = mid; }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    x0 = x1;
    f0 = f1;
  }
  std::sort(roots.rbegin(), roots.rend());
  return roots;
}

// ---------------------------------------------------------------- fermions

/// Lexicographic n-subsets of {0..r-1}.
inline std::vector<std::vector<int>> subsets(int r, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < r; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

inline int perm_sign(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

/// Embed an antisymmetric state into (C^r)^{(x)n} and return n times its
/// one-factor marginal, i.e. the one-body matrix <a_j^+ a_i>.
inline CMatrix embedded_one_rdm(const CVector& amps, int r, int n) {
  const auto subs = subsets(r, n);
  std::size_t full = 1;
  for (int k = 0; k < n; ++k) full *= r;
  CVector psi = CVector::Zero(full);
  std::vector<int> perm(n);
  double norm = 1;
  for (int k = 2; k <= n; ++k) norm *= k;
  norm = 1.0 / std::sqrt(norm);
  for (std::size_t s = 0; s < subs.size(); ++s) {
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::size_t idx = 0;
      for (int k = 0; k < n; ++k) idx = idx * r + subs[s][perm[k]];
      psi(idx) += static_cast<double>(perm_sign(perm)) * norm * amps(s);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  const std::size_t rest = full / r;
  CMatrix out = CMatrix::Zero(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (std::size_t t = 0; t < rest; ++t)
        out(i, j) += psi(i * rest + t) * std::conj(psi(j * rest + t));
  return static_cast<double>(n) * out;
}

/// a_p or a_p^+ on an occupation bit mask; sign counts occupied orbitals below p.
inline bool fermion_op(std::uint64_t& mask, int p, bool create, int& sign) {
  const bool occ = (mask >> p) & 1;
  if (occ == create) return false;
  int below = 0;
  for (int q = 0; q < p; ++q) below += (mask >> q) & 1;
  if (below % 2) sign = -sign;
  mask ^= (std::uint64_t{1} << p);
  return true;
}

/// Dense matrix of sum h1_pq a_p^+ a_q + sum h12[(i<j),(k<l)] a_i^+ a_j^+ a_l a_k
/// on the lexicographic n-particle basis.
inline CMatrix fermion_hamiltonian(const CMatrix& h1, const CMatrix& h12, int r, int n) {
  const auto subs = subsets(r, n);
  std::map<std::uint64_t, std::size_t> index;
  std::vector<std::uint64_t> masks;
  for (std::size_t s = 0; s < subs.size(); ++s) {
    std::uint64_t m = 0;
    for (int i : subs[s]) m |= std::uint64_t{1} << i;
    index[m] = s;
    masks.push_back(m);
  }
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) pairs.emplace_back(i, j);
  const std::size_t dim = subs.size();
  CMatrix h = CMatrix::Zero(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    for (int p = 0; p < r; ++p) {
      for (int q = 0; q < r; ++q) {
        std::uint64_t m = masks[col];
        int sign = 1;
        if (!fermion_op(m, q, false, sign) || !fermion_op(m, p, true, sign)) continue;
        h(index.at(m), col) += static_cast<double>(sign) * h1(p, q);
      }
    }
    for (std::size_t a = 0; a < pairs.size(); ++a) {
      for (std::size_t b = 0; b < pairs.size(); ++b) {
        const auto [i, j] = pairs[a];
        const auto [k, l] = pairs[b];
        std::uint64_t m = masks[col];
        int sign = 1;
        if (!fermion_op(m, k, false, sign) || !fermion_op(m, l, false, sign) ||
            !fermion_op(m, j, true, sign) || !fermion_op(m, i, true, sign)) {
          continue;
        }
        h(index.at(m), col) += static_cast<double>(sign) * h12(a, b);
      }
    }
  }
  return h;
}

// ---------------------------------------------------------------- partitions

/// All (sorted row sums, sorted column sums) pairs realised by 0/1 matrices of
/// size at most rows x cols. Sorted margins are nonincreasing with zeros removed.
inline std::set<std::pair<std::vector<int>, std::vector<int>>> realisable_margins(int rows,
                                                                                  int cols) {
  std::set<std::pair<std::vector<int>, std::vector<int>>> out;
  const int cells = rows * cols;
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << cells); ++bits) {
    std::vector<int> rs(rows, 0), cs(cols, 0);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if ((bits >> (i * cols + j)) & 1) {
          ++rs[i];
          ++cs[j];
        }
    auto norm = [](std::vector<int> v) {
      std::sort(v.rbegin(), v.rend());
      while (!v.empty() && v.back() == 0) v.pop_back();
      return v;
    };
    out.insert({norm(rs), norm(cs)});
  }
  return out;
}

/// Partitions fitting in a rows x cols box (including the empty partition).
inline std::vector<std::vector<int>> box_partitions(int rows, int cols) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int maxpart) {
    out.push_back(cur);
    if (static_cast<int>(cur.size()) == rows) return;
    for (int p = 1; p <= maxpart; ++p) {
      cur.push_back(p);
      rec(p);
      cur.pop_back();
    }
  };
  rec(cols);
  return out;
}

/// Semistandard tableaux of shape lambda and content mu, counted by filling
/// cells row by row.
inline std::int64_t kostka(const std::vector<int>& lambda, const std::vector<int>& mu) {
  std::vector<std::pair<int, int>> cells;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (int j = 0; j < lambda[i]; ++j) cells.emplace_back(static_cast<int>(i), j);
  std::vector<std::vector<int>> t(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) t[i].assign(lambda[i], 0);
  std::vector<int> left = mu;
  std::int64_t count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == cells.size()) {
      ++count;
      return;
    }
    const auto [i, j] = cells[c];
    for (int v = 1; v <= static_cast<int>(mu.size()); ++v) {
      if (left[v - 1] == 0) continue;
      if (j > 0 && t[i][j - 1] > v) continue;
      if (i > 0 && t[i - 1][j] >= v) continue;
      t[i][j] = v;
      --left[v - 1];
      rec(c + 1);
      ++left[v - 1];
      t[i][j] = 0;
    }
  };
  rec(0);
  return count;
}

/// Weight counts of S^m(wedge^n C^r) by listing every multiset of n-subsets.
inline std::map<std::vector<int>, std::int64_t> multiset_weights(int r, int n, int m) {
  const auto subs = subsets(r, n);
  std::map<std::vector<int>, std::int64_t> out;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (static_cast<int>(pick.size()) == m) {
      std::vector<int> w(r, 0);
      for (auto s : pick)
        for (int i : subs[s]) ++w[i];
      ++out[w];
      return;
    }
    for (std::size_t s = start; s < subs.size(); ++s) {
      pick.push_back(s);
      rec(s);
      pick.pop_back();
    }
  };
  rec(0);
  return out;
}

/// Partitions of 2m into at most r rows, each at most m, in which every
/// distinct nonzero row length occurs an even number of times.
inline std::set<std::vector<int>> even_row_partitions(int r, int m) {
  std::set<std::vector<int>> out;
  for (const auto& p : box_partitions(r, m)) {
    if (std::accumulate(p.begin(), p.end(), 0) != 2 * m) continue;
    std::map<int, int> mult;
    for (int x : p) ++mult[x];
    bool ok = true;
    for (auto [len, c] : mult) ok &= c % 2 == 0;
    if (ok) out.insert(p);
  }
  return out;
}

// ---------------------------------------------------------------- polynomials

/// Sparse integer polynomial in a fixed number of variables.
struct Poly {
  int nvars = 0;
  std::map<std::vector<int>, mpz_class> terms;

  static Poly one(int nv) {
    Poly p{nv, {}};
    p.terms[std::vector<int>(nv, 0)] = 1;
    return p;
  }
  void add(const std::vector<int>& e, const mpz_class& c) {
    auto& v = terms[e];
    v += c;
    if (v == 0) terms.erase(e);
  }
  Poly operator*(const Poly& o) const {
    Poly out{nvars, {}};
    for (const auto& [e1, c1] : terms)
      for (const auto& [e2, c2] : o.terms) {
        std::vector<int> e(nvars);
        for (int i = 0; i < nvars; ++i) e[i] = e1[i] + e2[i];
        out.add(e, c1 * c2);
      }
    return out;
  }
  Poly operator+(const Poly& o) const {
    Poly out = *this;
    for (const auto& [e, c] : o.terms) out.add(e, c);
    return out;
  }
};

/// Reduced words of w (one-line, 1-based) as lists of adjacent transposition
/// indices a1..al with w = s_a1 ... s_al.
inline std::vector<std::vector<int>> reduced_words(const std::vector<int>& w) {
  std::vector<std::vector<int>> out;
  bool ident = true;
  for (std::size_t i = 0; i < w.size(); ++i) ident &= w[i] == static_cast<int>(i) + 1;
  if (ident) return {{}};
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] > w[i + 1]) {  // right descent: w = (w s_i) s_i
      auto v = w;
      std::swap(v[i], v[i + 1]);
      for (auto word : reduced_words(v)) {
        word.push_back(static_cast<int>(i) + 1);
        out.push_back(word);
      }
    }
  }
  return out;
}

/// Schubert polynomial via compatible sequences: sum over reduced words
/// a1..al of w and weakly increasing i1..il with i_k <= a_k, strictly
/// increasing where a_k < a_{k+1}.
inline Poly schubert(const std::vector<int>& w, int nvars) {
  Poly out{nvars, {}};
  for (const auto& a : reduced_words(w)) {
    const int l = static_cast<int>(a.size());
    std::vector<int> seq(l);
    std::function<void(int)> rec = [&](int k) {
      if (k == l) {
        std::vector<int> e(nvars, 0);
        for (int x : seq) ++e[x - 1];
        out.add(e, 1);
        return;
      }
      const int lo = k == 0 ? 1 : seq[k - 1] + (a[k - 1] < a[k] ? 1 : 0);
      for (int i = lo; i <= a[k] && i <= nvars; ++i) {
        seq[k] = i;
        rec(k + 1);
      }
    };
    rec(0);
  }
  return out;
}

/// Permutation with the given Lehmer code.
inline std::vector<int> from_code(const std::vector<int>& code) {
  int len = static_cast<int>(code.size());
  for (std::size_t i = 0; i < code.size(); ++i)
    len = std::max(len, static_cast<int>(i) + code[i] + 1);
  std::vector<int> avail(len);
  std::iota(avail.begin(), avail.end(), 1);
  std::vector<int> w;
  for (int i = 0; i < len; ++i) {
    const int c = i < static_cast<int>(code.size()) ? code[i] : 0;
    w.push_back(avail[c]);
    avail.erase(avail.begin() + c);
  }
  while (w.size() > 1 && w.back() == static_cast<int>(w.size())) w.pop_back();
  return w;
}

inline std::vector<int> code_of(const std::vector<int>& w, std::size_t len) {
  std::vector<int> c(len, 0);
  for (std::size_t i = 0; i < w.size() && i < len; ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[j] < w[i]) ++c[i];
  return c;
}

/// Substitute z_k -> sum of the variables listed in images[k].
inline Poly substitute(const Poly& p, const std::vector<std::vector<int>>& images, int nv) {
  Poly out{nv, {}};
  for (const auto& [e, c] : p.terms) {
    Poly term = Poly::one(nv);
    term.terms.begin()->second = c;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      Poly lin{nv, {}};
      for (int v : images[k]) {
        std::vector<int> x(nv, 0);
        x[v] = 1;
        lin.add(x, 1);
      }
      for (int t = 0; t < e[k]; ++t) term = term * lin;
    }
    out = out + term;
  }
  return out;
}

/// Expansion of a polynomial in products of Schubert polynomials of disjoint
/// variable blocks, by peeling lexicographically leading monomials (the
/// leading monomial of S_u is x^{code(u)} with coefficient 1). Keys are the
/// per-block Lehmer codes.
inline std::map<std::vector<std::vector<int>>, mpz_class> schubert_expand(
    Poly p, const std::vector<int>& block_sizes) {
  std::map<std::vector<std::vector<int>>, mpz_class> out;
  while (!p.terms.empty()) {
    const auto lead = *p.terms.rbegin();
    std::vector<std::vector<int>> codes;
    Poly basis = Poly::one(p.nvars);
    int off = 0;
    for (int bs : block_sizes) {
      std::vector<int> code(lead.first.begin() + off, lead.first.begin() + off + bs);
      codes.push_back(code);
      Poly s = schubert(from_code(code), bs);
      Poly shifted{p.nvars, {}};
      for (const auto& [e, c] : s.terms) {
        std::vector<int> full(p.nvars, 0);
        std::copy(e.begin(), e.end(), full.begin() + off);
        shifted.add(full, c);
      }
      basis = basis * shifted;
      off += bs;
    }
    out[codes] += lead.second;
    Poly neg{p.nvars, {}};
    for (const auto& [e, c] : basis.terms) neg.add(e, -lead.second * c);
    p = p + neg;
  }
  return out;
}

// ---------------------------------------------------------------- geometry

using QVec = std::vector<mpq_class>;

/// Primitive integer (normal, rhs) with positive scaling.
inline std::pair<std::vector<mpz_class>, mpz_class> primitive_facet(const QVec& n,
                                                                    const mpq_class& b) {
  QVec all = n;
  all.push_back(b);
  mpz_class l = 1;
  for (const auto& q : all) l = lcm(l, mpz_class(q.get_den()));
  std::vector<mpz_class> z;
  mpz_class g = 0;
  for (const auto& q : all) {
    mpq_class s = q * l;
    z.push_back(s.get_num());
    g = gcd(g, z.back());
  }
  if (g != 0)
    for (auto& x : z) x /= g;
  mpz_class rhs = z.back();
  z.pop_back();
  return {z, rhs};
}

/// Facets of a full-dimensional 3-d point set: every plane through three
/// affinely independent points with all points on one side.
inline std::set<std::pair<std::vector<mpz_class>, mpz_class>> brute_facets_3d(
    const std::vector<QVec>& pts) {
  std::set<std::pair<std::vector<mpz_class>, mpz_class>> out;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        QVec u(3), v(3);
        for (int c = 0; c < 3; ++c) {
          u[c] = pts[j][c] - pts[i][c];
          v[c] = pts[k][c] - pts[i][c];
        }
        QVec nrm = {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                    u[0] * v[1] - u[1] * v[0]};
        if (nrm[0] == 0 && nrm[1] == 0 && nrm[2] == 0) continue;
        const mpq_class b = nrm[0] * pts[i][0] + nrm[1] * pts[i][1] + nrm[2] * pts[i][2];
        int above = 0, below = 0;
        for (const auto& p : pts) {
          const mpq_class s = nrm[0] * p[0] + nrm[1] * p[1] + nrm[2] * p[2] - b;
          above += s > 0;
          below += s < 0;
        }
        if (above && below) continue;
        if (above) {
          for (auto& x : nrm) x = -x;
          out.insert(primitive_facet(nrm, -b));
        } else {
          out.insert(primitive_facet(nrm, b));
        }
      }
  return out;
}

/// Solve a square rational system; false when singular.
inline bool solve(std::vector<QVec> a, QVec b, QVec& x) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return false;
    std::swap(a[piv], a[c]);
    std::swap(b[piv], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const mpq_class f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  x.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return true;
}

struct Halfspace {
  QVec a;
  mpq_class b;
  bool eq = false;
};

/// Vertices of a bounded polyhedron by trying every choice of tight constraints.
inline std::vector<QVec> vertices(const std::vector<Halfspace>& sys, std::size_t nv) {
  std::vector<std::size_t> eqs, ineqs;
  for (std::size_t i = 0; i < sys.size(); ++i) (sys[i].eq ? eqs : ineqs).push_back(i);
  std::vector<QVec> out;
  if (eqs.size() > nv) return out;
  const std::size_t need = nv - eqs.size();
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (pick.size() == need) {
      std::vector<QVec> a;
      QVec b;
      for (auto e : eqs) { a.push_back(sys[e].a); b.push_back(sys[e].b); }
      for (auto p : pick) { a.push_back(sys[p].a); b.push_back(sys[p].b); }
      QVec x;
      if (!solve(a, b, x)) return;
      for (const auto& h : sys) {
        mpq_class s = 0;
        for (std::size_t k = 0; k < nv; ++k) s += h.a[k] * x[k];
        if (h.eq ? s != h.b : s > h.b) return;
      }
      if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
      return;
    }
    for (std::size_t i = start; i < ineqs.size(); ++i) {
      pick.push_back(ineqs[i]);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return out;
}

/// Sequential redundancy removal on a bounded system: inequality i is dropped
/// when its maximum over the vertices of (ambient + remaining others) is at
/// most its bound, or that system is empty.
inline std::vector<std::size_t> irredundant(const std::vector<Halfspace>& ineqs,
                                            const std::vector<Halfspace>& ambient,
                                            std::size_t nv) {
  std::vector<bool> active(ineqs.size(), true);
  for (std::size_t i = 0; i < ineqs.size(); ++i) {
    auto sys = ambient;
    for (std::size_t j = 0; j < ineqs.size(); ++j)
      if (j != i && active[j]) sys.push_back(ineqs[j]);
    const auto vs = vertices(sys, nv);
    bool implied = true;
    for (const auto& v : vs) {
      mpq_class s = 0;
      for (std::size_t k = 0; k < nv; ++k) s += ineqs[i].a[k] * v[k];
      if (s > ineqs[i].b) implied = false;
    }
    if (implied) active[i] = false;
  }
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < ineqs.size(); ++i)
    if (active[i]) kept.push_back(i);
  return kept;
}

}  // namespace oracle
