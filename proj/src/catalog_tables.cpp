// Hardcoded inequality lists. Coefficients refer to nonincreasing spectra.
#include <algorithm>
#include <array>
#include <map>

#include "qmp/catalog.hpp"

namespace qmp::tables {
namespace {

using Vec = std::vector<std::int64_t>;

InequalityRecord le(std::vector<Vec> lhs, Vec rhs, std::int64_t bound, std::string fam,
                    std::string note = {}) {
  return InequalityRecord{std::move(lhs), std::move(rhs), bound, Relation::kLessEqual,
                          std::move(fam), std::move(note)};
}

InequalityRecord single(const Vec& coeffs, std::int64_t bound, const std::string& fam,
                        const std::string& note = {}) {
  return le({coeffs}, {}, bound, fam, note);
}

}  // namespace

std::vector<InequalityRecord> bravyi() {
  const std::string f = "BRAVYI_2Q";
  std::vector<InequalityRecord> out;
  // min(lA, lB) >= nu3 + nu4 (lA, lB are the minimal eigenvalues).
  out.push_back(le({{0, -1}, {0, 0}}, {0, 0, -1, -1}, 0, f, "min(lA,lB) >= nu3+nu4 [A]"));
  out.push_back(le({{0, 0}, {0, -1}}, {0, 0, -1, -1}, 0, f, "min(lA,lB) >= nu3+nu4 [B]"));
  out.push_back(le({{0, -1}, {0, -1}}, {0, -1, -1, -2}, 0, f, "lA+lB >= nu2+nu3+2nu4"));
  for (int s : {1, -1}) {
    out.push_back(le({{0, s}, {0, -s}}, {1, 0, -1, 0}, 0, f, "|lA-lB| <= nu1-nu3"));
    out.push_back(le({{0, s}, {0, -s}}, {0, 1, 0, -1}, 0, f, "|lA-lB| <= nu2-nu4"));
  }
  return out;
}

std::vector<InequalityRecord> franz_base() {
  // Listed with increasing spectra: index p (1..3) becomes decreasing index 3-p.
  using Terms = std::map<int, int>;
  struct Row { Terms a, b, c; };
  const std::vector<Row> rows = {
      {{{2, 1}, {1, 1}}, {{2, 1}, {1, 1}}, {{2, 1}, {1, 1}}},
      {{{3, 1}, {1, 1}}, {{2, 1}, {1, 1}}, {{3, 1}, {1, 1}}},
      {{{3, 1}, {2, 1}}, {{2, 1}, {1, 1}}, {{3, 1}, {2, 1}}},
      {{{2, 2}, {1, 1}}, {{2, 2}, {1, 1}}, {{2, 2}, {1, 1}}},
      {{{1, 2}, {2, 1}}, {{2, 2}, {1, 1}}, {{1, 2}, {2, 1}}},
      {{{2, 2}, {3, 1}}, {{2, 2}, {1, 1}}, {{2, 2}, {3, 1}}},
      {{{2, 2}, {3, 1}}, {{1, 2}, {2, 1}}, {{3, 2}, {2, 1}}},
  };
  auto vec = [](const Terms& t, int sign) {
    Vec v(3, 0);
    for (auto [p, c] : t) v[3 - p] += sign * c;
    return v;
  };
  std::vector<InequalityRecord> out;
  int k = 1;
  for (const auto& r : rows) {
    out.push_back(le({vec(r.a, 1), vec(r.b, -1), vec(r.c, -1)}, {}, 0, "FRANZ_3QUTRIT",
                     "row " + std::to_string(k++)));
  }
  return out;
}

std::vector<InequalityRecord> franz() {
  std::vector<InequalityRecord> out;
  std::vector<int> perm = {0, 1, 2};
  do {
    for (const auto& rec : franz_base()) {
      InequalityRecord r = rec;
      // Roles (a, b, c) are assigned to sites perm[0], perm[1], perm[2].
      for (int role = 0; role < 3; ++role) r.lhs[perm[role]] = rec.lhs[role];
      r.note = rec.note + " (a,b,c)=(" + std::to_string(perm[0] + 1) + "," +
               std::to_string(perm[1] + 1) + "," + std::to_string(perm[2] + 1) + ")";
      if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<InequalityRecord> three_qubit_mixed() {
  // (gap coefficients c_i on Delta_i = lambda^(i)_1 - lambda^(i)_2, joint coefficients)
  const std::vector<std::pair<Vec, Vec>> rows = {
      {{0, 0, 1}, {1, 1, 1, 1, -1, -1, -1, -1}},
      {{0, 1, 1}, {2, 2, 0, 0, 0, 0, -2, -2}},
      {{1, 1, 1}, {3, 1, 1, 1, -1, -1, -1, -3}},
      {{-1, 1, 1}, {1, 3, 1, 1, -1, -1, -1, -3}},
      {{-1, 1, 1}, {3, 1, 1, 1, -1, -1, -3, -1}},
      {{1, 1, 2}, {4, 2, 2, 0, 0, -2, -2, -4}},
      {{-1, 1, 2}, {2, 4, 2, 0, 0, -2, -2, -4}},
      {{-1, 1, 2}, {4, 2, 0, 2, 0, -2, -2, -4}},
      {{-1, 1, 2}, {4, 2, 2, 0, -2, 0, -2, -4}},
      {{-1, 1, 2}, {4, 2, 2, 0, 0, -2, -4, -2}},
  };
  const std::vector<std::string> edges = {"(0,0,1)", "(0,1,1)", "(1,1,1)", "(1,1,1)",
                                          "(1,1,1)", "(1,1,2)", "(1,1,2)", "(1,1,2)",
                                          "(1,1,2)", "(1,1,2)"};
  std::vector<InequalityRecord> out;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& [c, joint] = rows[k];
    std::vector<Vec> lhs;
    for (auto ci : c) lhs.push_back({ci, -ci});
    out.push_back(le(lhs, joint, 0, "THREE_QUBIT_MIXED", "edge " + edges[k]));
  }
  return out;
}

std::vector<InequalityRecord> bd6() {
  std::vector<InequalityRecord> out;
  for (int i = 0; i < 3; ++i) {
    Vec v(6, 0);
    v[i] = 1;
    v[5 - i] = 1;
    auto r = single(v, 1, "BD6", "lambda_" + std::to_string(i + 1) + " + lambda_" +
                                     std::to_string(6 - i) + " = 1");
    r.relation = Relation::kEqual;
    out.push_back(r);
  }
  out.push_back(single({0, 0, 0, 1, -1, -1}, 0, "BD6", "lambda_4 <= lambda_5 + lambda_6"));
  return out;
}

std::vector<InequalityRecord> f7_bd() {
  std::vector<InequalityRecord> out;
  for (const auto& t : std::vector<std::array<int, 3>>{{1, 6, 7}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}}) {
    Vec v(7, 0);
    for (int i : t) v[i - 1] = -1;
    out.push_back(single(v, -1, "F7_BD"));
  }
  return out;
}

std::vector<InequalityRecord> f7_list() {
  // Third row uses +3 for lambda_5, the value consistent with
  // the four-inequality form and with sampled states.
  const std::vector<Vec> rows = {{-4, 3, 3, 3, 3, -4, -4},
                                 {3, -4, 3, 3, -4, 3, -4},
                                 {3, 3, -4, -4, 3, 3, -4},
                                 {3, 3, -4, 3, -4, -4, 3}};
  std::vector<InequalityRecord> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out.push_back(single(rows[i], 2, "F7_LIST", i == 2 ? "sign of lambda_5 corrected" : ""));
  }
  return out;
}

std::vector<InequalityRecord> f8_31() {
  const std::vector<std::pair<Vec, std::int64_t>> rows = {
      {{3, -1, -1, -1, -1, -1, -1, 3}, 1},
      {{-1, 1, 1, 1, 1, -1, -1, -1}, 1},
      {{1, 1, -1, -1, 1, 1, -1, -1}, 1},
      {{1, 1, -1, 1, -1, -1, 1, -1}, 1},
      {{1, -1, 1, 1, -1, 1, -1, -1}, 1},
      {{2, 1, -2, -1, 0, -1, 0, 1}, 1},
      {{2, -1, 0, -1, 0, 1, -2, 1}, 1},
      {{0, 0, 1, 2, -2, -1, -1, 1}, 1},
      {{1, 2, -2, 0, -1, -1, 0, 1}, 1},
      {{2, -1, 0, 1, -2, -1, 0, 1}, 1},
      {{5, 5, -7, -3, -3, 1, 1, 1}, 3},
      {{5, -3, -3, 1, 1, 5, -7, 1}, 3},
      {{5, 1, -3, 1, -3, 1, -3, 1}, 3},
      {{1, 1, 1, 5, -3, -3, -3, 1}, 3},
      {{1, 5, -3, 1, 1, -3, -3, 1}, 3},
      {{9, 1, -7, -7, -7, 1, 1, 9}, 3},
      {{9, -7, -7, 1, 1, 1, -7, 9}, 3},
      {{7, -1, -1, -1, -1, 7, -9, -1}, 5},
      {{7, -1, -1, 7, -9, -1, -1, -1}, 5},
      {{7, 7, -9, -1, -1, -1, -1, -1}, 5},
      {{-1, -1, 7, 7, -1, -1, -9, -1}, 5},
      {{-1, 7, -1, 7, -1, -9, -1, -1}, 5},
      {{-1, 7, -1, -1, 7, -1, -9, -1}, 5},
      {{-3, 5, 5, 13, -11, -3, -11, 5}, 7},
      {{5, 13, -11, 5, -11, -3, -3, 5}, 7},
      {{5, -3, 5, 13, -11, -11, -3, 5}, 7},
      {{5, 13, -11, -3, 5, -11, -3, 5}, 7},
      {{19, 11, -21, -13, -5, -5, 3, 11}, 9},
      {{19, -13, -5, -5, 3, 11, -21, 11}, 9},
      {{11, 19, -21, -5, -13, -5, 3, 11}, 9},
      {{-5, 3, 11, 19, -21, -13, -5, 11}, 9},
  };
  const auto groups = f8_31_groups();
  std::vector<InequalityRecord> out;
  std::size_t k = 0;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (int j = 0; j < groups[g]; ++j, ++k) {
      out.push_back(single(rows[k].first, rows[k].second, "F8_31",
                           "group " + std::to_string(g + 1)));
    }
  }
  return out;
}

std::vector<int> f8_31_groups() { return {1, 4, 5, 2, 3, 2, 6, 4, 4}; }

std::vector<InequalityRecord> f84_14() {
  const std::vector<Vec> rows = {
      {5, 1, 1, -3, 1, -3, -3, 1},  {1, 1, 5, -3, 1, 1, -3, -3}, {1, 1, 1, 1, 5, -3, -3, -3},
      {1, 5, 1, -3, 1, -3, 1, -3},  {5, -3, 1, 1, 1, 1, -3, -3}, {5, 1, 1, -3, -3, 1, 1, -3},
      {5, 1, -3, 1, 1, -3, 1, -3},  {-1, 3, 3, -1, 3, -1, -1, -5}, {3, 3, -1, -1, 3, -5, -1, -1},
      {3, 3, 3, -5, -1, -1, -1, -1}, {3, -1, 3, -1, 3, -1, -5, -1}, {3, 3, -1, -1, -1, -1, 3, -5},
      {3, -1, -1, 3, 3, -1, -1, -5}, {3, -1, 3, -1, -1, 3, -1, -5}};
  std::vector<InequalityRecord> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out.push_back(single(rows[i], 4, "F84_14", i < 7 ? "group 1" : "group 2"));
  }
  return out;
}

std::vector<std::vector<std::int64_t>> f84_abs_forms() {
  return {{1, 1, 1, 1, -1, -1, -1, -1}, {1, 1, -1, -1, 1, 1, -1, -1},
          {1, -1, 1, -1, 1, -1, 1, -1}, {1, -1, -1, 1, -1, 1, 1, -1},
          {-1, 1, 1, -1, -1, 1, 1, -1}, {-1, 1, -1, 1, 1, -1, 1, -1},
          {-1, -1, 1, 1, 1, 1, -1, -1}};
}

std::vector<InequalityRecord> f84_abs() {
  // |x_1| + ... + |x_7| <= 4 as 128 sign patterns.
  const auto forms = f84_abs_forms();
  std::vector<InequalityRecord> out;
  for (int mask = 0; mask < 128; ++mask) {
    Vec v(8, 0);
    for (int k = 0; k < 7; ++k) {
      const int s = (mask >> k & 1) ? -1 : 1;
      for (int i = 0; i < 8; ++i) v[i] += s * forms[k][i];
    }
    out.push_back(single(v, 4, "F84_ABS", "sign mask " + std::to_string(mask)));
  }
  return out;
}

std::vector<InequalityRecord> w2h4_mixed() {
  const std::string f = "W2H4_MIXED";
  std::vector<InequalityRecord> out;
  auto add = [&](Vec l, Vec n, const std::string& note) {
    out.push_back(le({std::move(l)}, std::move(n), 0, f, note));
  };
  add({2, 0, 0, 0}, {1, 1, 1, 0, 0, 0}, "2l1 <= n1+n2+n3");
  add({0, 0, 0, -2}, {0, 0, 0, -1, -1, -1}, "2l4 >= n4+n5+n6");
  add({2, 0, 0, -2}, {1, 1, 0, 0, -1, -1}, "2(l1-l4) <= n1+n2-n5-n6");
  add({1, 1, -1, -1}, {1, 0, 0, 0, 0, -1}, "l1+l2-l3-l4 <= n1-n6");
  add({1, -1, 1, -1}, {1, 0, 0, 0, -1, 0}, "l1-l2+l3-l4 <= n1-n5");
  add({1, -1, 1, -1}, {0, 1, 0, 0, 0, -1}, "l1-l2+l3-l4 <= n2-n6");
  for (int s : {1, -1}) {
    const Vec l = {s, -s, -s, s};
    add(l, {1, 0, 0, -1, 0, 0}, "|l1-l2-l3+l4| <= n1-n4");
    add(l, {0, 1, 0, 0, -1, 0}, "|l1-l2-l3+l4| <= n2-n5");
    add(l, {0, 0, 1, 0, 0, -1}, "|l1-l2-l3+l4| <= n3-n6");
  }
  for (const Vec& l : {Vec{2, 0, -2, 0}, Vec{0, 2, 0, -2}}) {
    add(l, {1, 0, 1, 0, -1, -1}, "2max(l1-l3,l2-l4) <= n1+n3-n5-n6");
    add(l, {1, 1, 0, -1, 0, -1}, "2max(l1-l3,l2-l4) <= n1+n2-n4-n6");
  }
  for (const Vec& l : {Vec{2, -2, 0, 0}, Vec{0, 0, 2, -2}}) {
    add(l, {1, 0, 1, -1, 0, -1}, "2max(l1-l2,l3-l4) <= n1+n3-n4-n6");
    add(l, {0, 1, 1, 0, -1, -1}, "2max(l1-l2,l3-l4) <= n2+n3-n5-n6");
    add(l, {1, 1, 0, -1, -1, 0}, "2max(l1-l2,l3-l4) <= n1+n2-n4-n5");
  }
  return out;
}

std::vector<InequalityRecord> chsh16() {
  // Base: E11 + E21 + E22 - E12 + 2 >= 0, i.e. -(E11 - E12 + E21 + E22) <= 2.
  const Vec base = {1, -1, 1, 1};  // order E11, E12, E21, E22
  std::vector<InequalityRecord> out;
  for (int mask = 0; mask < 16; ++mask) {
    const int sa1 = (mask & 1) ? -1 : 1, sa2 = (mask & 2) ? -1 : 1;
    const int sb1 = (mask & 4) ? -1 : 1, sb2 = (mask & 8) ? -1 : 1;
    const Vec v = {-base[0] * sa1 * sb1, -base[1] * sa1 * sb2, -base[2] * sa2 * sb1,
                   -base[3] * sa2 * sb2};
    out.push_back(single(v, 2, "CHSH_16", "flip mask " + std::to_string(mask)));
  }
  return out;
}

std::vector<InequalityRecord> polygon(int qubits) {
  std::vector<InequalityRecord> out;
  for (int i = 0; i < qubits; ++i) {
    std::vector<Vec> lhs(qubits, Vec{0, -1});
    lhs[i] = {0, 1};
    out.push_back(le(lhs, {}, 0, "POLYGON", "site " + std::to_string(i + 1)));
  }
  return out;
}

std::vector<InequalityRecord> basic(const std::vector<int>& dims) {
  std::int64_t total = 1;
  for (int d : dims) total *= d;
  std::vector<InequalityRecord> out;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    for (int k = 1; k < dims[i]; ++k) {
      std::vector<Vec> lhs;
      for (int d : dims) lhs.emplace_back(d, 0);
      for (int j = 0; j < k; ++j) lhs[i][j] = 1;
      Vec joint(total, 0);
      const std::int64_t upto = k * (total / dims[i]);
      for (std::int64_t j = 0; j < upto; ++j) joint[j] = 1;
      out.push_back(le(lhs, joint, 0, "BASIC",
                       "site " + std::to_string(i + 1) + ", k=" + std::to_string(k)));
    }
  }
  return out;
}

std::vector<InequalityRecord> pauli(int r) {
  std::vector<InequalityRecord> out;
  for (int i = 0; i < r; ++i) {
    Vec v(r, 0);
    v[i] = -1;
    out.push_back(single(v, 0, "PAULI", "lambda_" + std::to_string(i + 1) + " >= 0"));
    v[i] = 1;
    out.push_back(single(v, 1, "PAULI", "lambda_" + std::to_string(i + 1) + " <= 1"));
  }
  return out;
}

}  // namespace qmp::tables
