#include "qmp/lp.hpp"

#include "qmp/error.hpp"

namespace qmp {
namespace {

struct Tableau {
  std::vector<QVector> rows;  // last entry is the right-hand side
  std::vector<int> basis;
  int cols = 0;               // number of structural columns
};

void pivot(Tableau& t, int r, int c) {
  const Rational inv = 1 / t.rows[r][c];
  for (auto& x : t.rows[r]) x *= inv;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (static_cast<int>(i) == r || t.rows[i][c] == 0) continue;
    const Rational f = t.rows[i][c];
    for (int j = 0; j <= t.cols; ++j) t.rows[i][j] -= f * t.rows[r][j];
  }
  t.basis[r] = c;
}

enum class Outcome { kOptimal, kUnbounded };

// Maximizes cost . z over columns < allowed, tableau in canonical form.
Outcome run_simplex(Tableau& t, const QVector& cost, int allowed) {
  const int m = static_cast<int>(t.rows.size());
  while (true) {
    int enter = -1;
    for (int j = 0; j < allowed && enter < 0; ++j) {
      bool basic = false;
      for (int b : t.basis) basic |= b == j;
      if (basic) continue;
      Rational rc = cost[j];
      for (int i = 0; i < m; ++i) rc -= cost[t.basis[i]] * t.rows[i][j];
      if (rc > 0) enter = j;
    }
    if (enter < 0) return Outcome::kOptimal;
    int leave = -1;
    Rational best;
    for (int i = 0; i < m; ++i) {
      if (t.rows[i][enter] <= 0) continue;
      const Rational ratio = t.rows[i][t.cols] / t.rows[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && t.basis[i] < t.basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) return Outcome::kUnbounded;
    pivot(t, leave, enter);
  }
}

}  // namespace

LpResult maximize(const QVector& c, const std::vector<LinearConstraint>& constraints) {
  const int n = static_cast<int>(c.size());
  int slacks = 0;
  for (const auto& k : constraints) {
    if (static_cast<int>(k.a.size()) != n) fail(ErrorCode::kDimensionMismatch, "constraint length");
    if (!k.equality) ++slacks;
  }
  const int m = static_cast<int>(constraints.size());
  // Columns: x+ (n), x- (n), slacks, artificials (m).
  const int art0 = 2 * n + slacks;
  Tableau t;
  t.cols = art0 + m;
  int s = 0;
  for (int i = 0; i < m; ++i) {
    const auto& k = constraints[i];
    QVector row(t.cols + 1, 0);
    for (int j = 0; j < n; ++j) {
      row[j] = k.a[j];
      row[n + j] = -k.a[j];
    }
    if (!k.equality) row[2 * n + s++] = 1;
    row[t.cols] = k.b;
    if (k.b < 0) {
      for (auto& x : row) x = -x;
    }
    row[art0 + i] = 1;
    t.rows.push_back(std::move(row));
    t.basis.push_back(art0 + i);
  }
  // Phase 1: maximize -sum(artificials).
  QVector cost1(t.cols, 0);
  for (int i = 0; i < m; ++i) cost1[art0 + i] = -1;
  run_simplex(t, cost1, t.cols);
  Rational infeas = 0;
  for (int i = 0; i < m; ++i) {
    if (t.basis[i] >= art0) infeas += t.rows[i][t.cols];
  }
  LpResult res;
  if (infeas != 0) {
    res.status = LpStatus::kInfeasible;
    return res;
  }
  // Drive remaining artificials out of the basis or drop redundant rows.
  for (int i = 0; i < static_cast<int>(t.rows.size());) {
    if (t.basis[i] < art0) {
      ++i;
      continue;
    }
    int col = -1;
    for (int j = 0; j < art0 && col < 0; ++j) {
      if (t.rows[i][j] != 0) col = j;
    }
    if (col >= 0) {
      pivot(t, i, col);
      ++i;
    } else {
      t.rows.erase(t.rows.begin() + i);
      t.basis.erase(t.basis.begin() + i);
    }
  }
  QVector cost2(t.cols, 0);
  for (int j = 0; j < n; ++j) {
    cost2[j] = c[j];
    cost2[n + j] = -c[j];
  }
  if (run_simplex(t, cost2, art0) == Outcome::kUnbounded) {
    res.status = LpStatus::kUnbounded;
    return res;
  }
  QVector z(t.cols, 0);
  for (std::size_t i = 0; i < t.rows.size(); ++i) z[t.basis[i]] = t.rows[i][t.cols];
  res.status = LpStatus::kOptimal;
  res.x.assign(n, 0);
  res.value = 0;
  for (int j = 0; j < n; ++j) {
    res.x[j] = z[j] - z[n + j];
    res.value += c[j] * res.x[j];
  }
  return res;
}

bool feasible(const std::vector<LinearConstraint>& constraints, std::size_t num_vars) {
  return maximize(QVector(num_vars, 0), constraints).status != LpStatus::kInfeasible;
}

std::vector<std::size_t> redundancy_filter(const std::vector<LinearConstraint>& inequalities,
                                           const std::vector<LinearConstraint>& ambient) {
  std::size_t n = 0;
  if (!inequalities.empty()) n = inequalities.front().a.size();
  else if (!ambient.empty()) n = ambient.front().a.size();
  if (!feasible(ambient, n)) fail(ErrorCode::kInfeasible, "ambient system is infeasible");
  std::vector<bool> active(inequalities.size(), true);
  for (std::size_t i = 0; i < inequalities.size(); ++i) {
    std::vector<LinearConstraint> rest = ambient;
    for (std::size_t j = 0; j < inequalities.size(); ++j) {
      if (j != i && active[j]) rest.push_back(inequalities[j]);
    }
    const auto r = maximize(inequalities[i].a, rest);
    // An infeasible remainder implies everything.
    const bool implied = r.status == LpStatus::kInfeasible ||
                         (r.status == LpStatus::kOptimal && r.value <= inequalities[i].b);
    if (implied) active[i] = false;
  }
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < inequalities.size(); ++i) {
    if (active[i]) kept.push_back(i);
  }
  return kept;
}

}  // namespace qmp
