// Two-phase dense simplex. Bland's rule (smallest eligible index enters,
// smallest basic index breaks ratio ties) prevents cycling; a pivot cap
// converts pathological numerics into LP_NUMERICAL_FAILURE instead of a hang.

#include "ucdnf/lp.hpp"

#include <cmath>
#include <cstddef>
#include <limits>

#include "ucdnf/errors.hpp"

namespace ucdnf {
namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kCostTol = 1e-9;
constexpr double kFeasTol = 1e-7;

struct Tableau {
  // rows x cols coefficient matrix, rhs per row, basis var per row.
  std::vector<std::vector<double>> T;
  std::vector<double> rhs;
  std::vector<int> basis;
  int cols = 0;

  void pivot(int r, int j) {
    double piv = T[r][j];
    for (int k = 0; k < cols; ++k) T[r][k] /= piv;
    rhs[r] /= piv;
    for (std::size_t i = 0; i < T.size(); ++i) {
      if (static_cast<int>(i) == r) continue;
      double factor = T[i][j];
      if (std::abs(factor) < kPivotTol) continue;
      for (int k = 0; k < cols; ++k) T[i][k] -= factor * T[r][k];
      rhs[i] -= factor * rhs[r];
    }
    basis[r] = j;
  }
};

// Minimizes cost.x over the tableau with Bland's rule. allowed[j] == false bars
// column j from entering (used to freeze artificials in phase 2).
LpStatus run_simplex(Tableau& t, const std::vector<double>& cost,
                     const std::vector<char>& allowed) {
  const int m = static_cast<int>(t.T.size());
  const long pivotCap = 2000L * (t.cols + m + 16);
  for (long iter = 0; iter <= pivotCap; ++iter) {
    // Price out: reduced cost d_j = c_j - y.col_j with y from the basis costs.
    int enter = -1;
    for (int j = 0; j < t.cols; ++j) {
      if (!allowed[j]) continue;
      double d = cost[j];
      for (int i = 0; i < m; ++i) {
        double cb = cost[t.basis[i]];
        if (cb != 0.0) d -= cb * t.T[i][j];
      }
      if (d < -kCostTol) { enter = j; break; }  // Bland: smallest index
    }
    if (enter < 0) return LpStatus::Optimal;

    int leave = -1;
    double bestRatio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
      if (t.T[i][enter] <= kPivotTol) continue;
      double ratio = t.rhs[i] / t.T[i][enter];
      if (ratio < bestRatio - kPivotTol ||
          (ratio < bestRatio + kPivotTol && (leave < 0 || t.basis[i] < t.basis[leave]))) {
        bestRatio = ratio;
        leave = i;
      }
    }
    if (leave < 0) return LpStatus::Unbounded;
    t.pivot(leave, enter);
  }
  fail(Errc::LpNumericalFailure, "simplex pivot cap exceeded");
}

}  // namespace

LpSolution solve_lp(const LpProblem& p) {
  const int m = static_cast<int>(p.A.size());
  const int n = static_cast<int>(p.c.size());
  for (const auto& row : p.A)
    if (static_cast<int>(row.size()) != n) fail(Errc::Validation, "ragged LP row");
  if (static_cast<int>(p.b.size()) != m) fail(Errc::Validation, "rhs size mismatch");

  // Layout: structural 0..n-1, slack n..n+m-1, artificials appended as needed.
  Tableau t;
  t.cols = n + m;
  t.T.assign(m, std::vector<double>(t.cols, 0.0));
  t.rhs.assign(m, 0.0);
  t.basis.assign(m, -1);
  std::vector<int> artRows;
  for (int i = 0; i < m; ++i) {
    double sign = p.b[i] < 0 ? -1.0 : 1.0;  // flip rows so rhs >= 0
    for (int j = 0; j < n; ++j) t.T[i][j] = sign * p.A[i][j];
    t.T[i][n + i] = sign;
    t.rhs[i] = sign * p.b[i];
    if (sign < 0)
      artRows.push_back(i);
    else
      t.basis[i] = n + i;
  }
  for (std::size_t k = 0; k < artRows.size(); ++k) {
    for (int i = 0; i < m; ++i) t.T[i].push_back(0.0);
    t.T[artRows[k]][t.cols] = 1.0;
    t.basis[artRows[k]] = t.cols;
    ++t.cols;
  }

  if (!artRows.empty()) {
    std::vector<double> phase1(t.cols, 0.0);
    for (int j = n + m; j < t.cols; ++j) phase1[j] = 1.0;
    std::vector<char> allowed(t.cols, 1);
    LpStatus st = run_simplex(t, phase1, allowed);
    double infeas = 0.0;
    for (int i = 0; i < m; ++i)
      if (t.basis[i] >= n + m) infeas += t.rhs[i];
    if (st != LpStatus::Optimal || infeas > kFeasTol) return {LpStatus::Infeasible, 0.0, {}};
    // Pivot lingering zero-level artificials onto structural/slack columns so
    // phase 2 cannot push them positive; an all-zero row is redundant and
    // harmless once its artificial is barred from entering.
    for (int i = 0; i < m; ++i) {
      if (t.basis[i] < n + m) continue;
      for (int j = 0; j < n + m; ++j)
        if (std::abs(t.T[i][j]) > kPivotTol) { t.pivot(i, j); break; }
    }
  }

  std::vector<double> cost(t.cols, 0.0);
  for (int j = 0; j < n; ++j) cost[j] = p.c[j];
  std::vector<char> allowed(t.cols, 1);
  for (int j = n + m; j < t.cols; ++j) allowed[j] = 0;
  LpStatus st = run_simplex(t, cost, allowed);
  if (st != LpStatus::Optimal) return {st, 0.0, {}};

  LpSolution sol;
  sol.status = LpStatus::Optimal;
  sol.x.assign(n, 0.0);
  for (int i = 0; i < m; ++i)
    if (t.basis[i] < n) sol.x[t.basis[i]] = t.rhs[i];
  sol.objective = 0.0;
  for (int j = 0; j < n; ++j) sol.objective += p.c[j] * sol.x[j];
  return sol;
}

}  // namespace ucdnf
