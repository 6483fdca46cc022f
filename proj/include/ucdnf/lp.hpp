// Small dense linear-programming solver: minimize c.x subject to A.x <= b and
// x >= 0. Two-phase primal simplex with Bland's rule, sized for the Chebyshev
// polynomial-fitting problems in this project (tens of rows and columns).
#pragma once

#include <vector>

namespace ucdnf {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpProblem {
  std::vector<std::vector<double>> A;  // m rows, each of length numVars
  std::vector<double> b;               // length m
  std::vector<double> c;               // length numVars
};

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  double objective = 0.0;
  std::vector<double> x;
};

// Throws LP_NUMERICAL_FAILURE if the pivot count exceeds a generous cap, which
// is distinct from a clean Infeasible/Unbounded verdict.
LpSolution solve_lp(const LpProblem& p);

}  // namespace ucdnf
