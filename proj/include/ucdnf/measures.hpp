// Exact complexity measures for small boolean functions: certificate
// complexity against an output set, unambiguous one-cover width (exact-cover
// search), polynomial degree (integer Moebius transform), sensitivity, and
// approximate degree (Chebyshev LP plus witness re-verification).
//
// Every report carries a witness that independently re-verifies to the
// reported value; ties in "max over x" go to the lexicographically smallest
// input string x1 x2 ... xn.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ucdnf/boolfun.hpp"

namespace ucdnf {

struct Monomial {
  std::uint64_t mask = 0;  // bit j set = variable x_{j+1} participates
  double coef = 0.0;
};

struct MeasureReport {
  std::string measureName;
  long long value = 0;
  bool exact = true;
  std::optional<Restriction> witnessRestriction;
  std::optional<CertificateFamily> witnessFamily;
  std::optional<std::vector<long long>> witnessCoefficients;  // indexed by monomial mask
  std::optional<std::vector<Monomial>> witnessPolynomial;
  std::optional<Input> attainingInput;
  std::optional<double> achievedError;
};

// Smallest |S| such that x restricted to S is a sigma-certificate; subsets are
// scanned ascending by size, lexicographically within a size.
MeasureReport cert_complexity_at(const PartialFunction& f, const Input& x, OutputSet sigma,
                                 std::uint64_t completionBudget = kDefaultCompletionBudget);

// Max of cert_complexity_at over f^{-1}(sigma); 0 when that set is empty.
MeasureReport cert_complexity(const PartialFunction& f, OutputSet sigma, int threads = 1,
                              std::uint64_t completionBudget = kDefaultCompletionBudget);

// max{C_ZERO, C_ONE}.
MeasureReport certificate_complexity(const PartialFunction& f, int threads = 1);

// Least k admitting a family of pairwise-disjoint subcubes inside f^{-1}(1),
// each of codimension <= k, covering f^{-1}(1) exactly. minWidth overrides the
// starting k (default: degree(f), a valid lower bound); pass 0 to force the
// search to begin unassisted.
MeasureReport uc1(const PartialFunction& f, int minWidth = -1);

std::vector<long long> moebius_coefficients(const PartialFunction& f);
long long eval_moebius(const std::vector<long long>& coeffs, std::uint64_t idx);
MeasureReport degree(const PartialFunction& f);

MeasureReport sensitivity(const PartialFunction& f);

// Least d such that some degree-<=d multilinear polynomial stays within eps of
// f pointwise. LP feasibility at tolerance 1e-6, then the witness is
// re-evaluated on every input and accepted only if max error <= eps + 1e-6.
MeasureReport approx_degree(const PartialFunction& f, double eps);

// Fact: C_ZERO(f) <= UC1(f)^2 for total f.
bool check_fact1(const PartialFunction& f);

}  // namespace ucdnf
