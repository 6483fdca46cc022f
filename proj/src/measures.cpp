// Exact measure oracles. Certificate search enumerates index sets around the
// designated input (certificates for x are always x-restrictions); one-cover
// width uses exact-cover backtracking over subcubes inside f^{-1}(1); degree
// is an in-place integer Moebius transform; approximate degree wraps the
// Chebyshev LP and trusts only a re-verified witness.

#include "ucdnf/measures.hpp"

#include <algorithm>
#include <cmath>

#include "ucdnf/bits.hpp"
#include "ucdnf/lp.hpp"
#include "ucdnf/parallel.hpp"

namespace ucdnf {

MeasureReport cert_complexity_at(const PartialFunction& f, const Input& x, OutputSet sigma,
                                 std::uint64_t completionBudget) {
  const int n = f.arity();
  Sym fx = f.eval(x);
  if (!sigma.contains(fx)) fail(Errc::NotInSigma, "f(x) is not in the output set");
  for (int k = 0; k <= n; ++k) {
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    do {
      Restriction rho = Restriction::of(x, comb);
      if (is_certificate(f, rho, sigma, completionBudget)) {
        MeasureReport r;
        r.measureName = "csigma[" + sigma.name() + "]";
        r.value = k;
        r.witnessRestriction = rho;
        r.attainingInput = x;
        return r;
      }
    } while (next_combination(comb, n));
  }
  fail(Errc::CheckFailed, "no certificate found (unreachable for valid inputs)");
}

MeasureReport cert_complexity(const PartialFunction& f, OutputSet sigma, int threads,
                              std::uint64_t completionBudget) {
  if (!f.is_explicit()) fail(Errc::Validation, "cert_complexity requires an explicit table");
  const int n = f.arity();
  const std::uint64_t size = std::uint64_t{1} << n;

  std::vector<int> vals(size, -1);
  parallel_for(size, threads, [&](std::uint64_t idx) {
    if (sigma.contains(f.at(idx)))
      vals[idx] = static_cast<int>(
          cert_complexity_at(f, index_to_input(idx, n), sigma, completionBudget).value);
  });

  // Sequential selection: max value, ties to the lexicographically smallest
  // input string, so the report is identical at any thread count.
  MeasureReport best;
  best.measureName = "csigma[" + sigma.name() + "]";
  best.value = 0;
  bool found = false;
  std::string bestStr;
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    if (vals[idx] < 0) continue;
    Input x = index_to_input(idx, n);
    std::string s = input_to_string(x);
    if (!found || vals[idx] > best.value || (vals[idx] == best.value && s < bestStr)) {
      found = true;
      best.value = vals[idx];
      best.attainingInput = x;
      bestStr = s;
    }
  }
  if (found)
    best.witnessRestriction =
        cert_complexity_at(f, *best.attainingInput, sigma, completionBudget).witnessRestriction;
  return best;
}

MeasureReport certificate_complexity(const PartialFunction& f, int threads) {
  MeasureReport c0 = cert_complexity(f, ZERO, threads);
  MeasureReport c1 = cert_complexity(f, ONE, threads);
  MeasureReport r = (c1.value > c0.value) ? c1 : c0;
  r.measureName = "c";
  return r;
}

// ---------------------------------------------------------------------------
// Degree via Moebius transform
// ---------------------------------------------------------------------------

std::vector<long long> moebius_coefficients(const PartialFunction& f) {
  if (!f.is_explicit() || !f.is_total()) fail(Errc::NotTotal, "degree requires a total function");
  const int n = f.arity();
  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<long long> a(size);
  for (std::uint64_t idx = 0; idx < size; ++idx) a[idx] = f.at(idx) == Sym::One ? 1 : 0;
  for (int j = 0; j < n; ++j) {
    const std::uint64_t bit = std::uint64_t{1} << j;
    for (std::uint64_t idx = 0; idx < size; ++idx)
      if (idx & bit) a[idx] -= a[idx ^ bit];
  }
  return a;
}

long long eval_moebius(const std::vector<long long>& coeffs, std::uint64_t idx) {
  // f(x) = sum of coefficients over submasks of x.
  long long v = 0;
  for_each_submask(idx, [&](std::uint64_t sub) { v += coeffs[sub]; });
  return v;
}

MeasureReport degree(const PartialFunction& f) {
  std::vector<long long> a = moebius_coefficients(f);
  MeasureReport r;
  r.measureName = "deg";
  r.value = 0;
  for (std::uint64_t idx = 0; idx < a.size(); ++idx)
    if (a[idx] != 0) r.value = std::max<long long>(r.value, popcount64(idx));
  r.witnessCoefficients = std::move(a);
  return r;
}

// ---------------------------------------------------------------------------
// Unambiguous one-cover width
// ---------------------------------------------------------------------------

namespace {

struct Uc1Search {
  const PartialFunction& f;
  int n;
  std::vector<std::uint64_t> ones;  // indices with f = 1, ascending
  std::vector<Restriction> chosen;

  bool covered(std::uint64_t idx) const {
    Input x = index_to_input(idx, n);
    for (const Restriction& rho : chosen)
      if (rho.consistent_with(x)) return true;
    return false;
  }

  // Branch on the first uncovered 1-input; any valid family must contain
  // exactly one term consistent with it, and dropping terms that cover no
  // 1-input never hurts, so this search is complete.
  bool extend(int maxWidth) {
    std::uint64_t pivot = 0;
    bool found = false;
    for (std::uint64_t idx : ones)
      if (!covered(idx)) { pivot = idx; found = true; break; }
    if (!found) return true;

    Input x = index_to_input(pivot, n);
    for (int k = 0; k <= maxWidth; ++k) {
      std::vector<int> comb(k);
      for (int i = 0; i < k; ++i) comb[i] = i;
      do {
        Restriction rho = Restriction::of(x, comb);
        if (!is_certificate(f, rho, ONE)) continue;
        bool clash = false;
        for (const Restriction& prev : chosen)
          if (!restrictions_conflict(prev, rho)) { clash = true; break; }
        if (clash) continue;
        chosen.push_back(rho);
        if (extend(maxWidth)) return true;
        chosen.pop_back();
      } while (next_combination(comb, n));
    }
    return false;
  }
};

}  // namespace

MeasureReport uc1(const PartialFunction& f, int minWidth) {
  if (!f.is_explicit() || !f.is_total()) fail(Errc::NotTotal, "uc1 requires a total function");
  const int n = f.arity();

  Uc1Search search{f, n, {}, {}};
  const std::uint64_t size = std::uint64_t{1} << n;
  for (std::uint64_t idx = 0; idx < size; ++idx)
    if (f.at(idx) == Sym::One) search.ones.push_back(idx);

  MeasureReport r;
  r.measureName = "uc1";
  if (search.ones.empty()) {
    r.value = 0;
    r.witnessFamily = CertificateFamily{};
    return r;
  }

  int start = minWidth >= 0 ? minWidth : static_cast<int>(degree(f).value);
  for (int k = start; k <= n; ++k) {
    search.chosen.clear();
    if (search.extend(k)) {
      r.value = k;
      r.witnessFamily = CertificateFamily{search.chosen};
      return r;
    }
  }
  fail(Errc::CheckFailed, "one-cover search failed (unreachable: width n always works)");
}

// ---------------------------------------------------------------------------
// Sensitivity
// ---------------------------------------------------------------------------

MeasureReport sensitivity(const PartialFunction& f) {
  if (!f.is_explicit() || !f.is_total()) fail(Errc::NotTotal, "sensitivity requires a total function");
  const int n = f.arity();
  const std::uint64_t size = std::uint64_t{1} << n;
  MeasureReport r;
  r.measureName = "sens";
  r.value = 0;
  std::string bestStr;
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    int s = 0;
    for (int j = 0; j < n; ++j)
      if (f.at(idx) != f.at(idx ^ (std::uint64_t{1} << j))) ++s;
    Input x = index_to_input(idx, n);
    std::string str = input_to_string(x);
    if (!r.attainingInput || s > r.value || (s == r.value && str < bestStr)) {
      r.value = s;
      r.attainingInput = x;
      bestStr = str;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Approximate degree
// ---------------------------------------------------------------------------

namespace {

constexpr double kAdegSlack = 1e-6;

std::vector<std::uint64_t> monomials_up_to(int n, int d) {
  // Ascending by size, numeric mask order within a size: deterministic layout.
  std::vector<std::uint64_t> masks;
  const std::uint64_t size = std::uint64_t{1} << n;
  for (int k = 0; k <= d; ++k)
    for (std::uint64_t m = 0; m < size; ++m)
      if (popcount64(m) == k) masks.push_back(m);
  return masks;
}

double eval_polynomial(const std::vector<Monomial>& poly, std::uint64_t idx) {
  double v = 0.0;
  for (const Monomial& m : poly)
    if ((m.mask & idx) == m.mask) v += m.coef;
  return v;
}

}  // namespace

MeasureReport approx_degree(const PartialFunction& f, double eps) {
  if (!f.is_explicit() || !f.is_total()) fail(Errc::NotTotal, "approx_degree requires a total function");
  if (!(eps > 0.0 && eps < 0.5)) fail(Errc::Validation, "eps must lie in (0, 1/2)");
  const int n = f.arity();
  const std::uint64_t size = std::uint64_t{1} << n;

  for (int d = 0; d <= n; ++d) {
    std::vector<std::uint64_t> masks = monomials_up_to(n, d);
    const int nm = static_cast<int>(masks.size());
    // Variables: t, then (plus, minus) per monomial; minimize t subject to
    //   p(x) - t <= f(x)  and  -p(x) - t <= -f(x)  for every input x.
    LpProblem lp;
    lp.c.assign(1 + 2 * nm, 0.0);
    lp.c[0] = 1.0;
    for (std::uint64_t idx = 0; idx < size; ++idx) {
      double fx = f.at(idx) == Sym::One ? 1.0 : 0.0;
      std::vector<double> rowPos(1 + 2 * nm, 0.0), rowNeg(1 + 2 * nm, 0.0);
      rowPos[0] = -1.0;
      rowNeg[0] = -1.0;
      for (int m = 0; m < nm; ++m) {
        double mv = (masks[m] & idx) == masks[m] ? 1.0 : 0.0;
        rowPos[1 + 2 * m] = mv;
        rowPos[2 + 2 * m] = -mv;
        rowNeg[1 + 2 * m] = -mv;
        rowNeg[2 + 2 * m] = mv;
      }
      lp.A.push_back(std::move(rowPos));
      lp.b.push_back(fx);
      lp.A.push_back(std::move(rowNeg));
      lp.b.push_back(-fx);
    }

    LpSolution sol = solve_lp(lp);
    if (sol.status != LpStatus::Optimal || sol.objective > eps + kAdegSlack) continue;

    std::vector<Monomial> poly;
    for (int m = 0; m < nm; ++m) {
      double coef = sol.x[1 + 2 * m] - sol.x[2 + 2 * m];
      if (coef != 0.0) poly.push_back({masks[m], coef});
    }
    double worst = 0.0;
    for (std::uint64_t idx = 0; idx < size; ++idx) {
      double fx = f.at(idx) == Sym::One ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(eval_polynomial(poly, idx) - fx));
    }
    if (worst > eps + kAdegSlack) continue;  // solver said yes, witness says no

    MeasureReport r;
    r.measureName = "adeg";
    r.value = d;
    r.witnessPolynomial = std::move(poly);
    r.achievedError = worst;
    return r;
  }
  fail(Errc::LpNumericalFailure, "no degree up to n admitted a verified witness");
}

bool check_fact1(const PartialFunction& f) {
  long long c0 = cert_complexity(f, ZERO).value;
  long long k = uc1(f).value;
  return c0 <= k * k;
}

}  // namespace ucdnf
