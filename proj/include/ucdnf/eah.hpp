// Grid hypergraphs from affine hash families over a prime modulus, the
// almost-hittable structure built on them, and the derived partial function.
//
// Layout conventions:
//  - grid vertex (i,j), 1-based, has id (i-1)*n + j;
//  - edges are indexed by (a,b) in lexicographic order, edge(a,b) =
//    {(i, h_ab(i)) : i in [n]} with h_ab(i) = (a*i + b) mod n computed 0-based;
//  - the derived function has one variable per vertex (id order) followed by
//    one variable per edge ((a,b) order), arity 2n^2.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ucdnf/boolfun.hpp"
#include "ucdnf/hypergraph.hpp"

namespace ucdnf {

bool is_prime(int n);

struct HashFamily {
  int n = 0;
  // map[a*n+b][i] = h_ab(i), all 0-based. Stored explicitly so tests can
  // corrupt a family and watch the counting identities break.
  std::vector<std::vector<int>> map;

  int functions() const { return static_cast<int>(map.size()); }
};

HashFamily build_affine_family(int n);  // NOT_PRIME unless n is prime

// Exact counting identities: each (i,j) is hit by exactly n functions, each
// (i,i',j,j') with i != i' by exactly one.
bool verify_pairwise_independence(const HashFamily& h);

struct EahGraph {
  int n = 0;
  HashFamily family;
  std::vector<Edge> edges;  // (a,b) order; edge vertex lists sorted ascending

  int vertexCount() const { return n * n; }
  Hypergraph hypergraph() const;  // canonical set form (sorted, deduped)

  void write_hg(std::ostream& os) const;
};

EahGraph build_eah_graph(int n);

struct Rat {
  long long num = 0;
  long long den = 1;
};

struct EahParams {
  Rat phi{1, 100};             // forbidden-set fraction: |F| = floor(phi * n^2)
  long long sizeFactor = 100;  // ntilde = sizeFactor * n * ceil(log2 n)
  long long ntildeOverride = -1;
  long long missBudgetOverride = -1;  // default budget is n
  Rat theta{9, 10};            // mostly-forbidden threshold

  static EahParams paper() { return {}; }
  // Shrinks ntilde to floor((n^2-1)/2) so the derived function keeps undefined
  // inputs at tiny n (the stock constants make every non-ONE input a 0-input).
  static EahParams desk_scale(int n);

  long long ntilde(int n) const;
  long long miss_budget(int n) const;
  long long forbidden_size(int n) const;
};

// Edge indices e with theta-fraction of their vertices inside F, by exact
// integer comparison: den * |e cap F| >= num * n.
std::vector<int> mostly_forbidden_edges(const EahGraph& g, const std::vector<int>& forbidden,
                                        Rat theta);

struct AvoidingHitResult {
  bool found = false;
  std::vector<int> hit;          // vertex ids, ascending, disjoint from F
  std::vector<int> missedEdges;  // edge indices not met by hit, ascending
  int attempts = 0;              // random samples drawn
  bool usedGreedy = false;
};

// Seeded uniform sizeBudget-subsets of V minus F (32 attempts), then one
// greedy max-coverage pass; found only if at most missBudget edges are missed.
AvoidingHitResult find_avoiding_hitting_set(const EahGraph& g, const std::vector<int>& forbidden,
                                            long long sizeBudget, long long missBudget,
                                            std::uint64_t seed);

// ONE iff some edge variable is 1 with all its vertex variables 1; ZERO iff
// the one-set can be refuted by reading at most 2*ntilde zeros (minimum
// hitting set of the per-edge zero supports); otherwise STAR. Materialized
// exactly at n=2, implicit with possible UNDETERMINED answers beyond.
PartialFunction build_eah_function(const EahGraph& g, const EahParams& params);

Input eah_hard_input(const EahGraph& g);  // all vertex vars 1, all edge vars 0

struct NotOneCertResult {
  int size = 0;
  Restriction rho;
  bool verified = false;         // is_certificate ran (tiny arities only)
  std::vector<int> hitting;      // vertex ids read as 0
  std::vector<int> missedEdges;  // edges covered by direct reads instead
};

// Hitting-set-plus-missed-edges certificate that x is not a ONE-input.
// NOT_APPLICABLE for ONE-inputs, CONSTRUCTION_FAILED when no avoiding hitting
// set exists within the params budgets.
NotOneCertResult not_one_cert_upper_bound(const EahGraph& g, const EahParams& params,
                                          const Input& x, std::uint64_t seed = 0);

struct EahTrialRecord {
  std::uint64_t trialSeed = 0;
  int fSize = 0;
  int mSize = 0;
  bool found = false;
  int hSize = 0;
  int missed = 0;
  bool usedGreedy = false;
};

struct EahPropertyReport {
  int n = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  long long sizeBudget = 0;
  long long missBudget = 0;
  std::vector<EahTrialRecord> records;
  int successes = 0;
  int mMin = 0, mMedian = 0, mMax = 0;
  int hMin = 0, hMedian = 0, hMax = 0;  // over successful trials
};

// trials seeded random forbidden sets F of size floor(phi*n^2); per-trial seed
// is seed XOR trial index, so any thread count reproduces the same records.
EahPropertyReport eah_property_report(const EahGraph& g, const EahParams& params, int trials,
                                      std::uint64_t seed, int threads = 1);

}  // namespace ucdnf
