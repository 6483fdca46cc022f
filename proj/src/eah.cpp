// Affine hash families, the grid hypergraph they induce, avoiding hitting
// sets, and the derived partial function. Probability-flavoured claims are
// implemented as exact integer counts; the only randomness is the seeded
// sampling inside find_avoiding_hitting_set and the property report.

#include "ucdnf/eah.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>

#include "ucdnf/bits.hpp"
#include "ucdnf/parallel.hpp"
#include "ucdnf/rng.hpp"

namespace ucdnf {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

HashFamily build_affine_family(int n) {
  if (!is_prime(n)) fail(Errc::NotPrime, "modulus must be prime");
  HashFamily h;
  h.n = n;
  h.map.reserve(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> fn(n);
      for (int i = 0; i < n; ++i) fn[i] = (a * i + b) % n;
      h.map.push_back(std::move(fn));
    }
  return h;
}

bool verify_pairwise_independence(const HashFamily& h) {
  const int n = h.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int count = 0;
      for (const auto& fn : h.map) count += fn[i] == j;
      if (count != n) return false;
    }
  for (int i = 0; i < n; ++i)
    for (int i2 = 0; i2 < n; ++i2) {
      if (i2 == i) continue;
      for (int j = 0; j < n; ++j)
        for (int j2 = 0; j2 < n; ++j2) {
          int count = 0;
          for (const auto& fn : h.map) count += fn[i] == j && fn[i2] == j2;
          if (count != 1) return false;
        }
    }
  return true;
}

EahGraph build_eah_graph(int n) {
  EahGraph g;
  g.n = n;
  g.family = build_affine_family(n);  // NOT_PRIME surfaces here
  g.edges.reserve(g.family.map.size());
  for (const auto& fn : g.family.map) {
    Edge e;
    e.reserve(n);
    for (int i = 0; i < n; ++i) e.push_back(i * n + fn[i] + 1);  // one vertex per row
    std::sort(e.begin(), e.end());
    g.edges.push_back(std::move(e));
  }
  return g;
}

Hypergraph EahGraph::hypergraph() const { return Hypergraph::make(n * n, edges); }

void EahGraph::write_hg(std::ostream& os) const {
  os << "c eah grid n=" << n << "\n";
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      os << "c edge " << (a * n + b) << " a=" << a << " b=" << b << "\n";
  os << "p hg " << vertexCount() << " " << edges.size() << "\n";
  for (const Edge& e : edges) {
    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? " " : "") << e[i];
    os << "\n";
  }
}

// ---------------------------------------------------------------------------
// Parameters
// ---------------------------------------------------------------------------

EahParams EahParams::desk_scale(int n) {
  EahParams p;
  p.ntildeOverride = (static_cast<long long>(n) * n - 1) / 2;
  p.missBudgetOverride = n;
  return p;
}

long long EahParams::ntilde(int n) const {
  if (ntildeOverride >= 0) return ntildeOverride;
  return sizeFactor * n * std::max(1, ceil_log2(static_cast<std::uint64_t>(n)));
}

long long EahParams::miss_budget(int n) const {
  return missBudgetOverride >= 0 ? missBudgetOverride : n;
}

long long EahParams::forbidden_size(int n) const {
  return phi.num * n * n / phi.den;  // floor
}

// ---------------------------------------------------------------------------
// Hitting sets
// ---------------------------------------------------------------------------

std::vector<int> mostly_forbidden_edges(const EahGraph& g, const std::vector<int>& forbidden,
                                        Rat theta) {
  std::vector<char> inF(g.vertexCount() + 1, 0);
  for (int v : forbidden) {
    if (v < 1 || v > g.vertexCount()) fail(Errc::Validation, "forbidden vertex out of range");
    inF[v] = 1;
  }
  std::vector<int> m;
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    long long cnt = 0;
    for (int v : g.edges[k]) cnt += inF[v];
    if (theta.den * cnt >= theta.num * g.n) m.push_back(static_cast<int>(k));
  }
  return m;
}

namespace {

std::vector<int> missed_by(const EahGraph& g, const std::vector<char>& inH) {
  std::vector<int> missed;
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    bool hit = false;
    for (int v : g.edges[k])
      if (inH[v]) { hit = true; break; }
    if (!hit) missed.push_back(static_cast<int>(k));
  }
  return missed;
}

}  // namespace

AvoidingHitResult find_avoiding_hitting_set(const EahGraph& g, const std::vector<int>& forbidden,
                                            long long sizeBudget, long long missBudget,
                                            std::uint64_t seed) {
  std::vector<char> inF(g.vertexCount() + 1, 0);
  for (int v : forbidden) inF[v] = 1;
  std::vector<int> pool;
  for (int v = 1; v <= g.vertexCount(); ++v)
    if (!inF[v]) pool.push_back(v);
  if (sizeBudget < 0 || sizeBudget > static_cast<long long>(pool.size()))
    fail(Errc::Validation, "sizeBudget must lie in [0, |V minus F|]");

  AvoidingHitResult res;
  Rng rng(seed);
  std::vector<char> inH(g.vertexCount() + 1, 0);
  constexpr int kSampleAttempts = 32;
  for (int t = 0; t < kSampleAttempts; ++t) {
    ++res.attempts;
    std::vector<int> h = rng.sample(pool, static_cast<std::size_t>(sizeBudget));
    std::fill(inH.begin(), inH.end(), 0);
    for (int v : h) inH[v] = 1;
    std::vector<int> missed = missed_by(g, inH);
    if (static_cast<long long>(missed.size()) <= missBudget) {
      res.found = true;
      res.hit = std::move(h);
      res.missedEdges = std::move(missed);
      return res;
    }
  }

  // Greedy max-coverage: repeatedly take the allowed vertex meeting the most
  // uncovered edges (smallest id on ties).
  res.usedGreedy = true;
  std::vector<char> covered(g.edges.size(), 0);
  std::vector<int> chosen;
  std::fill(inH.begin(), inH.end(), 0);
  std::vector<std::vector<int>> edgesAt(g.vertexCount() + 1);
  for (std::size_t k = 0; k < g.edges.size(); ++k)
    for (int v : g.edges[k]) edgesAt[v].push_back(static_cast<int>(k));
  for (long long step = 0; step < sizeBudget; ++step) {
    int bestV = -1, bestGain = 0;
    for (int v : pool) {
      if (inH[v]) continue;
      int gain = 0;
      for (int k : edgesAt[v]) gain += !covered[k];
      if (gain > bestGain) { bestGain = gain; bestV = v; }
    }
    if (bestV < 0) break;  // nothing left to gain
    inH[bestV] = 1;
    chosen.push_back(bestV);
    for (int k : edgesAt[bestV]) covered[k] = 1;
  }
  std::vector<int> missed = missed_by(g, inH);
  if (static_cast<long long>(missed.size()) <= missBudget) {
    std::sort(chosen.begin(), chosen.end());
    res.found = true;
    res.hit = std::move(chosen);
    res.missedEdges = std::move(missed);
  }
  return res;
}

// ---------------------------------------------------------------------------
// The derived partial function
// ---------------------------------------------------------------------------

namespace {

// Variable layout: vertex v at position v-1, edge k at position n^2 + k.
bool eval_one_rule(const EahGraph& g, const Input& x) {
  const int nn = g.vertexCount();
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    if (!x[nn + k]) continue;
    bool lit = true;
    for (int v : g.edges[k])
      if (!x[v - 1]) { lit = false; break; }
    if (lit) return true;
  }
  return false;
}

// Per-edge zero supports: positions that, read as 0, refute this edge.
std::vector<std::vector<int>> zero_supports(const EahGraph& g, const Input& x) {
  const int nn = g.vertexCount();
  std::vector<std::vector<int>> sets;
  sets.reserve(g.edges.size());
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    std::vector<int> s;
    for (int v : g.edges[k])
      if (!x[v - 1]) s.push_back(v - 1);
    if (!x[nn + k]) s.push_back(nn + static_cast<int>(k));
    sets.push_back(std::move(s));
  }
  return sets;
}

bool hit_of_size(const std::vector<std::vector<int>>& sets, std::vector<char>& chosen, int left) {
  const std::vector<int>* firstUnhit = nullptr;
  for (const auto& s : sets) {
    bool hit = false;
    for (int e : s)
      if (chosen[e]) { hit = true; break; }
    if (!hit) { firstUnhit = &s; break; }
  }
  if (!firstUnhit) return true;
  if (left == 0) return false;
  // Complete: any hitting set uses some element of the first unhit set.
  for (int e : *firstUnhit) {
    chosen[e] = 1;
    if (hit_of_size(sets, chosen, left - 1)) return true;
    chosen[e] = 0;
  }
  return false;
}

// Exact minimum hitting set size if it is <= cap, else nullopt.
std::optional<int> min_hitting_set_size(const std::vector<std::vector<int>>& sets, int universe,
                                        long long cap) {
  std::vector<char> chosen(universe, 0);
  for (int k = 0; k <= cap; ++k)
    if (hit_of_size(sets, chosen, k)) return k;
  return std::nullopt;
}

// Greedy upper bound; nullopt when even cap picks leave sets unhit.
std::optional<int> greedy_hitting_set_size(const std::vector<std::vector<int>>& sets, int universe,
                                           long long cap) {
  std::vector<char> live(sets.size(), 1);
  std::vector<char> chosen(universe, 0);
  int liveCount = static_cast<int>(sets.size());
  int used = 0;
  while (liveCount > 0 && used < cap) {
    std::vector<int> gain(universe, 0);
    for (std::size_t k = 0; k < sets.size(); ++k)
      if (live[k])
        for (int e : sets[k]) ++gain[e];
    int best = -1;
    for (int e = 0; e < universe; ++e)
      if (!chosen[e] && gain[e] > 0 && (best < 0 || gain[e] > gain[best])) best = e;
    if (best < 0) return std::nullopt;  // some set is empty: unhittable
    chosen[best] = 1;
    ++used;
    for (std::size_t k = 0; k < sets.size(); ++k) {
      if (!live[k]) continue;
      for (int e : sets[k])
        if (e == best) { live[k] = 0; --liveCount; break; }
    }
  }
  if (liveCount > 0) return std::nullopt;
  return used;
}

EvalResult classify(const EahGraph& g, long long cap, const Input& x, bool exact) {
  if (eval_one_rule(g, x)) return EvalResult::of(Sym::One);
  std::vector<std::vector<int>> sets = zero_supports(g, x);
  const int universe = 2 * g.vertexCount();
  if (exact) {
    if (min_hitting_set_size(sets, universe, cap)) return EvalResult::of(Sym::Zero);
    return EvalResult::of(Sym::Star);
  }
  if (greedy_hitting_set_size(sets, universe, cap)) return EvalResult::of(Sym::Zero);
  return EvalResult::undetermined();
}

}  // namespace

PartialFunction build_eah_function(const EahGraph& g, const EahParams& params) {
  const long long cap = 2 * params.ntilde(g.n);
  const int arity = 2 * g.vertexCount();
  std::string name = "eah" + std::to_string(g.n);
  if (g.n == 2) {
    std::vector<Sym> table(std::uint64_t{1} << arity);
    for (std::uint64_t idx = 0; idx < table.size(); ++idx)
      table[idx] = classify(g, cap, index_to_input(idx, arity), /*exact=*/true).sym;
    return PartialFunction::from_table(arity, std::move(table), name);
  }
  EahGraph copy = g;
  return PartialFunction::implicit(
      arity, [copy, cap](const Input& x) { return classify(copy, cap, x, /*exact=*/false); },
      name);
}

Input eah_hard_input(const EahGraph& g) {
  Input z(2 * g.vertexCount(), 0);
  for (int v = 0; v < g.vertexCount(); ++v) z[v] = 1;
  return z;
}

NotOneCertResult not_one_cert_upper_bound(const EahGraph& g, const EahParams& params,
                                          const Input& x, std::uint64_t seed) {
  const int nn = g.vertexCount();
  if (static_cast<int>(x.size()) != 2 * nn) fail(Errc::Validation, "input arity mismatch");
  if (eval_one_rule(g, x)) fail(Errc::NotApplicable, "input is a ONE-input");

  std::vector<int> forbidden;  // 1-vertices cannot be read as 0
  for (int v = 1; v <= nn; ++v)
    if (x[v - 1]) forbidden.push_back(v);
  long long sizeBudget =
      std::min(params.ntilde(g.n), static_cast<long long>(nn - forbidden.size()));
  AvoidingHitResult hit =
      find_avoiding_hitting_set(g, forbidden, sizeBudget, params.miss_budget(g.n), seed);
  if (!hit.found) fail(Errc::ConstructionFailed, "no avoiding hitting set within budgets");

  NotOneCertResult res;
  res.hitting = hit.hit;
  res.missedEdges = hit.missedEdges;
  Restriction rho(2 * nn);
  for (int v : hit.hit) rho.set(v - 1, 0);
  for (int k : hit.missedEdges) {
    if (!x[nn + k]) {
      rho.set(nn + k, 0);
    } else {
      // The edge variable is 1 yet x is not ONE, so some vertex on it is 0.
      int v0 = -1;
      for (int v : g.edges[k])
        if (!x[v - 1]) { v0 = v; break; }
      if (v0 < 0) fail(Errc::CheckFailed, "missed edge fully lit (unreachable)");
      rho.set(v0 - 1, 0);
    }
  }

  // Structural soundness: every edge carries a read 0 somewhere.
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    bool killed = rho.v[nn + k] == 0;
    for (int v : g.edges[k]) killed = killed || rho.v[v - 1] == 0;
    if (!killed) fail(Errc::CheckFailed, "edge not refuted by certificate (unreachable)");
  }

  res.size = rho.size();
  res.rho = rho;
  if (g.n == 2) {
    PartialFunction f = build_eah_function(g, params);
    if (!is_certificate(f, rho, NOTONE)) fail(Errc::CheckFailed, "certificate failed verification");
    res.verified = true;
  }
  return res;
}

// ---------------------------------------------------------------------------
// Property report
// ---------------------------------------------------------------------------

namespace {

int median_of(std::vector<int> v) {
  if (v.empty()) return 0;
  std::sort(v.begin(), v.end());
  return v[(v.size() - 1) / 2];
}

}  // namespace

EahPropertyReport eah_property_report(const EahGraph& g, const EahParams& params, int trials,
                                      std::uint64_t seed, int threads) {
  EahPropertyReport rep;
  rep.n = g.n;
  rep.trials = trials;
  rep.seed = seed;
  rep.missBudget = params.miss_budget(g.n);
  rep.records.assign(trials, {});

  const long long fSize = params.forbidden_size(g.n);
  std::vector<int> allVertices(g.vertexCount());
  for (int v = 1; v <= g.vertexCount(); ++v) allVertices[v - 1] = v;
  rep.sizeBudget =
      std::min(params.ntilde(g.n), static_cast<long long>(g.vertexCount()) - fSize);

  parallel_for(static_cast<std::uint64_t>(trials), threads, [&](std::uint64_t t) {
    EahTrialRecord rec;
    rec.trialSeed = seed ^ t;
    Rng rng(rec.trialSeed);
    std::vector<int> F = rng.sample(allVertices, static_cast<std::size_t>(fSize));
    rec.fSize = static_cast<int>(F.size());
    rec.mSize = static_cast<int>(mostly_forbidden_edges(g, F, params.theta).size());
    AvoidingHitResult hit =
        find_avoiding_hitting_set(g, F, rep.sizeBudget, rep.missBudget, rng.next());
    rec.found = hit.found;
    rec.hSize = static_cast<int>(hit.hit.size());
    rec.missed = static_cast<int>(hit.missedEdges.size());
    rec.usedGreedy = hit.usedGreedy;
    rep.records[t] = rec;
  });

  std::vector<int> ms, hs;
  for (const EahTrialRecord& rec : rep.records) {
    ms.push_back(rec.mSize);
    if (rec.found) {
      ++rep.successes;
      hs.push_back(rec.hSize);
    }
  }
  if (!ms.empty()) {
    rep.mMin = *std::min_element(ms.begin(), ms.end());
    rep.mMax = *std::max_element(ms.begin(), ms.end());
    rep.mMedian = median_of(ms);
  }
  if (!hs.empty()) {
    rep.hMin = *std::min_element(hs.begin(), hs.end());
    rep.hMax = *std::max_element(hs.begin(), hs.end());
    rep.hMedian = median_of(hs);
  }
  return rep;
}

}  // namespace ucdnf
