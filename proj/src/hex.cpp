// Grid game evaluator (bounded BFS both ways), spiral generators with their
// verification gates, the block lower bound, and the path-building adversary.

#include "ucdnf/hex.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <set>
#include <string>

namespace ucdnf {

namespace {

constexpr int kStep[4][2] = {{1, 0}, {0, 1}, {0, -1}, {-1, 0}};  // down, right, left, up

// Shortest path (counted in entries) over allowed cells from the given starts
// to any goal cell. Deterministic: starts keep their order, neighbours are
// explored down/right/left/up, and the first goal popped wins.
template <typename Allowed, typename Goal>
std::optional<std::vector<HexCell>> grid_bfs(int n, const std::vector<HexCell>& starts,
                                             Allowed allowed, Goal goal) {
  std::vector<int> parent(static_cast<std::size_t>(n) * n, -2);  // -2 unseen, -1 root
  std::deque<int> queue;
  auto id = [n](int r, int c) { return (r - 1) * n + (c - 1); };
  for (const HexCell& s : starts) {
    if (!allowed(s.first, s.second) || parent[id(s.first, s.second)] != -2) continue;
    parent[id(s.first, s.second)] = -1;
    queue.push_back(id(s.first, s.second));
  }
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    int r = cur / n + 1, c = cur % n + 1;
    if (goal(r, c)) {
      std::vector<HexCell> path;
      for (int p = cur; p != -1; p = parent[p]) path.push_back({p / n + 1, p % n + 1});
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (const auto& d : kStep) {
      int rr = r + d[0], cc = c + d[1];
      if (rr < 1 || rr > n || cc < 1 || cc > n) continue;
      if (!allowed(rr, cc) || parent[id(rr, cc)] != -2) continue;
      parent[id(rr, cc)] = cur;
      queue.push_back(id(rr, cc));
    }
  }
  return std::nullopt;
}

}  // namespace

Sym hex_evaluate(const HexInput& m) {
  const int n = m.n;
  std::vector<HexCell> topRow, leftCol;
  for (int c = 1; c <= n; ++c) topRow.push_back({1, c});
  for (int r = 1; r <= n; ++r) leftCol.push_back({r, 1});

  auto onePath = grid_bfs(
      n, topRow, [&](int r, int c) { return m.get(r, c) == 1; },
      [&](int r, int) { return r == n; });
  if (onePath && static_cast<int>(onePath->size()) <= 2 * n) return Sym::One;

  auto zeroPath = grid_bfs(
      n, leftCol, [&](int r, int c) { return m.get(r, c) == 0; },
      [&](int, int c) { return c == n; });
  if (zeroPath && static_cast<int>(zeroPath->size()) <= 2 * n) return Sym::Zero;
  return Sym::Star;
}

PartialFunction hex_function(int n) {
  if (n < 1) fail(Errc::Validation, "side must be positive");
  std::string name = "hex" + std::to_string(n);
  if (n <= 4) {
    const std::uint64_t size = std::uint64_t{1} << (n * n);
    std::vector<Sym> table(size);
    for (std::uint64_t idx = 0; idx < size; ++idx) {
      HexInput m = HexInput::from_input(n, index_to_input(idx, n * n));
      table[idx] = hex_evaluate(m);
    }
    return PartialFunction::from_table(n * n, std::move(table), name);
  }
  return PartialFunction::implicit(
      n * n,
      [n](const Input& x) { return EvalResult::of(hex_evaluate(HexInput::from_input(n, x))); },
      name);
}

HexInput HexInput::from_input(int n, const Input& x) {
  if (static_cast<int>(x.size()) != n * n) fail(Errc::Validation, "input size is not n*n");
  HexInput m;
  m.n = n;
  m.cells.assign(x.begin(), x.end());
  return m;
}

void HexInput::write(std::ostream& os) const {
  for (int r = 1; r <= n; ++r) {
    std::string line(n, '0');
    for (int c = 1; c <= n; ++c)
      if (get(r, c)) line[c - 1] = '1';
    os << line << "\n";
  }
}

HexInput HexInput::read(std::istream& is) {
  std::vector<std::string> rows;
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    rows.push_back(line.substr(start));
  }
  const int n = static_cast<int>(rows.size());
  if (n == 0) fail(Errc::ParseError, "empty matrix");
  HexInput m = blank(n);
  for (int r = 1; r <= n; ++r) {
    if (static_cast<int>(rows[r - 1].size()) != n) fail(Errc::ParseError, "matrix is not square");
    for (int c = 1; c <= n; ++c) {
      char ch = rows[r - 1][c - 1];
      if (ch != '0' && ch != '1') fail(Errc::ParseError, "matrix characters must be 0/1");
      m.set(r, c, ch == '1');
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Spiral geometry
// ---------------------------------------------------------------------------

namespace {

// Full-width boustrophedon snake: arms on odd rows, single-cell connectors at
// the end each arm stops at, plus a tail cell for even n so the path count
// stays comfortably above n^2/4.
std::vector<HexCell> snake_path(int n) {
  std::vector<HexCell> path;
  std::vector<int> arms;
  for (int r = 1; r <= n; r += 2) arms.push_back(r);
  for (std::size_t k = 0; k < arms.size(); ++k) {
    int r = arms[k];
    if (k % 2 == 0)
      for (int c = 1; c <= n; ++c) path.push_back({r, c});
    else
      for (int c = n; c >= 1; --c) path.push_back({r, c});
    if (k + 1 < arms.size()) path.push_back({r + 1, path.back().second});
  }
  if (n % 2 == 0) path.push_back({n, path.back().second});
  return path;
}

// Strip snake hanging from the top: a foot on row 1 in the separator column,
// then arms across the strip's inner columns on odd rows up to n-1. The
// mirrored variant stands on the bottom instead. Neither reaches both the top
// and the bottom row, so no single strip connects them.
std::vector<HexCell> hang_strip_path(int n, int col0, int width, int sepCol) {
  std::vector<HexCell> path{{1, sepCol}};
  std::vector<int> arms;
  for (int r = 1; r < n; r += 2) arms.push_back(r);
  for (std::size_t k = 0; k < arms.size(); ++k) {
    int r = arms[k];
    if (k % 2 == 0)
      for (int c = col0 + width - 1; c >= col0; --c) path.push_back({r, c});
    else
      for (int c = col0; c <= col0 + width - 1; ++c) path.push_back({r, c});
    if (k + 1 < arms.size()) path.push_back({r + 1, path.back().second});
  }
  return path;
}

std::vector<HexCell> mirror_vertically(int n, const std::vector<HexCell>& path) {
  std::vector<HexCell> out;
  out.reserve(path.size());
  for (const HexCell& p : path) out.push_back({n + 1 - p.first, p.second});
  return out;
}

// Interior path cells whose two path-neighbours are collinear with them.
std::vector<HexCell> non_corner_cells(const std::vector<HexCell>& path) {
  std::vector<HexCell> out;
  for (std::size_t i = 1; i + 1 < path.size(); ++i)
    if (path[i - 1].first == path[i + 1].first || path[i - 1].second == path[i + 1].second)
      out.push_back(path[i]);
  return out;
}

// Non-corners usable as block cells: drop interiors of the topmost and the
// bottommost arm (their escape corridor can be fenced off by a neighbouring
// strip's foot), keep connectors, order top-to-bottom then left-to-right.
std::vector<HexCell> listed_non_corners(const std::vector<HexCell>& path) {
  std::map<int, int> perRow;
  for (const HexCell& p : path) ++perRow[p.first];
  int armMin = 0, armMax = 0;
  bool haveArm = false;
  for (const auto& [row, count] : perRow) {
    if (count <= 1) continue;
    if (!haveArm) { armMin = armMax = row; haveArm = true; }
    armMin = std::min(armMin, row);
    armMax = std::max(armMax, row);
  }
  std::vector<HexCell> out;
  for (const HexCell& p : non_corner_cells(path)) {
    if (haveArm && (p.first == armMin || p.first == armMax) && perRow[p.first] > 1) continue;
    out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void check_simple_path(int n, const std::vector<HexCell>& path) {
  std::set<HexCell> seen;
  for (const HexCell& p : path) {
    if (p.first < 1 || p.first > n || p.second < 1 || p.second > n)
      fail(Errc::GeometryInvalid, "path leaves the grid");
    if (!seen.insert(p).second) fail(Errc::GeometryInvalid, "path revisits a cell");
  }
  for (std::size_t i = 1; i < path.size(); ++i)
    if (std::abs(path[i].first - path[i - 1].first) +
            std::abs(path[i].second - path[i - 1].second) !=
        1)
      fail(Errc::GeometryInvalid, "path steps are not unit moves");
}

HexInput paint(int n, const std::vector<std::vector<HexCell>>& paths) {
  HexInput m = HexInput::blank(n);
  for (const auto& p : paths)
    for (const HexCell& cell : p) m.set(cell.first, cell.second, 1);
  return m;
}

int isqrt_exact(int n) {
  int m = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
  return m * m == n ? m : -1;
}

}  // namespace

SingleSpiral single_spiral(int n) {
  if (n < 6) fail(Errc::Validation, "single spiral needs n >= 6");
  std::vector<HexCell> path = snake_path(n);
  check_simple_path(n, path);
  HexInput y = paint(n, {path});

  if (hex_evaluate(y) != Sym::Star) fail(Errc::GeometryInvalid, "gate: input is not undefined");
  if (4 * static_cast<int>(path.size()) < n * n)
    fail(Errc::GeometryInvalid, "gate: path shorter than n^2/4");

  // Listed non-corners are the flip-sensitive ones, checked cell by cell.
  std::vector<HexCell> listed;
  for (const HexCell& cell : non_corner_cells(path)) {
    HexInput flipped = y;
    flipped.set(cell.first, cell.second, 0);
    if (hex_evaluate(flipped) == Sym::Zero) listed.push_back(cell);
  }
  std::sort(listed.begin(), listed.end());
  if (4 * static_cast<int>(listed.size()) < n * n)
    fail(Errc::GeometryInvalid, "gate: fewer than n^2/4 flip-sensitive non-corners");

  SingleSpiral out;
  out.y = y;
  out.layout.n = n;
  out.layout.spiralCount = 1;
  out.layout.spirals = {std::move(path)};
  out.layout.nonCorners = {std::move(listed)};
  out.layout.stripCols = {{1, n}};
  return out;
}

MultiSpiral multi_spiral(int n) {
  const int m = isqrt_exact(n);
  if (m < 2) fail(Errc::Validation, "multi spiral needs a perfect square n >= 4");

  SpiralLayout layout;
  layout.n = n;
  layout.spiralCount = m;
  for (int s = 0; s < m; ++s) {
    int col0 = s * m + 1;
    int sepCol = s * m + m;
    std::vector<HexCell> p = hang_strip_path(n, col0, m - 1, sepCol);
    if (s % 2 == 1) p = mirror_vertically(n, p);
    check_simple_path(n, p);
    layout.spirals.push_back(std::move(p));
    layout.stripCols.push_back({col0, sepCol});
  }

  // Disjointness and non-adjacency between distinct spirals.
  std::set<HexCell> all;
  for (const auto& p : layout.spirals)
    for (const HexCell& cell : p)
      if (!all.insert(cell).second) fail(Errc::GeometryInvalid, "spirals intersect");
  for (std::size_t s = 0; s < layout.spirals.size(); ++s) {
    std::set<HexCell> own(layout.spirals[s].begin(), layout.spirals[s].end());
    for (const HexCell& cell : layout.spirals[s])
      for (const auto& d : kStep) {
        HexCell q{cell.first + d[0], cell.second + d[1]};
        if (all.count(q) && !own.count(q))
          fail(Errc::GeometryInvalid, "distinct spirals are adjacent");
      }
  }

  HexInput z = paint(n, layout.spirals);
  if (hex_evaluate(z) != Sym::Star) fail(Errc::GeometryInvalid, "gate: input is not undefined");

  long long blockCount = std::max<long long>(1, (static_cast<long long>(m) * m * m + 8) / 9);
  std::size_t nu = std::numeric_limits<std::size_t>::max();
  for (const auto& p : layout.spirals) {
    layout.nonCorners.push_back(listed_non_corners(p));
    nu = std::min(nu, layout.nonCorners.back().size());
  }
  if (static_cast<long long>(nu) < blockCount)
    fail(Errc::GeometryInvalid, "gate: not enough listed non-corners per spiral");

  BlockFamily blocks;
  for (long long i = 0; i < blockCount; ++i) {
    std::vector<HexCell> block;
    for (const auto& ncs : layout.nonCorners) block.push_back(ncs[i]);
    blocks.blocks.push_back(std::move(block));
  }
  std::set<HexCell> blockCells;
  for (const auto& block : blocks.blocks)
    for (const HexCell& cell : block)
      if (!blockCells.insert(cell).second)
        fail(Errc::GeometryInvalid, "gate: blocks are not pairwise disjoint");
  for (const auto& block : blocks.blocks) {
    HexInput flipped = z;
    for (const HexCell& cell : block) flipped.set(cell.first, cell.second, 0);
    if (hex_evaluate(flipped) != Sym::Zero)
      fail(Errc::GeometryInvalid, "gate: block flip does not force value 0");
  }

  MultiSpiral out;
  out.z = z;
  out.layout = std::move(layout);
  out.blocks = std::move(blocks);
  out.achievedConstant =
      static_cast<double>(blockCount) / (static_cast<double>(m) * m * m);
  return out;
}

int block_lower_bound(const HexInput& z, const BlockFamily& blocks) {
  std::set<HexCell> seen;
  for (const auto& block : blocks.blocks) {
    if (block.empty()) fail(Errc::GateFailed, "empty block");
    for (const HexCell& cell : block) {
      if (!seen.insert(cell).second) fail(Errc::GateFailed, "blocks are not pairwise disjoint");
      if (z.get(cell.first, cell.second) != 1) fail(Errc::GateFailed, "block cell is not a 1");
    }
  }
  for (const auto& block : blocks.blocks) {
    HexInput flipped = z;
    for (const HexCell& cell : block) flipped.set(cell.first, cell.second, 0);
    if (hex_evaluate(flipped) != Sym::Zero)
      fail(Errc::GateFailed, "block flip does not force value 0");
  }
  return static_cast<int>(blocks.blocks.size());
}

int single_spiral_sensitivity(const HexInput& y, const SpiralLayout& layout) {
  int count = 0;
  for (const auto& ncs : layout.nonCorners)
    for (const HexCell& cell : ncs) {
      if (y.get(cell.first, cell.second) != 1) fail(Errc::GateFailed, "listed cell is not a 1");
      HexInput flipped = y;
      flipped.set(cell.first, cell.second, 0);
      if (hex_evaluate(flipped) != Sym::Zero)
        fail(Errc::GateFailed, "listed cell flip does not force value 0");
      ++count;
    }
  return count;
}

std::optional<std::vector<HexCell>> greedy_one_path_adversary(const HexInput& z,
                                                              const SpiralLayout& layout,
                                                              const Restriction& rho) {
  const int n = z.n;
  if (rho.arity() != n * n) fail(Errc::Validation, "restriction arity mismatch");
  if (!rho.consistent_with(z.to_input()))
    fail(Errc::Validation, "restriction is not consistent with the spiral input");

  auto readZero = [&](int r, int c) { return rho.v[(r - 1) * n + (c - 1)] == 0; };

  // Neglect score: read 0-cells touching the spiral.
  int neglected = 0, bestScore = -1;
  for (int s = 0; s < layout.spiralCount; ++s) {
    std::set<HexCell> own(layout.spirals[s].begin(), layout.spirals[s].end());
    int score = 0;
    for (int r = 1; r <= n; ++r)
      for (int c = 1; c <= n; ++c) {
        if (!readZero(r, c)) continue;
        bool touches = false;
        for (const auto& d : kStep)
          if (own.count({r + d[0], c + d[1]})) { touches = true; break; }
        score += touches;
      }
    if (bestScore < 0 || score < bestScore) {
      bestScore = score;
      neglected = s;
    }
  }

  HexCell top = *std::min_element(layout.spirals[neglected].begin(),
                                  layout.spirals[neglected].end());
  auto path = grid_bfs(
      n, {{1, top.second}}, [&](int r, int c) { return !readZero(r, c); },
      [&](int r, int) { return r == n; });
  if (!path || static_cast<int>(path->size()) > 2 * n) return std::nullopt;
  return path;
}

Restriction top_rows_certificate(const HexInput& y, int rowCount) {
  if (rowCount < 1 || rowCount > y.n) fail(Errc::Validation, "rowCount out of range");
  Restriction rho(y.n * y.n);
  for (int r = 1; r <= rowCount; ++r)
    for (int c = 1; c <= y.n; ++c) rho.set((r - 1) * y.n + (c - 1), y.get(r, c));
  return rho;
}

PowerFit fit_power_law(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 2) fail(Errc::Validation, "need at least two points to fit");
  double xBar = 0, yBar = 0;
  for (const auto& [x, y] : points) {
    xBar += std::log(x);
    yBar += std::log(y);
  }
  xBar /= static_cast<double>(points.size());
  yBar /= static_cast<double>(points.size());
  double num = 0, den = 0;
  for (const auto& [x, y] : points) {
    num += (std::log(x) - xBar) * (std::log(y) - yBar);
    den += (std::log(x) - xBar) * (std::log(x) - xBar);
  }
  PowerFit fit;
  fit.beta = num / den;
  fit.constant = std::exp(yBar - fit.beta * xBar);
  return fit;
}

}  // namespace ucdnf
