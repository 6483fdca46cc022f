// Grid path game on n x n boolean matrices: value 1 when a short top-to-bottom
// 1-path exists, 0 when a short left-to-right 0-path exists (short = at most
// 2n entries, 4-connected), undefined otherwise. Spiral generators produce the
// hard undefined inputs; every generator re-checks its own output through the
// evaluator and refuses to return a layout that fails a gate.
//
// Cell (r,c) is 1-based with row 1 on top; it maps to function variable
// position (r-1)*n + (c-1).
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "ucdnf/boolfun.hpp"

namespace ucdnf {

using HexCell = std::pair<int, int>;  // (row, col), 1-based

struct HexInput {
  int n = 0;
  std::vector<std::uint8_t> cells;  // row-major

  static HexInput blank(int n) { return {n, std::vector<std::uint8_t>(n * n, 0)}; }
  std::uint8_t get(int r, int c) const { return cells[(r - 1) * n + (c - 1)]; }
  void set(int r, int c, int v) { cells[(r - 1) * n + (c - 1)] = static_cast<std::uint8_t>(v); }

  Input to_input() const { return Input(cells.begin(), cells.end()); }
  static HexInput from_input(int n, const Input& x);

  void write(std::ostream& os) const;  // n lines of n chars over {0,1}
  static HexInput read(std::istream& is);
};

Sym hex_evaluate(const HexInput& m);

// Explicit table for n <= 4, implicit (always-determined) evaluator beyond.
PartialFunction hex_function(int n);

struct SpiralLayout {
  int n = 0;
  int spiralCount = 0;
  std::vector<std::vector<HexCell>> spirals;     // ordered cell sequences
  std::vector<std::vector<HexCell>> nonCorners;  // listed per spiral, sorted top-to-bottom
  std::vector<std::pair<int, int>> stripCols;    // inclusive column range per spiral
};

struct BlockFamily {
  std::vector<std::vector<HexCell>> blocks;  // block i = i-th listed non-corner per spiral
};

struct SingleSpiral {
  HexInput y;
  SpiralLayout layout;
};

struct MultiSpiral {
  HexInput z;
  SpiralLayout layout;
  BlockFamily blocks;
  double achievedConstant = 0.0;  // |blocks| / n^1.5
};

// Full-width snake: horizontal arms on odd rows joined by single-cell
// connectors at alternating ends. Gates: evaluates to STAR, path length and
// verified flip-to-ZERO non-corner count both at least n^2/4. Needs n >= 6.
SingleSpiral single_spiral(int n);

// sqrt(n) strips of width sqrt(n), one snake per strip, alternate strips
// mirrored vertically so no spiral joins top to bottom. Blocks take the i-th
// listed non-corner of every spiral for i < max(1, ceil(n^1.5 / 9)). Gates:
// STAR, each block-flip gives ZERO, blocks pairwise disjoint. Needs n a
// perfect square, n >= 4.
MultiSpiral multi_spiral(int n);

// Re-verifies the block family against z (disjointness, every flip ZERO) and
// returns the block count: a certificate proving "not ZERO" must read a cell
// of every block, so this count lower-bounds the NOTZERO certificate size.
int block_lower_bound(const HexInput& z, const BlockFamily& blocks);

// Flip-to-ZERO count over the listed non-corners of a single spiral; each such
// cell must appear in any NOTZERO certificate for y.
int single_spiral_sensitivity(const HexInput& y, const SpiralLayout& layout);

// Picks the spiral with the fewest rho-read 0-cells adjacent to it, then
// searches for a top-to-bottom path of at most 2n entries from the column of
// that spiral's topmost cell, avoiding read 0-cells. A returned path visits
// only cells that rho reads as 1 or leaves free, so rho cannot certify "not
// ONE". Requires rho consistent with z.
std::optional<std::vector<HexCell>> greedy_one_path_adversary(const HexInput& z,
                                                              const SpiralLayout& layout,
                                                              const Restriction& rho);

// Restriction reading rows 1..rowCount of y verbatim. Whether it certifies
// "not ONE" depends on the geometry; callers decide via is_certificate.
Restriction top_rows_certificate(const HexInput& y, int rowCount = 5);

struct PowerFit {
  double beta = 0.0;
  double constant = 0.0;
};

// Least-squares fit of y = c * x^beta in log-log space.
PowerFit fit_power_law(const std::vector<std::pair<double, double>>& points);

}  // namespace ucdnf
