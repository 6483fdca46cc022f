// Hypergraphs on vertices {1..V} with sorted duplicate-free edges, two-colour
// vertex colourings, and minimum monochromatic hitting sets found by exhaustive
// search in ascending size order. Text formats: .hg ("p hg V E" header) and
// .col (one colour character per vertex).
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "ucdnf/errors.hpp"

namespace ucdnf {

using Edge = std::vector<int>;  // vertex ids, kept sorted ascending

struct Hypergraph {
  int vertexCount = 0;
  std::vector<Edge> edges;

  // Sorts each edge, drops duplicate vertices within an edge and duplicate
  // edges; rejects out-of-range vertex ids and empty edges.
  static Hypergraph make(int vertexCount, std::vector<Edge> edges);

  int rank() const;  // max edge size; EMPTY_EDGE_SET if there are no edges
  bool is_intersecting() const;
  bool is_hitting_set(const std::vector<int>& vertices) const;

  void write_hg(std::ostream& os) const;
  static Hypergraph read_hg(std::istream& is);
};

// colour[v-1] in {0,1} for vertex v.
struct Colouring {
  std::vector<std::uint8_t> colour;

  int size() const { return static_cast<int>(colour.size()); }
  void write_col(std::ostream& os) const;
  static Colouring read_col(std::istream& is);
};

enum class HittingStatus { Found, None, SizeCapExceeded };

struct MonoHittingResult {
  HittingStatus status = HittingStatus::None;
  std::vector<int> witness;  // ascending vertex ids when status == Found
  int size() const { return static_cast<int>(witness.size()); }
};

// Minimum hitting set using vertices of a single colour class only. Searches
// sizes 1..sizeCap in order; within a size, candidates are enumerated in
// lexicographic order so the witness is deterministic. Returns None only when
// the search was exhaustive, i.e. sizeCap covered the larger colour class;
// otherwise a fruitless capped search reports SizeCapExceeded.
MonoHittingResult min_monochromatic_hitting_set(const Hypergraph& h, const Colouring& c,
                                                int sizeCap);

}  // namespace ucdnf
