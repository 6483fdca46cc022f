// Hypergraph normalization, intersecting/hitting predicates, monochromatic
// hitting-set search, and the .hg/.col text formats.

#include "ucdnf/hypergraph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "ucdnf/bits.hpp"

namespace ucdnf {

Hypergraph Hypergraph::make(int vertexCount, std::vector<Edge> rawEdges) {
  if (vertexCount < 0) fail(Errc::Validation, "negative vertex count");
  for (Edge& e : rawEdges) {
    if (e.empty()) fail(Errc::Validation, "empty edge");
    for (int v : e)
      if (v < 1 || v > vertexCount) fail(Errc::Validation, "vertex id out of range");
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
  }
  std::sort(rawEdges.begin(), rawEdges.end());
  rawEdges.erase(std::unique(rawEdges.begin(), rawEdges.end()), rawEdges.end());
  Hypergraph h;
  h.vertexCount = vertexCount;
  h.edges = std::move(rawEdges);
  return h;
}

int Hypergraph::rank() const {
  if (edges.empty()) fail(Errc::EmptyEdgeSet, "rank of empty edge set");
  std::size_t r = 0;
  for (const Edge& e : edges) r = std::max(r, e.size());
  return static_cast<int>(r);
}

bool Hypergraph::is_intersecting() const {
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      // Sorted edges: linear merge scan for a common vertex.
      const Edge &a = edges[i], &b = edges[j];
      std::size_t p = 0, q = 0;
      bool share = false;
      while (p < a.size() && q < b.size()) {
        if (a[p] == b[q]) { share = true; break; }
        if (a[p] < b[q]) ++p; else ++q;
      }
      if (!share) return false;
    }
  return true;
}

bool Hypergraph::is_hitting_set(const std::vector<int>& vertices) const {
  std::vector<char> in(vertexCount + 1, 0);
  for (int v : vertices) {
    if (v < 1 || v > vertexCount) fail(Errc::Validation, "vertex id out of range");
    in[v] = 1;
  }
  for (const Edge& e : edges) {
    bool hit = false;
    for (int v : e)
      if (in[v]) { hit = true; break; }
    if (!hit) return false;
  }
  return true;
}

void Hypergraph::write_hg(std::ostream& os) const {
  os << "p hg " << vertexCount << " " << edges.size() << "\n";
  for (const Edge& e : edges) {
    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? " " : "") << e[i];
    os << "\n";
  }
}

Hypergraph Hypergraph::read_hg(std::istream& is) {
  std::string line;
  int V = -1;
  std::size_t E = 0;
  std::vector<Edge> edges;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c") continue;
    if (tok == "p") {
      std::string kind;
      if (!(ls >> kind >> V >> E) || kind != "hg" || V < 0)
        fail(Errc::ParseError, "bad 'p hg <V> <E>' header");
      continue;
    }
    if (V < 0) fail(Errc::ParseError, "edge line before 'p hg' header");
    Edge e;
    try {
      e.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      fail(Errc::ParseError, "bad vertex id");
    }
    int v;
    while (ls >> v) e.push_back(v);
    edges.push_back(std::move(e));
  }
  if (V < 0) fail(Errc::ParseError, "missing 'p hg <V> <E>' header");
  if (edges.size() != E) fail(Errc::ParseError, "edge count does not match header");
  return make(V, std::move(edges));
}

void Colouring::write_col(std::ostream& os) const {
  std::string s;
  s.reserve(colour.size());
  for (auto c : colour) s.push_back(c ? '1' : '0');
  os << s << "\n";
}

Colouring Colouring::read_col(std::istream& is) {
  std::string line, data;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    if (line[start] == 'c' || line[start] == '#') continue;
    data += line.substr(start);
  }
  Colouring c;
  c.colour.reserve(data.size());
  for (char ch : data) {
    if (ch != '0' && ch != '1') fail(Errc::ParseError, "colour characters must be 0/1");
    c.colour.push_back(ch == '1');
  }
  return c;
}

MonoHittingResult min_monochromatic_hitting_set(const Hypergraph& h, const Colouring& c,
                                                int sizeCap) {
  if (c.size() != h.vertexCount) fail(Errc::Validation, "colouring size mismatch");
  if (h.edges.empty()) return {HittingStatus::Found, {}};

  std::vector<int> cls[2];
  for (int v = 1; v <= h.vertexCount; ++v) cls[c.colour[v - 1]].push_back(v);
  int maxClass = static_cast<int>(std::max(cls[0].size(), cls[1].size()));

  for (int k = 1; k <= sizeCap; ++k) {
    // Colour 0 before colour 1, candidates in lexicographic vertex order: the
    // first witness found is the deterministic tie-break winner.
    for (int col = 0; col < 2; ++col) {
      const std::vector<int>& pool = cls[col];
      if (k > static_cast<int>(pool.size())) continue;
      std::vector<int> comb(k);
      for (int i = 0; i < k; ++i) comb[i] = i;
      do {
        std::vector<int> cand(k);
        for (int i = 0; i < k; ++i) cand[i] = pool[comb[i]];
        if (h.is_hitting_set(cand)) return {HittingStatus::Found, cand};
      } while (next_combination(comb, static_cast<int>(pool.size())));
    }
  }
  if (sizeCap >= maxClass) return {HittingStatus::None, {}};
  return {HittingStatus::SizeCapExceeded, {}};
}

}  // namespace ucdnf
