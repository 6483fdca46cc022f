// Four constructions tying the puzzle variants together, each paired with a
// verifier that re-checks the claimed inequalities through the exact oracles:
//
//  - hide certificate descriptions of several function copies inside an array
//    cell addressed by the copies' outputs, making a total function that keeps
//    the original one hard (the cheat sheet);
//  - extend a total function by a parity over the read set of its unique
//    one-cover member, planting a hard undefined point;
//  - turn the certificates around an undefined input into an intersecting
//    hypergraph with a two-colouring;
//  - read a colouring of an intersecting hypergraph back as a monotone
//    partial function.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ucdnf/boolfun.hpp"
#include "ucdnf/hypergraph.hpp"

namespace ucdnf {

// ---------------------------------------------------------------------------
// Certificate wire format: C(f) slots of (variable index, value), unused
// slots repeating the last used one so every bit string is decodable.
// ---------------------------------------------------------------------------

struct CertificateEncoding {
  int n = 0;          // base function arity
  int indexBits = 0;  // ceil(log2 n)
  int slots = 0;      // C(f)
  int slotBits = 0;   // indexBits + 1

  static CertificateEncoding make(int n, int slots);

  int ell() const { return slots * slotBits; }
  // The informal budget quoted alongside the exact one.
  long long nominal_ell() const { return 2LL * slots * indexBits; }

  // rho must read between 1 and slots positions. Bit order: slot 0 first,
  // index bits LSB-first, then the value bit.
  std::vector<std::uint8_t> encode(const Restriction& rho) const;
  // Strictly ascending indices, then exact repeats of the final slot;
  // anything else is invalid.
  std::optional<Restriction> decode(const std::vector<std::uint8_t>& bits) const;
};

// ---------------------------------------------------------------------------
// Cheat sheet
// ---------------------------------------------------------------------------

struct CheatSheetInstance {
  PartialFunction f;
  Input x;  // designated undefined input of f
  int k = 1;
  CertificateEncoding enc;

  int arity() const { return k * enc.n + (1 << k) * k * enc.ell(); }
  int copy_offset(int i) const { return i * enc.n; }
  int cell_offset(int t) const { return k * enc.n + t * k * enc.ell(); }

  // Total function: outputs of the k copies address a cell; 1 iff every slot
  // group of that cell decodes to a valid certificate for its copy's output
  // that the copy actually contains.
  PartialFunction g() const;
  PartialFunction g_materialized() const;

  Input hard_zero_input() const;  // k copies of x followed by an all-zero array
};

// k defaults to ceil(log2 n). Requires f(x) undefined and C(f) >= 1.
CheatSheetInstance p2_to_p1(const PartialFunction& f, const Input& x, int k = -1);

// All members reading, per copy, one valid certificate matching an output
// vector s, plus the entire cell addressed by s. TOO_LARGE unless the cell
// space is enumerable.
CertificateFamily unambiguous_family_for_cheatsheet(const CheatSheetInstance& inst);

// ---------------------------------------------------------------------------
// Parity extension
// ---------------------------------------------------------------------------

struct ParityExtension {
  PartialFunction g;  // 2n bits: x block then y block
  Input z;            // (x*, 0^n) with x* the lex-smallest C_ZERO maximizer
};

// U must be an unambiguous one-cover of total f (INVALID_COVER otherwise);
// f needs at least one 0-input for z to exist.
ParityExtension p1_to_p2(const PartialFunction& f, const CertificateFamily& U);

// ---------------------------------------------------------------------------
// Hypergraph from certificates, and back
// ---------------------------------------------------------------------------

struct CertificateHypergraph {
  Hypergraph graph;  // 2n+2 vertices: v_{i,0} -> 2i-1, v_{i,1} -> 2i, u0, u1
  Colouring colouring;
  std::vector<std::string> labels;  // 1-based vertex names
  int certSizeCap = 0;              // C(f): edges came from certs up to this size
};

CertificateHypergraph p2_to_p3(const PartialFunction& f, const Input& x);

struct ColouringFunction {
  PartialFunction f;  // one bit per vertex; monotone by construction
  Input x;            // the colouring read as an input
  bool xIsStar = false;
};

ColouringFunction p3_to_p2(const Hypergraph& g, const Colouring& c);

// ---------------------------------------------------------------------------
// Box verifiers
// ---------------------------------------------------------------------------

struct BoxItem {
  std::string label;
  long long lhs = 0;
  std::string cmp;  // "<=", ">=", "=="
  long long rhs = 0;
  bool pass = false;
};

struct BoxReport {
  std::string box;
  std::vector<BoxItem> items;
  bool pass = true;

  void add(const std::string& label, long long lhs, const std::string& cmp, long long rhs);
};

BoxReport verify_box_cheatsheet(const PartialFunction& f, const Input& x, int k = 1);
BoxReport verify_box_parity(const PartialFunction& f, const CertificateFamily& U);
BoxReport verify_box_hypergraph(const PartialFunction& f, const Input& x);
BoxReport verify_box_colouring(const Hypergraph& g, const Colouring& c);

// Materialized-order check. Under 0 < * < 1, raising input bits never lowers
// the value.
bool is_monotone(const PartialFunction& f);

}  // namespace ucdnf
