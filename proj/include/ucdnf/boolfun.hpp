// Partial boolean functions f: {0,1}^n -> {0,1,*} with explicit truth tables or
// implicit evaluators, restrictions (subcubes), certificates against output
// sets, and the .pbf serialization.
//
// Conventions, used everywhere downstream:
//  - inputs are bit vectors x[0..n-1]; x[j] is variable number j+1;
//  - table index i encodes the input whose j-th variable is bit j of i (LSB
//    first), so index 6 = 0b110 on n=3 is x = (0,1,1);
//  - output sets: ZERO={0}, ONE={1}, NOTZERO={1,*}, NOTONE={0,*}. A
//    NOTZERO-certificate proves "not a 0-input", NOTONE proves "not a 1-input".
#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ucdnf/errors.hpp"

namespace ucdnf {

enum class Sym : std::uint8_t { Zero = 0, One = 1, Star = 2 };

inline char sym_char(Sym s) { return s == Sym::Zero ? '0' : (s == Sym::One ? '1' : '*'); }
Sym sym_from_char(char c);

struct OutputSet {
  std::uint8_t mask = 0;  // bit 0: contains 0, bit 1: contains 1, bit 2: contains *
  constexpr bool contains(Sym s) const { return (mask >> static_cast<int>(s)) & 1; }
  constexpr bool operator==(const OutputSet&) const = default;
  std::string name() const;
};

inline constexpr OutputSet ZERO{1};
inline constexpr OutputSet ONE{2};
inline constexpr OutputSet NOTZERO{2 | 4};  // {1,*}
inline constexpr OutputSet NOTONE{1 | 4};   // {0,*}

// Accepts zero|one|notzero|notone (case-insensitive).
std::optional<OutputSet> output_set_from_string(const std::string& s);

using Input = std::vector<std::uint8_t>;

std::uint64_t input_to_index(const Input& x);
Input index_to_input(std::uint64_t idx, int n);
std::string input_to_string(const Input& x);   // "011" = x1=0,x2=1,x3=1
Input input_from_string(const std::string& s);

// ---------------------------------------------------------------------------
// Restriction: partial assignment. v[j] in {-1 free, 0, 1}.
// ---------------------------------------------------------------------------

struct Restriction {
  std::vector<std::int8_t> v;

  Restriction() = default;
  explicit Restriction(int n) : v(n, -1) {}

  int arity() const { return static_cast<int>(v.size()); }
  int size() const;                       // number of fixed positions
  std::vector<int> read_set() const;      // fixed positions, ascending
  bool consistent_with(const Input& x) const;

  // x restricted to the index set S (0-based positions).
  static Restriction of(const Input& x, const std::vector<int>& S);

  void set(int pos, int val) { v[pos] = static_cast<std::int8_t>(val); }

  std::string to_string() const;          // e.g. "0*1*"
  static Restriction from_string(const std::string& s);

  bool operator==(const Restriction&) const = default;
  // Lexicographic on the pattern string; used for deterministic tie-breaks.
  bool operator<(const Restriction& o) const { return v < o.v; }
};

// Two restrictions conflict iff some common read position has different values;
// non-conflicting restrictions share at least one total input.
bool restrictions_conflict(const Restriction& a, const Restriction& b);

struct CertificateFamily {
  std::vector<Restriction> members;
};

// Pairwise conflict check: true iff no two members share a consistent input.
bool check_unambiguous(const CertificateFamily& fam);

// ---------------------------------------------------------------------------
// PartialFunction
// ---------------------------------------------------------------------------

struct EvalResult {
  bool determined = false;
  Sym sym = Sym::Star;
  static EvalResult of(Sym s) { return {true, s}; }
  static EvalResult undetermined() { return {false, Sym::Star}; }
};

using Evaluator = std::function<EvalResult(const Input&)>;

inline constexpr std::uint64_t kDefaultCompletionBudget = std::uint64_t{1} << 26;

class PartialFunction {
 public:
  static PartialFunction from_table(int n, std::vector<Sym> table, std::string name = "");
  static PartialFunction implicit(int n, Evaluator ev, std::string name = "");

  int arity() const { return n_; }
  bool is_explicit() const { return !table_.empty(); }
  const std::string& name() const { return name_; }
  const std::vector<Sym>& table() const { return table_; }

  Sym at(std::uint64_t idx) const { return table_[idx]; }
  EvalResult try_eval(const Input& x) const;
  Sym eval(const Input& x) const;  // throws UNDETERMINED if the evaluator gives up

  // Explicit functions only; NOT_TOTAL-style scan.
  bool is_total() const;

  // Materializes an implicit function into an explicit table (n <= 24).
  PartialFunction materialized() const;

  void write_pbf(std::ostream& os) const;           // explicit only
  static PartialFunction read_pbf(std::istream& is);

 private:
  int n_ = 0;
  std::vector<Sym> table_;
  Evaluator eval_;
  std::string name_;
};

// All completions of rho agree with sigma under f. Enumerates the
// 2^(n - |rho|) completions; throws BUDGET_EXCEEDED if that count exceeds
// completionBudget (relevant for implicit functions).
bool is_certificate(const PartialFunction& f, const Restriction& rho, OutputSet sigma,
                    std::uint64_t completionBudget = kDefaultCompletionBudget);

}  // namespace ucdnf
