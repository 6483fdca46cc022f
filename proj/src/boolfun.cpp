// Core partial-function machinery: indexing, restrictions, certificate checks,
// and the .pbf text format.

#include "ucdnf/boolfun.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

#include "ucdnf/bits.hpp"

namespace ucdnf {

Sym sym_from_char(char c) {
  switch (c) {
    case '0': return Sym::Zero;
    case '1': return Sym::One;
    case '*': return Sym::Star;
    default: fail(Errc::ParseError, std::string("bad symbol '") + c + "'");
  }
}

std::string OutputSet::name() const {
  if (*this == ZERO) return "ZERO";
  if (*this == ONE) return "ONE";
  if (*this == NOTZERO) return "NOTZERO";
  if (*this == NOTONE) return "NOTONE";
  return "SET(" + std::to_string(mask) + ")";
}

std::optional<OutputSet> output_set_from_string(const std::string& s) {
  std::string t;
  for (char c : s) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (t == "zero") return ZERO;
  if (t == "one") return ONE;
  if (t == "notzero") return NOTZERO;
  if (t == "notone") return NOTONE;
  return std::nullopt;
}

std::uint64_t input_to_index(const Input& x) {
  std::uint64_t idx = 0;
  for (std::size_t j = 0; j < x.size(); ++j)
    if (x[j]) idx |= std::uint64_t{1} << j;
  return idx;
}

Input index_to_input(std::uint64_t idx, int n) {
  Input x(n);
  for (int j = 0; j < n; ++j) x[j] = (idx >> j) & 1;
  return x;
}

std::string input_to_string(const Input& x) {
  std::string s;
  s.reserve(x.size());
  for (auto b : x) s.push_back(b ? '1' : '0');
  return s;
}

Input input_from_string(const std::string& s) {
  Input x;
  x.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1') fail(Errc::ParseError, "input string must be over {0,1}");
    x.push_back(c == '1');
  }
  return x;
}

// ---------------------------------------------------------------------------
// Restriction
// ---------------------------------------------------------------------------

int Restriction::size() const {
  int k = 0;
  for (auto t : v) k += (t >= 0);
  return k;
}

std::vector<int> Restriction::read_set() const {
  std::vector<int> S;
  for (int j = 0; j < arity(); ++j)
    if (v[j] >= 0) S.push_back(j);
  return S;
}

bool Restriction::consistent_with(const Input& x) const {
  for (int j = 0; j < arity(); ++j)
    if (v[j] >= 0 && v[j] != static_cast<std::int8_t>(x[j])) return false;
  return true;
}

Restriction Restriction::of(const Input& x, const std::vector<int>& S) {
  Restriction rho(static_cast<int>(x.size()));
  for (int j : S) rho.v[j] = static_cast<std::int8_t>(x[j]);
  return rho;
}

std::string Restriction::to_string() const {
  std::string s;
  s.reserve(v.size());
  for (auto t : v) s.push_back(t < 0 ? '*' : (t ? '1' : '0'));
  return s;
}

Restriction Restriction::from_string(const std::string& s) {
  Restriction rho(static_cast<int>(s.size()));
  for (std::size_t j = 0; j < s.size(); ++j) {
    char c = s[j];
    if (c == '*')
      rho.v[j] = -1;
    else if (c == '0' || c == '1')
      rho.v[j] = (c == '1');
    else
      fail(Errc::ParseError, "restriction string must be over {0,1,*}");
  }
  return rho;
}

bool restrictions_conflict(const Restriction& a, const Restriction& b) {
  int n = std::min(a.arity(), b.arity());
  for (int j = 0; j < n; ++j)
    if (a.v[j] >= 0 && b.v[j] >= 0 && a.v[j] != b.v[j]) return true;
  return false;
}

bool check_unambiguous(const CertificateFamily& fam) {
  for (std::size_t i = 0; i < fam.members.size(); ++i)
    for (std::size_t j = i + 1; j < fam.members.size(); ++j)
      if (!restrictions_conflict(fam.members[i], fam.members[j])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// PartialFunction
// ---------------------------------------------------------------------------

PartialFunction PartialFunction::from_table(int n, std::vector<Sym> table, std::string name) {
  if (n < 0 || n > 30) fail(Errc::Validation, "arity out of range");
  if (table.size() != (std::uint64_t{1} << n))
    fail(Errc::Validation, "table size does not match arity");
  PartialFunction f;
  f.n_ = n;
  f.table_ = std::move(table);
  f.name_ = std::move(name);
  return f;
}

PartialFunction PartialFunction::implicit(int n, Evaluator ev, std::string name) {
  if (n < 0) fail(Errc::Validation, "arity out of range");
  PartialFunction f;
  f.n_ = n;
  f.eval_ = std::move(ev);
  f.name_ = std::move(name);
  return f;
}

EvalResult PartialFunction::try_eval(const Input& x) const {
  if (static_cast<int>(x.size()) != n_) fail(Errc::Validation, "input arity mismatch");
  if (!table_.empty()) return EvalResult::of(table_[input_to_index(x)]);
  return eval_(x);
}

Sym PartialFunction::eval(const Input& x) const {
  EvalResult r = try_eval(x);
  if (!r.determined) fail(Errc::Undetermined, "evaluator could not resolve input");
  return r.sym;
}

bool PartialFunction::is_total() const {
  if (table_.empty()) fail(Errc::Validation, "is_total requires an explicit table");
  return std::none_of(table_.begin(), table_.end(), [](Sym s) { return s == Sym::Star; });
}

PartialFunction PartialFunction::materialized() const {
  if (!table_.empty()) return *this;
  if (n_ > 24) fail(Errc::Validation, "arity too large to materialize");
  std::vector<Sym> table(std::uint64_t{1} << n_);
  for (std::uint64_t idx = 0; idx < table.size(); ++idx) {
    EvalResult r = eval_(index_to_input(idx, n_));
    if (!r.determined) fail(Errc::Undetermined, "evaluator could not resolve input");
    table[idx] = r.sym;
  }
  return from_table(n_, std::move(table), name_);
}

void PartialFunction::write_pbf(std::ostream& os) const {
  if (table_.empty()) fail(Errc::Validation, "write_pbf requires an explicit table");
  if (!name_.empty()) os << "# " << name_ << "\n";
  os << "n=" << n_ << "\n";
  std::string row;
  row.reserve(table_.size());
  for (Sym s : table_) row.push_back(sym_char(s));
  os << row << "\n";
}

PartialFunction PartialFunction::read_pbf(std::istream& is) {
  std::string line;
  int n = -1;
  std::string data;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    std::string body = line.substr(start);
    if (n < 0) {
      if (body.rfind("n=", 0) != 0) fail(Errc::ParseError, "expected 'n=<arity>' header");
      try {
        n = std::stoi(body.substr(2));
      } catch (const std::exception&) {
        fail(Errc::ParseError, "bad arity in header");
      }
      if (n < 0 || n > 30) fail(Errc::ParseError, "arity out of range");
    } else {
      data += body;
      if (data.size() >= (std::uint64_t{1} << n)) break;
    }
  }
  if (n < 0) fail(Errc::ParseError, "missing 'n=<arity>' header");
  if (data.size() != (std::uint64_t{1} << n))
    fail(Errc::ParseError, "table length does not match 2^n");
  std::vector<Sym> table;
  table.reserve(data.size());
  for (char c : data) table.push_back(sym_from_char(c));
  return from_table(n, std::move(table));
}

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

bool is_certificate(const PartialFunction& f, const Restriction& rho, OutputSet sigma,
                    std::uint64_t completionBudget) {
  if (rho.arity() != f.arity()) fail(Errc::Validation, "restriction arity mismatch");
  int n = f.arity();
  int freeCount = n - rho.size();
  if (freeCount >= 63 || (std::uint64_t{1} << freeCount) > completionBudget)
    fail(Errc::BudgetExceeded, "too many completions to enumerate");

  std::uint64_t base = 0, freeMask = 0;
  for (int j = 0; j < n; ++j) {
    if (rho.v[j] > 0) base |= std::uint64_t{1} << j;
    if (rho.v[j] < 0) freeMask |= std::uint64_t{1} << j;
  }

  bool ok = true;
  for_each_submask(freeMask, [&](std::uint64_t sub) {
    if (!ok) return;
    std::uint64_t idx = base | sub;
    Sym s = f.is_explicit() ? f.at(idx) : f.eval(index_to_input(idx, n));
    if (!sigma.contains(s)) ok = false;
  });
  return ok;
}

}  // namespace ucdnf
