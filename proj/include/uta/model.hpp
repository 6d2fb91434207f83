#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "uta/constraint.hpp"

namespace uta {

// One clock's part of an update: either x := c or x := y + d.
struct UpdateEntry {
  bool is_const = false;
  std::int64_t c = 0;  // is_const
  int y = -1;          // !is_const
  std::int64_t d = 0;  // !is_const

  static UpdateEntry constant(std::int64_t c) { return {true, c, -1, 0}; }
  static UpdateEntry shift(int y, std::int64_t d) { return {false, 0, y, d}; }
  bool operator==(const UpdateEntry&) const = default;
};

// Total map over the network clocks; untouched clocks hold x := x + 0.
struct Update {
  std::vector<UpdateEntry> e;

  static Update identity(int n_clocks);
  bool is_identity_at(int x) const { return !e[x].is_const && e[x].y == x && e[x].d == 0; }
  bool is_identity() const;
  // every entry reads at most its own clock
  bool is_local() const;
  bool operator==(const Update&) const = default;
};

// Undefined (nullopt) when some clock would become negative.
std::optional<Valuation> apply_update(const Update& up, const Valuation& v);

// Integer plumbing: linear expressions with unit-ish coefficients.
struct LinExpr {
  std::vector<std::pair<int, std::int64_t>> terms;  // (var, coeff)
  std::int64_t constant = 0;

  static LinExpr lit(std::int64_t k) { return LinExpr{{}, k}; }
  static LinExpr var(int v, std::int64_t k = 0) { return LinExpr{{{v, 1}}, k}; }
  std::int64_t eval(const std::vector<std::int64_t>& vals) const;
  bool operator==(const LinExpr&) const = default;
};

enum class CmpOp : std::uint8_t { Lt, Le, Eq, Ge, Gt, Ne };
const char* cmp_str(CmpOp op);

struct IntCmp {
  LinExpr lhs;
  CmpOp op = CmpOp::Eq;
  LinExpr rhs;
  bool eval(const std::vector<std::int64_t>& vals) const;
  bool operator==(const IntCmp&) const = default;
};

struct IntAssign {
  int var = -1;
  LinExpr rhs;
  bool operator==(const IntAssign&) const = default;
};

struct Guard {
  std::vector<Atomic> clocks;
  std::vector<IntCmp> ints;
  bool operator==(const Guard&) const = default;
};

struct Sync {
  int event = -1;
  bool emit = false;  // '!' when true, '?' otherwise
  bool operator==(const Sync&) const = default;
};

struct Location {
  std::string name;
  bool initial = false;
  bool committed = false;
  bool accepting = false;
  std::vector<Atomic> invariant;
  bool operator==(const Location&) const = default;
};

struct Edge {
  int src = -1;
  int dst = -1;
  Guard guard;
  Update update;
  std::vector<IntAssign> assigns;
  std::optional<Sync> sync;
  bool operator==(const Edge&) const = default;
};

struct Automaton {
  std::string name;
  std::vector<Location> locs;
  std::vector<Edge> edges;

  int initial() const;
  int find_loc(const std::string& n) const;
  // clocks appearing in guards, invariants, or read by updates
  std::set<int> clocks_read() const;
  // clocks with a non-identity update
  std::set<int> clocks_written() const;
  std::set<int> clocks_used() const;
  std::set<int> events() const;
  bool operator==(const Automaton&) const = default;
};

struct IntVar {
  std::string name;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::int64_t init = 0;
  bool operator==(const IntVar&) const = default;
};

struct Network {
  std::string name = "system";
  std::vector<std::string> clocks;
  std::vector<IntVar> ints;
  std::vector<std::string> events;
  std::vector<Automaton> procs;

  int n_clocks() const { return static_cast<int>(clocks.size()); }
  int find_clock(const std::string& n) const;
  int find_int(const std::string& n) const;
  int find_event(const std::string& n) const;
  int find_proc(const std::string& n) const;
  bool operator==(const Network&) const = default;
};

// Wrap a single automaton as a one-component network.
Network single(const Automaton& a, std::vector<std::string> clocks, std::string name = "system");

enum class Severity : std::uint8_t { Warning, Error };

struct Diagnostic {
  Severity severity = Severity::Warning;
  std::string message;
};

std::vector<Diagnostic> validate_network(const Network& n);
bool has_errors(const std::vector<Diagnostic>& ds);

}  // namespace uta
