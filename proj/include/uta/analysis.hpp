#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "uta/model.hpp"

namespace uta {

// Constraint set of one location. Top and Bottom are never stored.
class GSet {
 public:
  bool insert(const Atomic& a);
  bool contains(const Atomic& a) const { return atoms_.count(a) != 0; }
  size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }
  const std::set<Atomic>& atoms() const { return atoms_; }
  std::vector<Atomic> nondiag() const;
  std::vector<Atomic> diag() const;
  void merge(const GSet& o);
  bool operator==(const GSet&) const = default;

 private:
  std::set<Atomic> atoms_;
};

enum class Mode : std::uint8_t { Reduced, NonReduced };
enum class Status : std::uint8_t { Converged, Diverged, BudgetExhausted };
const char* status_str(Status s);

struct AnalysisBounds {
  std::int64_t M = 0;       // largest guard constant
  std::int64_t L = 0;       // largest |d| (or c) in updates
  std::int64_t N = 0;       // max(M,L) + 2 L |Q| |X|^2
  std::int64_t budget = 0;  // 2 N |Q| |X|^2
  std::int64_t n_locs = 0;
  std::int64_t n_clocks = 0;
};

AnalysisBounds analysis_bounds(const Automaton& a);

// Step budget actually enforced: the formula, floored by the number of
// distinct constraints with constant 0 that fit into the map.
std::int64_t enforced_budget(const AnalysisBounds& b);

struct WitnessStep {
  int loc = -1;
  Atomic phi;
  int edge = -1;  // edge (loc -> previous loc) that produced phi; -1 for the seed
};

struct PropagationSequence {
  std::vector<WitnessStep> steps;
  int cycle_i = -1;  // positive cycle, indices into steps
  int cycle_j = -1;
};

struct GMap {
  std::vector<GSet> sets;  // indexed by location
  Status status = Status::Converged;
  int iterations = 0;
  AnalysisBounds bounds;
  std::int64_t budget_used = 0;
  PropagationSequence witness;  // Diverged only
};

Atomic up_inverse(const Atomic& phi, const Update& up);

// Guard-aware cuts applied to an already substituted constraint.
Atomic apply_cuts(const Atomic& psi, const std::vector<Atomic>& guard);

Atomic wp(const Atomic& phi, const std::vector<Atomic>& guard, const Update& up);

// Substitution of `0 <= x` (before normalisation would turn it into Top).
Atomic up_inverse_nonneg(int x, const Update& up);

std::vector<GSet> g0(const Automaton& a, int n_clocks, Mode mode = Mode::Reduced);

struct Added {
  int loc = -1;
  Atomic phi;
  int edge = -1;
  Atomic parent;
};

// One synchronous Kleene step over the whole map; returns what was added.
std::vector<Added> kleene_step(std::vector<GSet>& cur, const Automaton& a, Mode mode);

GMap compute_gmap(const Automaton& a, int n_clocks, Mode mode,
                  std::optional<std::int64_t> budget_override = std::nullopt);

// Re-check a divergence witness: every step is a wp step and the cycle is positive.
bool validate_witness(const PropagationSequence& w, const Automaton& a, const AnalysisBounds& b,
                      Mode mode = Mode::Reduced);

struct LUEntry {
  bool finite = false;  // false means -infinity
  std::int64_t c = 0;
  Strictness s = Strictness::Weak;
  bool operator==(const LUEntry&) const = default;
};
bool lu_leq(const LUEntry& a, const LUEntry& b, bool lower = false);

struct LUBounds {
  std::vector<LUEntry> L;
  std::vector<LUEntry> U;
};

LUBounds extract_lu(const GSet& g, int n_clocks);

bool check_closure(const GMap& m, const Automaton& a, Mode mode);
bool check_syntactically_bounded(const Automaton& a);
Automaton bound_transform(const Automaton& a, const std::vector<std::int64_t>& max_x);

std::int64_t max_constant(const GMap& m);

}  // namespace uta
