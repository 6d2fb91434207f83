#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uta/analysis.hpp"
#include "uta/dbm.hpp"
#include "uta/model.hpp"
#include "uta/simulation.hpp"

namespace uta {

struct ProductLoc {
  std::vector<int> locs;
  std::vector<std::int64_t> ints;
  bool operator==(const ProductLoc&) const = default;
  auto operator<=>(const ProductLoc&) const = default;
};

struct ProductLocHash {
  size_t operator()(const ProductLoc& p) const;
};

// One fired joint move: (component, edge index) for every participant.
struct Transition {
  std::vector<std::pair<int, int>> parts;
  bool operator==(const Transition&) const = default;
};
std::string transition_label(const Transition& t, const Network& net);

struct State {
  ProductLoc loc;
  Dbm zone;
};

// Union of the component sets at the component-local locations.
GSet product_gset(const std::vector<GMap>& maps, const ProductLoc& loc);

// Precomputed edge tables. Synchronisation is multiway: an event fires when
// every component that mentions it takes one of its edges labelled with it,
// and at least one of them emits.
class Explorer {
 public:
  explicit Explorer(const Network& net);
  const Network& net() const { return net_; }

  std::optional<State> initial() const;
  // Appends successors; returns the number of moves disabled by an integer
  // assignment leaving its range.
  int successors(const State& s, std::vector<std::pair<Transition, State>>& out) const;
  // Fire a given joint move; nullopt when disabled or the zone becomes empty.
  std::optional<State> fire(const State& s, const Transition& t, bool* int_overflow = nullptr) const;
  bool committed(const ProductLoc& l) const;

 private:
  void candidates(const ProductLoc& l, std::vector<Transition>& out) const;

  const Network& net_;
  std::vector<std::vector<std::vector<int>>> out_;  // proc -> loc -> edges
  std::vector<std::vector<int>> participants_;      // event -> procs
};

struct Target {
  std::vector<std::pair<int, int>> locs;  // (proc, loc); empty means accepting flags
  bool matches(const ProductLoc& l, const Network& net) const;
};

// "Proc.loc" strings; throws std::invalid_argument on unknown names.
Target resolve_target(const Network& net, const std::vector<std::string>& specs);

enum class Verdict : std::uint8_t { Reachable, Unreachable, Timeout };
const char* verdict_str(Verdict v);

struct SearchOptions {
  bool use_simulation = true;
  bool exhaustive = false;  // keep exploring after the target is hit
  double timeout_secs = 0;  // 0 = none
};

struct PathStep {
  Transition t;  // empty for the initial step
  State state;
};

struct SearchStats {
  Verdict verdict = Verdict::Unreachable;
  std::int64_t nodes = 0;   // explored
  std::int64_t pruned = 0;  // dequeued and subsumed
  std::int64_t generated = 0;
  std::int64_t max_frontier = 0;
  std::int64_t int_disabled = 0;
  double seconds = 0;
  std::vector<PathStep> path;
};

// gmaps must hold one converged map per component when use_simulation.
SearchStats reach(const Network& net, const std::vector<GMap>& gmaps, const Target& target,
                  const SearchOptions& opt = {});

std::vector<GMap> component_gmaps(const Network& net, Mode mode);

bool replay(const std::vector<PathStep>& path, const Network& net);

}  // namespace uta
