#pragma once

#include <cstdint>
#include <vector>

#include "uta/analysis.hpp"
#include "uta/dbm.hpp"

namespace uta {

// Precomputed pieces of a GSet used by every zone comparison at one location.
struct SimContext {
  LUBounds lu;
  std::vector<Atomic> diag;  // sorted

  static SimContext from(const GSet& g, int n_clocks);
};

bool sim_point(const Valuation& v, const Valuation& vp, const GSet& g);

// Z ⊑_G Z′: every valuation of z has a simulator in zp.
bool sim_zone(const Dbm& z, const Dbm& zp, const SimContext& ctx);
bool sim_zone(const Dbm& z, const Dbm& zp, const GSet& g);

// Non-diagonal part only (G^d empty).
bool sim_zone_lu(const Dbm& z, const Dbm& zp, const LUBounds& lu);

// Test oracle. Enumerates one grid valuation per region class of z and
// checks zp against the union of per-branch simulator zones.
// Throws std::invalid_argument for more than 4 clocks or a G constant above max_const.
bool brute_force_sim(const Dbm& z, const Dbm& zp, const GSet& g, std::int64_t max_const);

}  // namespace uta
