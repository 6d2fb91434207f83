#pragma once

#include <random>
#include <vector>

#include "uta/analysis.hpp"
#include "uta/dbm.hpp"

namespace uta::testing {

inline std::int64_t pick(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Strictness any_strictness(std::mt19937_64& rng) { return rng() % 2 ? Strictness::Weak : Strictness::Strict; }

inline Atomic random_atom(std::mt19937_64& rng, int n, std::int64_t maxc, bool diag = true) {
  int x = static_cast<int>(pick(rng, 0, n - 1));
  int kind = static_cast<int>(pick(rng, 0, diag && n > 1 ? 3 : 1));
  auto s = any_strictness(rng);
  std::int64_t c = pick(rng, 0, maxc);
  if (kind == 0) return upper(x, s, c);
  if (kind == 1) return lower(x, s, c);
  int y = static_cast<int>(pick(rng, 0, n - 2));
  if (y >= x) ++y;
  return kind == 2 ? diag_upper(x, y, s, c) : diag_lower(x, y, s, c);
}

inline Update random_update(std::mt19937_64& rng, int n, std::int64_t maxc) {
  Update up = Update::identity(n);
  for (int x = 0; x < n; ++x) {
    int r = static_cast<int>(pick(rng, 0, 9));
    if (r < 2) up.e[x] = UpdateEntry::constant(pick(rng, 0, maxc));
    else if (r < 4) up.e[x] = UpdateEntry::shift(static_cast<int>(pick(rng, 0, n - 1)), pick(rng, -2, 2));
  }
  return up;
}

// Zone reached by a short random chain of guard / update / elapse steps.
inline Dbm random_zone(std::mt19937_64& rng, int n, std::int64_t maxc) {
  while (true) {
    Dbm z = Dbm::initial_zone(n);
    const int steps = static_cast<int>(pick(rng, 0, 4));
    bool ok = true;
    for (int k = 0; k < steps && ok; ++k) {
      Dbm next = z;
      const int na = static_cast<int>(pick(rng, 0, 2));
      for (int j = 0; j < na; ++j) next.intersect(random_atom(rng, n, maxc));
      if (!next.empty()) next.apply_update(random_update(rng, n, 2));
      if (!next.empty() && rng() % 4 != 0) next.elapse();
      if (!next.empty() && rng() % 3 == 0) next.intersect(random_atom(rng, n, maxc));
      if (next.empty()) ok = false;
      else z = next;
    }
    bool small = true;
    for (raw_t r : z.raw())
      if (r != bound::kInf && std::abs(bound::value(r)) > maxc) small = false;
    if (ok && !z.empty() && small) return z;
  }
}

inline GSet random_gset(std::mt19937_64& rng, int n, std::int64_t maxc, int max_atoms = 4) {
  GSet g;
  const int k = static_cast<int>(pick(rng, 0, max_atoms));
  for (int i = 0; i < k; ++i) g.insert(random_atom(rng, n, maxc));
  return g;
}

// Random rational valuation with denominators up to 4.
inline Valuation random_valuation(std::mt19937_64& rng, int n, std::int64_t maxc) {
  Valuation v;
  for (int i = 0; i < n; ++i) v.push_back(Rational(pick(rng, 0, 4 * (maxc + 2)), 4));
  return v;
}

}  // namespace uta::testing
