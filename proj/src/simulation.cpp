#include "uta/simulation.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace uta {

using bound::kInf;
using bound::kLeZero;

SimContext SimContext::from(const GSet& g, int n_clocks) {
  SimContext c;
  c.lu = extract_lu(g, n_clocks);
  c.diag = g.diag();
  return c;
}

bool sim_point(const Valuation& v, const Valuation& vp, const GSet& g) {
  for (const auto& a : g.atoms()) {
    switch (a.ctx) {
      case Ctx::Upper:
        if (satisfies(v, a) && !(vp[a.x] <= v[a.x])) return false;
        break;
      case Ctx::Lower:
        if (!satisfies(vp, a) && !(v[a.x] <= vp[a.x])) return false;
        break;
      case Ctx::UpperDiag:
      case Ctx::LowerDiag:
        if (satisfies(v, a) && !satisfies(vp, a)) return false;
        break;
      default:
        break;
    }
  }
  return true;
}

namespace {

// Z extended with a few extra edges that all touch the reference clock.
// ups: x_a - 0 <= w, downs: 0 - x_b <= w. Entries come from shortest paths
// that pass through 0 at most once.
struct Piece {
  const Dbm& z;
  int ups[2] = {0, 0};
  raw_t upw[2] = {0, 0};
  int n_up = 0;
  int down = 0;
  raw_t downw = 0;
  bool has_down = false;

  explicit Piece(const Dbm& zz) : z(zz) {}
  void add_up(int a, raw_t w) { ups[n_up] = a; upw[n_up++] = w; }
  void set_down(int b, raw_t w) { down = b; downw = w; has_down = true; }

  bool empty() const {
    for (int k = 0; k < n_up; ++k)
      if (bound::add(z.at(0, ups[k]), upw[k]) < kLeZero) return true;
    if (has_down && bound::add(downw, z.at(down, 0)) < kLeZero) return true;
    if (has_down)
      for (int k = 0; k < n_up; ++k)
        if (bound::add(bound::add(downw, z.at(down, ups[k])), upw[k]) < kLeZero) return true;
    return false;
  }
  raw_t into0(int i) const {
    raw_t r = z.at(i, 0);
    for (int k = 0; k < n_up; ++k) r = std::min(r, bound::add(z.at(i, ups[k]), upw[k]));
    return r;
  }
  raw_t outof0(int j) const {
    raw_t r = z.at(0, j);
    if (has_down) r = std::min(r, bound::add(downw, z.at(down, j)));
    return r;
  }
  raw_t at(int i, int j) const { return std::min(z.at(i, j), bound::add(into0(i), outof0(j))); }
};

}  // namespace

bool sim_zone_lu(const Dbm& z, const Dbm& zp, const LUBounds& lu) {
  if (z.empty()) return true;
  if (zp.empty()) return false;
  const int n = z.n_clocks();
  for (int x = 0; x < n; ++x) {
    const int xi = x + 1;
    const auto& U = lu.U[x];
    if (!U.finite) continue;
    const raw_t uin = bound::make(U.c, U.s);
    {
      Piece p(z);
      p.add_up(xi, uin);
      if (!p.empty() && p.at(0, xi) > zp.at(0, xi)) return false;
    }
    for (int y = 0; y < n; ++y) {
      if (y == x || !lu.L[y].finite) continue;
      const int yi = y + 1;
      const auto& L = lu.L[y];
      {
        Piece p(z);
        p.add_up(xi, uin);
        p.add_up(yi, bound::make(L.c, flip(L.s)));
        if (!p.empty() && p.at(yi, xi) > zp.at(yi, xi)) return false;
      }
      {
        Piece p(z);
        p.add_up(xi, uin);
        const raw_t lin = bound::make(-L.c, L.s);
        p.set_down(yi, lin);
        if (!p.empty() && p.at(0, xi) > bound::add(zp.at(yi, xi), lin)) return false;
      }
    }
  }
  for (int y = 0; y < n; ++y) {
    const auto& L = lu.L[y];
    if (!L.finite) continue;
    const int yi = y + 1;
    {
      Piece p(z);
      p.add_up(yi, bound::make(L.c, flip(L.s)));
      if (!p.empty() && p.at(yi, 0) > zp.at(yi, 0)) return false;
    }
    {
      Piece p(z);
      const raw_t lin = bound::make(-L.c, L.s);
      p.set_down(yi, lin);
      if (!p.empty() && bound::add(zp.at(yi, 0), lin) < kLeZero) return false;
    }
  }
  return true;
}

namespace {

bool sim_rec(const Dbm& z, const Dbm& zp, const SimContext& ctx, size_t k) {
  if (zp.includes(z)) return true;
  if (k == ctx.diag.size()) return sim_zone_lu(z, zp, ctx.lu);
  const Atomic& phi = ctx.diag[k];
  Dbm zp_phi = zp;
  zp_phi.intersect(phi);
  if (zp_phi == zp) return sim_rec(z, zp, ctx, k + 1);
  Dbm z_in = z;
  if (!z_in.intersect(phi)) return sim_rec(z, zp, ctx, k + 1);
  if (zp_phi.empty()) return false;
  Dbm z_out = z;
  if (!z_out.intersect(negate(phi))) return sim_rec(z, zp_phi, ctx, k + 1);
  return sim_rec(z_in, zp_phi, ctx, k + 1) && sim_rec(z_out, zp, ctx, k + 1);
}

}  // namespace

bool sim_zone(const Dbm& z, const Dbm& zp, const SimContext& ctx) {
  if (z.empty()) return true;
  if (zp.empty()) return false;
  return sim_rec(z, zp, ctx, 0);
}

bool sim_zone(const Dbm& z, const Dbm& zp, const GSet& g) {
  return sim_zone(z, zp, SimContext::from(g, z.n_clocks()));
}

namespace {

bool cmp_scaled(std::int64_t lhs, Strictness s, std::int64_t rhs) {
  return s == Strictness::Weak ? lhs <= rhs : lhs < rhs;
}

// v holds scaled coordinates, constants of a are multiplied by S
bool sat_scaled(const std::vector<std::int64_t>& v, const Atomic& a, std::int64_t S) {
  switch (a.ctx) {
    case Ctx::Upper: return cmp_scaled(v[a.x], a.s, a.c * S);
    case Ctx::Lower: return cmp_scaled(a.c * S, a.s, v[a.x]);
    case Ctx::UpperDiag: return cmp_scaled(v[a.x] - v[a.y], a.s, a.c * S);
    case Ctx::LowerDiag: return cmp_scaled(a.c * S, a.s, v[a.x] - v[a.y]);
    case Ctx::Top: return true;
    case Ctx::Bottom: return false;
  }
  return false;
}

Atomic scale_atom(Atomic a, std::int64_t S) {
  a.c *= S;
  return a;
}

std::vector<std::int64_t> class_key(const std::vector<std::int64_t>& v, std::int64_t S) {
  const size_t n = v.size();
  std::vector<std::int64_t> fr(n), key;
  for (size_t i = 0; i < n; ++i) {
    key.push_back(v[i] / S);
    fr[i] = v[i] % S;
  }
  std::vector<std::int64_t> distinct = fr;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (size_t i = 0; i < n; ++i) {
    key.push_back(fr[i] == 0 ? 0 : 1);
    key.push_back(std::lower_bound(distinct.begin(), distinct.end(), fr[i]) - distinct.begin());
  }
  return key;
}

}  // namespace

bool brute_force_sim(const Dbm& z, const Dbm& zp, const GSet& g, std::int64_t max_const) {
  const int n = z.n_clocks();
  if (n > 4) throw std::invalid_argument("brute_force_sim: more than 4 clocks");
  for (const auto& a : g.atoms())
    if (a.c > max_const) throw std::invalid_argument("brute_force_sim: constant above bound");
  if (z.empty()) return true;
  if (zp.empty()) return false;

  std::int64_t K = max_const;
  for (const Dbm* d : {&z, &zp})
    for (raw_t r : d->raw())
      if (r != kInf) K = std::max(K, std::abs(bound::value(r)));
  const std::int64_t S = 2 * (n + 1);
  const std::int64_t top = (n + 1) * (K + 1) * S;
  const Dbm zs = z.scaled(S);
  const Dbm zps = zp.scaled(S);

  std::vector<Atomic> uppers, lowers, diags;
  for (const auto& a : g.atoms()) {
    if (a.is_upper()) uppers.push_back(a);
    else if (a.is_lower()) lowers.push_back(a);
    else if (a.is_diag()) diags.push_back(a);
  }
  std::vector<bool> has_lower(n, false);
  for (const auto& a : lowers) has_lower[a.x] = true;

  auto simulated = [&](const std::vector<std::int64_t>& v) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      bool redundant = false;
      for (int x = 0; x < n; ++x)
        if ((mask >> x & 1) && !has_lower[x]) redundant = true;
      if (redundant) continue;
      Dbm d = zps;
      for (const auto& a : uppers)
        if (sat_scaled(v, a, S)) d.constrain(a.x + 1, 0, bound::le(v[a.x]));
      for (int x = 0; x < n; ++x)
        if (mask >> x & 1) d.constrain(0, x + 1, bound::le(-v[x]));
      for (const auto& a : lowers)
        if (!(mask >> a.x & 1)) d.intersect(scale_atom(a, S));
      for (const auto& a : diags)
        if (sat_scaled(v, a, S)) d.intersect(scale_atom(a, S));
      if (!d.empty()) return true;
    }
    return false;
  };

  std::set<std::vector<std::int64_t>> seen;
  std::vector<std::int64_t> v(n, 0);
  bool ok = true;
  std::function<void(int)> walk = [&](int k) {
    if (!ok) return;
    if (k == n) {
      if (seen.insert(class_key(v, S)).second && !simulated(v)) ok = false;
      return;
    }
    const int ki = k + 1;
    auto hi_of = [](raw_t b) { return bound::weak(b) ? bound::value(b) : bound::value(b) - 1; };
    std::int64_t lo = 0, hi = top;
    if (zs.at(0, ki) != kInf) lo = std::max(lo, -hi_of(zs.at(0, ki)));
    if (zs.at(ki, 0) != kInf) hi = std::min(hi, hi_of(zs.at(ki, 0)));
    for (int j = 0; j < k; ++j) {
      const int ji = j + 1;
      if (zs.at(ki, ji) != kInf) hi = std::min(hi, v[j] + hi_of(zs.at(ki, ji)));
      if (zs.at(ji, ki) != kInf) lo = std::max(lo, v[j] - hi_of(zs.at(ji, ki)));
    }
    for (std::int64_t t = lo; t <= hi && ok; ++t) {
      v[k] = t;
      walk(k + 1);
    }
  };
  walk(0);
  return ok;
}

}  // namespace uta
