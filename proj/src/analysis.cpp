#include "uta/analysis.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace uta {

bool GSet::insert(const Atomic& a) {
  if (a.is_trivial()) return false;
  return atoms_.insert(a).second;
}

std::vector<Atomic> GSet::nondiag() const {
  std::vector<Atomic> v;
  for (const auto& a : atoms_)
    if (!a.is_diag()) v.push_back(a);
  return v;
}

std::vector<Atomic> GSet::diag() const {
  std::vector<Atomic> v;
  for (const auto& a : atoms_)
    if (a.is_diag()) v.push_back(a);
  return v;
}

void GSet::merge(const GSet& o) { atoms_.insert(o.atoms_.begin(), o.atoms_.end()); }

const char* status_str(Status s) {
  switch (s) {
    case Status::Converged: return "converged";
    case Status::Diverged: return "diverged";
    case Status::BudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

AnalysisBounds analysis_bounds(const Automaton& a) {
  AnalysisBounds b;
  auto see_guard = [&](const Atomic& x) {
    if (!x.is_trivial()) b.M = std::max(b.M, x.c);
  };
  for (const auto& l : a.locs)
    for (const auto& x : l.invariant) see_guard(x);
  for (const auto& e : a.edges) {
    for (const auto& x : e.guard.clocks) see_guard(x);
    for (const auto& u : e.update.e) {
      std::int64_t k = u.is_const ? u.c : u.d;
      b.L = std::max(b.L, k < 0 ? -k : k);
    }
  }
  b.n_locs = static_cast<std::int64_t>(a.locs.size());
  b.n_clocks = static_cast<std::int64_t>(a.clocks_used().size());
  std::int64_t qx2 = b.n_locs * b.n_clocks * b.n_clocks;
  b.N = std::max(b.M, b.L) + 2 * b.L * qx2;
  b.budget = 2 * b.N * qx2;
  return b;
}

std::int64_t enforced_budget(const AnalysisBounds& b) {
  return std::max(b.budget, 4 * b.n_locs * b.n_clocks * b.n_clocks);
}

Atomic up_inverse(const Atomic& phi, const Update& up) {
  const Strictness s = phi.s;
  switch (phi.ctx) {
    case Ctx::Top:
    case Ctx::Bottom:
      return phi;
    case Ctx::Upper: {
      const auto& u = up.e[phi.x];
      if (u.is_const) return const_cmp(u.c, s, phi.c);
      return upper(u.y, s, phi.c - u.d);
    }
    case Ctx::Lower: {
      const auto& u = up.e[phi.x];
      if (u.is_const) return const_cmp(phi.c, s, u.c);
      return lower(u.y, s, phi.c - u.d);
    }
    case Ctx::UpperDiag: {
      const auto& ux = up.e[phi.x];
      const auto& uy = up.e[phi.y];
      if (ux.is_const && uy.is_const) return const_cmp(ux.c - uy.c, s, phi.c);
      if (ux.is_const) return lower(uy.y, s, ux.c - uy.d - phi.c);
      if (uy.is_const) return upper(ux.y, s, phi.c - ux.d + uy.c);
      return diag_upper(ux.y, uy.y, s, phi.c - ux.d + uy.d);
    }
    case Ctx::LowerDiag: {
      const auto& ux = up.e[phi.x];
      const auto& uy = up.e[phi.y];
      if (ux.is_const && uy.is_const) return const_cmp(phi.c, s, ux.c - uy.c);
      if (ux.is_const) return upper(uy.y, s, ux.c - uy.d - phi.c);
      if (uy.is_const) return lower(ux.y, s, phi.c - ux.d + uy.c);
      return diag_lower(ux.y, uy.y, s, phi.c - ux.d + uy.d);
    }
  }
  return phi;
}

Atomic up_inverse_nonneg(int x, const Update& up) {
  const auto& u = up.e[x];
  if (u.is_const) return Atomic::top();
  return lower(u.y, Strictness::Weak, -u.d);
}

Atomic apply_cuts(const Atomic& psi, const std::vector<Atomic>& guard) {
  switch (psi.ctx) {
    case Ctx::Upper:
      for (const auto& g : guard)
        if (g.ctx == Ctx::Upper && g.x == psi.x) return Atomic::top();
      return psi;
    case Ctx::Lower: {
      std::int64_t best = -1;
      for (const auto& g : guard)
        if (g.ctx == Ctx::Upper && g.x == psi.x && g.c < psi.c && (best < 0 || g.c < best)) best = g.c;
      if (best >= 0) return lower(psi.x, Strictness::Weak, best);
      return psi;
    }
    case Ctx::UpperDiag:
    case Ctx::LowerDiag:
      for (const auto& g : guard) {
        if (g.ctx == Ctx::Upper && g.x == psi.x && g.c < psi.c) return Atomic::top();
        if (g.ctx == Ctx::UpperDiag && g.x == psi.x && g.y == psi.y && g.c < psi.c) return Atomic::top();
        if (g.ctx == Ctx::LowerDiag && g.x == psi.x && g.y == psi.y && psi.c < g.c) return Atomic::top();
      }
      return psi;
    default:
      return psi;
  }
}

Atomic wp(const Atomic& phi, const std::vector<Atomic>& guard, const Update& up) {
  return apply_cuts(up_inverse(phi, up), guard);
}

namespace {

Atomic propagate(const Atomic& phi, const Edge& e, Mode mode) {
  Atomic psi = up_inverse(phi, e.update);
  return mode == Mode::Reduced ? apply_cuts(psi, e.guard.clocks) : psi;
}

Atomic seed_nonneg(int x, const Edge& e, Mode mode) {
  Atomic psi = up_inverse_nonneg(x, e.update);
  return mode == Mode::Reduced ? apply_cuts(psi, e.guard.clocks) : psi;
}

}  // namespace

std::vector<GSet> g0(const Automaton& a, int n_clocks, Mode mode) {
  std::vector<GSet> g(a.locs.size());
  for (size_t q = 0; q < a.locs.size(); ++q)
    for (const auto& x : a.locs[q].invariant) g[q].insert(x);
  for (const auto& e : a.edges) {
    for (const auto& x : e.guard.clocks) g[e.src].insert(x);
    for (int x = 0; x < n_clocks; ++x) g[e.src].insert(seed_nonneg(x, e, mode));
  }
  return g;
}

std::vector<Added> kleene_step(std::vector<GSet>& cur, const Automaton& a, Mode mode) {
  std::vector<Added> added;
  std::vector<GSet> next = cur;
  for (int ei = 0; ei < static_cast<int>(a.edges.size()); ++ei) {
    const Edge& e = a.edges[ei];
    for (const auto& phi : cur[e.dst].atoms()) {
      Atomic w = propagate(phi, e, mode);
      if (next[e.src].insert(w)) added.push_back({e.src, w, ei, phi});
    }
  }
  cur = std::move(next);
  return added;
}

namespace {

struct Origin {
  int edge = -1;
  int parent_loc = -1;
  Atomic parent;
};

int find_positive_cycle(const PropagationSequence& w, std::int64_t floor, int* out_i, int* out_j) {
  const auto& s = w.steps;
  for (int j = static_cast<int>(s.size()) - 1; j >= 0; --j) {
    if (s[j].phi.c <= floor) break;
    for (int i = j - 1; i >= 0; --i) {
      if (s[i].phi.c <= floor) break;
      if (s[i].loc == s[j].loc && s[i].phi.same_context(s[j].phi) && s[i].phi.c < s[j].phi.c) {
        *out_i = i;
        *out_j = j;
        return 1;
      }
    }
  }
  return 0;
}

}  // namespace

GMap compute_gmap(const Automaton& a, int n_clocks, Mode mode,
                  std::optional<std::int64_t> budget_override) {
  GMap m;
  m.bounds = analysis_bounds(a);
  const std::int64_t budget = budget_override ? *budget_override : enforced_budget(m.bounds);
  const std::int64_t floor = std::max(m.bounds.M, m.bounds.L);

  m.sets = g0(a, n_clocks, mode);
  std::map<std::pair<int, Atomic>, Origin> origin;
  std::vector<std::vector<Atomic>> frontier(a.locs.size());
  for (size_t q = 0; q < a.locs.size(); ++q) {
    for (const auto& x : m.sets[q].atoms()) {
      frontier[q].push_back(x);
      origin[{static_cast<int>(q), x}] = Origin{};
    }
  }
  std::vector<std::vector<int>> incoming(a.locs.size());
  for (int ei = 0; ei < static_cast<int>(a.edges.size()); ++ei) incoming[a.edges[ei].dst].push_back(ei);

  // Semi-naive evaluation: only constraints added in the previous step can
  // produce anything new, so the iterates match the plain Kleene sequence.
  for (;;) {
    std::vector<std::vector<Atomic>> next(a.locs.size());
    const Added* big = nullptr;
    std::vector<Added> added;
    for (size_t qd = 0; qd < a.locs.size(); ++qd) {
      if (frontier[qd].empty()) continue;
      for (int ei : incoming[qd]) {
        const Edge& e = a.edges[ei];
        for (const auto& phi : frontier[qd]) {
          Atomic w = propagate(phi, e, mode);
          if (w.is_trivial()) continue;
          if (m.sets[e.src].contains(w)) continue;
          if (origin.count({e.src, w})) continue;
          origin[{e.src, w}] = Origin{ei, static_cast<int>(qd), phi};
          added.push_back({e.src, w, ei, phi});
        }
      }
    }
    if (added.empty()) {
      m.status = Status::Converged;
      break;
    }
    for (const auto& ad : added) {
      m.sets[ad.loc].insert(ad.phi);
      next[ad.loc].push_back(ad.phi);
    }
    ++m.iterations;
    if (mode == Mode::Reduced) {
      for (const auto& ad : added)
        if (ad.phi.c > m.bounds.N && (!big || ad.phi.c > big->phi.c)) big = &ad;
      if (big) {
        m.status = Status::Diverged;
        std::vector<WitnessStep> rev;
        int loc = big->loc;
        Atomic phi = big->phi;
        for (;;) {
          const Origin& o = origin.at({loc, phi});
          rev.push_back({loc, phi, o.edge});
          if (o.edge < 0) break;
          loc = o.parent_loc;
          phi = o.parent;
        }
        m.witness.steps.assign(rev.rbegin(), rev.rend());
        find_positive_cycle(m.witness, floor, &m.witness.cycle_i, &m.witness.cycle_j);
        break;
      }
    }
    if (m.iterations > budget) {
      m.status = Status::BudgetExhausted;
      break;
    }
    frontier = std::move(next);
  }
  m.budget_used = m.iterations;
  return m;
}

bool validate_witness(const PropagationSequence& w, const Automaton& a, const AnalysisBounds& b,
                      Mode mode) {
  if (w.steps.empty()) return false;
  const auto& s = w.steps;
  int nclk = a.edges.empty() ? 0 : static_cast<int>(a.edges[0].update.e.size());
  auto base = g0(a, nclk, mode);
  if (s[0].edge != -1 || !base[s[0].loc].contains(s[0].phi)) return false;
  for (size_t k = 1; k < s.size(); ++k) {
    if (s[k].edge < 0 || s[k].edge >= static_cast<int>(a.edges.size())) return false;
    const Edge& e = a.edges[s[k].edge];
    if (e.src != s[k].loc || e.dst != s[k - 1].loc) return false;
    if (propagate(s[k - 1].phi, e, mode) != s[k].phi) return false;
  }
  if (s.back().phi.c <= b.N) return false;
  const std::int64_t floor = std::max(b.M, b.L);
  int i = w.cycle_i, j = w.cycle_j;
  if (i < 0 || j <= i || j >= static_cast<int>(s.size())) return false;
  if (s[i].loc != s[j].loc || !s[i].phi.same_context(s[j].phi) || !(s[i].phi.c < s[j].phi.c)) return false;
  for (int k = i; k <= j; ++k)
    if (s[k].phi.c <= floor) return false;
  return true;
}

bool lu_leq(const LUEntry& a, const LUEntry& b, bool lower) {
  if (!a.finite) return true;
  if (!b.finite) return false;
  if (a.c != b.c) return a.c < b.c;
  // c<x constrains more than c<=x, x<=c more than x<c
  return lower ? a.s >= b.s : a.s <= b.s;
}

LUBounds extract_lu(const GSet& g, int n_clocks) {
  LUBounds lu;
  lu.L.assign(n_clocks, LUEntry{});
  lu.U.assign(n_clocks, LUEntry{});
  for (const auto& a : g.atoms()) {
    if (a.is_diag()) continue;
    LUEntry cand{true, a.c, a.s};
    LUEntry& slot = a.is_upper() ? lu.U[a.x] : lu.L[a.x];
    if (!lu_leq(cand, slot, a.is_lower())) slot = cand;
  }
  return lu;
}

bool check_closure(const GMap& m, const Automaton& a, Mode mode) {
  auto ok = [&](int q, const Atomic& x) { return x.is_trivial() || m.sets[q].contains(x); };
  for (size_t q = 0; q < a.locs.size(); ++q)
    for (const auto& x : a.locs[q].invariant)
      if (!ok(static_cast<int>(q), x)) return false;
  for (const auto& e : a.edges) {
    for (const auto& x : e.guard.clocks)
      if (!ok(e.src, x)) return false;
    for (int x = 0; x < static_cast<int>(e.update.e.size()); ++x)
      if (!ok(e.src, seed_nonneg(x, e, mode))) return false;
    for (const auto& phi : m.sets[e.dst].atoms())
      if (!ok(e.src, propagate(phi, e, mode))) return false;
  }
  return true;
}

bool check_syntactically_bounded(const Automaton& a) {
  for (const auto& e : a.edges) {
    for (int x = 0; x < static_cast<int>(e.update.e.size()); ++x) {
      const auto& u = e.update.e[x];
      if (u.is_const) {
        if (u.c != 0) return false;
        continue;
      }
      if (u.y != x || u.d > 0) return false;
      if (u.d < 0) {
        bool has_upper = false;
        for (const auto& g : e.guard.clocks)
          if (g.ctx == Ctx::Upper && g.x == x) has_upper = true;
        if (!has_upper) return false;
      }
    }
  }
  return true;
}

Automaton bound_transform(const Automaton& a, const std::vector<std::int64_t>& max_x) {
  Automaton out = a;
  for (auto& e : out.edges) {
    for (int x = 0; x < static_cast<int>(e.update.e.size()); ++x) {
      const auto& u = e.update.e[x];
      bool reset = u.is_const && u.c == 0;
      bool sub = !u.is_const && u.y == x && u.d <= 0;
      if (!reset && !sub)
        throw std::invalid_argument("update outside the reset/subtraction fragment in " + a.name);
      if (!u.is_const && u.d < 0) {
        Atomic b = upper(x, Strictness::Weak, max_x.at(x));
        if (std::find(e.guard.clocks.begin(), e.guard.clocks.end(), b) == e.guard.clocks.end())
          e.guard.clocks.push_back(b);
      }
    }
  }
  return out;
}

std::int64_t max_constant(const GMap& m) {
  std::int64_t c = 0;
  for (const auto& g : m.sets)
    for (const auto& a : g.atoms()) c = std::max(c, a.c);
  return c;
}

}  // namespace uta
