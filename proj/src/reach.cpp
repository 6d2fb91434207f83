#include "uta/reach.hpp"

#include <chrono>
#include <deque>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace uta {

size_t ProductLocHash::operator()(const ProductLoc& p) const {
  size_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ULL;
  };
  for (int l : p.locs) mix(static_cast<std::uint64_t>(l));
  mix(0xffff);
  for (auto v : p.ints) mix(static_cast<std::uint64_t>(v));
  return h;
}

std::string transition_label(const Transition& t, const Network& net) {
  std::string s;
  for (const auto& [p, e] : t.parts) {
    const auto& a = net.procs[p];
    const auto& ed = a.edges[e];
    if (!s.empty()) s += ", ";
    s += a.name + "." + a.locs[ed.src].name + "->" + a.locs[ed.dst].name;
    if (ed.sync) s += "[" + net.events[ed.sync->event] + (ed.sync->emit ? "!" : "?") + "]";
  }
  return s;
}

GSet product_gset(const std::vector<GMap>& maps, const ProductLoc& loc) {
  GSet g;
  for (size_t p = 0; p < maps.size(); ++p) g.merge(maps[p].sets[loc.locs[p]]);
  return g;
}

Explorer::Explorer(const Network& net) : net_(net) {
  out_.resize(net.procs.size());
  participants_.resize(net.events.size());
  for (size_t p = 0; p < net.procs.size(); ++p) {
    const auto& a = net.procs[p];
    out_[p].resize(a.locs.size());
    for (size_t e = 0; e < a.edges.size(); ++e) out_[p][a.edges[e].src].push_back(static_cast<int>(e));
    for (int ev : a.events()) participants_[ev].push_back(static_cast<int>(p));
  }
}

bool Explorer::committed(const ProductLoc& l) const {
  for (size_t p = 0; p < l.locs.size(); ++p)
    if (net_.procs[p].locs[l.locs[p]].committed) return true;
  return false;
}

void Explorer::candidates(const ProductLoc& l, std::vector<Transition>& out) const {
  const size_t np = net_.procs.size();
  std::vector<bool> comm(np);
  bool any_comm = false;
  for (size_t p = 0; p < np; ++p) {
    comm[p] = net_.procs[p].locs[l.locs[p]].committed;
    any_comm = any_comm || comm[p];
  }
  for (size_t p = 0; p < np; ++p) {
    if (any_comm && !comm[p]) continue;
    for (int e : out_[p][l.locs[p]])
      if (!net_.procs[p].edges[e].sync) out.push_back(Transition{{{static_cast<int>(p), e}}});
  }
  for (size_t ev = 0; ev < participants_.size(); ++ev) {
    const auto& procs = participants_[ev];
    if (procs.empty()) continue;
    std::vector<std::vector<int>> opts(procs.size());
    bool possible = true;
    for (size_t k = 0; k < procs.size() && possible; ++k) {
      int p = procs[k];
      for (int e : out_[p][l.locs[p]]) {
        const auto& ed = net_.procs[p].edges[e];
        if (ed.sync && ed.sync->event == static_cast<int>(ev)) opts[k].push_back(e);
      }
      possible = !opts[k].empty();
    }
    if (!possible) continue;
    std::vector<size_t> pick(procs.size(), 0);
    while (true) {
      bool emit = false, has_comm = false;
      Transition t;
      for (size_t k = 0; k < procs.size(); ++k) {
        int e = opts[k][pick[k]];
        emit = emit || net_.procs[procs[k]].edges[e].sync->emit;
        has_comm = has_comm || comm[procs[k]];
        t.parts.emplace_back(procs[k], e);
      }
      if (emit && (!any_comm || has_comm)) out.push_back(std::move(t));
      size_t k = 0;
      while (k < procs.size() && ++pick[k] == opts[k].size()) pick[k++] = 0;
      if (k == procs.size()) break;
    }
  }
}

namespace {

bool apply_invariant(Dbm& z, const Network& net, const ProductLoc& l) {
  for (size_t p = 0; p < l.locs.size(); ++p)
    if (!z.intersect(net.procs[p].locs[l.locs[p]].invariant)) return false;
  return true;
}

}  // namespace

std::optional<State> Explorer::initial() const {
  State s;
  for (const auto& a : net_.procs) {
    int q = a.initial();
    if (q < 0) return std::nullopt;
    s.loc.locs.push_back(q);
  }
  for (const auto& v : net_.ints) s.loc.ints.push_back(v.init);
  s.zone = Dbm::zero(net_.n_clocks());
  if (!apply_invariant(s.zone, net_, s.loc)) return std::nullopt;
  if (!committed(s.loc)) {
    s.zone.elapse();
    if (!apply_invariant(s.zone, net_, s.loc)) return std::nullopt;
  }
  return s;
}

std::optional<State> Explorer::fire(const State& s, const Transition& t, bool* int_overflow) const {
  if (int_overflow) *int_overflow = false;
  for (const auto& [p, e] : t.parts) {
    if (p < 0 || p >= static_cast<int>(net_.procs.size())) return std::nullopt;
    const auto& a = net_.procs[p];
    if (e < 0 || e >= static_cast<int>(a.edges.size()) || a.edges[e].src != s.loc.locs[p]) return std::nullopt;
    for (const auto& c : a.edges[e].guard.ints)
      if (!c.eval(s.loc.ints)) return std::nullopt;
  }
  State n;
  n.loc = s.loc;
  for (const auto& [p, e] : t.parts) {
    const auto& ed = net_.procs[p].edges[e];
    for (const auto& as : ed.assigns) {
      std::int64_t v = as.rhs.eval(s.loc.ints);
      const auto& iv = net_.ints[as.var];
      if (v < iv.lo || v > iv.hi) {
        if (int_overflow) *int_overflow = true;
        return std::nullopt;
      }
      n.loc.ints[as.var] = v;
    }
    n.loc.locs[p] = ed.dst;
  }
  n.zone = s.zone;
  Update up = Update::identity(net_.n_clocks());
  for (const auto& [p, e] : t.parts) {
    const auto& ed = net_.procs[p].edges[e];
    if (!n.zone.intersect(ed.guard.clocks)) return std::nullopt;
    for (int x = 0; x < net_.n_clocks(); ++x)
      if (!ed.update.is_identity_at(x)) up.e[x] = ed.update.e[x];
  }
  if (!up.is_identity() && !n.zone.apply_update(up)) return std::nullopt;
  if (!apply_invariant(n.zone, net_, n.loc)) return std::nullopt;
  if (!committed(n.loc)) {
    n.zone.elapse();
    if (!apply_invariant(n.zone, net_, n.loc)) return std::nullopt;
  }
  return n;
}

int Explorer::successors(const State& s, std::vector<std::pair<Transition, State>>& out) const {
  std::vector<Transition> ts;
  candidates(s.loc, ts);
  int disabled = 0;
  for (auto& t : ts) {
    bool overflow = false;
    auto n = fire(s, t, &overflow);
    if (overflow) ++disabled;
    if (n) out.emplace_back(std::move(t), std::move(*n));
  }
  return disabled;
}

bool Target::matches(const ProductLoc& l, const Network& net) const {
  if (locs.empty()) {
    for (size_t p = 0; p < l.locs.size(); ++p)
      if (net.procs[p].locs[l.locs[p]].accepting) return true;
    return false;
  }
  for (const auto& [p, q] : locs)
    if (l.locs[p] == q) return true;
  return false;
}

Target resolve_target(const Network& net, const std::vector<std::string>& specs) {
  Target t;
  for (const auto& s : specs) {
    auto dot = s.find('.');
    if (dot == std::string::npos) throw std::invalid_argument("target must be Proc.loc: " + s);
    int p = net.find_proc(s.substr(0, dot));
    if (p < 0) throw std::invalid_argument("unknown process in target: " + s);
    int q = net.procs[p].find_loc(s.substr(dot + 1));
    if (q < 0) throw std::invalid_argument("unknown location in target: " + s);
    t.locs.emplace_back(p, q);
  }
  return t;
}

const char* verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Reachable: return "reachable";
    case Verdict::Unreachable: return "unreachable";
    case Verdict::Timeout: return "timeout";
  }
  return "?";
}

std::vector<GMap> component_gmaps(const Network& net, Mode mode) {
  std::vector<GMap> out;
  for (const auto& a : net.procs) out.push_back(compute_gmap(a, net.n_clocks(), mode));
  return out;
}

namespace {

struct Node {
  State s;
  int parent = -1;
  Transition via;
};

}  // namespace

SearchStats reach(const Network& net, const std::vector<GMap>& gmaps, const Target& target,
                  const SearchOptions& opt) {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  SearchStats st;
  if (opt.use_simulation) {
    if (gmaps.size() != net.procs.size()) throw std::invalid_argument("reach: one G-map per component needed");
    for (const auto& m : gmaps)
      if (m.status != Status::Converged) throw std::invalid_argument("reach: G-map analysis did not converge");
  }
  Explorer ex(net);
  std::vector<Node> nodes;
  std::deque<int> queue;
  std::unordered_map<ProductLoc, std::vector<int>, ProductLocHash> visited;
  std::map<std::vector<int>, SimContext> ctx_cache;
  int found = -1;

  auto finish = [&](Verdict v) {
    st.verdict = v;
    st.seconds = std::chrono::duration<double>(clock::now() - t0).count();
    if (found >= 0) {
      std::vector<PathStep> rev;
      for (int k = found; k >= 0; k = nodes[k].parent) rev.push_back(PathStep{nodes[k].via, nodes[k].s});
      st.path.assign(rev.rbegin(), rev.rend());
    }
    return st;
  };

  auto init = ex.initial();
  if (!init) return finish(Verdict::Unreachable);
  nodes.push_back(Node{std::move(*init), -1, {}});
  st.generated = 1;
  if (target.matches(nodes[0].s.loc, net)) {
    found = 0;
    if (!opt.exhaustive) return finish(Verdict::Reachable);
  }
  queue.push_back(0);

  std::vector<std::pair<Transition, State>> succ;
  std::int64_t tick = 0;
  while (!queue.empty()) {
    if (opt.timeout_secs > 0 && (++tick & 63) == 0 &&
        std::chrono::duration<double>(clock::now() - t0).count() > opt.timeout_secs)
      return finish(Verdict::Timeout);
    const int id = queue.front();
    queue.pop_front();
    auto& bucket = visited[nodes[id].s.loc];
    bool subsumed = false;
    if (opt.use_simulation) {
      auto it = ctx_cache.find(nodes[id].s.loc.locs);
      if (it == ctx_cache.end())
        it = ctx_cache.emplace(nodes[id].s.loc.locs,
                               SimContext::from(product_gset(gmaps, nodes[id].s.loc), net.n_clocks()))
                 .first;
      for (int o : bucket)
        if (sim_zone(nodes[id].s.zone, nodes[o].s.zone, it->second)) {
          subsumed = true;
          break;
        }
    } else {
      for (int o : bucket)
        if (nodes[o].s.zone == nodes[id].s.zone) {
          subsumed = true;
          break;
        }
    }
    if (subsumed) {
      ++st.pruned;
      continue;
    }
    bucket.push_back(id);
    ++st.nodes;
    succ.clear();
    st.int_disabled += ex.successors(nodes[id].s, succ);
    for (auto& [t, s] : succ) {
      const int nid = static_cast<int>(nodes.size());
      nodes.push_back(Node{std::move(s), id, std::move(t)});
      ++st.generated;
      if (found < 0 && target.matches(nodes[nid].s.loc, net)) {
        found = nid;
        if (!opt.exhaustive) return finish(Verdict::Reachable);
      }
      queue.push_back(nid);
    }
    st.max_frontier = std::max<std::int64_t>(st.max_frontier, static_cast<std::int64_t>(queue.size()));
  }
  return finish(found >= 0 ? Verdict::Reachable : Verdict::Unreachable);
}

bool replay(const std::vector<PathStep>& path, const Network& net) {
  if (path.empty()) return false;
  Explorer ex(net);
  auto cur = ex.initial();
  if (!cur || !(cur->loc == path[0].state.loc) || !(cur->zone == path[0].state.zone)) return false;
  for (size_t k = 1; k < path.size(); ++k) {
    auto n = ex.fire(*cur, path[k].t);
    if (!n || n->zone.empty() || !(n->loc == path[k].state.loc) || !(n->zone == path[k].state.zone)) return false;
    cur = std::move(n);
  }
  return true;
}

}  // namespace uta
