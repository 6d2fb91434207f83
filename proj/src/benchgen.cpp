#include "uta/benchgen.hpp"

#include <deque>
#include <random>
#include <sstream>
#include <stdexcept>

namespace uta {

namespace {

int add_loc(Automaton& a, const std::string& name, bool initial = false, bool committed = false,
            std::vector<Atomic> inv = {}, bool accepting = false) {
  Location l;
  l.name = name;
  l.initial = initial;
  l.committed = committed;
  l.accepting = accepting;
  l.invariant = std::move(inv);
  a.locs.push_back(std::move(l));
  return static_cast<int>(a.locs.size()) - 1;
}

struct EdgeSpec {
  std::vector<Atomic> clocks = {};
  std::vector<IntCmp> ints = {};
  std::vector<std::pair<int, UpdateEntry>> up = {};
  std::vector<IntAssign> assigns = {};
  std::optional<Sync> sync = {};
};

void add_edge(Automaton& a, int n_clocks, int src, int dst, EdgeSpec s) {
  Edge e;
  e.src = src;
  e.dst = dst;
  e.guard.clocks = std::move(s.clocks);
  e.guard.ints = std::move(s.ints);
  e.update = Update::identity(n_clocks);
  for (auto& [x, u] : s.up) e.update.e[x] = u;
  e.assigns = std::move(s.assigns);
  e.sync = s.sync;
  a.edges.push_back(std::move(e));
}

IntCmp int_eq(int var, std::int64_t k) { return IntCmp{LinExpr::var(var), CmpOp::Eq, LinExpr::lit(k)}; }
IntCmp int_cmp(int var, CmpOp op, std::int64_t k) { return IntCmp{LinExpr::var(var), op, LinExpr::lit(k)}; }
IntAssign int_set(int var, std::int64_t k) { return IntAssign{var, LinExpr::lit(k)}; }
Sync emit(int ev) { return Sync{ev, true}; }
Sync recv(int ev) { return Sync{ev, false}; }

constexpr auto W = Strictness::Weak;
constexpr auto S = Strictness::Strict;

}  // namespace

std::vector<TaskSpec> sporadic_periodic_tasks() {
  return {{5, 20, 20}, {8, 28, 30}, {5, 30, 30}, {1, 3, std::nullopt}};
}

std::vector<TaskSpec> mine_pump_tasks() {
  return {{58, 200, 200}, {37, 250, 250}, {37, 300, 300}, {39, 350, 350}, {33, 800, 800}};
}

Network gen_edf(const std::vector<TaskSpec>& tasks_in, const ReleasePattern& pat) {
  std::vector<TaskSpec> tasks = tasks_in;
  if (pat.kind == ReleaseKind::SporadicPeriodic) tasks = sporadic_periodic_tasks();
  if (pat.kind == ReleaseKind::MinePump) tasks = mine_pump_tasks();
  if (tasks.empty()) throw std::invalid_argument("gen_edf: no tasks");
  const int n = static_cast<int>(tasks.size());
  const int n_periodic = pat.kind == ReleaseKind::SporadicPeriodic ? n - 1 : n;
  for (int i = 0; i < n; ++i) {
    const auto& t = tasks[i];
    if (t.C < 0 || t.D < 0) throw std::invalid_argument("gen_edf: negative task parameter");
    if (t.C > t.D) throw std::invalid_argument("gen_edf: task " + std::to_string(i + 1) + " has C > D");
    if (t.P && t.D > *t.P) throw std::invalid_argument("gen_edf: task " + std::to_string(i + 1) + " has D > P");
    bool needs_period = (pat.kind == ReleaseKind::Periodic || pat.kind == ReleaseKind::MinePump) ||
                        (pat.kind == ReleaseKind::SporadicPeriodic && i < n_periodic);
    if (needs_period && !t.P) throw std::invalid_argument("gen_edf: periodic release needs periods");
  }
  if (pat.kind == ReleaseKind::SporadicPeriodic && pat.N < 1)
    throw std::invalid_argument("gen_edf: SporadicPeriodic needs N >= 1");

  Network net;
  net.name = "edf";
  auto c = [](int i) { return 3 * i; };
  auto d = [](int i) { return 3 * i + 1; };
  auto dp = [](int i) { return 3 * i + 2; };
  for (int i = 0; i < n; ++i) {
    std::string k = std::to_string(i + 1);
    net.clocks.push_back("c" + k);
    net.clocks.push_back("d" + k);
    net.clocks.push_back("dp" + k);
  }
  auto rel = [](int i) { return 3 * i; };
  auto run = [](int i) { return 3 * i + 1; };
  auto done = [](int i) { return 3 * i + 2; };
  for (int i = 0; i < n; ++i) {
    std::string k = std::to_string(i + 1);
    net.events.push_back("release_" + k);
    net.events.push_back("run_" + k);
    net.events.push_back("done_" + k);
  }
  for (int i = 0; i < n; ++i) net.ints.push_back(IntVar{"queued_" + std::to_string(i + 1), 0, 1, 0});
  auto queued = [](int i) { return i; };

  // release component clocks come after the task clocks
  std::vector<int> period_clock(n, -1);
  int rx = -1, sx = -1, sy = -1, counter = -1;
  auto new_clock = [&](const std::string& name) {
    net.clocks.push_back(name);
    return net.n_clocks() - 1;
  };
  switch (pat.kind) {
    case ReleaseKind::Flower:
      break;
    case ReleaseKind::WorstCase:
      rx = new_clock("x");
      break;
    case ReleaseKind::Periodic:
    case ReleaseKind::MinePump:
    case ReleaseKind::SporadicPeriodic:
      for (int i = 0; i < n_periodic; ++i) period_clock[i] = new_clock("p" + std::to_string(i + 1));
      if (pat.kind == ReleaseKind::SporadicPeriodic) {
        sx = new_clock("xs");
        sy = new_clock("ys");
        net.ints.push_back(IntVar{"n", 0, pat.N, 0});
        counter = static_cast<int>(net.ints.size()) - 1;
      }
      break;
  }
  const int nc = net.n_clocks();

  // scheduler
  {
    Automaton s;
    s.name = "Scheduler";
    int empty = add_loc(s, "empty", true);
    int running = add_loc(s, "taskrunning");
    // temp[i][j]: among the first i tasks, task j (1-based, 0 = none) is the earliest queued
    std::vector<std::vector<int>> temp(n + 1);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= i; ++j)
        temp[i].push_back(add_loc(s, "temp_" + std::to_string(i) + "_" + std::to_string(j), false, true));
    for (int i = 0; i < n; ++i) {
      add_edge(s, nc, empty, temp[0][0], {.up = {{dp(i), UpdateEntry::constant(0)}}, .sync = recv(rel(i))});
      add_edge(s, nc, running, temp[0][0], {.up = {{dp(i), UpdateEntry::constant(0)}}, .sync = recv(rel(i))});
      add_edge(s, nc, running, temp[0][0], {.sync = recv(done(i))});
    }
    for (int i = 0; i < n; ++i) {
      const int nx = i;  // 0-based index of task i+1
      add_edge(s, nc, temp[i][0], temp[i + 1][i + 1], {.ints = {int_eq(queued(nx), 1)}});
      add_edge(s, nc, temp[i][0], temp[i + 1][0], {.ints = {int_eq(queued(nx), 0)}});
      for (int j = 1; j <= i; ++j) {
        const int jx = j - 1;
        // D_{i+1} - dp_{i+1} < D_j - dp_j
        add_edge(s, nc, temp[i][j], temp[i + 1][i + 1],
                 {.clocks = {diag_upper(dp(jx), dp(nx), S, tasks[jx].D - tasks[nx].D)},
                  .ints = {int_eq(queued(nx), 1)}});
        add_edge(s, nc, temp[i][j], temp[i + 1][j], {.ints = {int_eq(queued(nx), 0)}});
        // D_j - dp_j <= D_{i+1} - dp_{i+1}
        add_edge(s, nc, temp[i][j], temp[i + 1][j],
                 {.clocks = {diag_upper(dp(nx), dp(jx), W, tasks[nx].D - tasks[jx].D)},
                  .ints = {int_eq(queued(nx), 1)}});
      }
    }
    for (int j = 1; j <= n; ++j) add_edge(s, nc, temp[n][j], running, {.sync = emit(run(j - 1))});
    add_edge(s, nc, temp[n][0], empty, {});
    net.procs.push_back(std::move(s));
  }

  // task handlers
  for (int i = 0; i < n; ++i) {
    Automaton h;
    h.name = "Handler" + std::to_string(i + 1);
    const auto& t = tasks[i];
    int fr = add_loc(h, "free", true);
    int qu = add_loc(h, "queued");
    int ru = add_loc(h, "running", false, false, {upper(c(i), W, t.C), upper(d(i), W, t.D)});
    int pr = add_loc(h, "preempted", false, false, {upper(d(i), W, t.D)});
    int er = add_loc(h, "error", false, false, {}, true);
    add_edge(h, nc, fr, qu,
             {.up = {{d(i), UpdateEntry::constant(0)}}, .assigns = {int_set(queued(i), 1)}, .sync = recv(rel(i))});
    add_edge(h, nc, qu, ru, {.up = {{c(i), UpdateEntry::constant(0)}}, .sync = recv(run(i))});
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      for (int l : {fr, qu}) {
        add_edge(h, nc, l, l, {.sync = recv(rel(j))});
        add_edge(h, nc, l, l, {.sync = recv(run(j))});
        add_edge(h, nc, l, l, {.sync = recv(done(j))});
      }
      add_edge(h, nc, ru, pr, {.sync = recv(rel(j))});
      add_edge(h, nc, pr, pr, {.sync = recv(rel(j))});
      add_edge(h, nc, pr, pr, {.sync = recv(run(j))});
      add_edge(h, nc, pr, pr,
               {.clocks = {upper(c(i), W, t.D)},
                .up = {{c(i), UpdateEntry::shift(c(i), -tasks[j].C)}},
                .sync = recv(done(j))});
    }
    add_edge(h, nc, pr, ru, {.sync = recv(run(i))});
    add_edge(h, nc, ru, fr,
             {.clocks = {lower(c(i), W, t.C), upper(c(i), W, t.C)},
              .assigns = {int_set(queued(i), 0)},
              .sync = emit(done(i))});
    add_edge(h, nc, ru, er, {.clocks = {lower(d(i), W, t.D), upper(c(i), S, t.C)}});
    add_edge(h, nc, pr, er, {.clocks = {lower(d(i), W, t.D)}});
    net.procs.push_back(std::move(h));
  }

  // release automata
  switch (pat.kind) {
    case ReleaseKind::Flower: {
      Automaton r;
      r.name = "Release";
      int q0 = add_loc(r, "q0", true);
      for (int i = 0; i < n; ++i) add_edge(r, nc, q0, q0, {.ints = {int_eq(queued(i), 0)}, .sync = emit(rel(i))});
      net.procs.push_back(std::move(r));
      break;
    }
    case ReleaseKind::WorstCase: {
      Automaton r;
      r.name = "Release";
      std::vector<int> rs;
      for (int k = 0; k <= n; ++k) rs.push_back(add_loc(r, "r" + std::to_string(k), k == 0));
      std::vector<int> ts;
      for (int i = 0; i < n; ++i) ts.push_back(add_loc(r, "t" + std::to_string(i + 1)));
      for (int k = 0; k < n; ++k) add_edge(r, nc, rs[k], rs[k + 1], {.clocks = {upper(rx, W, 0)}, .sync = emit(rel(k))});
      for (int i = 0; i < n; ++i) {
        add_edge(r, nc, rs[n], ts[i], {.up = {{rx, UpdateEntry::constant(0)}}, .sync = recv(done(i))});
        add_edge(r, nc, ts[i], rs[n], {.clocks = {upper(rx, W, 0)}, .sync = emit(rel(i))});
      }
      net.procs.push_back(std::move(r));
      break;
    }
    case ReleaseKind::Periodic:
    case ReleaseKind::MinePump:
    case ReleaseKind::SporadicPeriodic: {
      Automaton r;
      r.name = "Periodic";
      std::vector<int> rs;
      std::vector<Atomic> inv;
      for (int i = 0; i < n_periodic; ++i) inv.push_back(upper(period_clock[i], W, *tasks[i].P));
      for (int k = 0; k <= n_periodic; ++k)
        rs.push_back(add_loc(r, "r" + std::to_string(k), k == 0, k < n_periodic,
                             k == n_periodic ? inv : std::vector<Atomic>{}));
      for (int k = 0; k < n_periodic; ++k)
        add_edge(r, nc, rs[k], rs[k + 1],
                 {.up = {{period_clock[k], UpdateEntry::constant(0)}}, .sync = emit(rel(k))});
      for (int i = 0; i < n_periodic; ++i)
        add_edge(r, nc, rs[n_periodic], rs[n_periodic],
                 {.clocks = {lower(period_clock[i], W, *tasks[i].P)},
                  .up = {{period_clock[i], UpdateEntry::constant(0)}},
                  .sync = emit(rel(i))});
      net.procs.push_back(std::move(r));
      if (pat.kind == ReleaseKind::SporadicPeriodic) {
        Automaton sp;
        sp.name = "Sporadic";
        const int a = n - 1;
        int off = add_loc(sp, "offset", true, false, {upper(sy, W, 60)});
        int l2 = add_loc(sp, "loc2", false, false, {upper(sx, W, 3)});
        int l3 = add_loc(sp, "loc3", false, false, {upper(sy, W, 60)});
        auto burst = [&](int src) {
          add_edge(sp, nc, src, l2,
                   {.clocks = {lower(sy, W, 60)},
                    .up = {{sx, UpdateEntry::constant(0)}, {sy, UpdateEntry::constant(0)}},
                    .assigns = {int_set(counter, 0)},
                    .sync = emit(rel(a))});
        };
        burst(off);
        add_edge(sp, nc, l2, l2,
                 {.clocks = {lower(sx, W, 3), upper(sx, W, 3)},
                  .ints = {int_cmp(counter, CmpOp::Lt, pat.N - 1)},
                  .up = {{sx, UpdateEntry::constant(0)}},
                  .assigns = {IntAssign{counter, LinExpr::var(counter, 1)}},
                  .sync = emit(rel(a))});
        add_edge(sp, nc, l2, l3,
                 {.clocks = {lower(sx, W, 3), upper(sx, W, 3)}, .ints = {int_eq(counter, pat.N - 1)}});
        burst(l3);
        net.procs.push_back(std::move(sp));
      }
      break;
    }
  }
  return net;
}

CounterAutomaton parse_counter_spec(const std::string& spec, std::int64_t b, const std::string& init,
                                    const std::string& target) {
  CounterAutomaton ca;
  ca.b = b;
  auto state = [&](const std::string& s) {
    for (size_t i = 0; i < ca.states.size(); ++i)
      if (ca.states[i] == s) return static_cast<int>(i);
    ca.states.push_back(s);
    return static_cast<int>(ca.states.size()) - 1;
  };
  ca.init = state(init);
  ca.target = state(target);
  std::string text = spec;
  for (char& ch : text)
    if (ch == ',' || ch == ';') ch = '\n';
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream in(line);
    std::string from, p, to;
    if (!(in >> from)) continue;
    if (!(in >> p >> to)) throw std::invalid_argument("counter spec: expected `from +p to` in: " + line);
    std::int64_t v = 0;
    try {
      size_t used = 0;
      v = std::stoll(p, &used);
      if (used != p.size()) throw std::invalid_argument(p);
    } catch (const std::exception&) {
      throw std::invalid_argument("counter spec: bad increment " + p);
    }
    ca.trans.push_back({state(from), v, state(to)});
  }
  return ca;
}

CounterAutomaton random_counter(std::uint64_t seed, int max_states, std::int64_t max_b) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  CounterAutomaton ca;
  const int ns = static_cast<int>(pick(2, max_states));
  for (int i = 0; i < ns; ++i) ca.states.push_back("l" + std::to_string(i));
  ca.states[ns - 1] = "lt";
  ca.init = 0;
  ca.target = ns - 1;
  ca.b = pick(1, max_b);
  const int nt = static_cast<int>(pick(1, 2 * ns));
  for (int k = 0; k < nt; ++k) {
    int from = static_cast<int>(pick(0, ns - 1));
    int to = static_cast<int>(pick(0, ns - 1));
    ca.trans.push_back({from, pick(-ca.b, ca.b), to});
  }
  return ca;
}

Network gen_counter_reduction(const CounterAutomaton& ca) {
  Network net;
  net.name = "counter";
  net.clocks = {"x", "y"};
  const int x = 0, y = 1;
  Automaton a;
  a.name = "AB";
  std::vector<int> loc;
  for (size_t i = 0; i < ca.states.size(); ++i)
    loc.push_back(add_loc(a, ca.states[i], static_cast<int>(i) == ca.init));
  int l0p = add_loc(a, ca.states[ca.init] + "_p");
  int ltp = add_loc(a, ca.states[ca.target] + "_p");
  // counter step (l, p, l') becomes an edge l' -> l
  for (const auto& t : ca.trans)
    add_edge(a, 2, loc[t.to], loc[t.from],
             {.clocks = {upper(x, W, ca.b), upper(y, W, 0)}, .up = {{x, UpdateEntry::shift(x, -t.p)}}});
  add_edge(a, 2, loc[ca.init], l0p, {.clocks = {diag_upper(x, y, W, 0)}});
  add_edge(a, 2, ltp, loc[ca.target], {});
  add_edge(a, 2, ltp, ltp, {.up = {{y, UpdateEntry::shift(y, 1)}}});
  net.procs.push_back(std::move(a));
  return net;
}

bool counter_reach_oracle(const CounterAutomaton& ca) {
  const std::int64_t w = ca.b + 1;
  std::vector<bool> seen(ca.states.size() * w, false);
  std::deque<std::pair<int, std::int64_t>> q;
  q.emplace_back(ca.init, 0);
  seen[ca.init * w] = true;
  while (!q.empty()) {
    auto [l, c] = q.front();
    q.pop_front();
    if (l == ca.target) return true;
    for (const auto& t : ca.trans) {
      if (t.from != l) continue;
      std::int64_t nc = c + t.p;
      if (nc < 0 || nc > ca.b || seen[t.to * w + nc]) continue;
      seen[t.to * w + nc] = true;
      q.emplace_back(t.to, nc);
    }
  }
  return false;
}

namespace {

Network fig1(bool guarded) {
  Network net;
  net.name = guarded ? "fig1" : "fig1_unguarded";
  net.clocks = {"x", "y"};
  Automaton a;
  a.name = "A";
  int q0 = add_loc(a, "q0", true);
  int q1 = add_loc(a, "q1");
  int q2 = add_loc(a, "q2", false, false, {}, true);
  EdgeSpec dec{.up = {{0, UpdateEntry::shift(0, -1)}}};
  if (guarded) dec.clocks = {upper(0, W, 3)};
  add_edge(a, 2, q0, q1, dec);
  add_edge(a, 2, q1, q0, {});
  add_edge(a, 2, q1, q2, {.clocks = {diag_upper(0, 1, S, 1)}});
  net.procs.push_back(std::move(a));
  return net;
}

}  // namespace

Network gen_fig1() { return fig1(true); }
Network gen_fig1_unguarded() { return fig1(false); }

Network gen_random(const RandomProfile& prof) {
  std::mt19937_64 rng(prof.seed);
  auto pick = [&](std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  auto chance = [&](int percent) { return pick(0, 99) < percent; };
  const int nl = std::max(1, prof.n_locs);
  const int nc = std::max(1, prof.n_clocks);
  const std::int64_t K = std::max<std::int64_t>(1, prof.max_const);
  Network net;
  net.name = "random" + std::to_string(prof.seed);
  for (int i = 0; i < nc; ++i) net.clocks.push_back("x" + std::to_string(i));
  Automaton a;
  a.name = "R";
  for (int i = 0; i < nl; ++i) add_loc(a, "q" + std::to_string(i), i == 0, false, {}, i == nl - 1);
  auto strict = [&]() { return chance(50) ? S : W; };
  // x<0 would be false
  auto bound_atom = [&](int x) {
    std::int64_t c = pick(0, K);
    return upper(x, c == 0 ? W : strict(), c);
  };
  auto random_atom = [&](bool diag_ok) {
    int x = static_cast<int>(pick(0, nc - 1));
    int kind = static_cast<int>(pick(0, diag_ok && nc > 1 ? 3 : 1));
    std::int64_t c = pick(0, K);
    if (kind == 0) return upper(x, strict(), c);
    if (kind == 1) return lower(x, strict(), c);
    int y = static_cast<int>(pick(0, nc - 2));
    if (y >= x) ++y;
    return kind == 2 ? diag_upper(x, y, strict(), c) : diag_lower(x, y, strict(), c);
  };
  for (int q = 0; q < nl; ++q) {
    const int ne = static_cast<int>(pick(1, 3));
    for (int k = 0; k < ne; ++k) {
      EdgeSpec s;
      const int dst = static_cast<int>(pick(0, nl - 1));
      const int na = static_cast<int>(pick(0, 2));
      for (int j = 0; j < na; ++j) {
        Atomic at = random_atom(true);
        if (!at.is_trivial()) s.clocks.push_back(at);
      }
      for (int x = 0; x < nc; ++x) {
        switch (prof.fragment) {
          case Fragment::ResetOnly:
            if (chance(30)) s.up.emplace_back(x, UpdateEntry::constant(0));
            break;
          case Fragment::SubtractionBounded:
            if (chance(25)) {
              s.up.emplace_back(x, UpdateEntry::constant(0));
            } else if (chance(30)) {
              s.up.emplace_back(x, UpdateEntry::shift(x, -pick(1, K)));
              s.clocks.push_back(bound_atom(x));
            }
            break;
          case Fragment::ClockBounded:
          case Fragment::General: {
            int r = static_cast<int>(pick(0, 99));
            if (r < 20) s.up.emplace_back(x, UpdateEntry::constant(pick(0, K)));
            else if (r < 45) s.up.emplace_back(x, UpdateEntry::shift(static_cast<int>(pick(0, nc - 1)), pick(-K, K)));
            break;
          }
        }
        if (prof.fragment == Fragment::ClockBounded) s.clocks.push_back(bound_atom(x));
      }
      add_edge(a, nc, q, dst, std::move(s));
    }
  }
  net.procs.push_back(std::move(a));
  return net;
}

}  // namespace uta
