#include <doctest.h>

#include "support.hpp"
#include "uta/analysis.hpp"
#include "uta/benchgen.hpp"
#include "uta/simulation.hpp"

using namespace uta;
using uta::testing::pick;

namespace {
constexpr auto W = Strictness::Weak;
constexpr auto S = Strictness::Strict;
const int X = 0, Y = 1;

Update dec_x(int n = 2, std::int64_t k = 1) {
  Update u = Update::identity(n);
  u.e[X] = UpdateEntry::shift(X, -k);
  return u;
}

std::set<Atomic> set_of(std::initializer_list<Atomic> l) { return std::set<Atomic>(l); }

const Automaton& fig1() {
  static Network n = gen_fig1();
  return n.procs[0];
}
}  // namespace

TEST_CASE("up_inverse") {
  CHECK(up_inverse(diag_upper(X, Y, S, 1), dec_x()) == diag_upper(X, Y, S, 2));
  Update to5 = Update::identity(2);
  to5.e[X] = UpdateEntry::constant(5);
  CHECK(up_inverse(upper(X, W, 3), to5).is_bottom());
  CHECK(up_inverse(upper(X, W, 7), to5).is_top());
  CHECK(up_inverse(lower(X, W, 3), dec_x()) == lower(X, W, 4));
  for (auto a : {upper(X, S, 2), lower(Y, W, 1), diag_upper(X, Y, W, 3), diag_lower(Y, X, S, 2)})
    CHECK(up_inverse(a, Update::identity(2)) == a);
  // x := y + 2 against x - y <= 1 gives 2 <= 1
  Update shift = Update::identity(2);
  shift.e[X] = UpdateEntry::shift(Y, 2);
  CHECK(up_inverse(diag_upper(X, Y, W, 1), shift).is_bottom());
  // y := 0 against x - y < 2 gives x < 2
  Update ry = Update::identity(2);
  ry.e[Y] = UpdateEntry::constant(0);
  CHECK(up_inverse(diag_upper(X, Y, S, 2), ry) == upper(X, S, 2));
  CHECK(up_inverse(diag_lower(X, Y, S, 2), ry) == lower(X, S, 2));
}

TEST_CASE("wp cuts") {
  std::vector<Atomic> g{upper(X, W, 3)};
  CHECK(wp(upper(X, W, 3), g, dec_x()).is_top());
  CHECK(wp(lower(X, W, 3), g, dec_x()) == lower(X, W, 3));
  CHECK(wp(diag_upper(X, Y, S, 1), g, dec_x()) == diag_upper(X, Y, S, 2));
  CHECK(wp(diag_upper(X, Y, S, 3), g, dec_x()).is_top());
  // the weak replacement ignores the guard strictness
  CHECK(wp(lower(X, S, 5), {upper(X, S, 2)}, Update::identity(2)) == lower(X, W, 2));
  // smallest case-2 constant wins, true beats case 2
  CHECK(wp(lower(X, W, 9), {upper(X, W, 6), upper(X, W, 4)}, Update::identity(2)) == lower(X, W, 4));
  CHECK(wp(diag_lower(X, Y, W, 5), {diag_lower(X, Y, W, 7)}, Update::identity(2)).is_top());
  CHECK(wp(diag_upper(X, Y, W, 5), {diag_upper(X, Y, S, 4)}, Update::identity(2)).is_top());
  CHECK(wp(diag_upper(X, Y, W, 5), {diag_upper(X, Y, S, 5)}, Update::identity(2)) == diag_upper(X, Y, W, 5));
}

TEST_CASE("g0 of the example") {
  auto g = g0(fig1(), 2);
  CHECK(g[0].atoms() == set_of({upper(X, W, 3), lower(X, W, 1)}));
  CHECK(g[1].atoms() == set_of({diag_upper(X, Y, S, 1)}));
  CHECK(g[2].empty());
}

TEST_CASE("first Kleene step") {
  auto g = g0(fig1(), 2);
  auto added = kleene_step(g, fig1(), Mode::Reduced);
  CHECK(g[0].contains(diag_upper(X, Y, S, 2)));
  CHECK(g[1].contains(upper(X, W, 3)));
  CHECK(g[1].contains(lower(X, W, 1)));
  CHECK(added.size() == 3);

  auto h = g0(fig1(), 2, Mode::NonReduced);
  for (int i = 0; i < 6; ++i) kleene_step(h, fig1(), Mode::NonReduced);
  CHECK(h[0].contains(upper(X, W, 4)));
  CHECK(h[0].contains(lower(X, W, 2)));
  CHECK(h[0].contains(diag_upper(X, Y, S, 3)));
  CHECK(h[0].contains(diag_upper(X, Y, S, 4)));

  auto done = g0(fig1(), 2);
  while (!kleene_step(done, fig1(), Mode::Reduced).empty()) {
  }
  CHECK(kleene_step(done, fig1(), Mode::Reduced).empty());
}

TEST_CASE("reduced map of the example") {
  GMap m = compute_gmap(fig1(), 2, Mode::Reduced);
  REQUIRE(m.status == Status::Converged);
  CHECK(m.iterations == 5);
  auto q0 = set_of({upper(X, W, 3), lower(X, W, 1), lower(X, W, 2), lower(X, W, 3), diag_upper(X, Y, S, 2),
                    diag_upper(X, Y, S, 3)});
  CHECK(m.sets[0].atoms() == q0);
  auto q1 = q0;
  q1.insert(diag_upper(X, Y, S, 1));
  CHECK(m.sets[1].atoms() == q1);
  CHECK(m.sets[2].empty());
  CHECK(check_closure(m, fig1(), Mode::Reduced));
  CHECK(max_constant(m) <= m.bounds.N);

  GMap broken = m;
  auto atoms = broken.sets[0].atoms();
  atoms.erase(lower(X, W, 3));
  broken.sets[0] = GSet();
  for (const auto& a : atoms) broken.sets[0].insert(a);
  CHECK_FALSE(check_closure(broken, fig1(), Mode::Reduced));
}

TEST_CASE("semi-naive iteration agrees with plain Kleene steps") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Network r = gen_random({4, 2, Fragment::SubtractionBounded, 4, seed});
    const auto& a = r.procs[0];
    GMap m = compute_gmap(a, 2, Mode::Reduced);
    REQUIRE(m.status == Status::Converged);
    auto g = g0(a, 2);
    int steps = 0;
    while (!kleene_step(g, a, Mode::Reduced).empty()) ++steps;
    CHECK(steps == m.iterations);
    CHECK(g == m.sets);
  }
}

TEST_CASE("divergence without the guard") {
  Network n = gen_fig1_unguarded();
  const auto& a = n.procs[0];
  GMap m = compute_gmap(a, 2, Mode::Reduced);
  REQUIRE(m.status == Status::Diverged);
  CHECK(validate_witness(m.witness, a, m.bounds));
  const auto& s = m.witness.steps;
  const auto& last = s.back().phi;
  CHECK(last.ctx == Ctx::UpperDiag);
  CHECK(last.c > m.bounds.N);
  for (int k = m.witness.cycle_i; k <= m.witness.cycle_j; ++k) CHECK(s[k].phi.ctx == Ctx::UpperDiag);

  PropagationSequence bad = m.witness;
  bad.steps[1].phi.c += 1;
  CHECK_FALSE(validate_witness(bad, a, m.bounds));
}

TEST_CASE("non-reduced map of the example runs out of budget") {
  GMap m = compute_gmap(fig1(), 2, Mode::NonReduced);
  CHECK(m.status == Status::BudgetExhausted);
  GMap small = compute_gmap(fig1(), 2, Mode::NonReduced, 10);
  CHECK(small.status == Status::BudgetExhausted);
  CHECK(small.iterations == 11);
}

TEST_CASE("analysis bounds") {
  auto b = analysis_bounds(fig1());
  CHECK(b.M == 3);
  CHECK(b.L == 1);
  CHECK(b.N == 27);
  CHECK(b.budget == 648);

  Automaton plain;
  plain.locs.push_back(Location{"a", true, false, false, {}});
  plain.edges.push_back(Edge{0, 0, {}, Update::identity(1), {}, std::nullopt});
  auto z = analysis_bounds(plain);
  CHECK(z.M == 0);
  CHECK(z.L == 0);
  CHECK(z.N == 0);

  const std::int64_t bb = 3;
  Network ab = gen_counter_reduction(parse_counter_spec("l0 +1 lt", bb));
  auto cb = analysis_bounds(ab.procs[0]);
  CHECK(cb.M == bb);
  CHECK(cb.L == bb - 2);  // the only update is x=x-1 and y=y+1
  const std::int64_t q = static_cast<std::int64_t>(ab.procs[0].locs.size());
  CHECK(cb.N == std::max(cb.M, cb.L) + 2 * cb.L * q * 4);
}

TEST_CASE("extract_lu") {
  GSet g;
  for (auto a : {lower(X, W, 1), lower(X, W, 3), upper(X, W, 3), diag_upper(X, Y, S, 2)}) g.insert(a);
  auto lu = extract_lu(g, 2);
  CHECK(lu.L[X] == LUEntry{true, 3, W});
  CHECK(lu.U[X] == LUEntry{true, 3, W});
  CHECK_FALSE(lu.L[Y].finite);
  CHECK_FALSE(lu.U[Y].finite);

  auto empty = extract_lu(GSet(), 2);
  for (int x = 0; x < 2; ++x) {
    CHECK_FALSE(empty.L[x].finite);
    CHECK_FALSE(empty.U[x].finite);
  }

  GSet t;
  t.insert(upper(X, S, 3));
  t.insert(upper(X, W, 3));
  CHECK(extract_lu(t, 2).U[X] == LUEntry{true, 3, W});
  GSet l;
  l.insert(lower(X, S, 3));
  l.insert(lower(X, W, 3));
  l.insert(lower(X, S, 2));
  CHECK(extract_lu(l, 2).L[X] == LUEntry{true, 3, S});
}

TEST_CASE("closure of an edgeless automaton") {
  Automaton a;
  a.locs.push_back(Location{"a", true, false, false, {}});
  GMap m = compute_gmap(a, 1, Mode::Reduced);
  CHECK(m.status == Status::Converged);
  CHECK(m.sets[0].empty());
  CHECK(check_closure(m, a, Mode::Reduced));
}

TEST_CASE("syntactically bounded subtraction") {
  Network edf = gen_edf({{1, 2}, {1, 3}}, {ReleaseKind::Flower, 0});
  for (const auto& a : edf.procs) CHECK(check_syntactically_bounded(a));

  Automaton a;
  a.locs.push_back(Location{"a", true, false, false, {}});
  a.edges.push_back(Edge{0, 0, {}, dec_x(), {}, std::nullopt});
  CHECK_FALSE(check_syntactically_bounded(a));

  Automaton r = a;
  r.edges[0].update = Update::identity(2);
  r.edges[0].update.e[X] = UpdateEntry::constant(0);
  CHECK(check_syntactically_bounded(r));
}

TEST_CASE("bound_transform") {
  Automaton a;
  a.locs.push_back(Location{"a", true, false, false, {}});
  a.edges.push_back(Edge{0, 0, {{lower(Y, W, 1)}, {}}, dec_x(2, 2), {}, std::nullopt});
  Automaton t = bound_transform(a, {7, 9});
  CHECK(t.edges[0].guard.clocks == std::vector<Atomic>{lower(Y, W, 1), upper(X, W, 7)});
  CHECK(check_syntactically_bounded(t));

  Automaton resets = a;
  resets.edges[0].update = Update::identity(2);
  resets.edges[0].update.e[Y] = UpdateEntry::constant(0);
  CHECK(bound_transform(resets, {7, 9}) == resets);

  Automaton bad = a;
  bad.edges[0].update.e[X] = UpdateEntry::shift(Y, 1);
  CHECK_THROWS(bound_transform(bad, {7, 9}));
}

TEST_CASE("wp soundness on sampled valuations") {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int it = 0; it < 20000; ++it) {
    const int n = 2;
    std::vector<Atomic> g;
    for (int k = 0, na = static_cast<int>(pick(rng, 0, 2)); k < na; ++k)
      g.push_back(uta::testing::random_atom(rng, n, 4));
    Update up = uta::testing::random_update(rng, n, 3);
    Atomic phi = uta::testing::random_atom(rng, n, 4);
    Valuation v = uta::testing::random_valuation(rng, n, 4);
    Valuation vp = uta::testing::random_valuation(rng, n, 4);
    if (!satisfies(v, g)) continue;
    GSet gs;
    for (const auto& a : g) gs.insert(a);
    if (!sim_point(v, vp, gs)) continue;
    auto uv = apply_update(up, v);
    auto uvp = apply_update(up, vp);
    if (!uv || !uvp) continue;
    ++checked;
    auto single = [](const Atomic& a) {
      GSet s;
      s.insert(a);
      return s;
    };
    Atomic psi = up_inverse(phi, up);
    if (sim_point(v, vp, single(wp(phi, g, up)))) CHECK(sim_point(v, vp, single(psi)));
    if (sim_point(v, vp, single(psi))) CHECK(sim_point(*uv, *uvp, single(phi)));
  }
  CHECK(checked > 1000);
}

TEST_CASE("Kleene iterates grow monotonically") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Network r = gen_random({4, 3, Fragment::General, 4, seed});
    auto g = g0(r.procs[0], 3);
    for (int step = 0; step < 20; ++step) {
      auto before = g;
      kleene_step(g, r.procs[0], Mode::Reduced);
      for (size_t q = 0; q < g.size(); ++q)
        for (const auto& a : before[q].atoms()) CHECK(g[q].contains(a));
    }
  }
}
