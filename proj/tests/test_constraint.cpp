#include <doctest.h>

#include "support.hpp"
#include "uta/model.hpp"

using namespace uta;
using uta::testing::pick;

namespace {
constexpr auto W = Strictness::Weak;
constexpr auto S = Strictness::Strict;
const int X = 0, Y = 1, Z = 2;

RawAtomic raw(RawAtomic::Kind k, int x, int y, Strictness s, std::int64_t c) { return RawAtomic{k, x, y, s, c, 0}; }

// direct evaluation of an unnormalised constraint
bool eval_raw(const RawAtomic& r, const Valuation& v) {
  auto cmp = [&](Rational a, Rational b) { return r.s == W ? a <= b : a < b; };
  switch (r.kind) {
    case RawAtomic::Kind::Upper: return cmp(v[r.x], Rational(r.c));
    case RawAtomic::Kind::Lower: return cmp(Rational(r.c), v[r.x]);
    case RawAtomic::Kind::UpperDiag: return cmp(v[r.x] - v[r.y], Rational(r.c));
    case RawAtomic::Kind::LowerDiag: return cmp(Rational(r.c), v[r.x] - v[r.y]);
    case RawAtomic::Kind::ConstCmp: return cmp(Rational(r.lhs), Rational(r.c));
  }
  return false;
}
}  // namespace

TEST_CASE("normalize: substituted diagonal keeps shape") {
  // z + 2 - y <= 5 is z - y <= 3
  CHECK(diag_upper(Z, Y, W, 5 - 2) == Atomic{Ctx::UpperDiag, Z, Y, 3, W});
}

TEST_CASE("normalize: negative diagonal flips side") {
  CHECK(normalize_atomic(raw(RawAtomic::Kind::UpperDiag, X, Y, W, -2)) == Atomic{Ctx::LowerDiag, Y, X, 2, W});
  CHECK(normalize_atomic(raw(RawAtomic::Kind::LowerDiag, X, Y, S, -3)) == Atomic{Ctx::UpperDiag, Y, X, 3, S});
}

TEST_CASE("normalize: non-diagonal edge cases") {
  CHECK(normalize_atomic(raw(RawAtomic::Kind::Lower, Y, -1, W, 0)).is_top());
  CHECK(normalize_atomic(raw(RawAtomic::Kind::Lower, Y, -1, W, -4)).is_top());
  CHECK(normalize_atomic(raw(RawAtomic::Kind::Lower, Y, -1, S, 0)) == Atomic{Ctx::Lower, Y, -1, 0, S});
  CHECK(normalize_atomic(raw(RawAtomic::Kind::Upper, X, -1, S, 0)).is_bottom());
  CHECK(normalize_atomic(raw(RawAtomic::Kind::Upper, X, -1, W, -1)).is_bottom());
  CHECK(normalize_atomic(raw(RawAtomic::Kind::Upper, X, -1, W, 0)) == Atomic{Ctx::Upper, X, -1, 0, W});
  CHECK(const_cmp(4, W, 3).is_bottom());
  CHECK(const_cmp(3, W, 3).is_top());
  CHECK(const_cmp(3, S, 3).is_bottom());
  CHECK(diag_upper(X, X, S, 0).is_bottom());
  CHECK(diag_upper(X, X, W, 0).is_top());
}

TEST_CASE("normalize is idempotent and semantics preserving") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 3000; ++it) {
    auto kind = static_cast<RawAtomic::Kind>(pick(rng, 0, 4));
    int x = static_cast<int>(pick(rng, 0, 2));
    int y = static_cast<int>(pick(rng, 0, 2));
    RawAtomic r{kind, x, y, uta::testing::any_strictness(rng), pick(rng, -5, 5), pick(rng, -5, 5)};
    Atomic a = normalize_atomic(r);
    CHECK(a.c >= 0);
    if (a.is_diag()) CHECK(a.x != a.y);
    Valuation v = uta::testing::random_valuation(rng, 3, 5);
    CHECK(satisfies(v, a) == eval_raw(r, v));
    if (!a.is_trivial()) {
      RawAtomic again{static_cast<RawAtomic::Kind>(static_cast<int>(a.ctx)), a.x, a.y, a.s, a.c, 0};
      CHECK(normalize_atomic(again) == a);
    }
  }
}

TEST_CASE("satisfies") {
  Valuation v{Rational(3), Rational(1)};
  CHECK(satisfies(v, upper(X, W, 3)));
  CHECK_FALSE(satisfies(v, upper(X, S, 3)));
  CHECK(satisfies(v, Atomic::top()));
  CHECK_FALSE(satisfies(v, Atomic::bottom()));
  Valuation w{Rational(5), Rational(1)};
  CHECK_FALSE(satisfies(w, diag_upper(X, Y, S, 4)));
  CHECK(satisfies(Valuation{Rational(1, 2), Rational(0)}, lower(X, S, 0)));
}

TEST_CASE("negate flips side and strictness") {
  CHECK(negate(diag_upper(X, Y, S, 2)) == diag_lower(X, Y, W, 2));
  CHECK(negate(diag_lower(X, Y, W, 2)) == diag_upper(X, Y, S, 2));
  CHECK(negate(upper(X, W, 3)) == lower(X, S, 3));
}

TEST_CASE("to_string") {
  std::vector<std::string> n{"x", "y"};
  CHECK(to_string(upper(X, W, 3), n) == "x<=3");
  CHECK(to_string(lower(X, W, 1), n) == "1<=x");
  CHECK(to_string(diag_upper(X, Y, S, 2), n) == "x-y<2");
  CHECK(to_string(diag_lower(X, Y, W, 2), n) == "2<=x-y");
}

TEST_CASE("apply_update on valuations") {
  Update dec = Update::identity(2);
  dec.e[X] = UpdateEntry::shift(X, -10);
  CHECK_FALSE(apply_update(dec, Valuation{Rational(5), Rational(0)}).has_value());

  Valuation v{Rational(2), Rational(7)};
  CHECK(*apply_update(Update::identity(2), v) == v);

  Update u = Update::identity(2);
  u.e[X] = UpdateEntry::shift(Y, 1);
  u.e[Y] = UpdateEntry::shift(X, 0);
  CHECK(*apply_update(u, v) == Valuation{Rational(8), Rational(2)});

  Update swap = Update::identity(2);
  swap.e[X] = UpdateEntry::shift(Y, 0);
  swap.e[Y] = UpdateEntry::shift(X, 0);
  CHECK(*apply_update(swap, *apply_update(swap, v)) == v);
}

TEST_CASE("validate_network") {
  Network ok;
  ok.clocks = {"x"};
  Automaton a;
  a.name = "A";
  a.locs.push_back(Location{"l0", true, false, false, {}});
  ok.procs.push_back(a);
  CHECK(validate_network(ok).empty());

  Network shared = ok;
  Automaton b = a;
  b.name = "B";
  Edge reset{0, 0, {}, Update::identity(1), {}, std::nullopt};
  reset.update.e[0] = UpdateEntry::constant(0);
  shared.procs[0].edges.push_back(reset);
  Edge guard{0, 0, {{upper(0, W, 5)}, {}}, Update::identity(1), {}, std::nullopt};
  b.edges.push_back(guard);
  shared.procs.push_back(b);
  CHECK(has_errors(validate_network(shared)));

  Network unreachable = ok;
  unreachable.procs[0].locs.push_back(Location{"island", false, false, false, {}});
  auto d = validate_network(unreachable);
  REQUIRE(d.size() == 1);
  CHECK(d[0].severity == Severity::Warning);
}
