#include <doctest.h>

#include <fstream>
#include <sstream>

#include "uta/benchgen.hpp"
#include "uta/format.hpp"

using namespace uta;

namespace {
std::string slurp(const std::string& p) {
  std::ifstream f(p);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

std::vector<ParseError> errors_of(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseErrors& e) {
    return e.errors();
  }
  return {};
}
}  // namespace

TEST_CASE("parse the three-location example") {
  Network n = parse_file(std::string(UTA_ORACLE_DIR) + "/fig1.uta");
  CHECK(n.procs.size() == 1);
  CHECK(n.n_clocks() == 2);
  CHECK(n.procs[0].locs.size() == 3);
  CHECK(n.procs[0].edges.size() == 3);
  CHECK(n == gen_fig1());
  const auto& e = n.procs[0].edges[0];
  CHECK(e.update.e[0] == UpdateEntry::shift(0, -1));
  CHECK(e.guard.clocks == std::vector<Atomic>{upper(0, Strictness::Weak, 3)});
}

TEST_CASE("minimal system") {
  Network n = parse("system s\nprocess P\nlocation P l initial\n");
  CHECK(n.name == "s");
  CHECK(n.procs.size() == 1);
  CHECK(validate_network(n).empty());
}

TEST_CASE("parse errors carry positions") {
  auto errs = errors_of("system s\nclock x\nprocess P\nlocation P a initial\nlocation P b\nedge P a b provided: x<=-1\n");
  REQUIRE_FALSE(errs.empty());
  CHECK(errs[0].span.line == 6);
  CHECK(errs[0].span.col_start > 0);

  errs = errors_of("system s\nclock x\nclock x\nprocess P\nlocation P a initial\n");
  REQUIRE_FALSE(errs.empty());
  CHECK(errs[0].span.line == 3);

  errs = errors_of("system s\nprocess P\nlocation P a initial\nedge P a nowhere\n");
  REQUIRE_FALSE(errs.empty());
  CHECK(errs[0].span.line == 4);

  errs = errors_of("system s\nclock x\nprocess P\nlocation P a initial\nedge P a a provided: x<=99999999999999999999\n");
  REQUIRE_FALSE(errs.empty());

  errs = errors_of("system s\nprocess P\nlocation P a\n");
  CHECK_FALSE(errs.empty());
}

TEST_CASE("integer guards, assignments and syncs") {
  const char* text =
      "system s\nclock x\nclock y\nint n 0 3 0\nevent go\n"
      "process P\nlocation P a initial invariant: x<=2\nlocation P b committed\n"
      "edge P a b provided: 1<x && x-y<=2 && n<2 do: x=0; y=x+1; n=n+1 sync: go!\n"
      "process Q\nlocation Q a initial\nedge Q a a sync: go?\n";
  Network n = parse(text);
  const auto& e = n.procs[0].edges[0];
  CHECK(e.guard.clocks.size() == 2);
  CHECK(e.guard.ints.size() == 1);
  CHECK(e.update.e[0] == UpdateEntry::constant(0));
  CHECK(e.update.e[1] == UpdateEntry::shift(0, 1));
  CHECK(e.assigns.size() == 1);
  REQUIRE(e.sync.has_value());
  CHECK(e.sync->emit);
  CHECK(n.procs[0].locs[1].committed);
  CHECK(n.procs[0].locs[0].invariant.size() == 1);
  CHECK(parse(print(n)) == n);
}

TEST_CASE("equality guards expand to two atoms") {
  Network n = parse("system s\nclock x\nprocess P\nlocation P a initial\nedge P a a provided: x==3\n");
  CHECK(n.procs[0].edges[0].guard.clocks.size() == 2);
}

TEST_CASE("round trip on generator output") {
  CHECK(parse(print(gen_fig1())) == gen_fig1());
  CHECK(parse(print(gen_fig1_unguarded())) == gen_fig1_unguarded());
  for (auto kind : {ReleaseKind::Flower, ReleaseKind::WorstCase}) {
    Network e = gen_edf({{1, 2}, {1, 2}, {1, 2}}, {kind, 0});
    CHECK(parse(print(e)) == e);
  }
  Network sp = gen_edf({}, {ReleaseKind::SporadicPeriodic, 5});
  CHECK(parse(print(sp)) == sp);
  Network mp = gen_edf({}, {ReleaseKind::MinePump, 0});
  CHECK(parse(print(mp)) == mp);
  Network c = gen_counter_reduction(parse_counter_spec("l0 +1 lt, lt -1 l0", 2));
  CHECK(parse(print(c)) == c);
  for (std::uint64_t seed = 0; seed < 40; ++seed)
    for (auto f : {Fragment::SubtractionBounded, Fragment::ClockBounded, Fragment::ResetOnly, Fragment::General}) {
      Network r = gen_random({4, 3, f, 6, seed});
      CHECK(parse(print(r)) == r);
    }
}

TEST_CASE("print of an edgeless process") {
  Network n = parse("system s\nprocess P\nlocation P a initial\n");
  std::string out = print(n);
  CHECK(out.find("edge") == std::string::npos);
  CHECK(out.find("location P a initial") != std::string::npos);
}
