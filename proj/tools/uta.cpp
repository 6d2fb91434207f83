#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "uta/analysis.hpp"
#include "uta/benchgen.hpp"
#include "uta/format.hpp"
#include "uta/reach.hpp"
#include "uta/report.hpp"

using namespace uta;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitReachable = 1;
constexpr int kExitError = 2;

struct Common {
  std::string input;
  std::string method = "reduced";
  std::string format = "text";
  bool allow_shared = false;
  bool dump_model = false;
};

// parse + validate; prints diagnostics to stderr
std::optional<Network> load(const Common& c) {
  Network net;
  try {
    net = parse_file(c.input);
  } catch (const ParseErrors& e) {
    for (const auto& err : e.errors()) std::cerr << err.str() << "\n";
    return std::nullopt;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return std::nullopt;
  }
  auto diags = validate_network(net);
  bool blocked = false;
  for (const auto& d : diags) {
    bool err = d.severity == Severity::Error;
    std::cerr << (err ? "error: " : "warning: ") << d.message << "\n";
    if (err && !c.allow_shared) blocked = true;
  }
  if (blocked) {
    std::cerr << "validation failed (use --allow-shared-clocks to continue)\n";
    return std::nullopt;
  }
  if (c.dump_model) std::cout << network_json(net).dump(2) << "\n";
  return net;
}

Mode parse_method(const std::string& m) { return m == "nonreduced" ? Mode::NonReduced : Mode::Reduced; }

double timeout_default() {
  if (const char* env = std::getenv("UTA_TIMEOUT_SECS")) {
    try {
      return std::stod(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring bad UTA_TIMEOUT_SECS\n";
    }
  }
  return 1200;
}

int cmd_analyze(const Common& c, bool explain, std::optional<std::int64_t> budget) {
  auto net = load(c);
  if (!net) return kExitError;
  const Mode mode = parse_method(c.method);
  nlohmann::json out = nlohmann::json::array();
  bool all_converged = true;
  for (const auto& a : net->procs) {
    GMap m = compute_gmap(a, net->n_clocks(), mode, budget);
    all_converged = all_converged && m.status == Status::Converged;
    if (c.format == "json") out.push_back(gmap_json(m, a, *net));
    else std::cout << gmap_text(m, a, *net, explain);
  }
  if (c.format == "json") std::cout << out.dump(2) << "\n";
  return all_converged ? kExitOk : kExitError;
}

int cmd_reach(const Common& c, const std::vector<std::string>& targets, bool no_sim, double timeout, bool show_path) {
  auto net = load(c);
  if (!net) return kExitError;
  Target target;
  try {
    target = resolve_target(*net, targets);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  std::vector<GMap> maps;
  if (!no_sim) {
    maps = component_gmaps(*net, parse_method(c.method));
    for (size_t p = 0; p < maps.size(); ++p)
      if (maps[p].status != Status::Converged) {
        std::cerr << "static analysis (" << c.method << ") of component " << net->procs[p].name << ": "
                  << status_str(maps[p].status) << "; zone exploration not started\n";
        return kExitError;
      }
  }
  SearchOptions opt;
  opt.use_simulation = !no_sim;
  opt.timeout_secs = timeout;
  SearchStats st = reach(*net, maps, target, opt);
  if (c.format == "json") {
    std::cout << stats_json(st, *net).dump(2) << "\n";
  } else {
    std::cout << net->name << "  " << verdict_str(st.verdict) << "  nodes=" << st.nodes << "  pruned=" << st.pruned
              << "  time=" << st.seconds << "s\n";
    if (show_path)
      for (const auto& s : st.path)
        std::cout << "  " << (s.t.parts.empty() ? std::string("init") : transition_label(s.t, *net)) << "\n";
  }
  if (st.verdict == Verdict::Timeout) {
    std::cerr << "timeout after " << timeout << " s\n";
    return kExitError;
  }
  return st.verdict == Verdict::Reachable ? kExitReachable : kExitOk;
}

std::vector<TaskSpec> parse_tasks(const std::string& s) {
  std::vector<TaskSpec> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::vector<std::int64_t> parts;
    std::stringstream f(item);
    std::string num;
    while (std::getline(f, num, ':')) parts.push_back(std::stoll(num));
    if (parts.size() < 2 || parts.size() > 3) throw std::invalid_argument("task must be C:D or C:D:P: " + item);
    TaskSpec t{parts[0], parts[1], std::nullopt};
    if (parts.size() == 3) t.P = parts[2];
    out.push_back(t);
  }
  return out;
}

int emit_network(const Network& net, const std::string& path) {
  const std::string text = print(net);
  if (path.empty() || path == "-") {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream f(path);
  if (!f) {
    std::cerr << "error: cannot write " << path << "\n";
    return kExitError;
  }
  f << text;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reachability and static analysis for updatable timed automata"};
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", common.input, "model file (.uta)")->required();
    sub->add_option("--method", common.method, "G-map analysis")->check(CLI::IsMember({"reduced", "nonreduced"}));
    sub->add_option("--format", common.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--allow-shared-clocks", common.allow_shared, "continue despite shared-clock errors");
    sub->add_flag("--dump-model", common.dump_model, "print the parsed network as JSON");
  };

  auto* analyze = app.add_subcommand("analyze", "compute G-maps for every component");
  add_common(analyze);
  bool explain = false;
  std::int64_t budget = -1;
  analyze->add_flag("--explain-divergence", explain, "print the divergence witness");
  analyze->add_option("--budget", budget, "override the Kleene step budget");

  auto* reach_cmd = app.add_subcommand("reach", "zone graph exploration");
  add_common(reach_cmd);
  std::vector<std::string> targets;
  bool no_sim = false, show_path = false;
  double timeout = -1;
  reach_cmd->add_option("--target", targets, "Proc.loc (repeatable); default: accepting locations");
  reach_cmd->add_flag("--no-simulation", no_sim, "disable simulation pruning");
  reach_cmd->add_option("--timeout", timeout, "wall-clock limit in seconds");
  reach_cmd->add_flag("--path", show_path, "print the witness path");

  auto* gen = app.add_subcommand("gen", "write a benchmark model");
  gen->require_subcommand(1);
  std::string out_path;
  gen->add_option("-o,--output", out_path, "output file (default stdout)");

  auto* g_edf = gen->add_subcommand("edf", "EDF schedulability network");
  std::string tasks_s, release = "flower", preset;
  std::int64_t spN = 5;
  g_edf->add_option("--tasks", tasks_s, "C:D[:P],...");
  g_edf->add_option("--release", release, "release pattern")
      ->check(CLI::IsMember({"flower", "worst-case", "periodic", "sporadic-periodic"}));
  g_edf->add_option("--N", spN, "sporadic burst length");
  g_edf->add_option("--preset", preset, "preset task set")->check(CLI::IsMember({"mine-pump", "sporadic-periodic"}));

  auto* g_counter = gen->add_subcommand("counter", "one-counter reduction");
  std::string spec, c_init = "l0", c_target = "lt";
  std::int64_t bound = 1;
  g_counter->add_option("--spec", spec, "transitions `from +p to`, comma separated")->required();
  g_counter->add_option("--bound", bound, "counter bound b");
  g_counter->add_option("--init", c_init, "initial state");
  g_counter->add_option("--target", c_target, "target state");

  auto* g_fig1 = gen->add_subcommand("fig1", "three-location example");
  bool unguarded = false;
  g_fig1->add_flag("--unguarded", unguarded, "drop the x<=3 guard");

  auto* g_random = gen->add_subcommand("random", "random automaton");
  RandomProfile prof;
  std::string fragment = "general";
  g_random->add_option("--locs", prof.n_locs);
  g_random->add_option("--clocks", prof.n_clocks);
  g_random->add_option("--max-const", prof.max_const);
  g_random->add_option("--seed", prof.seed);
  g_random->add_option("--fragment", fragment)
      ->check(CLI::IsMember({"subtraction-bounded", "clock-bounded", "reset-only", "general"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed())
      return cmd_analyze(common, explain, budget >= 0 ? std::optional<std::int64_t>(budget) : std::nullopt);
    if (reach_cmd->parsed()) return cmd_reach(common, targets, no_sim, timeout >= 0 ? timeout : timeout_default(), show_path);
    if (g_edf->parsed()) {
      ReleasePattern pat;
      std::vector<TaskSpec> tasks = parse_tasks(tasks_s);
      if (preset == "mine-pump") pat.kind = ReleaseKind::MinePump;
      else if (preset == "sporadic-periodic" || release == "sporadic-periodic") pat.kind = ReleaseKind::SporadicPeriodic;
      else if (release == "worst-case") pat.kind = ReleaseKind::WorstCase;
      else if (release == "periodic") pat.kind = ReleaseKind::Periodic;
      else pat.kind = ReleaseKind::Flower;
      pat.N = spN;
      return emit_network(gen_edf(tasks, pat), out_path);
    }
    if (g_counter->parsed()) return emit_network(gen_counter_reduction(parse_counter_spec(spec, bound, c_init, c_target)), out_path);
    if (g_fig1->parsed()) return emit_network(unguarded ? gen_fig1_unguarded() : gen_fig1(), out_path);
    if (g_random->parsed()) {
      if (fragment == "subtraction-bounded") prof.fragment = Fragment::SubtractionBounded;
      else if (fragment == "clock-bounded") prof.fragment = Fragment::ClockBounded;
      else if (fragment == "reset-only") prof.fragment = Fragment::ResetOnly;
      else prof.fragment = Fragment::General;
      return emit_network(gen_random(prof), out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
