#include "uta/report.hpp"

#include <sstream>

#include "uta/format.hpp"

namespace uta {

using nlohmann::json;

json gmap_json(const GMap& m, const Automaton& a, const Network& net) {
  json j;
  j["component"] = a.name;
  json sets = json::object();
  for (size_t q = 0; q < a.locs.size(); ++q) {
    json l = json::array();
    if (q < m.sets.size())
      for (const auto& at : m.sets[q].atoms()) l.push_back(to_string(at, net.clocks));
    sets[a.locs[q].name] = l;
  }
  j["sets"] = sets;
  j["status"] = status_str(m.status);
  j["iterations"] = m.iterations;
  j["bounds"] = {{"M", m.bounds.M}, {"L", m.bounds.L}, {"N", m.bounds.N}, {"budget", m.bounds.budget}};
  j["budget_used"] = m.budget_used;
  if (m.status == Status::Diverged) {
    json w = json::array();
    for (const auto& s : m.witness.steps)
      w.push_back({{"location", a.locs[s.loc].name}, {"constraint", to_string(s.phi, net.clocks)}, {"edge", s.edge}});
    j["witness"] = w;
    if (m.witness.cycle_i >= 0) j["cycle"] = {{"from", m.witness.cycle_i}, {"to", m.witness.cycle_j}};
  }
  return j;
}

std::string gmap_text(const GMap& m, const Automaton& a, const Network& net, bool explain) {
  std::ostringstream o;
  o << "component " << a.name << ": " << status_str(m.status) << " after " << m.iterations << " iterations"
    << " (M=" << m.bounds.M << " L=" << m.bounds.L << " N=" << m.bounds.N << " budget=" << m.bounds.budget << ")\n";
  for (size_t q = 0; q < a.locs.size() && q < m.sets.size(); ++q) {
    o << "  " << a.locs[q].name << ": {";
    bool first = true;
    for (const auto& at : m.sets[q].atoms()) {
      o << (first ? "" : ", ") << to_string(at, net.clocks);
      first = false;
    }
    o << "}\n";
  }
  if (explain && m.status == Status::Diverged) {
    o << "  witness:\n";
    for (size_t k = 0; k < m.witness.steps.size(); ++k) {
      const auto& s = m.witness.steps[k];
      o << "    " << k << ". " << a.locs[s.loc].name << "  " << to_string(s.phi, net.clocks);
      if (s.edge >= 0) o << "  via edge " << s.edge;
      if (static_cast<int>(k) == m.witness.cycle_i) o << "  <- cycle start";
      if (static_cast<int>(k) == m.witness.cycle_j) o << "  <- cycle end";
      o << "\n";
    }
  }
  return o.str();
}

json stats_json(const SearchStats& st, const Network& net) {
  json j;
  j["verdict"] = verdict_str(st.verdict);
  j["nodes"] = st.nodes;
  j["pruned"] = st.pruned;
  j["generated"] = st.generated;
  j["max_frontier"] = st.max_frontier;
  j["int_disabled"] = st.int_disabled;
  j["seconds"] = st.seconds;
  if (!st.path.empty()) {
    json p = json::array();
    for (const auto& s : st.path) {
      json step;
      step["transition"] = s.t.parts.empty() ? "init" : transition_label(s.t, net);
      json locs = json::array();
      for (size_t k = 0; k < s.state.loc.locs.size(); ++k)
        locs.push_back(net.procs[k].name + "." + net.procs[k].locs[s.state.loc.locs[k]].name);
      step["locations"] = locs;
      p.push_back(step);
    }
    j["path"] = p;
  }
  return j;
}

json network_json(const Network& net) {
  json j;
  j["system"] = net.name;
  j["clocks"] = net.clocks;
  json ints = json::array();
  for (const auto& v : net.ints) ints.push_back({{"name", v.name}, {"min", v.lo}, {"max", v.hi}, {"init", v.init}});
  j["ints"] = ints;
  j["events"] = net.events;
  json procs = json::array();
  for (const auto& a : net.procs) {
    json locs = json::array();
    for (const auto& l : a.locs) {
      json inv = json::array();
      for (const auto& at : l.invariant) inv.push_back(to_string(at, net.clocks));
      locs.push_back({{"name", l.name},
                      {"initial", l.initial},
                      {"committed", l.committed},
                      {"accepting", l.accepting},
                      {"invariant", inv}});
    }
    json edges = json::array();
    for (const auto& e : a.edges) {
      json ed = {{"src", a.locs[e.src].name},
                 {"dst", a.locs[e.dst].name},
                 {"guard", format_guard(net, e.guard)},
                 {"update", format_update(net, e)}};
      if (e.sync) ed["sync"] = net.events[e.sync->event] + (e.sync->emit ? "!" : "?");
      edges.push_back(ed);
    }
    procs.push_back({{"name", a.name}, {"locations", locs}, {"edges", edges}});
  }
  j["processes"] = procs;
  return j;
}

}  // namespace uta
