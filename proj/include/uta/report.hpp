#pragma once

#include <json.hpp>

#include "uta/analysis.hpp"
#include "uta/model.hpp"
#include "uta/reach.hpp"

namespace uta {

// { component, sets: {loc: [..]}, status, iterations, bounds, witness? }
nlohmann::json gmap_json(const GMap& m, const Automaton& a, const Network& net);
std::string gmap_text(const GMap& m, const Automaton& a, const Network& net, bool explain);

// { verdict, nodes, pruned, seconds, path? }
nlohmann::json stats_json(const SearchStats& st, const Network& net);

// { clocks[], ints[], events[], processes[{name, locations[], edges[]}] }
nlohmann::json network_json(const Network& net);

}  // namespace uta
