#include "uta/model.hpp"

#include <map>
#include <stdexcept>

namespace uta {

Update Update::identity(int n) {
  Update u;
  u.e.reserve(n);
  for (int i = 0; i < n; ++i) u.e.push_back(UpdateEntry::shift(i, 0));
  return u;
}

bool Update::is_identity() const {
  for (int i = 0; i < static_cast<int>(e.size()); ++i)
    if (!is_identity_at(i)) return false;
  return true;
}

bool Update::is_local() const {
  for (int i = 0; i < static_cast<int>(e.size()); ++i)
    if (!e[i].is_const && e[i].y != i) return false;
  return true;
}

std::optional<Valuation> apply_update(const Update& up, const Valuation& v) {
  Valuation out(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    const auto& u = up.e[i];
    Rational val = u.is_const ? Rational(u.c) : v[u.y] + Rational(u.d);
    if (val < Rational(0)) return std::nullopt;
    out[i] = val;
  }
  return out;
}

std::int64_t LinExpr::eval(const std::vector<std::int64_t>& vals) const {
  std::int64_t r = constant;
  for (auto [v, k] : terms) r += k * vals.at(v);
  return r;
}

const char* cmp_str(CmpOp op) {
  switch (op) {
    case CmpOp::Lt: return "<";
    case CmpOp::Le: return "<=";
    case CmpOp::Eq: return "==";
    case CmpOp::Ge: return ">=";
    case CmpOp::Gt: return ">";
    case CmpOp::Ne: return "!=";
  }
  return "?";
}

bool IntCmp::eval(const std::vector<std::int64_t>& vals) const {
  std::int64_t a = lhs.eval(vals), b = rhs.eval(vals);
  switch (op) {
    case CmpOp::Lt: return a < b;
    case CmpOp::Le: return a <= b;
    case CmpOp::Eq: return a == b;
    case CmpOp::Ge: return a >= b;
    case CmpOp::Gt: return a > b;
    case CmpOp::Ne: return a != b;
  }
  return false;
}

int Automaton::initial() const {
  for (int i = 0; i < static_cast<int>(locs.size()); ++i)
    if (locs[i].initial) return i;
  return -1;
}

int Automaton::find_loc(const std::string& n) const {
  for (int i = 0; i < static_cast<int>(locs.size()); ++i)
    if (locs[i].name == n) return i;
  return -1;
}

namespace {
void add_atom_clocks(std::set<int>& s, const Atomic& a) {
  if (a.is_trivial()) return;
  s.insert(a.x);
  if (a.is_diag()) s.insert(a.y);
}

template <class T>
int find_named(const std::vector<T>& v, const std::string& n) {
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (v[i].name == n) return i;
  return -1;
}
}  // namespace

std::set<int> Automaton::clocks_read() const {
  std::set<int> s;
  for (const auto& l : locs)
    for (const auto& a : l.invariant) add_atom_clocks(s, a);
  for (const auto& e : edges) {
    for (const auto& a : e.guard.clocks) add_atom_clocks(s, a);
    for (int x = 0; x < static_cast<int>(e.update.e.size()); ++x)
      if (!e.update.is_identity_at(x) && !e.update.e[x].is_const) s.insert(e.update.e[x].y);
  }
  return s;
}

std::set<int> Automaton::clocks_written() const {
  std::set<int> s;
  for (const auto& e : edges)
    for (int x = 0; x < static_cast<int>(e.update.e.size()); ++x)
      if (!e.update.is_identity_at(x)) s.insert(x);
  return s;
}

std::set<int> Automaton::clocks_used() const {
  auto s = clocks_read();
  auto w = clocks_written();
  s.insert(w.begin(), w.end());
  return s;
}

std::set<int> Automaton::events() const {
  std::set<int> s;
  for (const auto& e : edges)
    if (e.sync) s.insert(e.sync->event);
  return s;
}

int Network::find_clock(const std::string& n) const {
  for (int i = 0; i < static_cast<int>(clocks.size()); ++i)
    if (clocks[i] == n) return i;
  return -1;
}
int Network::find_int(const std::string& n) const { return find_named(ints, n); }
int Network::find_event(const std::string& n) const {
  for (int i = 0; i < static_cast<int>(events.size()); ++i)
    if (events[i] == n) return i;
  return -1;
}
int Network::find_proc(const std::string& n) const { return find_named(procs, n); }

Network single(const Automaton& a, std::vector<std::string> clocks, std::string name) {
  Network n;
  n.name = std::move(name);
  n.clocks = std::move(clocks);
  n.procs.push_back(a);
  return n;
}

std::vector<Diagnostic> validate_network(const Network& n) {
  std::vector<Diagnostic> out;
  auto err = [&](std::string m) { out.push_back({Severity::Error, std::move(m)}); };
  auto warn = [&](std::string m) { out.push_back({Severity::Warning, std::move(m)}); };

  std::map<int, std::set<int>> writers, readers;
  for (int p = 0; p < static_cast<int>(n.procs.size()); ++p) {
    const auto& a = n.procs[p];
    int inits = 0;
    for (const auto& l : a.locs) inits += l.initial ? 1 : 0;
    if (inits != 1)
      err("process " + a.name + " has " + std::to_string(inits) + " initial locations");
    for (int x : a.clocks_written()) writers[x].insert(p);
    for (int x : a.clocks_read()) readers[x].insert(p);

    // locations unreachable in the control graph
    if (inits == 1) {
      std::vector<bool> seen(a.locs.size(), false);
      std::vector<int> stack{a.initial()};
      seen[a.initial()] = true;
      while (!stack.empty()) {
        int q = stack.back();
        stack.pop_back();
        for (const auto& e : a.edges)
          if (e.src == q && !seen[e.dst]) {
            seen[e.dst] = true;
            stack.push_back(e.dst);
          }
      }
      for (size_t i = 0; i < a.locs.size(); ++i)
        if (!seen[i]) warn("location " + a.name + "." + a.locs[i].name + " is unreachable");
    }
  }
  for (const auto& [x, ws] : writers)
    for (int w : ws)
      for (int r : readers[x])
        if (r != w)
          err("clock " + n.clocks[x] + " is updated in " + n.procs[w].name + " and read in " +
              n.procs[r].name);

  for (const auto& v : n.ints)
    if (v.init < v.lo || v.init > v.hi) warn("integer " + v.name + " starts out of range");

  std::set<int> used;
  for (const auto& a : n.procs) {
    auto ev = a.events();
    used.insert(ev.begin(), ev.end());
  }
  for (int e = 0; e < static_cast<int>(n.events.size()); ++e)
    if (!used.count(e)) warn("event " + n.events[e] + " is never used");
  return out;
}

bool has_errors(const std::vector<Diagnostic>& ds) {
  for (const auto& d : ds)
    if (d.severity == Severity::Error) return true;
  return false;
}

}  // namespace uta
