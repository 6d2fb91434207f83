#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "uta/constraint.hpp"
#include "uta/model.hpp"

namespace uta {

// DBM entries: value shifted left by one, low bit set for a weak bound.
// Ordering of the raw integers is the bound ordering; kInf is the top.
using raw_t = std::int64_t;

namespace bound {
inline constexpr raw_t kInf = INT64_MAX;
inline constexpr raw_t kLeZero = 1;
inline constexpr raw_t kLtZero = 0;
inline constexpr std::int64_t kMaxValue = (std::int64_t{1} << 61);

raw_t make(std::int64_t value, Strictness s);
inline raw_t le(std::int64_t v) { return make(v, Strictness::Weak); }
inline raw_t lt(std::int64_t v) { return make(v, Strictness::Strict); }
inline std::int64_t value(raw_t r) { return r >> 1; }
inline bool weak(raw_t r) { return (r & 1) != 0; }
inline Strictness strictness(raw_t r) { return weak(r) ? Strictness::Weak : Strictness::Strict; }
// overflow-checked sum; infinity absorbs
raw_t add(raw_t a, raw_t b);
std::string str(raw_t r);
}  // namespace bound

// Canonical difference bound matrix. Index 0 is the zero reference; clock i
// of the network lives at index i + 1. Entry (i, j) bounds x_i - x_j.
class Dbm {
 public:
  Dbm() = default;
  static Dbm universe(int n_clocks);  // all clocks >= 0
  static Dbm zero(int n_clocks);      // all clocks == 0
  static Dbm initial_zone(int n_clocks);
  static Dbm from_raw(int n_clocks, std::vector<raw_t> m);  // canonicalises

  int dim() const { return dim_; }
  int n_clocks() const { return dim_ - 1; }
  bool empty() const { return empty_; }
  raw_t at(int i, int j) const { return m_[i * dim_ + j]; }
  const std::vector<raw_t>& raw() const { return m_; }

  bool canonicalize();
  // Tighten x_i - x_j by b and restore canonical form; false when empty.
  bool constrain(int i, int j, raw_t b);
  bool intersect(const Atomic& a);
  bool intersect(const std::vector<Atomic>& conj);
  void elapse();
  bool apply_update(const Update& up);
  // Same result via the primed-copy construction, whatever the update shape.
  bool apply_update_relational(const Update& up);

  // other ⊆ this
  bool includes(const Dbm& other) const;
  bool contains(const Valuation& v) const;
  // Membership of an integer point scaled by `scale` (coordinates v/scale).
  bool contains_scaled(const std::vector<std::int64_t>& v, std::int64_t scale) const;
  Dbm scaled(std::int64_t k) const;

  bool operator==(const Dbm& o) const { return dim_ == o.dim_ && empty_ == o.empty_ && m_ == o.m_; }
  size_t hash() const;
  std::string dump(const std::vector<std::string>& names = {}) const;

 private:
  raw_t& ref(int i, int j) { return m_[i * dim_ + j]; }
  void set_empty();
  void reset(int x, std::int64_t c);
  void shift(int x, std::int64_t d);

  int dim_ = 0;
  std::vector<raw_t> m_;
  bool empty_ = false;
};

// DBM index/constraint for an atomic constraint. Returns false for Top/Bottom.
bool to_dbm_constraint(const Atomic& a, int* i, int* j, raw_t* b);

}  // namespace uta
