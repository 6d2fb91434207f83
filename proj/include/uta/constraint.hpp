#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "uta/rational.hpp"

namespace uta {

// Strict (<) sorts below Weak (<=): at equal constants the weak bound is larger.
enum class Strictness : std::uint8_t { Strict = 0, Weak = 1 };

inline Strictness flip(Strictness s) {
  return s == Strictness::Strict ? Strictness::Weak : Strictness::Strict;
}
inline const char* op_str(Strictness s) { return s == Strictness::Strict ? "<" : "<="; }

// Shape of an atomic constraint.
//   Upper      x ◁ c
//   Lower      c ◁ x
//   UpperDiag  x - y ◁ c
//   LowerDiag  c ◁ x - y
enum class Ctx : std::uint8_t { Upper, Lower, UpperDiag, LowerDiag, Top, Bottom };

// Field order gives the canonical sort: context, clocks, constant, strictness.
struct Atomic {
  Ctx ctx = Ctx::Top;
  int x = -1;
  int y = -1;
  std::int64_t c = 0;
  Strictness s = Strictness::Weak;

  static Atomic top() { return Atomic{}; }
  static Atomic bottom() { return Atomic{Ctx::Bottom}; }

  bool is_top() const { return ctx == Ctx::Top; }
  bool is_bottom() const { return ctx == Ctx::Bottom; }
  bool is_trivial() const { return ctx == Ctx::Top || ctx == Ctx::Bottom; }
  bool is_diag() const { return ctx == Ctx::UpperDiag || ctx == Ctx::LowerDiag; }
  bool is_upper() const { return ctx == Ctx::Upper; }
  bool is_lower() const { return ctx == Ctx::Lower; }

  // same context (shape and clocks), constant and strictness ignored
  bool same_context(const Atomic& o) const { return ctx == o.ctx && x == o.x && y == o.y; }

  auto operator<=>(const Atomic&) const = default;
};

// Unnormalised constraint as produced by substitution. Constants may be
// negative, and a diagonal may mention the same clock twice.
struct RawAtomic {
  enum class Kind : std::uint8_t { Upper, Lower, UpperDiag, LowerDiag, ConstCmp };
  Kind kind = Kind::ConstCmp;
  int x = -1;
  int y = -1;
  Strictness s = Strictness::Weak;
  std::int64_t c = 0;
  std::int64_t lhs = 0;  // ConstCmp only: lhs ◁ c
};

Atomic normalize_atomic(const RawAtomic& r);

// Convenience builders; all of them normalise.
Atomic upper(int x, Strictness s, std::int64_t c);              // x ◁ c
Atomic lower(int x, Strictness s, std::int64_t c);              // c ◁ x
Atomic diag_upper(int x, int y, Strictness s, std::int64_t c);  // x - y ◁ c
Atomic diag_lower(int x, int y, Strictness s, std::int64_t c);  // c ◁ x - y
Atomic const_cmp(std::int64_t lhs, Strictness s, std::int64_t rhs);

Atomic negate(const Atomic& a);

// Constraints with constants replaced by the weak version.
Atomic weakened(const Atomic& a);

using Valuation = std::vector<Rational>;

bool satisfies(const Valuation& v, const Atomic& a);
bool satisfies(const Valuation& v, const std::vector<Atomic>& conj);

std::string to_string(const Atomic& a, const std::vector<std::string>& clock_names);

}  // namespace uta
