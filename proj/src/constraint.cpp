#include "uta/constraint.hpp"

#include <stdexcept>

namespace uta {

namespace {

bool holds(const Rational& lhs, Strictness s, const Rational& rhs) {
  return s == Strictness::Strict ? lhs < rhs : lhs <= rhs;
}

Atomic make(Ctx ctx, int x, int y, Strictness s, std::int64_t c) {
  if (c < 0) throw std::logic_error("atomic constraint with negative constant");
  return Atomic{ctx, x, y, c, s};
}

}  // namespace

Atomic normalize_atomic(const RawAtomic& r) {
  using K = RawAtomic::Kind;
  switch (r.kind) {
    case K::ConstCmp:
      return holds(Rational(r.lhs), r.s, Rational(r.c)) ? Atomic::top() : Atomic::bottom();
    case K::Upper:
      if (r.c < 0) return Atomic::bottom();
      if (r.c == 0 && r.s == Strictness::Strict) return Atomic::bottom();
      return make(Ctx::Upper, r.x, -1, r.s, r.c);
    case K::Lower:
      if (r.c < 0) return Atomic::top();
      if (r.c == 0 && r.s == Strictness::Weak) return Atomic::top();
      return make(Ctx::Lower, r.x, -1, r.s, r.c);
    case K::UpperDiag:
      if (r.x == r.y) return const_cmp(0, r.s, r.c);
      if (r.c < 0) return make(Ctx::LowerDiag, r.y, r.x, r.s, -r.c);
      return make(Ctx::UpperDiag, r.x, r.y, r.s, r.c);
    case K::LowerDiag:
      if (r.x == r.y) return const_cmp(r.c, r.s, 0);
      if (r.c < 0) return make(Ctx::UpperDiag, r.y, r.x, r.s, -r.c);
      return make(Ctx::LowerDiag, r.x, r.y, r.s, r.c);
  }
  return Atomic::top();
}

Atomic upper(int x, Strictness s, std::int64_t c) {
  return normalize_atomic({RawAtomic::Kind::Upper, x, -1, s, c, 0});
}
Atomic lower(int x, Strictness s, std::int64_t c) {
  return normalize_atomic({RawAtomic::Kind::Lower, x, -1, s, c, 0});
}
Atomic diag_upper(int x, int y, Strictness s, std::int64_t c) {
  return normalize_atomic({RawAtomic::Kind::UpperDiag, x, y, s, c, 0});
}
Atomic diag_lower(int x, int y, Strictness s, std::int64_t c) {
  return normalize_atomic({RawAtomic::Kind::LowerDiag, x, y, s, c, 0});
}
Atomic const_cmp(std::int64_t lhs, Strictness s, std::int64_t rhs) {
  return normalize_atomic({RawAtomic::Kind::ConstCmp, -1, -1, s, rhs, lhs});
}

Atomic negate(const Atomic& a) {
  switch (a.ctx) {
    case Ctx::Top: return Atomic::bottom();
    case Ctx::Bottom: return Atomic::top();
    case Ctx::Upper: return Atomic{Ctx::Lower, a.x, -1, a.c, flip(a.s)};
    case Ctx::Lower: return Atomic{Ctx::Upper, a.x, -1, a.c, flip(a.s)};
    case Ctx::UpperDiag: return Atomic{Ctx::LowerDiag, a.x, a.y, a.c, flip(a.s)};
    case Ctx::LowerDiag: return Atomic{Ctx::UpperDiag, a.x, a.y, a.c, flip(a.s)};
  }
  return a;
}

Atomic weakened(const Atomic& a) {
  Atomic b = a;
  if (!b.is_trivial()) b.s = Strictness::Weak;
  return b;
}

bool satisfies(const Valuation& v, const Atomic& a) {
  switch (a.ctx) {
    case Ctx::Top: return true;
    case Ctx::Bottom: return false;
    case Ctx::Upper: return holds(v.at(a.x), a.s, Rational(a.c));
    case Ctx::Lower: return holds(Rational(a.c), a.s, v.at(a.x));
    case Ctx::UpperDiag: return holds(v.at(a.x) - v.at(a.y), a.s, Rational(a.c));
    case Ctx::LowerDiag: return holds(Rational(a.c), a.s, v.at(a.x) - v.at(a.y));
  }
  return false;
}

bool satisfies(const Valuation& v, const std::vector<Atomic>& conj) {
  for (const auto& a : conj)
    if (!satisfies(v, a)) return false;
  return true;
}

std::string to_string(const Atomic& a, const std::vector<std::string>& names) {
  auto nm = [&](int i) {
    if (i >= 0 && i < static_cast<int>(names.size())) return names[i];
    return "x" + std::to_string(i);
  };
  const std::string op = op_str(a.s);
  const std::string k = std::to_string(a.c);
  switch (a.ctx) {
    case Ctx::Top: return "true";
    case Ctx::Bottom: return "false";
    case Ctx::Upper: return nm(a.x) + op + k;
    case Ctx::Lower: return k + op + nm(a.x);
    case Ctx::UpperDiag: return nm(a.x) + "-" + nm(a.y) + op + k;
    case Ctx::LowerDiag: return k + op + nm(a.x) + "-" + nm(a.y);
  }
  return "?";
}

}  // namespace uta
