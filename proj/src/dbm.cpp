#include "uta/dbm.hpp"

#include <sstream>
#include <stdexcept>

namespace uta {

namespace bound {

raw_t make(std::int64_t value, Strictness s) {
  if (value >= kMaxValue || value <= -kMaxValue) throw std::overflow_error("DBM bound out of range");
  return (value * 2) | (s == Strictness::Weak ? 1 : 0);
}

raw_t add(raw_t a, raw_t b) {
  if (a == kInf || b == kInf) return kInf;
  std::int64_t v = 0;
  if (__builtin_add_overflow(value(a), value(b), &v) || v >= kMaxValue || v <= -kMaxValue)
    throw std::overflow_error("DBM bound addition overflow");
  return (v * 2) | (a & b & 1);
}

std::string str(raw_t r) {
  if (r == kInf) return "inf";
  return std::string(weak(r) ? "<=" : "<") + std::to_string(value(r));
}

}  // namespace bound

using bound::kInf;
using bound::kLeZero;

Dbm Dbm::universe(int n) {
  Dbm d;
  d.dim_ = n + 1;
  d.m_.assign(static_cast<size_t>(d.dim_) * d.dim_, kInf);
  for (int i = 0; i < d.dim_; ++i) {
    d.ref(i, i) = kLeZero;
    d.ref(0, i) = kLeZero;
  }
  return d;
}

Dbm Dbm::zero(int n) {
  Dbm d;
  d.dim_ = n + 1;
  d.m_.assign(static_cast<size_t>(d.dim_) * d.dim_, kLeZero);
  return d;
}

Dbm Dbm::initial_zone(int n) {
  Dbm d = zero(n);
  d.elapse();
  return d;
}

Dbm Dbm::from_raw(int n, std::vector<raw_t> m) {
  Dbm d;
  d.dim_ = n + 1;
  if (m.size() != static_cast<size_t>(d.dim_) * d.dim_) throw std::invalid_argument("bad DBM size");
  d.m_ = std::move(m);
  d.canonicalize();
  return d;
}

void Dbm::set_empty() {
  empty_ = true;
  if (dim_ > 0) ref(0, 0) = bound::kLtZero;
}

bool Dbm::canonicalize() {
  if (empty_) return false;
  const int n = dim_;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      raw_t ik = at(i, k);
      if (ik == kInf) continue;
      raw_t* row = &m_[i * n];
      const raw_t* krow = &m_[k * n];
      for (int j = 0; j < n; ++j) {
        raw_t kj = krow[j];
        if (kj == kInf) continue;
        raw_t s = bound::add(ik, kj);
        if (s < row[j]) row[j] = s;
      }
    }
    for (int i = 0; i < n; ++i)
      if (at(i, i) < kLeZero) {
        set_empty();
        return false;
      }
  }
  return true;
}

bool Dbm::constrain(int i, int j, raw_t b) {
  if (empty_) return false;
  if (b >= at(i, j)) return true;
  if (bound::add(b, at(j, i)) < kLeZero) {
    set_empty();
    return false;
  }
  ref(i, j) = b;
  const int n = dim_;
  for (int k = 0; k < n; ++k) {
    raw_t ki = at(k, i);
    if (ki == kInf) continue;
    raw_t kib = bound::add(ki, b);
    raw_t* row = &m_[k * n];
    for (int l = 0; l < n; ++l) {
      raw_t jl = at(j, l);
      if (jl == kInf) continue;
      raw_t s = bound::add(kib, jl);
      if (s < row[l]) row[l] = s;
    }
  }
  return true;
}

bool to_dbm_constraint(const Atomic& a, int* i, int* j, raw_t* b) {
  switch (a.ctx) {
    case Ctx::Upper: *i = a.x + 1; *j = 0; *b = bound::make(a.c, a.s); return true;
    case Ctx::Lower: *i = 0; *j = a.x + 1; *b = bound::make(-a.c, a.s); return true;
    case Ctx::UpperDiag: *i = a.x + 1; *j = a.y + 1; *b = bound::make(a.c, a.s); return true;
    case Ctx::LowerDiag: *i = a.y + 1; *j = a.x + 1; *b = bound::make(-a.c, a.s); return true;
    default: return false;
  }
}

bool Dbm::intersect(const Atomic& a) {
  if (empty_) return false;
  if (a.is_top()) return true;
  if (a.is_bottom()) {
    set_empty();
    return false;
  }
  int i = 0, j = 0;
  raw_t b = 0;
  to_dbm_constraint(a, &i, &j, &b);
  return constrain(i, j, b);
}

bool Dbm::intersect(const std::vector<Atomic>& conj) {
  for (const auto& a : conj)
    if (!intersect(a)) return false;
  return !empty_;
}

void Dbm::elapse() {
  if (empty_) return;
  for (int i = 1; i < dim_; ++i) ref(i, 0) = kInf;
}

void Dbm::reset(int x, std::int64_t c) {
  const int xi = x + 1;
  for (int j = 0; j < dim_; ++j) {
    ref(xi, j) = bound::add(bound::le(c), at(0, j));
    ref(j, xi) = bound::add(at(j, 0), bound::le(-c));
  }
  ref(xi, xi) = kLeZero;
}

void Dbm::shift(int x, std::int64_t d) {
  const int xi = x + 1;
  for (int j = 0; j < dim_; ++j) {
    if (j == xi) continue;
    ref(xi, j) = bound::add(at(xi, j), bound::le(d));
    ref(j, xi) = bound::add(at(j, xi), bound::le(-d));
  }
}

bool Dbm::apply_update(const Update& up) {
  if (empty_) return false;
  if (!up.is_local()) return apply_update_relational(up);
  // Entries that read nothing but their own clock commute, so doing them
  // one at a time gives the simultaneous result.
  for (int x = 0; x < n_clocks(); ++x) {
    const auto& u = up.e[x];
    if (!u.is_const && u.d < 0 && !constrain(0, u.y + 1, bound::le(u.d))) return false;
  }
  for (int x = 0; x < n_clocks(); ++x) {
    const auto& u = up.e[x];
    if (u.is_const) reset(x, u.c);
    else if (u.d != 0) shift(x, u.d);
  }
  return true;
}

bool Dbm::apply_update_relational(const Update& up) {
  if (empty_) return false;
  const int n = n_clocks();
  for (int x = 0; x < n; ++x) {
    const auto& u = up.e[x];
    if (!u.is_const && u.d < 0 && !constrain(0, u.y + 1, bound::le(u.d))) return false;
  }
  // old clocks at 1..n, primed copies at n+1..2n
  const int E = 2 * n + 1;
  std::vector<raw_t> ext(static_cast<size_t>(E) * E, kInf);
  auto ex = [&](int i, int j) -> raw_t& { return ext[i * E + j]; };
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) ex(i, j) = at(i, j);
  for (int i = n + 1; i < E; ++i) {
    ex(i, i) = kLeZero;
    ex(0, i) = kLeZero;
  }
  for (int x = 0; x < n; ++x) {
    const auto& u = up.e[x];
    const int p = n + 1 + x;
    if (u.is_const) {
      ex(p, 0) = bound::le(u.c);
      ex(0, p) = std::min(ex(0, p), bound::le(-u.c));
    } else {
      ex(p, u.y + 1) = bound::le(u.d);
      ex(u.y + 1, p) = bound::le(-u.d);
    }
  }
  Dbm big;
  big.dim_ = E;
  big.m_ = std::move(ext);
  if (!big.canonicalize()) {
    set_empty();
    return false;
  }
  auto idx = [&](int i) { return i == 0 ? 0 : n + i; };
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) ref(i, j) = big.at(idx(i), idx(j));
  return true;
}

bool Dbm::includes(const Dbm& o) const {
  if (o.empty_) return true;
  if (empty_) return false;
  for (size_t k = 0; k < m_.size(); ++k)
    if (o.m_[k] > m_[k]) return false;
  return true;
}

bool Dbm::contains(const Valuation& v) const {
  if (empty_) return false;
  auto val = [&](int i) { return i == 0 ? Rational(0) : v.at(i - 1); };
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      raw_t b = at(i, j);
      if (b == kInf) continue;
      Rational d = val(i) - val(j);
      Rational k(bound::value(b));
      if (bound::weak(b) ? !(d <= k) : !(d < k)) return false;
    }
  return true;
}

bool Dbm::contains_scaled(const std::vector<std::int64_t>& v, std::int64_t scale) const {
  if (empty_) return false;
  auto val = [&](int i) { return i == 0 ? std::int64_t{0} : v[i - 1]; };
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      raw_t b = at(i, j);
      if (b == kInf) continue;
      std::int64_t d = val(i) - val(j);
      std::int64_t k = bound::value(b) * scale;
      if (bound::weak(b) ? d > k : d >= k) return false;
    }
  return true;
}

Dbm Dbm::scaled(std::int64_t k) const {
  Dbm d = *this;
  for (auto& r : d.m_)
    if (r != kInf) r = bound::make(bound::value(r) * k, bound::strictness(r));
  return d;
}

size_t Dbm::hash() const {
  size_t h = 1469598103934665603ULL;
  for (raw_t r : m_) {
    h ^= static_cast<size_t>(r);
    h *= 1099511628211ULL;
  }
  return h;
}

std::string Dbm::dump(const std::vector<std::string>& names) const {
  std::ostringstream o;
  if (empty_) return "empty\n";
  auto nm = [&](int i) {
    if (i == 0) return std::string("0");
    if (i - 1 < static_cast<int>(names.size())) return names[i - 1];
    return "x" + std::to_string(i - 1);
  };
  for (int i = 0; i < dim_; ++i) {
    o << nm(i) << ":";
    for (int j = 0; j < dim_; ++j) o << " " << bound::str(at(i, j));
    o << "\n";
  }
  return o.str();
}

}  // namespace uta
