#include "uta/format.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace uta {

std::string ParseError::str() const {
  return span.file + ":" + std::to_string(span.line) + ":" + std::to_string(span.col_start) +
         ": " + message;
}

namespace {
std::string join_errors(const std::vector<ParseError>& errs) {
  std::string s;
  for (const auto& e : errs) {
    if (!s.empty()) s += "\n";
    s += e.str();
  }
  return s;
}
}  // namespace

ParseErrors::ParseErrors(std::vector<ParseError> errs)
    : std::runtime_error(join_errors(errs)), errs_(std::move(errs)) {}

namespace {

struct Failure {
  int col_start;
  int col_end;
  std::string msg;
};

enum class Tok { Ident, Int, Op, Minus, Plus, Bang, Query, Assign, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int col = 0;  // 1-based
};

// Tokenizer for the bodies of provided:/invariant:/do:/sync: sections.
std::vector<Token> lex(const std::string& s, int base_col) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    char ch = s[i];
    int col = base_col + static_cast<int>(i);
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Ident, s.substr(i, j - i), col});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Int, s.substr(i, j - i), col});
      i = j;
    } else if (ch == '<' || ch == '>' || ch == '=' || ch == '!' || ch == ':') {
      std::string two = s.substr(i, 2);
      if (two == "<=" || two == ">=" || two == "==" || two == "!=") {
        out.push_back({Tok::Op, two, col});
        i += 2;
      } else if (two == ":=") {
        out.push_back({Tok::Assign, two, col});
        i += 2;
      } else if (ch == '<' || ch == '>') {
        out.push_back({Tok::Op, std::string(1, ch), col});
        ++i;
      } else if (ch == '=') {
        out.push_back({Tok::Assign, "=", col});
        ++i;
      } else if (ch == '!') {
        out.push_back({Tok::Bang, "!", col});
        ++i;
      } else {
        throw Failure{col, col + 1, "unexpected ':'"};
      }
    } else if (ch == '-') {
      out.push_back({Tok::Minus, "-", col});
      ++i;
    } else if (ch == '+') {
      out.push_back({Tok::Plus, "+", col});
      ++i;
    } else if (ch == '?') {
      out.push_back({Tok::Query, "?", col});
      ++i;
    } else {
      throw Failure{col, col + 1, std::string("unexpected character '") + ch + "'"};
    }
  }
  int endcol = base_col + static_cast<int>(s.size());
  out.push_back({Tok::End, "", endcol});
  return out;
}

std::int64_t to_int(const Token& t) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || p != t.text.data() + t.text.size())
    throw Failure{t.col, t.col + static_cast<int>(t.text.size()),
                  "constant '" + t.text + "' does not fit a signed 64-bit integer"};
  return v;
}

Failure at(const Token& t, std::string msg) {
  int w = std::max<int>(1, static_cast<int>(t.text.size()));
  return Failure{t.col, t.col + w, std::move(msg)};
}

class BodyParser {
 public:
  BodyParser(const Network& n, std::vector<Token> toks) : net_(n), t_(std::move(toks)) {}

  bool done() const { return t_[p_].kind == Tok::End; }

  // conj := atom ('&&' atom)*   (the && is lexed as two Bang-free chars; handled below)
  void conj(Guard& g, bool clocks_only) {
    for (;;) {
      atom(g, clocks_only);
      if (done()) return;
      expect_and();
    }
  }

  void updates(Edge& e) {
    for (;;) {
      one_update(e);
      if (done()) return;
      if (t_[p_].kind == Tok::Ident && t_[p_].text == "__semi") {
        ++p_;
        continue;
      }
      throw at(t_[p_], "expected ';' between updates");
    }
  }

  Sync sync() {
    const Token& id = t_[p_];
    if (id.kind != Tok::Ident) throw at(id, "expected event name");
    int ev = net_.find_event(id.text);
    if (ev < 0) throw at(id, "unknown event '" + id.text + "'");
    ++p_;
    Sync s;
    s.event = ev;
    if (t_[p_].kind == Tok::Bang) {
      s.emit = true;
    } else if (t_[p_].kind == Tok::Query) {
      s.emit = false;
    } else {
      throw at(t_[p_], "expected '!' or '?' after event");
    }
    ++p_;
    if (!done()) throw at(t_[p_], "trailing tokens after sync label");
    return s;
  }

 private:
  const Token& peek(int k = 0) const { return t_[std::min<size_t>(p_ + k, t_.size() - 1)]; }

  void expect_and() {
    if (peek().kind == Tok::Ident && peek().text == "__and") {
      ++p_;
      return;
    }
    throw at(peek(), "expected '&&'");
  }

  bool is_clock(const Token& t) const { return t.kind == Tok::Ident && net_.find_clock(t.text) >= 0; }

  static Strictness strict_of(const std::string& op) {
    return (op == "<" || op == ">") ? Strictness::Strict : Strictness::Weak;
  }

  void push(Guard& g, const Atomic& a) {
    if (!a.is_top()) g.clocks.push_back(a);
  }

  void atom(Guard& g, bool clocks_only) {
    const Token& a = peek();
    if (a.kind == Tok::Ident && (a.text == "true" || a.text == "false")) {
      ++p_;
      if (a.text == "false") g.clocks.push_back(Atomic::bottom());
      return;
    }
    if (is_clock(a) || (a.kind == Tok::Int && is_clock(peek(2)))) {
      clock_atom(g);
      return;
    }
    if (clocks_only) throw at(a, "expected a clock constraint");
    IntCmp c;
    c.lhs = lin();
    const Token& op = peek();
    if (op.kind != Tok::Op) throw at(op, "expected comparison operator");
    ++p_;
    if (op.text == "<") c.op = CmpOp::Lt;
    else if (op.text == "<=") c.op = CmpOp::Le;
    else if (op.text == "==") c.op = CmpOp::Eq;
    else if (op.text == ">=") c.op = CmpOp::Ge;
    else if (op.text == ">") c.op = CmpOp::Gt;
    else c.op = CmpOp::Ne;
    c.rhs = lin();
    g.ints.push_back(c);
  }

  void clock_atom(Guard& g) {
    const Token& first = peek();
    if (first.kind == Tok::Ident) {
      int x = net_.find_clock(first.text);
      ++p_;
      int y = -1;
      if (peek().kind == Tok::Minus) {
        ++p_;
        if (!is_clock(peek())) throw at(peek(), "expected clock after '-'");
        y = net_.find_clock(peek().text);
        ++p_;
      }
      const Token& op = peek();
      if (op.kind != Tok::Op || op.text == "!=") throw at(op, "expected <, <=, >, >= or ==");
      ++p_;
      const Token& k = peek();
      if (k.kind == Tok::Minus) throw at(k, "negative constants are not allowed in clock constraints");
      if (k.kind != Tok::Int) throw at(k, "expected a natural constant");
      std::int64_t c = to_int(k);
      ++p_;
      emit(g, x, y, op.text, c, false);
    } else {
      std::int64_t c = to_int(first);
      ++p_;
      const Token& op = peek();
      if (op.kind != Tok::Op || op.text == "!=") throw at(op, "expected <, <=, >, >= or ==");
      ++p_;
      int x = net_.find_clock(peek().text);
      ++p_;
      int y = -1;
      if (peek().kind == Tok::Minus) {
        ++p_;
        if (!is_clock(peek())) throw at(peek(), "expected clock after '-'");
        y = net_.find_clock(peek().text);
        ++p_;
      }
      emit(g, x, y, op.text, c, true);
    }
  }

  // const_first: the source read `c op lhs`, else `lhs op c`
  void emit(Guard& g, int x, int y, const std::string& op, std::int64_t c, bool const_first) {
    Strictness s = strict_of(op);
    bool lhs_upper;  // lhs ◁ c
    if (op == "==") {
      push(g, y < 0 ? upper(x, Strictness::Weak, c) : diag_upper(x, y, Strictness::Weak, c));
      push(g, y < 0 ? lower(x, Strictness::Weak, c) : diag_lower(x, y, Strictness::Weak, c));
      return;
    }
    bool less = (op == "<" || op == "<=");
    lhs_upper = const_first ? !less : less;
    if (lhs_upper)
      push(g, y < 0 ? upper(x, s, c) : diag_upper(x, y, s, c));
    else
      push(g, y < 0 ? lower(x, s, c) : diag_lower(x, y, s, c));
  }

  LinExpr lin() {
    LinExpr e;
    std::int64_t sign = 1;
    if (peek().kind == Tok::Minus) {
      sign = -1;
      ++p_;
    }
    for (;;) {
      const Token& t = peek();
      if (t.kind == Tok::Int) {
        e.constant += sign * to_int(t);
      } else if (t.kind == Tok::Ident) {
        int v = net_.find_int(t.text);
        if (v < 0) {
          if (net_.find_clock(t.text) >= 0) throw at(t, "clock '" + t.text + "' in integer expression");
          throw at(t, "unknown integer variable '" + t.text + "'");
        }
        bool merged = false;
        for (auto& [vv, k] : e.terms)
          if (vv == v) {
            k += sign;
            merged = true;
          }
        if (!merged) e.terms.push_back({v, sign});
      } else {
        throw at(t, "expected integer or variable");
      }
      ++p_;
      if (peek().kind == Tok::Plus) sign = 1;
      else if (peek().kind == Tok::Minus) sign = -1;
      else return e;
      ++p_;
    }
  }

  void one_update(Edge& e) {
    const Token& lhs = peek();
    if (lhs.kind != Tok::Ident) throw at(lhs, "expected variable on the left of an update");
    ++p_;
    if (peek().kind != Tok::Assign) throw at(peek(), "expected '='");
    ++p_;
    int x = net_.find_clock(lhs.text);
    if (x >= 0) {
      const Token& r = peek();
      if (r.kind == Tok::Int) {
        e.update.e[x] = UpdateEntry::constant(to_int(r));
        ++p_;
      } else if (is_clock(r)) {
        int y = net_.find_clock(r.text);
        ++p_;
        std::int64_t d = 0;
        if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
          bool neg = peek().kind == Tok::Minus;
          ++p_;
          if (peek().kind != Tok::Int) throw at(peek(), "expected constant");
          d = to_int(peek());
          if (neg) d = -d;
          ++p_;
        }
        e.update.e[x] = UpdateEntry::shift(y, d);
      } else if (r.kind == Tok::Minus) {
        throw at(r, "negative constants are not allowed in clock updates");
      } else {
        throw at(r, "expected constant or clock");
      }
      return;
    }
    int v = net_.find_int(lhs.text);
    if (v < 0) throw at(lhs, "unknown variable '" + lhs.text + "'");
    e.assigns.push_back({v, lin()});
  }

  const Network& net_;
  std::vector<Token> t_;
  size_t p_ = 0;
};

// '&&' and ';' become pseudo identifiers so that the lexer stays tiny.
std::string prepare(const std::string& s) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '&' && i + 1 < s.size() && s[i + 1] == '&') {
      out += "  __and  ";
      ++i;
      // keep column alignment approximately: two chars replaced by padded marker
    } else if (s[i] == ';' || s[i] == ',') {
      out += " __semi ";
    } else {
      out += s[i];
    }
  }
  return out;
}

std::vector<Token> lex_body(const std::string& s, int base_col) {
  // lex on the prepared string, then map columns back to the original text
  std::string prep = prepare(s);
  auto toks = lex(prep, 0);
  std::vector<int> map(prep.size() + 1, 0);
  size_t j = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    size_t width = 1;
    if (s[i] == '&' && i + 1 < s.size() && s[i + 1] == '&') width = 9;
    else if (s[i] == ';' || s[i] == ',') width = 8;
    for (size_t k = 0; k < width && j < prep.size(); ++k) map[j++] = static_cast<int>(i);
    if (width == 9) ++i;
  }
  map[prep.size()] = static_cast<int>(s.size());
  for (auto& t : toks) t.col = base_col + map[std::min<size_t>(t.col, prep.size())];
  return toks;
}

struct Word {
  std::string text;
  int col;  // 1-based
};

std::vector<Word> words(const std::string& line) {
  std::vector<Word> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

bool is_ident(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return s.rfind("__", 0) != 0;
}

const char* kSections[] = {"invariant:", "provided:", "do:", "sync:"};
const char* kFlags[] = {"initial", "committed", "accepting"};

struct Section {
  std::string key;  // "invariant:", ..., or a flag name
  std::string body;
  int body_col = 0;
  int key_col = 0;
};

// Split the tail of a location/edge line into flag words and keyed sections.
std::vector<Section> sections(const std::string& line, size_t from) {
  std::vector<Section> out;
  size_t i = from;
  auto starts_key = [&](size_t pos, std::string& key) {
    if (pos > 0 && !std::isspace(static_cast<unsigned char>(line[pos - 1]))) return false;
    for (const char* k : kSections) {
      std::string ks(k);
      if (line.compare(pos, ks.size(), ks) == 0) {
        key = ks;
        return true;
      }
    }
    for (const char* k : kFlags) {
      std::string ks(k);
      if (line.compare(pos, ks.size(), ks) == 0 &&
          (pos + ks.size() == line.size() ||
           std::isspace(static_cast<unsigned char>(line[pos + ks.size()])))) {
        key = ks;
        return true;
      }
    }
    return false;
  };
  std::string key;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (!starts_key(i, key)) {
      size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      throw Failure{static_cast<int>(i) + 1, static_cast<int>(j) + 1,
                    "unexpected '" + line.substr(i, j - i) + "'"};
    }
    Section s;
    s.key = key;
    s.key_col = static_cast<int>(i) + 1;
    size_t body_start = i + key.size();
    if (key.back() != ':') {
      out.push_back(s);
      i = body_start;
      continue;
    }
    size_t j = body_start;
    std::string next;
    while (j < line.size() && !starts_key(j, next)) ++j;
    s.body = line.substr(body_start, j - body_start);
    s.body_col = static_cast<int>(body_start) + 1;
    out.push_back(s);
    i = j;
  }
  return out;
}

}  // namespace

Network parse(const std::string& text, const std::string& file) {
  Network n;
  std::vector<ParseError> errs;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool seen_system = false;

  auto fail = [&](int c0, int c1, std::string msg) {
    errs.push_back({{file, lineno, c0, c1}, std::move(msg)});
  };

  auto declared = [&](const std::string& id) {
    return n.find_clock(id) >= 0 || n.find_int(id) >= 0 || n.find_event(id) >= 0;
  };

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto w = words(line);
    if (w.empty()) continue;
    try {
      const std::string& kw = w[0].text;
      auto need = [&](size_t k, const char* what) -> const Word& {
        if (w.size() <= k) {
          int c = static_cast<int>(line.size()) + 1;
          throw Failure{c, c + 1, std::string("missing ") + what};
        }
        return w[k];
      };
      auto ident = [&](size_t k, const char* what) -> const Word& {
        const Word& x = need(k, what);
        if (!is_ident(x.text))
          throw Failure{x.col, x.col + static_cast<int>(x.text.size()),
                        "'" + x.text + "' is not a valid identifier"};
        return x;
      };
      auto proc_of = [&](const Word& x) -> Automaton& {
        int p = n.find_proc(x.text);
        if (p < 0)
          throw Failure{x.col, x.col + static_cast<int>(x.text.size()),
                        "unknown process '" + x.text + "'"};
        return n.procs[p];
      };
      auto no_more = [&](size_t k) {
        if (w.size() > k)
          throw Failure{w[k].col, w[k].col + static_cast<int>(w[k].text.size()),
                        "unexpected '" + w[k].text + "'"};
      };
      auto integer = [&](const Word& x) {
        Token t{Tok::Int, x.text, x.col};
        std::string digits = x.text;
        bool neg = !digits.empty() && digits[0] == '-';
        if (neg) digits = digits.substr(1);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
          throw Failure{x.col, x.col + static_cast<int>(x.text.size()),
                        "expected an integer, got '" + x.text + "'"};
        t.text = digits;
        std::int64_t v = to_int(t);
        return neg ? -v : v;
      };

      if (kw == "system") {
        if (seen_system) throw Failure{w[0].col, w[0].col + 6, "duplicate system declaration"};
        n.name = ident(1, "system name").text;
        seen_system = true;
        no_more(2);
      } else if (kw == "clock") {
        if (w.size() < 2) need(1, "clock name");
        for (size_t k = 1; k < w.size(); ++k) {
          const Word& x = ident(k, "clock name");
          if (declared(x.text))
            throw Failure{x.col, x.col + static_cast<int>(x.text.size()),
                          "duplicate declaration of '" + x.text + "'"};
          n.clocks.push_back(x.text);
        }
      } else if (kw == "int") {
        const Word& x = ident(1, "integer name");
        if (declared(x.text))
          throw Failure{x.col, x.col + static_cast<int>(x.text.size()),
                        "duplicate declaration of '" + x.text + "'"};
        IntVar v{x.text, integer(need(2, "minimum")), integer(need(3, "maximum")),
                 integer(need(4, "initial value"))};
        no_more(5);
        if (v.lo > v.hi) throw Failure{w[2].col, w[3].col + 1, "empty integer range"};
        n.ints.push_back(v);
      } else if (kw == "event") {
        const Word& x = ident(1, "event name");
        if (declared(x.text))
          throw Failure{x.col, x.col + static_cast<int>(x.text.size()),
                        "duplicate declaration of '" + x.text + "'"};
        n.events.push_back(x.text);
        no_more(2);
      } else if (kw == "process") {
        const Word& x = ident(1, "process name");
        if (n.find_proc(x.text) >= 0)
          throw Failure{x.col, x.col + static_cast<int>(x.text.size()),
                        "duplicate process '" + x.text + "'"};
        Automaton a;
        a.name = x.text;
        n.procs.push_back(a);
        no_more(2);
      } else if (kw == "location") {
        Automaton& a = proc_of(need(1, "process name"));
        const Word& id = ident(2, "location name");
        if (a.find_loc(id.text) >= 0)
          throw Failure{id.col, id.col + static_cast<int>(id.text.size()),
                        "duplicate location '" + id.text + "'"};
        Location l;
        l.name = id.text;
        for (const auto& s : sections(line, static_cast<size_t>(id.col - 1 + id.text.size()))) {
          if (s.key == "initial") {
            if (a.initial() >= 0)
              throw Failure{s.key_col, s.key_col + 7, "process already has an initial location"};
            l.initial = true;
          } else if (s.key == "committed") {
            l.committed = true;
          } else if (s.key == "accepting") {
            l.accepting = true;
          } else if (s.key == "invariant:") {
            BodyParser bp(n, lex_body(s.body, s.body_col));
            Guard g;
            if (bp.done()) throw Failure{s.key_col, s.key_col + 10, "empty invariant"};
            bp.conj(g, true);
            l.invariant = g.clocks;
          } else {
            throw Failure{s.key_col, s.key_col + static_cast<int>(s.key.size()),
                          "'" + s.key + "' is not allowed on a location"};
          }
        }
        a.locs.push_back(l);
      } else if (kw == "edge") {
        Automaton& a = proc_of(need(1, "process name"));
        Edge e;
        for (int k : {2, 3}) {
          const Word& x = need(k, k == 2 ? "source location" : "target location");
          int q = a.find_loc(x.text);
          if (q < 0)
            throw Failure{x.col, x.col + static_cast<int>(x.text.size()),
                          "unknown location '" + x.text + "' in process " + a.name};
          (k == 2 ? e.src : e.dst) = q;
        }
        e.update = Update::identity(n.n_clocks());
        const Word& dst = w[3];
        for (const auto& s : sections(line, static_cast<size_t>(dst.col - 1 + dst.text.size()))) {
          BodyParser bp(n, lex_body(s.body, s.body_col));
          if (s.key == "provided:") {
            if (bp.done()) throw Failure{s.key_col, s.key_col + 9, "empty guard"};
            bp.conj(e.guard, false);
          } else if (s.key == "do:") {
            if (bp.done()) throw Failure{s.key_col, s.key_col + 3, "empty update"};
            bp.updates(e);
          } else if (s.key == "sync:") {
            e.sync = bp.sync();
          } else {
            throw Failure{s.key_col, s.key_col + static_cast<int>(s.key.size()),
                          "'" + s.key + "' is not allowed on an edge"};
          }
        }
        a.edges.push_back(std::move(e));
      } else {
        throw Failure{w[0].col, w[0].col + static_cast<int>(kw.size()),
                      "unknown declaration '" + kw + "'"};
      }
    } catch (const Failure& f) {
      fail(f.col_start, f.col_end, f.msg);
    }
  }
  for (const auto& a : n.procs)
    if (a.initial() < 0) errs.push_back({{file, lineno, 1, 1}, "process " + a.name + " has no initial location"});
  if (!errs.empty()) throw ParseErrors(std::move(errs));
  return n;
}

Network parse_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseErrors({{{path, 0, 0, 0}, "cannot open file"}});
  std::stringstream ss;
  ss << f.rdbuf();
  return parse(ss.str(), path);
}

std::string format_lin(const Network& n, const LinExpr& e) {
  std::string s;
  for (auto [v, k] : e.terms) {
    if (k == 0) continue;
    std::int64_t reps = k < 0 ? -k : k;
    for (std::int64_t r = 0; r < reps; ++r) {
      if (k < 0) s += "-";
      else if (!s.empty()) s += "+";
      s += n.ints[v].name;
    }
  }
  if (s.empty()) return std::to_string(e.constant);
  if (e.constant > 0) s += "+" + std::to_string(e.constant);
  if (e.constant < 0) s += "-" + std::to_string(-e.constant);
  return s;
}

std::string format_guard(const Network& n, const Guard& g) {
  std::string s;
  for (const auto& a : g.clocks) {
    if (!s.empty()) s += " && ";
    s += to_string(a, n.clocks);
  }
  for (const auto& c : g.ints) {
    if (!s.empty()) s += " && ";
    s += format_lin(n, c.lhs) + cmp_str(c.op) + format_lin(n, c.rhs);
  }
  return s;
}

std::string format_update(const Network& n, const Edge& e) {
  std::string s;
  for (int x = 0; x < static_cast<int>(e.update.e.size()); ++x) {
    if (e.update.is_identity_at(x)) continue;
    if (!s.empty()) s += "; ";
    const auto& u = e.update.e[x];
    s += n.clocks[x] + "=";
    if (u.is_const) {
      s += std::to_string(u.c);
    } else {
      s += n.clocks[u.y];
      if (u.d > 0) s += "+" + std::to_string(u.d);
      if (u.d < 0) s += "-" + std::to_string(-u.d);
    }
  }
  for (const auto& a : e.assigns) {
    if (!s.empty()) s += "; ";
    s += n.ints[a.var].name + "=" + format_lin(n, a.rhs);
  }
  return s;
}

std::string print(const Network& n) {
  std::ostringstream o;
  o << "system " << n.name << "\n";
  for (const auto& c : n.clocks) o << "clock " << c << "\n";
  for (const auto& v : n.ints) o << "int " << v.name << " " << v.lo << " " << v.hi << " " << v.init << "\n";
  for (const auto& e : n.events) o << "event " << e << "\n";
  for (const auto& a : n.procs) {
    o << "\nprocess " << a.name << "\n";
    for (const auto& l : a.locs) {
      o << "location " << a.name << " " << l.name;
      if (l.initial) o << " initial";
      if (l.committed) o << " committed";
      if (!l.invariant.empty()) o << " invariant: " << format_guard(n, Guard{l.invariant, {}});
      if (l.accepting) o << " accepting";
      o << "\n";
    }
    for (const auto& e : a.edges) {
      o << "edge " << a.name << " " << a.locs[e.src].name << " " << a.locs[e.dst].name;
      if (!e.guard.clocks.empty() || !e.guard.ints.empty()) o << " provided: " << format_guard(n, e.guard);
      std::string up = format_update(n, e);
      if (!up.empty()) o << " do: " << up;
      if (e.sync) o << " sync: " << n.events[e.sync->event] << (e.sync->emit ? "!" : "?");
      o << "\n";
    }
  }
  return o.str();
}

}  // namespace uta
