#pragma once

#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "lnd/error.hpp"
#include "lnd/polynomial.hpp"
#include "lnd/text.hpp"

namespace lnd {

// Session files: one statement per line, '#' starts a comment, and a
// statement continues onto following lines while brackets are open.
//
//   ring P = poly(x, y)              ring Q = quotient(P, x*y - 1, ...)
//   subalgebra A in P = gens { x^2, x^3 }
//   derivation D on P|A { x -> 1; y -> x }
//   ideal I in P|A = ( x, y )
//   check nilpotent D [bound N]      check fpf D       check irreducible D
//   check contained D in (b)         check restricts D to A
//   check member f in I|A            grade D           grade ideal I
//   kernel D degree N [expect A]     slice D degree N
//   dixmier D slice s of f           symbolic I power N saturate s
//   rees I upto N saturate s [compare D degree M grading (x, y)]
//   verify generators A claim { ... } degree N

struct RingDecl {
  std::string name;
  std::vector<std::string> variables;
  std::optional<std::string> base;  // set for quotient rings
  std::vector<Polynomial> relations;
  std::size_t line = 0;
};

struct SubalgebraDecl {
  std::string name;
  std::string ring;
  std::vector<Polynomial> generators;
  std::size_t line = 0;
};

struct DerivationDecl {
  std::string name;
  std::string domain;  // ring or subalgebra
  std::vector<std::pair<std::string, Polynomial>> images;
  std::size_t line = 0;
};

struct IdealDecl {
  std::string name;
  std::string owner;  // ring or subalgebra
  std::vector<Polynomial> generators;
  std::size_t line = 0;
};

using Declaration = std::variant<RingDecl, SubalgebraDecl, DerivationDecl, IdealDecl>;

enum class CommandKind {
  nilpotent,
  fpf,
  irreducible,
  contained,
  restricts,
  member,
  grade,
  grade_ideal,
  kernel,
  slice,
  dixmier,
  symbolic,
  rees,
  verify
};

struct Command {
  CommandKind kind = CommandKind::grade;
  std::string target;
  std::optional<std::size_t> number;
  std::vector<Polynomial> polys;
  std::string other;
  std::optional<std::size_t> number2;
  std::vector<std::string> names;
  std::size_t line = 0;
};

struct Session {
  std::vector<Declaration> declarations;
  std::vector<Command> commands;
};

inline bool operator==(const RingDecl& a, const RingDecl& b) {
  return a.name == b.name && a.variables == b.variables && a.base == b.base && a.relations == b.relations;
}
inline bool operator==(const SubalgebraDecl& a, const SubalgebraDecl& b) {
  return a.name == b.name && a.ring == b.ring && a.generators == b.generators;
}
inline bool operator==(const DerivationDecl& a, const DerivationDecl& b) {
  return a.name == b.name && a.domain == b.domain && a.images == b.images;
}
inline bool operator==(const IdealDecl& a, const IdealDecl& b) {
  return a.name == b.name && a.owner == b.owner && a.generators == b.generators;
}
inline bool operator==(const Command& a, const Command& b) {
  return a.kind == b.kind && a.target == b.target && a.number == b.number && a.polys == b.polys &&
         a.other == b.other && a.number2 == b.number2 && a.names == b.names;
}
inline bool operator==(const Session& a, const Session& b) {
  return a.declarations == b.declarations && a.commands == b.commands;
}

namespace detail {

inline std::string join_polys(const std::vector<Polynomial>& ps) {
  std::string out;
  for (std::size_t i = 0; i < ps.size(); ++i) out += (i ? ", " : "") + ps[i].to_string();
  return out;
}

inline std::string join_names(const std::vector<std::string>& ns) {
  std::string out;
  for (std::size_t i = 0; i < ns.size(); ++i) out += (i ? ", " : "") + ns[i];
  return out;
}

}  // namespace detail

inline std::string to_string(const Declaration& d) {
  struct Printer {
    std::string operator()(const RingDecl& r) const {
      if (r.base) {
        return "ring " + r.name + " = quotient(" + *r.base + (r.relations.empty() ? "" : ", ") +
               detail::join_polys(r.relations) + ")";
      }
      return "ring " + r.name + " = poly(" + detail::join_names(r.variables) + ")";
    }
    std::string operator()(const SubalgebraDecl& s) const {
      return "subalgebra " + s.name + " in " + s.ring + " = gens { " + detail::join_polys(s.generators) + " }";
    }
    std::string operator()(const DerivationDecl& d) const {
      std::string body;
      for (std::size_t i = 0; i < d.images.size(); ++i)
        body += (i ? "; " : "") + d.images[i].first + " -> " + d.images[i].second.to_string();
      return "derivation " + d.name + " on " + d.domain + " { " + body + (body.empty() ? "}" : " }");
    }
    std::string operator()(const IdealDecl& i) const {
      return "ideal " + i.name + " in " + i.owner + " = ( " + detail::join_polys(i.generators) + " )";
    }
  };
  return std::visit(Printer{}, d);
}

inline std::string to_string(const Command& c) {
  const std::string n = c.number ? std::to_string(*c.number) : "";
  switch (c.kind) {
    case CommandKind::nilpotent: return "check nilpotent " + c.target + (c.number ? " bound " + n : "");
    case CommandKind::fpf: return "check fpf " + c.target;
    case CommandKind::irreducible: return "check irreducible " + c.target;
    case CommandKind::contained: return "check contained " + c.target + " in (" + c.polys.at(0).to_string() + ")";
    case CommandKind::restricts: return "check restricts " + c.target + " to " + c.other;
    case CommandKind::member: return "check member " + c.polys.at(0).to_string() + " in " + c.target;
    case CommandKind::grade: return "grade " + c.target;
    case CommandKind::grade_ideal: return "grade ideal " + c.target;
    case CommandKind::kernel:
      return "kernel " + c.target + " degree " + n + (c.other.empty() ? "" : " expect " + c.other);
    case CommandKind::slice: return "slice " + c.target + " degree " + n;
    case CommandKind::dixmier:
      return "dixmier " + c.target + " slice " + c.polys.at(0).to_string() + " of " + c.polys.at(1).to_string();
    case CommandKind::symbolic:
      return "symbolic " + c.target + " power " + n + " saturate " + c.polys.at(0).to_string();
    case CommandKind::rees: {
      std::string s = "rees " + c.target + " upto " + n + " saturate " + c.polys.at(0).to_string();
      if (!c.other.empty())
        s += " compare " + c.other + " degree " + std::to_string(*c.number2) + " grading (" +
             detail::join_names(c.names) + ")";
      return s;
    }
    case CommandKind::verify:
      return "verify generators " + c.target + " claim { " + detail::join_polys(c.polys) + " } degree " + n;
  }
  return "?";
}

inline std::string to_string(const Session& s) {
  std::string out;
  for (const Declaration& d : s.declarations) out += to_string(d) + "\n";
  for (const Command& c : s.commands) out += to_string(c) + "\n";
  return out;
}

namespace detail {

enum class NameKind { ring, subalgebra, derivation, ideal };

struct NameInfo {
  NameKind kind;
  Context ctx;  // variables in which this object's elements are written
};

class SessionParser {
 public:
  explicit SessionParser(std::string_view text) : text_(text) {}

  Session parse() {
    Session s;
    std::size_t pos = 0, line = 1;
    while (pos < text_.size()) {
      // Gather one statement: up to a newline outside brackets.
      const std::size_t start = pos, start_line = line;
      int depth = 0;
      std::string stmt;
      while (pos < text_.size()) {
        char c = text_[pos];
        if (c == '#') {
          while (pos < text_.size() && text_[pos] != '\n') ++pos;
          continue;
        }
        if (c == '\n') {
          ++line;
          ++pos;
          if (depth <= 0) break;
          stmt += ' ';
          line_breaks_.push_back({stmt.size(), line});
          continue;
        }
        if (c == '(' || c == '{') ++depth;
        if (c == ')' || c == '}') --depth;
        stmt += c;
        ++pos;
      }
      (void)start;
      statement(s, stmt, start_line);
      line_breaks_.clear();
    }
    return s;
  }

 private:
  // Cursor over one statement.
  struct Cursor {
    std::string_view s;
    std::size_t pos = 0;
  };

  [[noreturn]] void fail(const std::string& msg, std::size_t offset) const {
    auto [l, c] = locate(offset);
    throw ParseError(msg, l, c);
  }

  std::pair<std::size_t, std::size_t> locate(std::size_t offset) const {
    std::size_t l = line_, base = 0;
    for (const auto& [at, ln] : line_breaks_)
      if (offset >= at) {
        l = ln;
        base = at;
      }
    return {l, offset - base + 1};
  }

  void skip(Cursor& c) const {
    while (c.pos < c.s.size() && std::isspace(static_cast<unsigned char>(c.s[c.pos]))) ++c.pos;
  }
  bool at_end(Cursor& c) const {
    skip(c);
    return c.pos >= c.s.size();
  }

  std::string ident(Cursor& c, const char* what) const {
    skip(c);
    std::size_t b = c.pos;
    if (c.pos < c.s.size() && (std::isalpha(static_cast<unsigned char>(c.s[c.pos])) || c.s[c.pos] == '_')) {
      ++c.pos;
      while (c.pos < c.s.size() && (std::isalnum(static_cast<unsigned char>(c.s[c.pos])) || c.s[c.pos] == '_'))
        ++c.pos;
    }
    if (b == c.pos) fail(std::string("expected ") + what, b);
    return std::string(c.s.substr(b, c.pos - b));
  }

  void keyword(Cursor& c, const char* kw) const {
    skip(c);
    std::size_t b = c.pos;
    std::string w = ident(c, (std::string("'") + kw + "'").c_str());
    if (w != kw) fail(std::string("expected '") + kw + "'", b);
  }

  bool peek_keyword(Cursor& c, const char* kw) const {
    Cursor t = c;
    skip(t);
    std::size_t b = t.pos;
    while (t.pos < t.s.size() && (std::isalnum(static_cast<unsigned char>(t.s[t.pos])) || t.s[t.pos] == '_')) ++t.pos;
    return t.s.substr(b, t.pos - b) == kw;
  }

  void expect(Cursor& c, char ch) const {
    skip(c);
    if (c.pos >= c.s.size() || c.s[c.pos] != ch) fail(std::string("expected '") + ch + "'", c.pos);
    ++c.pos;
  }

  bool accept(Cursor& c, char ch) const {
    skip(c);
    if (c.pos < c.s.size() && c.s[c.pos] == ch) {
      ++c.pos;
      return true;
    }
    return false;
  }

  std::size_t number(Cursor& c, const char* what) const {
    skip(c);
    std::size_t b = c.pos;
    while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) ++c.pos;
    if (b == c.pos) fail(std::string("expected ") + what, b);
    try {
      return std::stoul(std::string(c.s.substr(b, c.pos - b)));
    } catch (const std::exception&) {
      fail("number out of range", b);
    }
  }

  // Polynomial text up to a delimiter at bracket depth 0 (or the word `stop`).
  Polynomial poly(Cursor& c, const Context& ctx, const char* stop = nullptr) const {
    skip(c);
    const std::size_t b = c.pos;
    int depth = 0;
    while (c.pos < c.s.size()) {
      char ch = c.s[c.pos];
      if (depth == 0 && (ch == ',' || ch == ';' || ch == '}' || ch == ')')) break;
      if (depth == 0 && stop && word_at(c.s, c.pos, stop)) break;
      if (ch == '(') ++depth;
      if (ch == ')') --depth;
      ++c.pos;
    }
    std::string_view body = c.s.substr(b, c.pos - b);
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);
    if (body.empty()) fail("expected a polynomial", b);
    auto [l, col] = locate(b);
    return PolynomialParser(body, ctx, l, col).parse();
  }

  static bool word_at(std::string_view s, std::size_t pos, std::string_view w) {
    if (pos > 0 && (std::isalnum(static_cast<unsigned char>(s[pos - 1])) || s[pos - 1] == '_')) return false;
    if (s.substr(pos, w.size()) != w) return false;
    std::size_t e = pos + w.size();
    return e >= s.size() || !(std::isalnum(static_cast<unsigned char>(s[e])) || s[e] == '_');
  }

  std::vector<Polynomial> poly_list(Cursor& c, const Context& ctx, char close) const {
    std::vector<Polynomial> out;
    if (accept(c, close)) return out;
    while (true) {
      out.push_back(poly(c, ctx));
      if (accept(c, close)) return out;
      expect(c, ',');
    }
  }

  const NameInfo& lookup(const std::string& name, std::size_t offset, std::initializer_list<NameKind> kinds,
                         const char* what) const {
    auto it = names_.find(name);
    if (it == names_.end()) fail("undefined name '" + name + "'", offset);
    for (NameKind k : kinds)
      if (it->second.kind == k) return it->second;
    fail("'" + name + "' is not " + what, offset);
  }

  void declare(const std::string& name, NameKind kind, Context ctx, std::size_t offset) {
    if (names_.count(name)) fail("duplicate name '" + name + "'", offset);
    names_.emplace(name, NameInfo{kind, std::move(ctx)});
  }

  std::string name_at(Cursor& c, std::size_t& offset, const char* what) const {
    skip(c);
    offset = c.pos;
    return ident(c, what);
  }

  void statement(Session& s, const std::string& stmt, std::size_t line) {
    line_ = line;
    Cursor c{stmt, 0};
    if (at_end(c)) return;
    std::size_t off = 0;
    const std::string head = name_at(c, off, "a statement");
    if (head == "ring") {
      ring(s, c, line);
    } else if (head == "subalgebra") {
      subalgebra(s, c, line);
    } else if (head == "derivation") {
      derivation(s, c, line);
    } else if (head == "ideal") {
      ideal(s, c, line);
    } else if (head == "check" || head == "grade" || head == "kernel" || head == "slice" || head == "dixmier" ||
               head == "symbolic" || head == "rees" || head == "verify") {
      command(s, c, head, line);
    } else {
      fail("unknown statement '" + head + "'", off);
    }
    if (!at_end(c)) fail("unexpected text after statement", c.pos);
  }

  void ring(Session& s, Cursor& c, std::size_t line) {
    std::size_t off = 0;
    RingDecl r;
    r.line = line;
    r.name = name_at(c, off, "a ring name");
    expect(c, '=');
    std::size_t koff = 0;
    std::string kind = name_at(c, koff, "'poly' or 'quotient'");
    expect(c, '(');
    Context ctx;
    if (kind == "poly") {
      if (!accept(c, ')')) {
        while (true) {
          std::size_t voff = 0;
          std::string v = name_at(c, voff, "a variable name");
          if (std::find(r.variables.begin(), r.variables.end(), v) != r.variables.end())
            fail("duplicate variable '" + v + "'", voff);
          r.variables.push_back(v);
          if (accept(c, ')')) break;
          expect(c, ',');
        }
      }
      if (r.variables.empty()) fail("a polynomial ring needs at least one variable", koff);
      ctx = make_context(r.variables);
    } else if (kind == "quotient") {
      std::size_t boff = 0;
      std::string base = name_at(c, boff, "a ring name");
      const NameInfo& info = lookup(base, boff, {NameKind::ring}, "a ring");
      r.base = base;
      r.variables = info.ctx->names();
      ctx = info.ctx;
      if (accept(c, ',')) {
        r.relations = poly_list(c, ctx, ')');
      } else {
        expect(c, ')');
      }
    } else {
      fail("expected 'poly' or 'quotient'", koff);
    }
    declare(r.name, NameKind::ring, ctx, off);
    s.declarations.push_back(std::move(r));
  }

  void subalgebra(Session& s, Cursor& c, std::size_t line) {
    std::size_t off = 0, roff = 0;
    SubalgebraDecl a;
    a.line = line;
    a.name = name_at(c, off, "a subalgebra name");
    keyword(c, "in");
    a.ring = name_at(c, roff, "a ring name");
    const NameInfo& info = lookup(a.ring, roff, {NameKind::ring}, "a ring");
    expect(c, '=');
    keyword(c, "gens");
    expect(c, '{');
    a.generators = poly_list(c, info.ctx, '}');
    if (a.generators.empty()) fail("a subalgebra needs at least one generator", c.pos);
    declare(a.name, NameKind::subalgebra, info.ctx, off);
    s.declarations.push_back(std::move(a));
  }

  void derivation(Session& s, Cursor& c, std::size_t line) {
    std::size_t off = 0, doff = 0;
    DerivationDecl d;
    d.line = line;
    d.name = name_at(c, off, "a derivation name");
    keyword(c, "on");
    d.domain = name_at(c, doff, "a ring or subalgebra name");
    const NameInfo& info = lookup(d.domain, doff, {NameKind::ring, NameKind::subalgebra}, "a ring or subalgebra");
    expect(c, '{');
    if (!accept(c, '}')) {
      while (true) {
        std::size_t voff = 0;
        std::string v = name_at(c, voff, "a variable name");
        if (!info.ctx->index_of(v)) fail("unknown variable '" + v + "'", voff);
        for (const auto& [name, _] : d.images)
          if (name == v) fail("variable '" + v + "' has two images", voff);
        expect(c, '-');
        expect(c, '>');
        d.images.emplace_back(v, poly(c, info.ctx));
        if (accept(c, '}')) break;
        expect(c, ';');
        if (accept(c, '}')) break;
      }
    }
    declare(d.name, NameKind::derivation, info.ctx, off);
    s.declarations.push_back(std::move(d));
  }

  void ideal(Session& s, Cursor& c, std::size_t line) {
    std::size_t off = 0, ooff = 0;
    IdealDecl i;
    i.line = line;
    i.name = name_at(c, off, "an ideal name");
    keyword(c, "in");
    i.owner = name_at(c, ooff, "a ring or subalgebra name");
    const NameInfo& info = lookup(i.owner, ooff, {NameKind::ring, NameKind::subalgebra}, "a ring or subalgebra");
    expect(c, '=');
    expect(c, '(');
    i.generators = poly_list(c, info.ctx, ')');
    if (i.generators.empty()) fail("an ideal needs at least one generator", c.pos);
    declare(i.name, NameKind::ideal, info.ctx, off);
    s.declarations.push_back(std::move(i));
  }

  void command(Session& s, Cursor& c, const std::string& head, std::size_t line) {
    Command cmd;
    cmd.line = line;
    std::size_t off = 0;
    auto derivation_target = [&]() -> const NameInfo& {
      cmd.target = name_at(c, off, "a derivation name");
      return lookup(cmd.target, off, {NameKind::derivation}, "a derivation");
    };
    if (head == "check") {
      std::size_t woff = 0;
      std::string what = name_at(c, woff, "a check");
      if (what == "nilpotent") {
        cmd.kind = CommandKind::nilpotent;
        derivation_target();
        if (peek_keyword(c, "bound")) {
          keyword(c, "bound");
          cmd.number = number(c, "a bound");
          if (*cmd.number < 1) fail("bound must be at least 1", c.pos);
        }
      } else if (what == "fpf") {
        cmd.kind = CommandKind::fpf;
        derivation_target();
      } else if (what == "irreducible") {
        cmd.kind = CommandKind::irreducible;
        derivation_target();
      } else if (what == "contained") {
        cmd.kind = CommandKind::contained;
        const NameInfo& info = derivation_target();
        keyword(c, "in");
        expect(c, '(');
        cmd.polys.push_back(poly(c, info.ctx));
        expect(c, ')');
      } else if (what == "restricts") {
        cmd.kind = CommandKind::restricts;
        derivation_target();
        keyword(c, "to");
        std::size_t aoff = 0;
        cmd.other = name_at(c, aoff, "a subalgebra name");
        lookup(cmd.other, aoff, {NameKind::subalgebra}, "a subalgebra");
      } else if (what == "member") {
        cmd.kind = CommandKind::member;
        // The element's ring is known only after the target name.
        skip(c);
        const std::size_t poff = c.pos;
        Cursor probe = c;
        while (probe.pos < probe.s.size() && !word_at(probe.s, probe.pos, "in")) ++probe.pos;
        if (probe.pos >= probe.s.size()) fail("expected 'in'", probe.pos);
        Cursor after = probe;
        after.pos += 2;
        std::size_t toff = 0;
        cmd.target = name_at(after, toff, "an ideal or subalgebra name");
        const NameInfo& info = lookup(cmd.target, toff, {NameKind::ideal, NameKind::subalgebra}, "an ideal or subalgebra");
        c.pos = poff;
        cmd.polys.push_back(poly(c, info.ctx, "in"));
        keyword(c, "in");
        name_at(c, toff, "an ideal or subalgebra name");
      } else {
        fail("unknown check '" + what + "'", woff);
      }
    } else if (head == "grade") {
      if (peek_keyword(c, "ideal")) {
        keyword(c, "ideal");
        cmd.kind = CommandKind::grade_ideal;
        cmd.target = name_at(c, off, "an ideal name");
        lookup(cmd.target, off, {NameKind::ideal}, "an ideal");
      } else {
        cmd.kind = CommandKind::grade;
        derivation_target();
      }
    } else if (head == "kernel") {
      cmd.kind = CommandKind::kernel;
      derivation_target();
      keyword(c, "degree");
      cmd.number = number(c, "a degree");
      if (peek_keyword(c, "expect")) {
        keyword(c, "expect");
        std::size_t aoff = 0;
        cmd.other = name_at(c, aoff, "a subalgebra name");
        lookup(cmd.other, aoff, {NameKind::subalgebra}, "a subalgebra");
      }
    } else if (head == "slice") {
      cmd.kind = CommandKind::slice;
      derivation_target();
      keyword(c, "degree");
      cmd.number = number(c, "a degree");
    } else if (head == "dixmier") {
      cmd.kind = CommandKind::dixmier;
      const NameInfo& info = derivation_target();
      keyword(c, "slice");
      cmd.polys.push_back(poly(c, info.ctx, "of"));
      keyword(c, "of");
      cmd.polys.push_back(poly(c, info.ctx));
    } else if (head == "symbolic" || head == "rees") {
      cmd.kind = head == "symbolic" ? CommandKind::symbolic : CommandKind::rees;
      cmd.target = name_at(c, off, "an ideal name");
      const NameInfo& info = lookup(cmd.target, off, {NameKind::ideal}, "an ideal");
      keyword(c, head == "symbolic" ? "power" : "upto");
      cmd.number = number(c, head == "symbolic" ? "a power" : "a truncation");
      keyword(c, "saturate");
      cmd.polys.push_back(poly(c, info.ctx, "compare"));
      if (head == "rees" && peek_keyword(c, "compare")) {
        keyword(c, "compare");
        std::size_t doff = 0;
        cmd.other = name_at(c, doff, "a derivation name");
        const NameInfo& dinfo = lookup(cmd.other, doff, {NameKind::derivation}, "a derivation");
        keyword(c, "degree");
        cmd.number2 = number(c, "a degree");
        keyword(c, "grading");
        expect(c, '(');
        while (true) {
          std::size_t voff = 0;
          std::string v = name_at(c, voff, "a variable name");
          if (!dinfo.ctx->index_of(v)) fail("unknown variable '" + v + "'", voff);
          cmd.names.push_back(v);
          if (accept(c, ')')) break;
          expect(c, ',');
        }
      }
    } else if (head == "verify") {
      cmd.kind = CommandKind::verify;
      keyword(c, "generators");
      cmd.target = name_at(c, off, "a subalgebra name");
      const NameInfo& info = lookup(cmd.target, off, {NameKind::subalgebra}, "a subalgebra");
      keyword(c, "claim");
      expect(c, '{');
      cmd.polys = poly_list(c, info.ctx, '}');
      if (cmd.polys.empty()) fail("claim needs at least one generator", c.pos);
      keyword(c, "degree");
      cmd.number = number(c, "a degree");
    }
    if ((cmd.kind == CommandKind::kernel || cmd.kind == CommandKind::slice) && *cmd.number < 1)
      fail("degree must be at least 1", c.pos);
    s.commands.push_back(std::move(cmd));
  }

  std::string_view text_;
  std::size_t line_ = 1;
  std::vector<std::pair<std::size_t, std::size_t>> line_breaks_;  // (offset in statement, line)
  std::map<std::string, NameInfo> names_;
};

}  // namespace detail

inline Session parse_session(std::string_view text) { return detail::SessionParser(text).parse(); }

}  // namespace lnd
