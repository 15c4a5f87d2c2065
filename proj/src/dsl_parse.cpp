#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "ggr/dsl.hpp"

namespace ggr::dsl {

ParseError::ParseError(int line, int column, std::string message, std::string token)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message +
                         (token.empty() ? "" : " (near '" + token + "')")),
      line_(line),
      column_(column),
      message_(std::move(message)),
      token_(std::move(token)) {}

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::Group: return "group";
    case Kind::Graduation: return "graduation";
    case Kind::GammaRing: return "gammaring";
    case Kind::Anneid: return "anneid";
    case Kind::Moduloid: return "moduloid";
  }
  return "group";
}

const GroupSpec* StructureSpec::group(const std::string& role) const {
  for (const auto& g : groups)
    if (g.role == role) return &g;
  return nullptr;
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '+' || c == '\'';
}

enum class Tok { Ident, Int, Punct, Arrow, End };

struct Token {
  Tok kind;
  std::string text;
  int column;
};

std::vector<Token> tokenize(const std::string& line, int lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const int col = static_cast<int>(i) + 1;
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < line.size() && ident_char(line[j])) ++j;
      out.push_back({Tok::Ident, line.substr(i, j - i), col});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c)) || (c == '-' && i + 1 < line.size() &&
                                                               std::isdigit(static_cast<unsigned char>(line[i + 1])))) {
      std::size_t j = i + 1;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      if (j < line.size() && ident_char(line[j]) && !std::isdigit(static_cast<unsigned char>(line[j]))) {
        std::size_t k = j;
        while (k < line.size() && ident_char(line[k])) ++k;
        throw ParseError(lineno, col, "malformed token", line.substr(i, k - i));
      }
      out.push_back({Tok::Int, line.substr(i, j - i), col});
      i = j;
    } else if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      out.push_back({Tok::Arrow, "->", col});
      i += 2;
    } else if (std::string("(){},=").find(c) != std::string::npos) {
      out.push_back({Tok::Punct, std::string(1, c), col});
      ++i;
    } else {
      throw ParseError(lineno, col, "unexpected character", std::string(1, c));
    }
  }
  out.push_back({Tok::End, "", static_cast<int>(line.size()) + 1});
  return out;
}

class LineParser {
 public:
  LineParser(std::vector<Token> toks, int line) : t_(std::move(toks)), line_(line) {}

  const Token& peek() const { return t_[pos_]; }
  const Token& next() { return t_[pos_ < t_.size() - 1 ? pos_++ : pos_]; }
  [[noreturn]] void fail(const std::string& msg, const Token& at) const {
    throw ParseError(line_, at.column, msg, at.text);
  }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, peek()); }
  const Token& expect(Tok k, const std::string& text, const std::string& what) {
    const Token& tok = peek();
    if (tok.kind != k || (!text.empty() && tok.text != text)) fail("expected " + what);
    return next();
  }
  std::string ident(const std::string& what) { return expect(Tok::Ident, "", what).text; }
  void end() {
    if (peek().kind != Tok::End) fail("unexpected trailing input");
  }
  int line() const { return line_; }
  // Top-level arguments of the parenthesized list at the cursor, or -1.
  int arity() const {
    if (!(t_[pos_].kind == Tok::Punct && t_[pos_].text == "(")) return -1;
    int depth = 0, count = 1;
    for (std::size_t i = pos_; i < t_.size(); ++i) {
      const auto& t = t_[i];
      if (t.kind != Tok::Punct) continue;
      if (t.text == "(") ++depth;
      if (t.text == ")" && --depth == 0) return count;
      if (t.text == "," && depth == 1) ++count;
    }
    return -1;
  }

 private:
  std::vector<Token> t_;
  std::size_t pos_ = 0;
  int line_;
};

struct GroupState {
  GroupSpec spec;
  std::map<std::string, Residues> aliases;
};

class Parser {
 public:
  StructureSpec run(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
      ++lineno;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      if (name_line(raw, lineno)) continue;
      auto toks = tokenize(raw, lineno);
      if (toks.front().kind == Tok::End) continue;
      LineParser p(std::move(toks), lineno);
      statement(p);
    }
    last_line_ = lineno + 1;
    finish();
    return std::move(spec_);
  }

 private:
  // `name` takes the rest of the line verbatim, up to a comment.
  bool name_line(const std::string& raw, int lineno) {
    std::size_t i = raw.find_first_not_of(" \t");
    if (i == std::string::npos || raw.compare(i, 4, "name") != 0) return false;
    std::size_t j = i + 4;
    if (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j])) && raw[j] != '#') return false;
    std::string rest = raw.substr(j);
    auto hash = rest.find('#');
    if (hash != std::string::npos) rest = rest.substr(0, hash);
    auto b = rest.find_first_not_of(" \t");
    auto e = rest.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError(lineno, static_cast<int>(j) + 1, "expected a name", "");
    if (seen_name_) throw ParseError(lineno, static_cast<int>(i) + 1, "duplicate name line", "name");
    seen_name_ = true;
    spec_.name = rest.substr(b, e - b + 1);
    return true;
  }

  void statement(LineParser& p) {
    const Token& kw = p.peek();
    if (kw.kind != Tok::Ident) p.fail("expected a keyword");
    std::string k = p.next().text;
    if (k == "version") {
      if (seen_version_) p.fail("duplicate version line", kw);
      const Token& v = p.expect(Tok::Int, "", "version number");
      if (v.text != "1") p.fail("unsupported version", v);
      seen_version_ = true;
      p.end();
    } else if (k == "kind") {
      if (kind_) p.fail("duplicate kind line", kw);
      const Token& v = p.expect(Tok::Ident, "", "kind");
      static const std::map<std::string, Kind> kinds = {{"group", Kind::Group},
                                                        {"graduation", Kind::Graduation},
                                                        {"gammaring", Kind::GammaRing},
                                                        {"anneid", Kind::Anneid},
                                                        {"moduloid", Kind::Moduloid}};
      auto it = kinds.find(v.text);
      if (it == kinds.end()) p.fail("unknown kind", v);
      kind_ = it->second;
      kind_line_ = p.line();
      p.end();
    } else if (k == "group") {
      group_line(p);
    } else if (k == "alias") {
      alias_line(p, kw);
    } else if (k == "component") {
      component_line(p, kw);
    } else if (k == "triple" || k == "cotriple" || k == "action") {
      table_line(p, k, kw);
    } else if (k == "default") {
      default_line(p);
    } else if (k == "rule") {
      const Token& v = p.expect(Tok::Ident, "", "rule name");
      if (v.text != "trilinear") p.fail("unknown rule", v);
      spec_.trilinear = true;
      p.end();
    } else {
      p.fail("unknown keyword", kw);
    }
  }

  void group_line(LineParser& p) {
    const Token& role_tok = p.peek();
    std::string role = p.ident("group role");
    for (const auto& g : groups_)
      if (g.spec.role == role) p.fail("duplicate group", role_tok);
    p.expect(Tok::Punct, "=", "'='");
    GroupState g;
    g.spec.role = role;
    if (p.peek().kind == Tok::Int && p.peek().text == "1") {
      p.next();
    } else {
      while (true) {
        const Token& f = p.peek();
        if (f.kind != Tok::Ident || f.text.size() < 2 || f.text[0] != 'Z' ||
            !std::all_of(f.text.begin() + 1, f.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
          p.fail("expected a cyclic factor Zn");
        int n = std::stoi(f.text.substr(1));
        if (n < 2) p.fail("cyclic order must be at least 2", f);
        g.spec.orders.push_back(n);
        p.next();
        if (p.peek().kind == Tok::Ident && p.peek().text == "x") {
          p.next();
          continue;
        }
        break;
      }
    }
    p.end();
    groups_.push_back(std::move(g));
  }

  GroupState& current(LineParser& p, const Token& kw) {
    if (groups_.empty()) p.fail(kw.text + " before any group", kw);
    return groups_.back();
  }

  GroupState& role(LineParser& p, const std::string& r, const Token& at) {
    for (auto& g : groups_)
      if (g.spec.role == r) return g;
    p.fail("group " + r + " must be declared first", at);
  }

  Residues element(LineParser& p, const GroupState& g) {
    const Token& t = p.peek();
    const std::size_t dim = g.spec.orders.size();
    if (t.kind == Tok::Int) {
      if (t.text != "0") p.fail("expected an element", t);
      p.next();
      return Residues(dim, 0);
    }
    if (t.kind == Tok::Ident) {
      auto it = g.aliases.find(t.text);
      if (it == g.aliases.end()) p.fail("unresolved name in group " + g.spec.role, t);
      p.next();
      return it->second;
    }
    if (t.kind == Tok::Punct && t.text == "(") {
      p.next();
      Residues r;
      std::vector<Token> at;
      if (!(p.peek().kind == Tok::Punct && p.peek().text == ")")) {
        while (true) {
          const Token& v = p.peek();
          if (v.kind != Tok::Int) p.fail("expected an integer residue");
          at.push_back(v);
          r.push_back(std::stoi(v.text));
          p.next();
          if (p.peek().kind == Tok::Punct && p.peek().text == ",") {
            p.next();
            continue;
          }
          break;
        }
      }
      if (!(p.peek().kind == Tok::Punct && p.peek().text == ")")) p.fail("expected ')'");
      p.next();
      if (r.size() != dim)
        p.fail("element has " + std::to_string(r.size()) + " residues but group " + g.spec.role + " has " +
                   std::to_string(dim) + " factors",
               t);
      for (std::size_t i = 0; i < dim; ++i)
        if (r[i] < 0 || r[i] >= g.spec.orders[i]) p.fail("residue out of range", at[i]);
      return r;
    }
    p.fail("expected an element");
  }

  void alias_line(LineParser& p, const Token& kw) {
    GroupState& g = current(p, kw);
    const Token& name_tok = p.peek();
    std::string name = p.ident("alias name");
    if (g.aliases.count(name)) p.fail("duplicate alias", name_tok);
    p.expect(Tok::Punct, "=", "'='");
    Residues r = element(p, g);
    p.end();
    g.aliases[name] = r;
    g.spec.aliases.push_back({name, r});
  }

  void component_line(LineParser& p, const Token& kw) {
    GroupState& g = current(p, kw);
    const Token& name_tok = p.peek();
    std::string name = p.ident("component name");
    for (const auto& c : g.spec.components)
      if (c.name == name) p.fail("duplicate component", name_tok);
    p.expect(Tok::Punct, "=", "'='");
    p.expect(Tok::Punct, "{", "'{'");
    ComponentSpec c{name, {}};
    if (!(p.peek().kind == Tok::Punct && p.peek().text == "}")) {
      while (true) {
        if (p.peek().kind == Tok::End) p.fail("unterminated '{'");
        c.generators.push_back(element(p, g));
        if (p.peek().kind == Tok::Punct && p.peek().text == ",") {
          p.next();
          continue;
        }
        break;
      }
    }
    if (p.peek().kind == Tok::End) p.fail("unterminated '{'");
    p.expect(Tok::Punct, "}", "'}'");
    p.end();
    g.spec.components.push_back(std::move(c));
  }

  void table_line(LineParser& p, const std::string& which, const Token& kw) {
    std::array<std::string, 4> roles;
    if (which == "triple") roles = {"R", "Gamma", "R", "R"};
    if (which == "cotriple") roles = {"Gamma", "R", "Gamma", "Gamma"};
    if (which == "action") roles = {"M", "Gamma", "R", "M"};
    const int n = p.arity();
    if (n >= 0 && n != 3) p.fail(which + " takes three arguments, got " + std::to_string(n));
    std::array<GroupState*, 4> gs{};
    for (int i = 0; i < 4; ++i) gs[static_cast<std::size_t>(i)] = &role(p, roles[static_cast<std::size_t>(i)], kw);
    p.expect(Tok::Punct, "(", "'('");
    std::array<Residues, 3> args;
    for (int i = 0; i < 3; ++i) {
      if (i > 0) {
        if (p.peek().kind == Tok::Punct && p.peek().text == ")") p.fail(which + " needs three arguments");
        p.expect(Tok::Punct, ",", "','");
      }
      args[static_cast<std::size_t>(i)] = element(p, *gs[static_cast<std::size_t>(i)]);
    }
    if (p.peek().kind == Tok::Punct && p.peek().text == ",") p.fail(which + " needs exactly three arguments");
    p.expect(Tok::Punct, ")", "')'");
    p.expect(Tok::Arrow, "", "'->'");
    Residues value = element(p, *gs[3]);
    p.end();
    TableEntry e{args[0], args[1], args[2], value};
    auto& table = which == "triple" ? spec_.triples : which == "cotriple" ? spec_.cotriples : spec_.actions;
    auto& seen = seen_[which];
    if (!seen.insert({e.a, e.b, e.c}).second) p.fail("duplicate " + which + " entry", kw);
    table.push_back(std::move(e));
  }

  void default_line(LineParser& p) {
    const Token& which = p.peek();
    std::string w = p.ident("triple, cotriple or action");
    if (w != "triple" && w != "cotriple" && w != "action") p.fail("expected triple, cotriple or action", which);
    p.expect(Tok::Arrow, "", "'->'");
    const Token& z = p.peek();
    if (!(z.kind == Tok::Int && z.text == "0")) p.fail("only '0' is allowed as a default");
    p.next();
    p.end();
    (w == "triple" ? spec_.default_triple : w == "cotriple" ? spec_.default_cotriple : spec_.default_action) = true;
  }

  void finish() {
    for (auto& g : groups_) spec_.groups.push_back(std::move(g.spec));
    std::sort(spec_.triples.begin(), spec_.triples.end());
    std::sort(spec_.cotriples.begin(), spec_.cotriples.end());
    std::sort(spec_.actions.begin(), spec_.actions.end());
    auto has = [&](const char* r) { return spec_.group(r) != nullptr; };
    if (!kind_) {
      if (has("M") || !spec_.actions.empty())
        kind_ = Kind::Moduloid;
      else if (has("R") && has("Gamma"))
        kind_ = spec_.trilinear ? Kind::GammaRing : Kind::Anneid;
      else if (spec_.groups.size() == 1 && !spec_.groups[0].components.empty())
        kind_ = Kind::Graduation;
      else
        kind_ = Kind::Group;
    }
    spec_.kind = *kind_;
    const int at = kind_line_ ? kind_line_ : last_line_;
    auto need = [&](const char* r) {
      if (!has(r)) throw ParseError(at, 1, kind_name(spec_.kind) + " needs group " + r, "");
    };
    switch (spec_.kind) {
      case Kind::Group:
      case Kind::Graduation:
        if (spec_.groups.size() != 1)
          throw ParseError(at, 1, kind_name(spec_.kind) + " needs exactly one group", "");
        break;
      case Kind::GammaRing:
      case Kind::Anneid:
        need("R");
        need("Gamma");
        break;
      case Kind::Moduloid:
        need("R");
        need("Gamma");
        need("M");
        break;
    }
  }

  StructureSpec spec_;
  std::vector<GroupState> groups_;
  std::optional<Kind> kind_;
  int kind_line_ = 0;
  int last_line_ = 1;
  bool seen_version_ = false;
  bool seen_name_ = false;
  std::map<std::string, std::set<std::array<Residues, 3>>> seen_;
};

std::string element_text(const GroupSpec& g, const Residues& r) {
  if (std::all_of(r.begin(), r.end(), [](int v) { return v == 0; })) return "0";
  for (const auto& a : g.aliases)
    if (a.value == r) return a.name;
  std::string s = "(";
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
  return s + ")";
}

}  // namespace

StructureSpec parse(const std::string& text) { return Parser().run(text); }

StructureSpec parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::string serialize(const StructureSpec& spec) {
  std::ostringstream out;
  out << "version " << spec.version << "\n";
  out << "kind " << kind_name(spec.kind) << "\n";
  if (!spec.name.empty()) out << "name " << spec.name << "\n";
  for (const auto& g : spec.groups) {
    out << "group " << g.role << " = ";
    if (g.orders.empty()) out << "1";
    for (std::size_t i = 0; i < g.orders.size(); ++i) out << (i ? " x " : "") << "Z" << g.orders[i];
    out << "\n";
    for (const auto& a : g.aliases) {
      std::string s = "(";
      for (std::size_t i = 0; i < a.value.size(); ++i) s += (i ? "," : "") + std::to_string(a.value[i]);
      out << "alias " << a.name << " = " << s << ")\n";
    }
    for (const auto& c : g.components) {
      out << "component " << c.name << " = {";
      for (std::size_t i = 0; i < c.generators.size(); ++i)
        out << (i ? ", " : "") << element_text(g, c.generators[i]);
      out << "}\n";
    }
  }
  if (spec.trilinear) out << "rule trilinear\n";
  auto table = [&](const char* kw, const std::vector<TableEntry>& entries, bool def, const char* r1, const char* r2,
                   const char* r3, const char* rv) {
    const GroupSpec *g1 = spec.group(r1), *g2 = spec.group(r2), *g3 = spec.group(r3), *gv = spec.group(rv);
    for (const auto& e : entries)
      out << kw << " (" << element_text(*g1, e.a) << ", " << element_text(*g2, e.b) << ", "
          << element_text(*g3, e.c) << ") -> " << element_text(*gv, e.value) << "\n";
    if (def) out << "default " << kw << " -> 0\n";
  };
  if (spec.group("R") && spec.group("Gamma")) {
    table("triple", spec.triples, spec.default_triple, "R", "Gamma", "R", "R");
    table("cotriple", spec.cotriples, spec.default_cotriple, "Gamma", "R", "Gamma", "Gamma");
    if (spec.group("M")) table("action", spec.actions, spec.default_action, "M", "Gamma", "R", "M");
  }
  return out.str();
}

}  // namespace ggr::dsl
