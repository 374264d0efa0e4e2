#include "modlp/parser.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_set>

namespace modlp {

namespace {

struct token {
  enum kind_t { atom, pipe, arrow, comma, dot, knot, directive, end } kind;
  std::string text;   // atom name or directive keyword
  int column = 0;
};

struct line_lexer {
  std::string_view line;
  int lineno;
  std::size_t pos = 0;

  [[noreturn]] void err(int col, const std::string& msg) const {
    fail(errc::syntax_error,
         "line " + std::to_string(lineno) + ", column " + std::to_string(col) + ": " + msg);
  }

  void skip_space() {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
  }

  bool ident_char(char c) const {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string read_ident(const char* what) {
    int col = static_cast<int>(pos) + 1;
    if (pos >= line.size() || !std::isalpha(static_cast<unsigned char>(line[pos])))
      err(col, std::string("expected ") + what);
    std::size_t start = pos;
    while (pos < line.size() && ident_char(line[pos])) ++pos;
    return std::string(line.substr(start, pos - start));
  }

  // atom := lowercase ident, optionally '(' arg {',' arg} ')' with
  // identifier or integer args; the whole thing is one opaque name
  std::string read_atom() {
    skip_space();
    int col = static_cast<int>(pos) + 1;
    if (pos >= line.size() || !std::islower(static_cast<unsigned char>(line[pos])))
      err(col, "expected an atom (lowercase identifier)");
    std::string name = read_ident("atom");
    if (name == "not") err(col, "'not' is a keyword, not an atom");
    skip_space();
    if (pos < line.size() && line[pos] == '(') {
      ++pos;
      name += '(';
      bool first = true;
      while (true) {
        skip_space();
        if (!first) {
          if (pos >= line.size() || line[pos] != ',') break;
          ++pos;
          name += ',';
          skip_space();
        }
        int acol = static_cast<int>(pos) + 1;
        if (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) {
          while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos])))
            name += line[pos++];
        } else if (pos < line.size() &&
                   (std::isalpha(static_cast<unsigned char>(line[pos])) || line[pos] == '_')) {
          while (pos < line.size() && ident_char(line[pos])) name += line[pos++];
        } else {
          err(acol, "expected an identifier or integer argument");
        }
        first = false;
        skip_space();
        if (pos < line.size() && line[pos] == ')') break;
      }
      if (pos >= line.size() || line[pos] != ')')
        err(static_cast<int>(pos) + 1, "expected ')' in atom arguments");
      ++pos;
      name += ')';
    }
    return name;
  }

  token next() {
    skip_space();
    int col = static_cast<int>(pos) + 1;
    if (pos >= line.size()) return {token::end, "", col};
    char c = line[pos];
    if (c == '|') { ++pos; return {token::pipe, "|", col}; }
    if (c == ',') { ++pos; return {token::comma, ",", col}; }
    if (c == '.') { ++pos; return {token::dot, ".", col}; }
    if (c == ':') {
      if (pos + 1 < line.size() && line[pos + 1] == '-') {
        pos += 2;
        return {token::arrow, ":-", col};
      }
      err(col, "expected ':-'");
    }
    if (c == '#') {
      ++pos;
      std::string kw = read_ident("directive name after '#'");
      return {token::directive, kw, col};
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t save = pos;
      std::string name = read_atom();
      if (name == "not") { pos = save; }  // unreachable; read_atom rejects
      return {name == "not" ? token::knot : token::atom, name, col};
    }
    err(col, std::string("unexpected character '") + c + "'");
  }

  // peek whether the next word is the keyword 'not'
  bool at_not() {
    skip_space();
    if (pos + 3 > line.size()) return false;
    if (line.compare(pos, 3, "not") != 0) return false;
    return pos + 3 == line.size() || !ident_char(line[pos + 3]);
  }
};

struct raw_rule {
  std::vector<std::string> head;
  std::vector<std::string> pos;
  std::vector<std::string> neg;
  int lineno;
};

struct document {
  std::optional<std::string> name;
  std::optional<std::vector<std::string>> input, output, hidden;
  std::vector<raw_rule> rules;
};

void parse_atom_list(line_lexer& lx, std::vector<std::string>& out) {
  while (true) {
    out.push_back(lx.read_atom());
    lx.skip_space();
    if (lx.pos < lx.line.size() && lx.line[lx.pos] == ',') {
      ++lx.pos;
      continue;
    }
    break;
  }
}

void expect_dot_end(line_lexer& lx) {
  token t = lx.next();
  if (t.kind != token::dot) lx.err(t.column, "expected '.'");
  t = lx.next();
  if (t.kind != token::end) lx.err(t.column, "unexpected input after '.'");
}

void parse_body(line_lexer& lx, raw_rule& r) {
  lx.skip_space();
  if (lx.pos < lx.line.size() && lx.line[lx.pos] == '.') return;  // empty body
  while (true) {
    if (lx.at_not()) {
      lx.pos += 3;
      lx.skip_space();
      r.neg.push_back(lx.read_atom());
    } else {
      r.pos.push_back(lx.read_atom());
    }
    lx.skip_space();
    if (lx.pos < lx.line.size() && lx.line[lx.pos] == ',') {
      ++lx.pos;
      continue;
    }
    break;
  }
}

void parse_line(line_lexer& lx, document& doc) {
  lx.skip_space();
  if (lx.pos >= lx.line.size()) return;
  if (lx.line[lx.pos] == '#') {
    ++lx.pos;
    int col = static_cast<int>(lx.pos);
    std::string kw = lx.read_ident("directive name");
    lx.skip_space();
    if (kw == "module") {
      if (doc.name) lx.err(col, "duplicate #module directive");
      doc.name = lx.read_ident("module name");
      expect_dot_end(lx);
      return;
    }
    std::optional<std::vector<std::string>>* slot = nullptr;
    if (kw == "input") slot = &doc.input;
    else if (kw == "output") slot = &doc.output;
    else if (kw == "hidden") slot = &doc.hidden;
    else lx.err(col, "unknown directive '#" + kw + "'");
    if (slot->has_value()) lx.err(col, "duplicate #" + kw + " directive");
    slot->emplace();
    parse_atom_list(lx, **slot);
    expect_dot_end(lx);
    return;
  }

  raw_rule r;
  r.lineno = lx.lineno;
  lx.skip_space();
  bool has_head = !(lx.line[lx.pos] == ':');
  if (has_head) {
    while (true) {
      r.head.push_back(lx.read_atom());
      lx.skip_space();
      if (lx.pos < lx.line.size() && lx.line[lx.pos] == '|') {
        ++lx.pos;
        continue;
      }
      break;
    }
    lx.skip_space();
    if (lx.pos < lx.line.size() && lx.line[lx.pos] == '.') {
      ++lx.pos;
      token t = lx.next();
      if (t.kind != token::end) lx.err(t.column, "unexpected input after '.'");
      doc.rules.push_back(std::move(r));
      return;
    }
  }
  token t = lx.next();
  if (t.kind != token::arrow) lx.err(t.column, "expected ':-' or '.'");
  parse_body(lx, r);
  expect_dot_end(lx);
  doc.rules.push_back(std::move(r));
}

}  // namespace

dlp_function parse_module(std::string_view text, workspace ws) {
  document doc;
  int lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view line = text.substr(
        start, nl == std::string_view::npos ? text.size() - start : nl - start);
    ++lineno;
    if (auto cut = line.find('%'); cut != std::string_view::npos) line = line.substr(0, cut);
    line_lexer lx{line, lineno};
    parse_line(lx, doc);
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }

  std::unordered_set<std::string> declared;
  auto to_set = [&](const std::optional<std::vector<std::string>>& names, const char* kind) {
    atom_set out;
    if (!names) return out;
    for (const auto& n : *names) {
      if (!declared.insert(n).second)
        fail(errc::syntax_error, "atom '" + n + "' declared more than once (#" + kind + ")");
      out.insert(ws->intern(n));
    }
    return out;
  };
  atom_set input = to_set(doc.input, "input");
  atom_set output = to_set(doc.output, "output");
  atom_set hidden = to_set(doc.hidden, "hidden");

  auto resolve = [&](const std::vector<std::string>& names, int lineno_) {
    atom_set out;
    for (const auto& n : names) {
      if (!declared.count(n))
        fail(errc::undeclared_atom,
             "line " + std::to_string(lineno_) + ": atom '" + n + "' is not declared");
      out.insert(ws->intern(n));
    }
    return out;
  };
  std::vector<rule> rules;
  rules.reserve(doc.rules.size());
  for (const auto& r : doc.rules)
    rules.push_back({resolve(r.head, r.lineno), resolve(r.pos, r.lineno),
                     resolve(r.neg, r.lineno)});
  return dlp_function::validate(std::move(ws), std::move(rules), std::move(input),
                                std::move(output), std::move(hidden));
}

std::string render_rule(const atom_table& tbl, const rule& r) {
  std::ostringstream out;
  bool first = true;
  for (const auto& n : sorted_names(tbl, r.head)) {
    if (!first) out << " | ";
    out << n;
    first = false;
  }
  if (!r.is_fact() || r.head.empty()) {
    if (!r.head.empty()) out << ' ';
    out << ":-";
    first = true;
    for (const auto& n : sorted_names(tbl, r.pos_body)) {
      out << (first ? " " : ", ") << n;
      first = false;
    }
    for (const auto& n : sorted_names(tbl, r.neg_body)) {
      out << (first ? " not " : ", not ") << n;
      first = false;
    }
  }
  out << '.';
  return out.str();
}

static std::string render_module_impl(const dlp_function& fn,
                                      const std::optional<std::string>& name) {
  const atom_table& tbl = fn.table();
  std::ostringstream out;
  if (name) out << "#module " << *name << ".\n";
  auto directive = [&](const char* kw, const atom_set& s) {
    if (s.empty()) return;
    out << '#' << kw << ' ';
    bool first = true;
    for (const auto& n : sorted_names(tbl, s)) {
      if (!first) out << ", ";
      out << n;
      first = false;
    }
    out << ".\n";
  };
  directive("input", fn.input());
  directive("output", fn.output());
  directive("hidden", fn.hidden());
  for (const auto& r : fn.rules()) out << render_rule(tbl, r) << '\n';
  return out.str();
}

std::string render_module(const dlp_function& fn) {
  return render_module_impl(fn, std::nullopt);
}

std::string render_module(const dlp_function& fn, std::string_view name) {
  return render_module_impl(fn, std::string(name));
}

std::string render_models(const model_set& ms) {
  std::ostringstream out;
  for (const auto& m : ms.models()) out << show_atoms(*ms.ws(), m) << '\n';
  return out.str();
}

}  // namespace modlp
