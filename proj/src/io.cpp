#include "lsalg/io.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "lsalg/errors.hpp"

namespace lsalg {

namespace {

struct Line {
  int number = 0;      // 1-based
  std::string text;    // comment-stripped, trimmed
};

std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    std::string_view raw =
        text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    ++number;
    std::string line(raw);
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
    while (!line.empty() && is_space(line.back())) line.pop_back();
    std::size_t start = 0;
    while (start < line.size() && is_space(line[start])) ++start;
    line.erase(0, start);
    if (!line.empty()) lines.push_back(Line{number, std::move(line)});
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return lines;
}

std::vector<std::string> tokens(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream stream{std::string(text)};
  std::string tok;
  while (stream >> tok) out.push_back(tok);
  return out;
}

int parse_int(const std::string& tok, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  return value;
}

struct Directive {
  int line;
  std::string head;               // "states", "base", "alphabet", "classes", "trans"
  std::string symbol;             // for trans
  std::vector<std::string> args;  // tokens after the colon
};

Directive split_directive(const Line& line) {
  auto colon = line.text.find(':');
  if (colon == std::string::npos)
    throw ParseError(line.number, "expected a ':' after the directive name");
  std::vector<std::string> head = tokens(std::string_view(line.text).substr(0, colon));
  Directive d;
  d.line = line.number;
  d.args = tokens(std::string_view(line.text).substr(colon + 1));
  if (head.size() == 1 && (head[0] == "states" || head[0] == "base" ||
                           head[0] == "alphabet" || head[0] == "classes")) {
    d.head = head[0];
  } else if (head.size() == 2 && head[0] == "trans") {
    d.head = "trans";
    d.symbol = head[1];
  } else {
    throw ParseError(line.number, "unknown directive '" + line.text.substr(0, colon) + "'");
  }
  return d;
}

}  // namespace

ParsedFile parse_algebra_file(std::string_view text) {
  const std::vector<Line> lines = significant_lines(text);
  if (lines.empty()) throw ParseError(1, "empty input");

  std::vector<Directive> directives;
  directives.reserve(lines.size());
  for (const Line& line : lines) directives.push_back(split_directive(line));

  if (directives.front().head != "states")
    throw ParseError(directives.front().line, "the first directive must be 'states'");

  std::optional<int> n;
  std::optional<int> base;
  std::optional<std::vector<std::string>> alphabet;
  std::optional<std::vector<int>> classes;
  int classes_line = 0;
  struct TransLine {
    int line;
    std::string symbol;
    std::vector<int> targets;
  };
  std::vector<TransLine> trans_lines;

  for (const Directive& d : directives) {
    if (d.head == "states") {
      if (n) throw ParseError(d.line, "duplicate 'states' directive");
      if (d.args.size() != 1) throw ParseError(d.line, "'states' takes one integer");
      n = parse_int(d.args[0], d.line);
      if (*n < 1) throw ParseError(d.line, "state count must be at least 1");
    } else if (d.head == "base") {
      if (base) throw ParseError(d.line, "duplicate 'base' directive");
      if (d.args.size() != 1) throw ParseError(d.line, "'base' takes one integer");
      base = parse_int(d.args[0], d.line);
      if (*base < 0 || *base >= *n) throw ParseError(d.line, "base index out of range");
    } else if (d.head == "alphabet") {
      if (alphabet) throw ParseError(d.line, "duplicate 'alphabet' directive");
      if (d.args.empty()) throw ParseError(d.line, "alphabet must be non-empty");
      std::unordered_set<std::string> seen;
      for (const std::string& sym : d.args)
        if (!seen.insert(sym).second)
          throw ParseError(d.line, "duplicate alphabet symbol '" + sym + "'");
      alphabet = d.args;
    } else if (d.head == "classes") {
      if (classes) throw ParseError(d.line, "duplicate 'classes' directive");
      std::vector<int> ids;
      for (const std::string& tok : d.args) ids.push_back(parse_int(tok, d.line));
      if (static_cast<int>(ids.size()) != *n)
        throw ParseError(d.line, "'classes' needs one id per state");
      for (int id : ids)
        if (id < 0) throw ParseError(d.line, "class ids must be non-negative");
      classes = std::move(ids);
      classes_line = d.line;
    } else {  // trans
      for (const TransLine& prev : trans_lines)
        if (prev.symbol == d.symbol)
          throw ParseError(d.line, "duplicate 'trans' directive for symbol '" + d.symbol + "'");
      TransLine t;
      t.line = d.line;
      t.symbol = d.symbol;
      for (const std::string& tok : d.args) t.targets.push_back(parse_int(tok, d.line));
      if (static_cast<int>(t.targets.size()) != *n)
        throw ParseError(d.line, "'trans " + d.symbol + "' needs one target per state");
      for (int x : t.targets)
        if (x < 0 || x >= *n) throw ParseError(d.line, "transition target out of range");
      trans_lines.push_back(std::move(t));
    }
  }

  const int last_line = lines.back().number;
  if (!base) throw ParseError(last_line, "missing 'base' directive");
  if (!alphabet) throw ParseError(last_line, "missing 'alphabet' directive");

  std::unordered_map<std::string, Sym> symbol_index;
  for (std::size_t i = 0; i < alphabet->size(); ++i)
    symbol_index.emplace((*alphabet)[i], static_cast<Sym>(i));

  std::vector<std::vector<State>> tables(alphabet->size());
  std::vector<bool> have(alphabet->size(), false);
  for (const TransLine& t : trans_lines) {
    auto it = symbol_index.find(t.symbol);
    if (it == symbol_index.end())
      throw ParseError(t.line, "'trans " + t.symbol + "' names a symbol outside the alphabet");
    tables[static_cast<std::size_t>(it->second)] = t.targets;
    have[static_cast<std::size_t>(it->second)] = true;
  }
  for (std::size_t i = 0; i < have.size(); ++i)
    if (!have[i])
      throw ParseError(last_line, "missing 'trans " + (*alphabet)[i] + "' directive");

  ParsedFile out{Algebra(*n, *base, *alphabet, std::move(tables)), std::nullopt};
  if (classes) {
    // Density is the quotient code's concern; the file format only fixes
    // shape and range.
    (void)classes_line;
    out.partition = Partition{*classes};
  }
  return out;
}

Algebra parse_algebra(std::string_view text) {
  return parse_algebra_file(text).algebra;
}

std::string format_algebra(const Algebra& alg) {
  std::ostringstream out;
  out << "states: " << alg.size() << "\n";
  out << "base: " << alg.base() << "\n";
  out << "alphabet:";
  for (const std::string& sym : alg.alphabet()) out << " " << sym;
  out << "\n";
  for (Sym s = 0; s < alg.symbol_count(); ++s) {
    out << "trans " << alg.symbol_name(s) << ":";
    for (State x = 0; x < alg.size(); ++x) out << " " << alg.step(s, x);
    out << "\n";
  }
  return out.str();
}

Partition parse_partition(std::string_view text, int n) {
  const std::vector<Line> lines = significant_lines(text);
  if (lines.empty()) throw ParseError(1, "empty partition input");
  std::optional<std::vector<int>> classes;
  for (const Line& line : lines) {
    Directive d = split_directive(line);
    if (d.head != "classes")
      throw ParseError(d.line, "expected a 'classes' directive");
    if (classes) throw ParseError(d.line, "duplicate 'classes' directive");
    std::vector<int> ids;
    for (const std::string& tok : d.args) ids.push_back(parse_int(tok, d.line));
    if (static_cast<int>(ids.size()) != n)
      throw ParseError(d.line, "'classes' needs one id per state");
    for (int id : ids)
      if (id < 0) throw ParseError(d.line, "class ids must be non-negative");
    classes = std::move(ids);
  }
  return Partition{*classes};
}

std::string format_partition(const Partition& part) {
  std::ostringstream out;
  out << "classes:";
  for (int id : part.classes) out << " " << id;
  out << "\n";
  return out.str();
}

BoundarySet parse_boundary_set(std::string_view text,
                               std::vector<std::string> alphabet) {
  const std::vector<Line> lines = significant_lines(text);
  if (lines.empty()) throw ParseError(1, "empty boundary-set input");
  if (lines.front().text != "-")
    throw ParseError(lines.front().number,
                     "the first word must be '-' (the empty word)");

  BoundarySet out;
  for (const Line& line : lines) {
    std::vector<std::string> syms = tokens(line.text);
    if (syms.size() == 1 && syms[0] == "-")
      out.words.push_back(Word{});
    else
      out.words.push_back(Word(syms.begin(), syms.end()));
  }

  if (!alphabet.empty()) {
    out.alphabet = std::move(alphabet);
  } else {
    std::set<std::string> seen;
    for (const Word& w : out.words) seen.insert(w.begin(), w.end());
    out.alphabet.assign(seen.begin(), seen.end());
  }
  return out;
}

Word parse_word(std::string_view text) {
  std::vector<std::string> syms = tokens(text);
  if (syms.size() == 1 && syms[0] == "-") return Word{};
  return Word(syms.begin(), syms.end());
}

std::string format_word(const Word& w) {
  if (w.empty()) return "-";
  std::ostringstream out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out << " ";
    out << w[i];
  }
  return out.str();
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string export_dot(const Algebra& alg, const std::vector<std::string>& labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != alg.size())
    throw std::invalid_argument("need one label per state");

  std::ostringstream out;
  out << "digraph algebra {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=circle];\n";
  for (State x = 0; x < alg.size(); ++x) {
    std::string label =
        labels.empty() ? std::to_string(x) : labels[static_cast<std::size_t>(x)];
    out << "  " << x << " [label=\"" << dot_escape(label) << "\"";
    if (x == alg.base()) out << ", shape=doublecircle";
    out << "];\n";
  }
  for (Sym s = 0; s < alg.symbol_count(); ++s)
    for (State x = 0; x < alg.size(); ++x)
      out << "  " << x << " -> " << alg.step(s, x) << " [label=\""
          << dot_escape(alg.symbol_name(s)) << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace lsalg
