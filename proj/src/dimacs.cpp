#include "partsat/dimacs.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace partsat {

namespace {

struct Cursor {
  std::string_view text;
  std::size_t at = 0;
  std::int64_t line = 1;

  bool done() const { return at >= text.size(); }
  char peek() const { return text[at]; }
  void advance() {
    if (text[at] == '\n')
      ++line;
    ++at;
  }
  void skip_space() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek())))
      advance();
  }
  void skip_line() {
    while (!done() && peek() != '\n')
      ++at;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("line " + std::to_string(line) + ": " + what);
  }
};

// Reads one whitespace-delimited token; empty view when input is exhausted.
std::string_view next_token(Cursor& cur) {
  cur.skip_space();
  std::size_t start = cur.at;
  while (!cur.done() && !std::isspace(static_cast<unsigned char>(cur.peek())))
    ++cur.at;
  return cur.text.substr(start, cur.at - start);
}

template <class Int>
Int parse_int(Cursor& cur, std::string_view token, const char* what) {
  Int value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    cur.fail(std::string("expected ") + what + ", got '" + std::string(token) + "'");
  return value;
}

} // namespace

Formula parse_dimacs(std::string_view text, BuildOptions opts) {
  Cursor cur{text};
  std::int64_t declared_n = -1, declared_m = -1;

  // header, skipping comments
  while (true) {
    cur.skip_space();
    if (cur.done())
      cur.fail("missing 'p cnf' header");
    if (cur.peek() == 'c') {
      cur.skip_line();
      continue;
    }
    if (cur.peek() != 'p')
      cur.fail("clause data before 'p cnf' header");
    std::string_view p = next_token(cur);
    std::string_view kind = next_token(cur);
    if (p != "p" || kind != "cnf")
      cur.fail("malformed header, expected 'p cnf <vars> <clauses>'");
    declared_n = parse_int<std::int64_t>(cur, next_token(cur), "variable count");
    declared_m = parse_int<std::int64_t>(cur, next_token(cur), "clause count");
    if (declared_n < 0 || declared_m < 0 || declared_n > INT32_MAX)
      cur.fail("header counts out of range");
    break;
  }

  std::vector<Clause> clauses;
  clauses.reserve(static_cast<std::size_t>(
      std::min<std::int64_t>(declared_m, 1 << 20)));
  Clause current;
  while (true) {
    cur.skip_space();
    if (cur.done())
      break;
    if (cur.peek() == 'c') {
      cur.skip_line();
      continue;
    }
    if (cur.peek() == 'p')
      cur.fail("duplicate 'p cnf' header");
    std::string_view token = next_token(cur);
    std::int64_t lit = parse_int<std::int64_t>(cur, token, "literal");
    if (lit == 0) {
      if (current.empty())
        cur.fail("zero-length clause (clause " +
                 std::to_string(clauses.size() + 1) + ")");
      if (static_cast<std::int64_t>(clauses.size()) == declared_m)
        cur.fail("more clauses than the header declares (" +
                 std::to_string(declared_m) + ")");
      clauses.push_back(std::move(current));
      current.clear();
      continue;
    }
    std::int64_t v = lit < 0 ? -lit : lit;
    if (v > declared_n)
      cur.fail("literal " + std::to_string(lit) + " exceeds declared variable count " +
               std::to_string(declared_n));
    current.push_back(static_cast<Lit>(lit));
  }
  if (!current.empty())
    cur.fail("unterminated clause at end of input");
  if (static_cast<std::int64_t>(clauses.size()) != declared_m)
    cur.fail("header declares " + std::to_string(declared_m) + " clauses, found " +
             std::to_string(clauses.size()));

  try {
    return Formula(static_cast<std::int32_t>(declared_n), std::move(clauses), opts);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Formula parse_matrix(std::string_view text, BuildOptions opts) {
  std::vector<Clause> clauses;
  std::int64_t columns = -1;
  std::int64_t line_no = 0;
  std::size_t at = 0;

  while (at < text.size()) {
    std::size_t eol = text.find('\n', at);
    std::string_view line = text.substr(at, eol == std::string_view::npos
                                                ? std::string_view::npos
                                                : eol - at);
    at = eol == std::string_view::npos ? text.size() : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);

    // cells
    std::vector<std::string_view> cells;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
        ++i;
      std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
        ++i;
      if (i > start)
        cells.push_back(line.substr(start, i - start));
    }
    if (cells.empty())
      continue; // blank line

    if (columns < 0)
      columns = static_cast<std::int64_t>(cells.size());
    else if (static_cast<std::int64_t>(cells.size()) != columns)
      throw ParseError("line " + std::to_string(line_no) + ": ragged row, expected " +
                       std::to_string(columns) + " cells, got " +
                       std::to_string(cells.size()));

    Clause clause;
    for (std::size_t s = 0; s < cells.size(); ++s) {
      std::string_view cell = cells[s];
      if (cell == "+")
        clause.push_back(static_cast<Lit>(s + 1));
      else if (cell == "-")
        clause.push_back(-static_cast<Lit>(s + 1));
      else if (cell != "0")
        throw ParseError("line " + std::to_string(line_no) + ": invalid cell '" +
                         std::string(cell) + "', expected one of + - 0");
    }
    if (clause.empty())
      throw ParseError("line " + std::to_string(line_no) + ": row has no literals");
    clauses.push_back(std::move(clause));
  }

  if (columns < 0)
    throw ParseError("matrix input has no rows");
  try {
    return Formula(static_cast<std::int32_t>(columns), std::move(clauses), opts);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Formula parse_file(const std::string& path, FileFormat format, BuildOptions opts) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();

  if (format == FileFormat::Auto) {
    format = FileFormat::Dimacs;
    auto dot = path.find_last_of('.');
    if (dot != std::string::npos && path.substr(dot) == ".mat")
      format = FileFormat::Matrix;
  }
  try {
    return format == FileFormat::Matrix ? parse_matrix(text, opts)
                                        : parse_dimacs(text, opts);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string write_dimacs(const Formula& f) {
  std::string out;
  out.reserve(32 + static_cast<std::size_t>(f.stats().total_literals) * 4);
  out += "p cnf ";
  out += std::to_string(f.var_count());
  out += ' ';
  out += std::to_string(f.clause_count());
  out += '\n';
  char buf[16];
  for (const Clause& c : f.clauses()) {
    for (Lit l : c) {
      auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), l);
      out.append(buf, end);
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

} // namespace partsat
