#include "uniact/table_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace uniact::io {

namespace {

constexpr const char kNamesTag[] = "names:";

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

// Splits a line into whitespace-separated tokens, dropping everything from
// the first '#'. Returns the names list instead if the comment is a names
// directive.
struct LineScan {
  std::vector<Token> tokens;
  std::vector<std::string> names;
  bool has_names = false;
};

LineScan scan_line(const std::string& line) {
  LineScan out;
  std::string body = line;
  const auto hash = line.find('#');
  if (hash != std::string::npos) {
    body = line.substr(0, hash);
    std::istringstream comment(line.substr(hash + 1));
    std::string word;
    if (comment >> word && word == kNamesTag) {
      out.has_names = true;
      while (comment >> word) out.names.push_back(word);
    }
  }
  std::size_t i = 0;
  while (i < body.size()) {
    if (std::isspace(static_cast<unsigned char>(body[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < body.size() &&
           !std::isspace(static_cast<unsigned char>(body[i]))) {
      ++i;
    }
    out.tokens.push_back(
        {body.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

int parse_entry(const Token& tok, const std::string& source, int line_no) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(tok.text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.text.size()) {
    throw ParseError(source, line_no, tok.column,
                     "expected an integer, got '" + tok.text + "'");
  }
  return value;
}

}  // namespace

TableFile read_table(std::istream& in, const std::string& source) {
  std::string line;
  int line_no = 0;
  int order = -1;
  std::vector<int> entries;
  std::vector<std::string> names;
  int last_line = 0;
  while (std::getline(in, line)) {
    ++line_no;
    LineScan scan = scan_line(line);
    if (scan.has_names) {
      if (!names.empty()) {
        throw ParseError(source, line_no, 1, "duplicate names comment");
      }
      names = scan.names;
    }
    for (const Token& tok : scan.tokens) {
      const int value = parse_entry(tok, source, line_no);
      if (order < 0) {
        if (value < 1) {
          throw ParseError(source, line_no, tok.column,
                           "order must be a positive integer");
        }
        order = value;
      } else {
        if (static_cast<int>(entries.size()) >= order * order) {
          throw ParseError(source, line_no, tok.column,
                           "extra entry beyond " + std::to_string(order) +
                               "x" + std::to_string(order) + " table");
        }
        entries.push_back(value);
      }
      last_line = line_no;
    }
  }
  if (order < 0) {
    throw ParseError(source, line_no + 1, 1, "missing order line");
  }
  if (static_cast<int>(entries.size()) != order * order) {
    throw ParseError(source, last_line, 1,
                     "table has " + std::to_string(entries.size()) +
                         " entries, expected " + std::to_string(order * order));
  }
  if (!names.empty() && static_cast<int>(names.size()) != order) {
    throw ParseError(source, line_no, 1,
                     "names comment lists " + std::to_string(names.size()) +
                         " names for " + std::to_string(order) + " elements");
  }
  return TableFile{Semigroup(order, std::move(entries)), std::move(names)};
}

TableFile read_table_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError(path.string(), 0, 0, "cannot open file");
  }
  return read_table(in, path.string());
}

void write_table(std::ostream& out, const Semigroup& s,
                 std::span<const std::string> names) {
  if (!names.empty()) {
    out << "# names:";
    for (const auto& name : names) out << ' ' << name;
    out << '\n';
  }
  out << s.order() << '\n';
  for (int i = 0; i < s.order(); ++i) {
    for (int j = 0; j < s.order(); ++j) {
      if (j > 0) out << ' ';
      out << s.product(i, j);
    }
    out << '\n';
  }
}

std::string format_table(const Semigroup& s,
                         std::span<const std::string> names) {
  std::ostringstream out;
  write_table(out, s, names);
  return out.str();
}

}  // namespace uniact::io
