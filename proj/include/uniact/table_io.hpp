#ifndef UNIACT_TABLE_IO_HPP_
#define UNIACT_TABLE_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "uniact/cayley.hpp"

namespace uniact::io {

//! A parsed table file: the semigroup plus the optional element names from
//! a "# names: ..." comment. `names` is empty when the file has none.
struct TableFile {
  Semigroup semigroup;
  std::vector<std::string> names;
};

//! Text format: first data line is the order n, followed by n lines of n
//! whitespace-separated entries (row index = left factor). '#' starts a
//! comment running to end of line; a comment of the form "# names: a b c"
//! attaches one name per element.
//! \throws ParseError with line and column, AssociativityError, RangeError
TableFile read_table(std::istream& in, const std::string& source = "<input>");
TableFile read_table_file(const std::filesystem::path& path);

void write_table(std::ostream& out, const Semigroup& s,
                 std::span<const std::string> names = {});
std::string format_table(const Semigroup& s,
                         std::span<const std::string> names = {});

}  // namespace uniact::io

#endif  // UNIACT_TABLE_IO_HPP_
