#pragma once

// Text format for bound quiver algebras.
//
//   # comment
//   vertices: 6                 (ids 1..6)   or   vertices: 2, 5, 9
//   arrow a1: 1 -> 3
//   relation: a1 a3             (traversal order: a1 first, then a3)
//
// Arrow ids match [A-Za-z_][A-Za-z0-9_']*. Blank lines and trailing comments
// are ignored. The vertices line may appear anywhere, but only once.

#include <stdexcept>
#include <string>
#include <string_view>

#include "strdet/quiver.hpp"

namespace strdet {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Certificate is left unchecked; call validate() afterwards.
BoundQuiverAlgebra parse_algebra(std::string_view text);

// Normalized document: vertices line, arrows in order, relations in order,
// single spaces, trailing newline. parse_algebra(serialize(a)) reproduces a.
std::string serialize(const BoundQuiverAlgebra& algebra);

BoundQuiverAlgebra load_algebra_file(const std::string& path);

}  // namespace strdet
