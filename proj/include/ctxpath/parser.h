#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ctxpath/pattern.h"

namespace ctxpath {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column,
             std::vector<std::string> expected, std::string found,
             std::string detail = {});

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
  std::string found_;
};

// Query syntax:
//   query   := group-pattern
//   group   := operand (("AND" | "UNION" | "OPT") operand)*
//   operand := "{" group "}" | node path node
//   node    := <iri> | "literal"(^^<dt>|@lang)? | ?var
//   path    := seq ("|" seq)*
//   seq     := unary ("/" unary)*
//   unary   := "^" unary | primary "*"*
//   primary := <iri> | "!" (<iri> | "(" <iri> ("|" <iri>)* ")") | "(" path ")"
GraphPattern parseQuery(std::string_view text);
PathExpr parsePath(std::string_view text);

}  // namespace ctxpath
