// Surface syntax.
//
//   formula  := or [ "->" formula ]          (right-associative)
//   or       := and { "|" and }
//   and      := unary { "&" unary }
//   unary    := "~" unary | primary
//   primary  := atom | "bot" | "top" | "(" formula ")"
//   atom     := [a-z][a-z0-9_]*  (except bot, top, box)
//
// M-formulas use the same connectives with "box(" formula ")" in place of atoms.

#ifndef CQE_PARSER_HPP_
#define CQE_PARSER_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cqe/formula.hpp"
#include "cqe/modal.hpp"

namespace cqe {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string expected, std::string excerpt);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& expected() const noexcept { return expected_; }
  const std::string& excerpt() const noexcept { return excerpt_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string expected_;
  std::string excerpt_;
};

// `line` is reported in errors; columns are 1-based.
LFormula parse_l(std::string_view text, std::size_t line = 1);
MFormula parse_m(std::string_view text, std::size_t line = 1);

}  // namespace cqe

#endif  // CQE_PARSER_HPP_
