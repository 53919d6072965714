// Pretty printing in the surface syntax accepted by the parser.

#ifndef CQE_PRINTER_HPP_
#define CQE_PRINTER_HPP_

#include <iosfwd>
#include <string>

#include "cqe/formula.hpp"
#include "cqe/modal.hpp"

namespace cqe {

enum class Notation {
  Ascii,    // ~ & | -> bot top box(...)  (parseable)
  Unicode,  // ¬ ∧ ∨ → ⊥ ⊤ □
};

// Minimal parentheses: & and | associate left, -> associates right.
std::string to_string(const LFormula& f, Notation notation = Notation::Ascii);
std::string to_string(const MFormula& f, Notation notation = Notation::Ascii);
// "{f1, f2, ...}" in set order.
std::string to_string(const LTheory& theory, Notation notation = Notation::Ascii);
std::string to_string(const MTheory& theory, Notation notation = Notation::Ascii);

std::ostream& operator<<(std::ostream& os, const LFormula& f);
std::ostream& operator<<(std::ostream& os, const MFormula& f);

}  // namespace cqe

#endif  // CQE_PRINTER_HPP_
