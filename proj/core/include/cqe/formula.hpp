// Propositional formulas: the object language queried against a knowledge base.

#ifndef CQE_FORMULA_HPP_
#define CQE_FORMULA_HPP_

#include <compare>
#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace cqe {

// Immutable propositional formula with structural equality and a total order.
// Copies share the underlying node.
class LFormula {
 public:
  enum class Kind { Atom, Bottom, Top, Not, And, Or, Implies };

  static LFormula atom(std::string name);
  static LFormula bottom();
  static LFormula top();
  static LFormula negation(LFormula operand);
  static LFormula conjunction(LFormula lhs, LFormula rhs);
  static LFormula disjunction(LFormula lhs, LFormula rhs);
  static LFormula implication(LFormula lhs, LFormula rhs);

  Kind kind() const noexcept;
  bool is_atom() const noexcept { return kind() == Kind::Atom; }
  bool is_literal() const noexcept;

  // Only meaningful for atoms.
  const std::string& name() const noexcept;
  // Operand of Not, left child of binary connectives.
  const LFormula& lhs() const noexcept;
  const LFormula& rhs() const noexcept;
  const LFormula& operand() const noexcept { return lhs(); }

  std::size_t size() const noexcept;
  std::size_t hash() const noexcept;

  friend bool operator==(const LFormula& a, const LFormula& b) noexcept;
  friend std::strong_ordering operator<=>(const LFormula& a, const LFormula& b) noexcept;

 private:
  struct Node;
  explicit LFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static LFormula make(Kind kind, std::string name, const LFormula* lhs, const LFormula* rhs);

  std::shared_ptr<const Node> node_;
};

struct LFormula::Node {
  Kind kind;
  std::string name;
  // Empty slots hold no node; only the first `arity` entries are valid.
  LFormula children[2] = {LFormula(nullptr), LFormula(nullptr)};
  std::size_t size = 1;
  std::size_t hash = 0;
};

inline LFormula::Kind LFormula::kind() const noexcept { return node_->kind; }
inline const std::string& LFormula::name() const noexcept { return node_->name; }
inline const LFormula& LFormula::lhs() const noexcept { return node_->children[0]; }
inline const LFormula& LFormula::rhs() const noexcept { return node_->children[1]; }
inline std::size_t LFormula::size() const noexcept { return node_->size; }
inline std::size_t LFormula::hash() const noexcept { return node_->hash; }

// A finite set of formulas (knowledge bases, secret sets, worlds).
using LTheory = std::set<LFormula>;
using AtomSet = std::set<std::string>;

inline LFormula atom(std::string name) { return LFormula::atom(std::move(name)); }
inline LFormula bottom() { return LFormula::bottom(); }
inline LFormula top() { return LFormula::top(); }
inline LFormula neg(LFormula f) { return LFormula::negation(std::move(f)); }
inline LFormula conj(LFormula a, LFormula b) { return LFormula::conjunction(std::move(a), std::move(b)); }
inline LFormula disj(LFormula a, LFormula b) { return LFormula::disjunction(std::move(a), std::move(b)); }
inline LFormula implies(LFormula a, LFormula b) { return LFormula::implication(std::move(a), std::move(b)); }

// Complement of a literal: p <-> ~p. Precondition: f.is_literal().
LFormula complement(const LFormula& f);

bool is_atom_name(std::string_view name) noexcept;

void collect_atoms(const LFormula& f, AtomSet& out);
AtomSet atoms(const LFormula& f);

}  // namespace cqe

template <>
struct std::hash<cqe::LFormula> {
  std::size_t operator()(const cqe::LFormula& f) const noexcept { return f.hash(); }
};

#endif  // CQE_FORMULA_HPP_
