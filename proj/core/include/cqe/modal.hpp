// The box-only modal language over propositional formulas.
//
// An M-model is a set of worlds, each world a set of propositional formulas;
// box(A) holds in a model iff every world derives A. Only boolean combinations
// of box-atoms exist, so nested modalities cannot be expressed.
//
// Satisfiability and entailment quantify over all models, which is not directly
// enumerable. The decision procedure here looks only at the finitely many
// box-atoms S of the input: an assignment T of truth values to S (T being the
// set of atoms made true) is produced by some model iff T derives no member of
// S \ T. The single-world model {T} realizes such an assignment; conversely, a
// world deriving every member of T derives everything T derives. The search
// enumerates realizable assignments DPLL-style, propagating L-consequences of
// the atoms already set true.

#ifndef CQE_MODAL_HPP_
#define CQE_MODAL_HPP_

#include <compare>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "cqe/formula.hpp"
#include "cqe/logic.hpp"

namespace cqe {

class MFormula {
 public:
  // Box, Bottom and Implies are primitive; the rest abbreviate them.
  enum class Kind { Box, Bottom, Top, Not, And, Or, Implies };

  static MFormula box(LFormula inner);
  static MFormula bottom();
  static MFormula top();
  static MFormula negation(MFormula operand);
  static MFormula conjunction(MFormula lhs, MFormula rhs);
  static MFormula disjunction(MFormula lhs, MFormula rhs);
  static MFormula implication(MFormula lhs, MFormula rhs);

  Kind kind() const noexcept;
  const LFormula& inner() const;  // Box only
  const MFormula& lhs() const noexcept;
  const MFormula& rhs() const noexcept;
  const MFormula& operand() const noexcept { return lhs(); }

  friend bool operator==(const MFormula& a, const MFormula& b) noexcept;
  friend std::strong_ordering operator<=>(const MFormula& a, const MFormula& b) noexcept;

 private:
  struct Node;
  explicit MFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct MFormula::Node {
  Kind kind;
  std::optional<LFormula> inner;
  MFormula children[2] = {MFormula(nullptr), MFormula(nullptr)};
};

inline MFormula::Kind MFormula::kind() const noexcept { return node_->kind; }
inline const MFormula& MFormula::lhs() const noexcept { return node_->children[0]; }
inline const MFormula& MFormula::rhs() const noexcept { return node_->children[1]; }

using MTheory = std::set<MFormula>;

inline MFormula box(LFormula inner) { return MFormula::box(std::move(inner)); }
inline MFormula mbottom() { return MFormula::bottom(); }
inline MFormula mtop() { return MFormula::top(); }
inline MFormula mneg(MFormula f) { return MFormula::negation(std::move(f)); }
inline MFormula mconj(MFormula a, MFormula b) { return MFormula::conjunction(std::move(a), std::move(b)); }
inline MFormula mdisj(MFormula a, MFormula b) { return MFormula::disjunction(std::move(a), std::move(b)); }
inline MFormula mimplies(MFormula a, MFormula b) { return MFormula::implication(std::move(a), std::move(b)); }

// Rewrites Top/Not/And/Or into Box, Bottom and Implies.
MFormula to_primitive(const MFormula& f);

void collect_box_atoms(const MFormula& f, LTheory& out);
LTheory box_atoms(const MFormula& f);
LTheory box_atoms(const MTheory& gamma);

struct MModel {
  std::set<LTheory> worlds;

  friend bool operator==(const MModel&, const MModel&) = default;
};

// Truth values for the box-atoms in `universe`: exactly those in `true_set` hold.
struct BoxAssignment {
  LTheory universe;
  LTheory true_set;
};

// Decision procedures for M, parameterized by the consequence relation of L.
class ModalReasoner {
 public:
  explicit ModalReasoner(const ConsequenceRelation& logic = classical()) : logic_(&logic) {}

  bool holds(const MModel& model, const MFormula& phi) const;
  bool holds_all(const MModel& model, const MTheory& gamma) const;
  bool realizable(const BoxAssignment& assignment) const;
  // A single-world witness model when gamma is satisfiable.
  std::optional<MModel> find_model(const MTheory& gamma) const;
  bool satisfiable(const MTheory& gamma) const { return find_model(gamma).has_value(); }
  bool entails(const MTheory& gamma, const MFormula& phi) const;

 private:
  const ConsequenceRelation* logic_;
};

bool holds(const MModel& model, const MFormula& phi);
bool holds_all(const MModel& model, const MTheory& gamma);
// Throws std::invalid_argument when true_set is not a subset of universe.
bool realizable(const BoxAssignment& assignment);
bool satisfiable(const MTheory& gamma);
std::optional<MModel> find_model(const MTheory& gamma);
bool entails(const MTheory& gamma, const MFormula& phi);

}  // namespace cqe

#endif  // CQE_MODAL_HPP_
