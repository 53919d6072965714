#include "cqe/modal.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace cqe {

// ---------------------------------------------------------------------------
// MFormula

MFormula MFormula::box(LFormula inner) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Box;
  node->inner = std::move(inner);
  return MFormula(std::move(node));
}

MFormula MFormula::bottom() {
  static const MFormula instance(std::make_shared<const Node>(Node{Kind::Bottom, std::nullopt}));
  return instance;
}

MFormula MFormula::top() {
  static const MFormula instance(std::make_shared<const Node>(Node{Kind::Top, std::nullopt}));
  return instance;
}

MFormula MFormula::negation(MFormula operand) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Not;
  node->children[0] = std::move(operand);
  return MFormula(std::move(node));
}

namespace {

template <class Node, class Kind, class F>
std::shared_ptr<Node> binary(Kind kind, F lhs, F rhs) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->children[0] = std::move(lhs);
  node->children[1] = std::move(rhs);
  return node;
}

}  // namespace

MFormula MFormula::conjunction(MFormula lhs, MFormula rhs) {
  return MFormula(binary<Node>(Kind::And, std::move(lhs), std::move(rhs)));
}

MFormula MFormula::disjunction(MFormula lhs, MFormula rhs) {
  return MFormula(binary<Node>(Kind::Or, std::move(lhs), std::move(rhs)));
}

MFormula MFormula::implication(MFormula lhs, MFormula rhs) {
  return MFormula(binary<Node>(Kind::Implies, std::move(lhs), std::move(rhs)));
}

const LFormula& MFormula::inner() const {
  if (kind() != Kind::Box) throw std::logic_error("inner() on a non-box M-formula");
  return *node_->inner;
}

bool operator==(const MFormula& a, const MFormula& b) noexcept { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const MFormula& a, const MFormula& b) noexcept {
  using K = MFormula::Kind;
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case K::Box:
      return a.inner() <=> b.inner();
    case K::Bottom:
    case K::Top:
      return std::strong_ordering::equal;
    case K::Not:
      return a.operand() <=> b.operand();
    default:
      if (auto c = a.lhs() <=> b.lhs(); c != 0) return c;
      return a.rhs() <=> b.rhs();
  }
}

MFormula to_primitive(const MFormula& f) {
  using K = MFormula::Kind;
  switch (f.kind()) {
    case K::Box:
    case K::Bottom:
      return f;
    case K::Top:
      return mimplies(mbottom(), mbottom());
    case K::Not:
      return mimplies(to_primitive(f.operand()), mbottom());
    case K::And: {
      // A & B  ==  (A -> (B -> bot)) -> bot
      auto a = to_primitive(f.lhs());
      auto b = to_primitive(f.rhs());
      return mimplies(mimplies(a, mimplies(b, mbottom())), mbottom());
    }
    case K::Or: {
      // A | B  ==  (A -> bot) -> B
      return mimplies(mimplies(to_primitive(f.lhs()), mbottom()), to_primitive(f.rhs()));
    }
    case K::Implies:
      return mimplies(to_primitive(f.lhs()), to_primitive(f.rhs()));
  }
  throw std::logic_error("unreachable");
}

void collect_box_atoms(const MFormula& f, LTheory& out) {
  using K = MFormula::Kind;
  switch (f.kind()) {
    case K::Box:
      out.insert(f.inner());
      break;
    case K::Bottom:
    case K::Top:
      break;
    case K::Not:
      collect_box_atoms(f.operand(), out);
      break;
    default:
      collect_box_atoms(f.lhs(), out);
      collect_box_atoms(f.rhs(), out);
  }
}

LTheory box_atoms(const MFormula& f) {
  LTheory out;
  collect_box_atoms(f, out);
  return out;
}

LTheory box_atoms(const MTheory& gamma) {
  LTheory out;
  for (const auto& f : gamma) collect_box_atoms(f, out);
  return out;
}

// ---------------------------------------------------------------------------
// Search over box-atom assignments

namespace {

enum class Tri : std::uint8_t { False, True, Unknown };

struct Op {
  MFormula::Kind kind;
  int atom = -1;
  int lhs = -1;
  int rhs = -1;
};

class AssignmentSearch {
 public:
  AssignmentSearch(const ConsequenceRelation& logic, const MTheory& gamma) {
    LTheory atoms = box_atoms(gamma);
    universe_.assign(atoms.begin(), atoms.end());
    for (std::size_t i = 0; i < universe_.size(); ++i) index_.emplace(universe_[i], static_cast<int>(i));
    for (const auto& f : gamma) roots_.push_back(compile(f));
    oracle_ = logic.over(universe_);
    value_.assign(universe_.size(), kUnassigned);
  }

  std::optional<MModel> run() {
    if (!search()) return std::nullopt;
    LTheory world;
    for (std::size_t i = 0; i < universe_.size(); ++i) {
      if (value_[i] == kTrue) world.insert(universe_[i]);
    }
    return MModel{{world}};
  }

 private:
  static constexpr std::int8_t kUnassigned = -1;
  static constexpr std::int8_t kFalse = 0;
  static constexpr std::int8_t kTrue = 1;

  int compile(const MFormula& f) {
    using K = MFormula::Kind;
    Op op{f.kind()};
    switch (f.kind()) {
      case K::Box:
        op.atom = index_.at(f.inner());
        break;
      case K::Bottom:
      case K::Top:
        break;
      case K::Not:
        op.lhs = compile(f.operand());
        break;
      default:
        op.lhs = compile(f.lhs());
        op.rhs = compile(f.rhs());
    }
    ops_.push_back(op);
    return static_cast<int>(ops_.size() - 1);
  }

  Tri eval(int id) const {
    using K = MFormula::Kind;
    const Op& op = ops_[id];
    switch (op.kind) {
      case K::Box: {
        auto v = value_[op.atom];
        return v == kUnassigned ? Tri::Unknown : (v == kTrue ? Tri::True : Tri::False);
      }
      case K::Bottom:
        return Tri::False;
      case K::Top:
        return Tri::True;
      case K::Not: {
        Tri a = eval(op.lhs);
        return a == Tri::Unknown ? a : (a == Tri::True ? Tri::False : Tri::True);
      }
      case K::And: {
        Tri a = eval(op.lhs);
        if (a == Tri::False) return a;
        Tri b = eval(op.rhs);
        if (b == Tri::False) return b;
        return (a == Tri::True && b == Tri::True) ? Tri::True : Tri::Unknown;
      }
      case K::Or: {
        Tri a = eval(op.lhs);
        if (a == Tri::True) return a;
        Tri b = eval(op.rhs);
        if (b == Tri::True) return b;
        return (a == Tri::False && b == Tri::False) ? Tri::False : Tri::Unknown;
      }
      case K::Implies: {
        Tri a = eval(op.lhs);
        if (a == Tri::False) return Tri::True;
        Tri b = eval(op.rhs);
        if (b == Tri::True) return Tri::True;
        return (a == Tri::True && b == Tri::False) ? Tri::False : Tri::Unknown;
      }
    }
    return Tri::Unknown;
  }

  // Closes the true set under derivability within the universe. Returns false
  // when some atom fixed false is derived.
  bool propagate(std::vector<std::size_t>& trail) {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<std::size_t> premises;
      for (std::size_t i = 0; i < value_.size(); ++i) {
        if (value_[i] == kTrue) premises.push_back(i);
      }
      for (std::size_t i = 0; i < value_.size(); ++i) {
        if (value_[i] == kTrue || !oracle_->derives(premises, i)) continue;
        if (value_[i] == kFalse) return false;
        value_[i] = kTrue;
        trail.push_back(i);
        changed = true;
      }
    }
    return true;
  }

  void undo(const std::vector<std::size_t>& trail) {
    for (auto i : trail) value_[i] = kUnassigned;
  }

  bool search() {
    std::vector<std::size_t> trail;
    if (!propagate(trail)) {
      undo(trail);
      return false;
    }
    bool all_true = true;
    for (int root : roots_) {
      Tri v = eval(root);
      if (v == Tri::False) {
        undo(trail);
        return false;
      }
      if (v == Tri::Unknown) all_true = false;
    }
    if (all_true) {
      // Leaving the rest false is realizable: propagation reached a fixpoint.
      return true;
    }
    auto it = std::find(value_.begin(), value_.end(), kUnassigned);
    if (it == value_.end()) {
      undo(trail);
      return false;
    }
    auto branch = static_cast<std::size_t>(it - value_.begin());
    for (auto v : {kFalse, kTrue}) {
      value_[branch] = v;
      if (search()) return true;
    }
    value_[branch] = kUnassigned;
    undo(trail);
    return false;
  }

  std::vector<LFormula> universe_;
  std::map<LFormula, int> index_;
  std::vector<Op> ops_;
  std::vector<int> roots_;
  std::unique_ptr<UniverseOracle> oracle_;
  std::vector<std::int8_t> value_;
};

}  // namespace

// ---------------------------------------------------------------------------
// ModalReasoner

bool ModalReasoner::holds(const MModel& model, const MFormula& phi) const {
  using K = MFormula::Kind;
  switch (phi.kind()) {
    case K::Box:
      return std::all_of(model.worlds.begin(), model.worlds.end(),
                         [&](const LTheory& w) { return logic_->derives(w, phi.inner()); });
    case K::Bottom:
      return false;
    case K::Top:
      return true;
    case K::Not:
      return !holds(model, phi.operand());
    case K::And:
      return holds(model, phi.lhs()) && holds(model, phi.rhs());
    case K::Or:
      return holds(model, phi.lhs()) || holds(model, phi.rhs());
    case K::Implies:
      return !holds(model, phi.lhs()) || holds(model, phi.rhs());
  }
  throw std::logic_error("unreachable");
}

bool ModalReasoner::holds_all(const MModel& model, const MTheory& gamma) const {
  return std::all_of(gamma.begin(), gamma.end(), [&](const MFormula& f) { return holds(model, f); });
}

bool ModalReasoner::realizable(const BoxAssignment& assignment) const {
  if (!std::includes(assignment.universe.begin(), assignment.universe.end(), assignment.true_set.begin(),
                     assignment.true_set.end())) {
    throw std::invalid_argument("box assignment: true set is not a subset of the universe");
  }
  for (const auto& b : assignment.universe) {
    if (assignment.true_set.contains(b)) continue;
    if (logic_->derives(assignment.true_set, b)) return false;
  }
  return true;
}

std::optional<MModel> ModalReasoner::find_model(const MTheory& gamma) const {
  return AssignmentSearch(*logic_, gamma).run();
}

bool ModalReasoner::entails(const MTheory& gamma, const MFormula& phi) const {
  MTheory extended = gamma;
  extended.insert(mneg(phi));
  return !satisfiable(extended);
}

bool holds(const MModel& model, const MFormula& phi) { return ModalReasoner().holds(model, phi); }
bool holds_all(const MModel& model, const MTheory& gamma) { return ModalReasoner().holds_all(model, gamma); }
bool realizable(const BoxAssignment& assignment) { return ModalReasoner().realizable(assignment); }
bool satisfiable(const MTheory& gamma) { return ModalReasoner().satisfiable(gamma); }
std::optional<MModel> find_model(const MTheory& gamma) { return ModalReasoner().find_model(gamma); }
bool entails(const MTheory& gamma, const MFormula& phi) { return ModalReasoner().entails(gamma, phi); }

}  // namespace cqe
