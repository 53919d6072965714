#include "cqe/formula.hpp"

#include <cassert>
#include <functional>
#include <stdexcept>

namespace cqe {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

int arity(LFormula::Kind kind) {
  switch (kind) {
    case LFormula::Kind::Atom:
    case LFormula::Kind::Bottom:
    case LFormula::Kind::Top:
      return 0;
    case LFormula::Kind::Not:
      return 1;
    default:
      return 2;
  }
}

}  // namespace

bool is_atom_name(std::string_view name) noexcept {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  for (char c : name) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  // Reserved words of the surface syntax.
  return name != "bot" && name != "top" && name != "box";
}

LFormula LFormula::make(Kind kind, std::string name, const LFormula* lhs, const LFormula* rhs) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->name = std::move(name);
  std::size_t h = mix(0, static_cast<std::size_t>(kind));
  if (kind == Kind::Atom) h = mix(h, std::hash<std::string>{}(node->name));
  if (lhs != nullptr) {
    node->children[0] = *lhs;
    node->size += lhs->size();
    h = mix(h, lhs->hash());
  }
  if (rhs != nullptr) {
    node->children[1] = *rhs;
    node->size += rhs->size();
    h = mix(h, rhs->hash());
  }
  node->hash = h;
  return LFormula(std::move(node));
}

LFormula LFormula::atom(std::string name) {
  if (!is_atom_name(name)) throw std::invalid_argument("invalid atom name '" + name + "'");
  return make(Kind::Atom, std::move(name), nullptr, nullptr);
}

LFormula LFormula::bottom() {
  static const LFormula instance = make(Kind::Bottom, {}, nullptr, nullptr);
  return instance;
}

LFormula LFormula::top() {
  static const LFormula instance = make(Kind::Top, {}, nullptr, nullptr);
  return instance;
}

LFormula LFormula::negation(LFormula operand) { return make(Kind::Not, {}, &operand, nullptr); }

LFormula LFormula::conjunction(LFormula lhs, LFormula rhs) { return make(Kind::And, {}, &lhs, &rhs); }

LFormula LFormula::disjunction(LFormula lhs, LFormula rhs) { return make(Kind::Or, {}, &lhs, &rhs); }

LFormula LFormula::implication(LFormula lhs, LFormula rhs) { return make(Kind::Implies, {}, &lhs, &rhs); }

bool LFormula::is_literal() const noexcept {
  return is_atom() || (kind() == Kind::Not && operand().is_atom());
}

bool operator==(const LFormula& a, const LFormula& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind() || a.size() != b.size()) return false;
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const LFormula& a, const LFormula& b) noexcept {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (arity(a.kind())) {
    case 0:
      return a.name() <=> b.name();
    case 1:
      return a.operand() <=> b.operand();
    default:
      if (auto c = a.lhs() <=> b.lhs(); c != 0) return c;
      return a.rhs() <=> b.rhs();
  }
}

LFormula complement(const LFormula& f) {
  assert(f.is_literal());
  return f.is_atom() ? neg(f) : f.operand();
}

void collect_atoms(const LFormula& f, AtomSet& out) {
  switch (f.kind()) {
    case LFormula::Kind::Atom:
      out.insert(f.name());
      break;
    case LFormula::Kind::Bottom:
    case LFormula::Kind::Top:
      break;
    case LFormula::Kind::Not:
      collect_atoms(f.operand(), out);
      break;
    default:
      collect_atoms(f.lhs(), out);
      collect_atoms(f.rhs(), out);
  }
}

AtomSet atoms(const LFormula& f) {
  AtomSet out;
  collect_atoms(f, out);
  return out;
}

}  // namespace cqe
