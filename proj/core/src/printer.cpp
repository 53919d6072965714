#include "cqe/printer.hpp"

#include <ostream>

namespace cqe {

namespace {

enum Precedence { kImplies = 1, kOr = 2, kAnd = 3, kNot = 4, kAtomic = 5 };

struct Symbols {
  const char* neg;
  const char* conj;
  const char* disj;
  const char* imp;
  const char* bot;
  const char* top;
};

const Symbols& symbols(Notation n) {
  static const Symbols ascii{"~", " & ", " | ", " -> ", "bot", "top"};
  static const Symbols unicode{"¬", " ∧ ", " ∨ ", " → ", "⊥", "⊤"};
  return n == Notation::Ascii ? ascii : unicode;
}

int precedence(LFormula::Kind k) {
  switch (k) {
    case LFormula::Kind::Not:
      return kNot;
    case LFormula::Kind::And:
      return kAnd;
    case LFormula::Kind::Or:
      return kOr;
    case LFormula::Kind::Implies:
      return kImplies;
    default:
      return kAtomic;
  }
}

int precedence(MFormula::Kind k) {
  switch (k) {
    case MFormula::Kind::Not:
      return kNot;
    case MFormula::Kind::And:
      return kAnd;
    case MFormula::Kind::Or:
      return kOr;
    case MFormula::Kind::Implies:
      return kImplies;
    default:
      return kAtomic;
  }
}

// Shared by both levels: F is LFormula or MFormula; leaf prints atoms/boxes.
template <class F, class Leaf>
void print(std::string& out, const F& f, int context, const Symbols& sym, const Leaf& leaf) {
  using K = typename F::Kind;
  int own = precedence(f.kind());
  bool parens = own < context;
  if (parens) out += '(';
  switch (f.kind()) {
    case K::Bottom:
      out += sym.bot;
      break;
    case K::Top:
      out += sym.top;
      break;
    case K::Not:
      out += sym.neg;
      print(out, f.operand(), kNot, sym, leaf);
      break;
    case K::And:
      print(out, f.lhs(), kAnd, sym, leaf);
      out += sym.conj;
      print(out, f.rhs(), kAnd + 1, sym, leaf);
      break;
    case K::Or:
      print(out, f.lhs(), kOr, sym, leaf);
      out += sym.disj;
      print(out, f.rhs(), kOr + 1, sym, leaf);
      break;
    case K::Implies:
      print(out, f.lhs(), kImplies + 1, sym, leaf);
      out += sym.imp;
      print(out, f.rhs(), kImplies, sym, leaf);
      break;
    default:
      leaf(out, f);
  }
  if (parens) out += ')';
}

void print_l(std::string& out, const LFormula& f, int context, Notation n) {
  print(out, f, context, symbols(n), [](std::string& o, const LFormula& a) { o += a.name(); });
}

template <class Theory>
std::string join(const Theory& theory, Notation n) {
  std::string out = "{";
  bool first = true;
  for (const auto& f : theory) {
    if (!first) out += ", ";
    first = false;
    out += to_string(f, n);
  }
  return out + "}";
}

}  // namespace

std::string to_string(const LFormula& f, Notation notation) {
  std::string out;
  print_l(out, f, 0, notation);
  return out;
}

std::string to_string(const MFormula& f, Notation notation) {
  std::string out;
  print(out, f, 0, symbols(notation), [notation](std::string& o, const MFormula& b) {
    if (notation == Notation::Ascii) {
      o += "box(";
      print_l(o, b.inner(), 0, notation);
      o += ')';
    } else {
      o += "□";
      print_l(o, b.inner(), kNot, notation);
    }
  });
  return out;
}

std::string to_string(const LTheory& theory, Notation notation) { return join(theory, notation); }
std::string to_string(const MTheory& theory, Notation notation) { return join(theory, notation); }

std::ostream& operator<<(std::ostream& os, const LFormula& f) { return os << to_string(f); }
std::ostream& operator<<(std::ostream& os, const MFormula& f) { return os << to_string(f); }

}  // namespace cqe
