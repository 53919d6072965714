#include "cqe/logic.hpp"

#include <stdexcept>

namespace cqe {

namespace {

class ForwardingOracle final : public UniverseOracle {
 public:
  ForwardingOracle(const ConsequenceRelation& logic, std::span<const LFormula> universe)
      : logic_(logic), universe_(universe.begin(), universe.end()) {}

  bool derives(std::span<const std::size_t> premises, std::size_t goal) const override {
    LTheory theory;
    for (std::size_t i : premises) theory.insert(universe_.at(i));
    return logic_.derives(theory, universe_.at(goal));
  }

 private:
  const ConsequenceRelation& logic_;
  std::vector<LFormula> universe_;
};

class TableOracle final : public UniverseOracle {
 public:
  TableOracle(const tt::Signature& signature, std::span<const LFormula> universe)
      : atom_count_(signature.size()) {
    tables_.reserve(universe.size());
    for (const auto& f : universe) tables_.push_back(signature.evaluate(f));
  }

  bool derives(std::span<const std::size_t> premises, std::size_t goal) const override {
    tt::Table models(atom_count_, true);
    for (std::size_t i : premises) models &= tables_.at(i);
    return models.subset_of(tables_.at(goal));
  }

 private:
  std::size_t atom_count_;
  std::vector<tt::Table> tables_;
};

}  // namespace

std::unique_ptr<UniverseOracle> ConsequenceRelation::over(std::span<const LFormula> universe) const {
  return std::make_unique<ForwardingOracle>(*this, universe);
}

bool ClassicalLogic::derives(const LTheory& premises, const LFormula& goal) const {
  AtomSet sig = atoms_of(premises);
  collect_atoms(goal, sig);
  if (sig.size() <= kTruthTableAtomLimit) return tt::derives(premises, goal);
  return sat::derives(premises, goal);
}

std::unique_ptr<UniverseOracle> ClassicalLogic::over(std::span<const LFormula> universe) const {
  AtomSet sig;
  for (const auto& f : universe) collect_atoms(f, sig);
  if (sig.size() > kTruthTableAtomLimit) return ConsequenceRelation::over(universe);
  return std::make_unique<TableOracle>(tt::Signature(sig), universe);
}

const ClassicalLogic& classical() {
  static const ClassicalLogic instance;
  return instance;
}

bool derives(const LTheory& premises, const LFormula& goal) { return classical().derives(premises, goal); }

bool is_consistent(const LTheory& theory) { return !derives(theory, bottom()); }

AtomSet atoms_of(const LTheory& theory) {
  AtomSet out;
  for (const auto& f : theory) collect_atoms(f, out);
  return out;
}

// ---------------------------------------------------------------------------
// Truth tables

namespace tt {

namespace {

constexpr std::uint64_t kLowPatterns[6] = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
};

std::size_t word_count(std::size_t atom_count) {
  return atom_count <= 6 ? 1 : (std::size_t{1} << (atom_count - 6));
}

}  // namespace

Table::Table(std::size_t atom_count, bool value)
    : atom_count_(atom_count), words_(word_count(atom_count), value ? ~std::uint64_t{0} : 0) {
  if (atom_count > 30) throw std::length_error("truth table signature too large");
  trim();
}

Table Table::column(std::size_t atom_count, std::size_t atom) {
  Table t(atom_count);
  for (std::size_t w = 0; w < t.words_.size(); ++w) {
    if (atom < 6) {
      t.words_[w] = kLowPatterns[atom];
    } else {
      t.words_[w] = ((w >> (atom - 6)) & 1U) ? ~std::uint64_t{0} : 0;
    }
  }
  t.trim();
  return t;
}

void Table::trim() noexcept {
  if (atom_count_ < 6) words_[0] &= (std::uint64_t{1} << rows()) - 1;
}

Table& Table::operator&=(const Table& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

Table& Table::operator|=(const Table& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

Table Table::operator~() const {
  Table t(*this);
  for (auto& w : t.words_) w = ~w;
  t.trim();
  return t;
}

bool Table::none() const noexcept {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

bool Table::subset_of(const Table& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

Signature::Signature(const AtomSet& atoms) : names_(atoms.begin(), atoms.end()) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    index_.emplace(names_[i], i);
    columns_.push_back(Table::column(names_.size(), i));
  }
}

Table Signature::evaluate(const LFormula& f) const {
  using K = LFormula::Kind;
  switch (f.kind()) {
    case K::Atom: {
      auto it = index_.find(f.name());
      if (it == index_.end()) throw std::out_of_range("atom '" + f.name() + "' outside signature");
      return columns_[it->second];
    }
    case K::Bottom:
      return Table(size(), false);
    case K::Top:
      return Table(size(), true);
    case K::Not:
      return ~evaluate(f.operand());
    case K::And: {
      Table t = evaluate(f.lhs());
      t &= evaluate(f.rhs());
      return t;
    }
    case K::Or: {
      Table t = evaluate(f.lhs());
      t |= evaluate(f.rhs());
      return t;
    }
    case K::Implies: {
      Table t = ~evaluate(f.lhs());
      t |= evaluate(f.rhs());
      return t;
    }
  }
  throw std::logic_error("unreachable");
}

bool derives(const LTheory& premises, const LFormula& goal) {
  AtomSet sig = atoms_of(premises);
  collect_atoms(goal, sig);
  Signature signature(sig);
  Table models(signature.size(), true);
  for (const auto& p : premises) {
    models &= signature.evaluate(p);
    if (models.none()) return true;
  }
  return models.subset_of(signature.evaluate(goal));
}

}  // namespace tt

// ---------------------------------------------------------------------------
// DPLL

namespace sat {

namespace {

using Clause = std::vector<int>;

class Encoder {
 public:
  int encode(const LFormula& f) {
    using K = LFormula::Kind;
    switch (f.kind()) {
      case K::Atom: {
        auto [it, inserted] = atoms_.try_emplace(f.name(), 0);
        if (inserted) it->second = fresh();
        return it->second;
      }
      case K::Top: {
        int v = fresh();
        clauses_.push_back({v});
        return v;
      }
      case K::Bottom: {
        int v = fresh();
        clauses_.push_back({-v});
        return v;
      }
      case K::Not:
        return -encode(f.operand());
      case K::And: {
        int a = encode(f.lhs()), b = encode(f.rhs()), x = fresh();
        clauses_.push_back({-x, a});
        clauses_.push_back({-x, b});
        clauses_.push_back({x, -a, -b});
        return x;
      }
      case K::Or: {
        int a = encode(f.lhs()), b = encode(f.rhs()), x = fresh();
        clauses_.push_back({-x, a, b});
        clauses_.push_back({x, -a});
        clauses_.push_back({x, -b});
        return x;
      }
      case K::Implies: {
        int a = encode(f.lhs()), b = encode(f.rhs()), x = fresh();
        clauses_.push_back({-x, -a, b});
        clauses_.push_back({x, a});
        clauses_.push_back({x, -b});
        return x;
      }
    }
    throw std::logic_error("unreachable");
  }

  void assert_formula(const LFormula& f) { clauses_.push_back({encode(f)}); }
  int variables() const { return next_ - 1; }
  const std::vector<Clause>& clauses() const { return clauses_; }

 private:
  int fresh() { return next_++; }

  int next_ = 1;
  std::unordered_map<std::string, int> atoms_;
  std::vector<Clause> clauses_;
};

// value: 0 unassigned, 1 true, -1 false
class Dpll {
 public:
  Dpll(const std::vector<Clause>& clauses, int variables) : clauses_(clauses), value_(variables + 1, 0) {}

  bool solve() { return search(); }

 private:
  int lit_value(int lit) const {
    int v = value_[lit > 0 ? lit : -lit];
    return lit > 0 ? v : -v;
  }

  void assign(int lit, std::vector<int>& trail) {
    value_[lit > 0 ? lit : -lit] = lit > 0 ? 1 : -1;
    trail.push_back(lit > 0 ? lit : -lit);
  }

  // Returns false on conflict.
  bool propagate(std::vector<int>& trail) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& clause : clauses_) {
        int unassigned = 0, last = 0;
        bool satisfied = false;
        for (int lit : clause) {
          int v = lit_value(lit);
          if (v > 0) {
            satisfied = true;
            break;
          }
          if (v == 0) {
            ++unassigned;
            last = lit;
          }
        }
        if (satisfied) continue;
        if (unassigned == 0) return false;
        if (unassigned == 1) {
          assign(last, trail);
          changed = true;
        }
      }
    }
    return true;
  }

  void undo(const std::vector<int>& trail) {
    for (int v : trail) value_[v] = 0;
  }

  bool search() {
    std::vector<int> trail;
    if (!propagate(trail)) {
      undo(trail);
      return false;
    }
    int branch = 0;
    for (int v = 1; v < static_cast<int>(value_.size()); ++v) {
      if (value_[v] == 0) {
        branch = v;
        break;
      }
    }
    if (branch == 0) return true;
    for (int lit : {branch, -branch}) {
      std::vector<int> local;
      assign(lit, local);
      if (search()) return true;
      undo(local);
    }
    undo(trail);
    return false;
  }

  const std::vector<Clause>& clauses_;
  std::vector<int> value_;
};

}  // namespace

bool satisfiable(std::span<const LFormula> formulas) {
  Encoder enc;
  for (const auto& f : formulas) enc.assert_formula(f);
  Dpll solver(enc.clauses(), enc.variables());
  return solver.solve();
}

bool derives(const LTheory& premises, const LFormula& goal) {
  std::vector<LFormula> formulas(premises.begin(), premises.end());
  formulas.push_back(neg(goal));
  return !satisfiable(formulas);
}

}  // namespace sat

}  // namespace cqe
