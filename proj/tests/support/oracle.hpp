// Independent reference implementations used only by tests.
//
// Nothing here calls into the library's reasoning code: derivability is decided
// by enumerating valuations over std::map, and modal satisfiability by
// enumerating small M-models explicitly.

#ifndef CQE_TESTS_ORACLE_HPP_
#define CQE_TESTS_ORACLE_HPP_

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "cqe/formula.hpp"
#include "cqe/modal.hpp"

namespace oracle {

using cqe::LFormula;
using cqe::LTheory;
using cqe::MFormula;

inline bool value(const LFormula& f, const std::map<std::string, bool>& v) {
  using K = LFormula::Kind;
  switch (f.kind()) {
    case K::Atom: return v.at(f.name());
    case K::Bottom: return false;
    case K::Top: return true;
    case K::Not: return !value(f.operand(), v);
    case K::And: return value(f.lhs(), v) && value(f.rhs(), v);
    case K::Or: return value(f.lhs(), v) || value(f.rhs(), v);
    case K::Implies: return !value(f.lhs(), v) || value(f.rhs(), v);
  }
  return false;
}

inline void names(const LFormula& f, std::vector<std::string>& out) {
  if (f.kind() == LFormula::Kind::Atom) {
    for (const auto& n : out)
      if (n == f.name()) return;
    out.push_back(f.name());
    return;
  }
  if (f.kind() == LFormula::Kind::Not) names(f.operand(), out);
  if (f.kind() == LFormula::Kind::And || f.kind() == LFormula::Kind::Or || f.kind() == LFormula::Kind::Implies) {
    names(f.lhs(), out);
    names(f.rhs(), out);
  }
}

// Naive semantic consequence: every valuation of the mentioned atoms that makes
// all premises true makes the goal true.
inline bool derives(const LTheory& premises, const LFormula& goal) {
  std::vector<std::string> vars;
  for (const auto& p : premises) names(p, vars);
  names(goal, vars);
  std::map<std::string, bool> v;
  for (std::uint64_t row = 0; row < (std::uint64_t{1} << vars.size()); ++row) {
    for (std::size_t i = 0; i < vars.size(); ++i) v[vars[i]] = (row >> i) & 1U;
    bool premises_true = true;
    for (const auto& p : premises) premises_true = premises_true && value(p, v);
    if (premises_true && !value(goal, v)) return false;
  }
  return true;
}

// Truth of an M-formula in an explicit model.
inline bool holds(const std::vector<LTheory>& worlds, const MFormula& f) {
  using K = MFormula::Kind;
  switch (f.kind()) {
    case K::Box:
      for (const auto& w : worlds)
        if (!oracle::derives(w, f.inner())) return false;
      return true;
    case K::Bottom: return false;
    case K::Top: return true;
    case K::Not: return !holds(worlds, f.operand());
    case K::And: return holds(worlds, f.lhs()) && holds(worlds, f.rhs());
    case K::Or: return holds(worlds, f.lhs()) || holds(worlds, f.rhs());
    case K::Implies: return !holds(worlds, f.lhs()) || holds(worlds, f.rhs());
  }
  return false;
}

// Every model with at most two worlds, each world a subset of the literals over
// {a, b, c}. The empty model comes first.
inline std::vector<std::vector<LTheory>> small_models() {
  std::vector<LFormula> literals;
  for (const char* n : {"a", "b", "c"}) {
    literals.push_back(cqe::atom(n));
    literals.push_back(cqe::neg(cqe::atom(n)));
  }
  std::vector<LTheory> worlds;
  for (unsigned mask = 0; mask < 64; ++mask) {
    LTheory w;
    for (unsigned i = 0; i < 6; ++i)
      if (mask & (1U << i)) w.insert(literals[i]);
    worlds.push_back(w);
  }
  std::vector<std::vector<LTheory>> models{{}};
  for (std::size_t i = 0; i < worlds.size(); ++i) {
    models.push_back({worlds[i]});
    for (std::size_t j = i + 1; j < worlds.size(); ++j) models.push_back({worlds[i], worlds[j]});
  }
  return models;
}

inline bool holds_all(const std::vector<LTheory>& worlds, const std::vector<MFormula>& gamma) {
  for (const auto& g : gamma)
    if (!holds(worlds, g)) return false;
  return true;
}

inline bool satisfiable(const std::vector<std::vector<LTheory>>& models, const std::vector<MFormula>& gamma) {
  for (const auto& m : models)
    if (holds_all(m, gamma)) return true;
  return false;
}

inline bool entails(const std::vector<std::vector<LTheory>>& models, const std::vector<MFormula>& gamma,
                    const MFormula& phi) {
  for (const auto& m : models)
    if (holds_all(m, gamma) && !holds(m, phi)) return false;
  return true;
}

// Random formulas for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool coin() { return below(2) == 0; }

  LFormula atom(std::size_t atom_count) { return cqe::atom(std::string(1, static_cast<char>('a' + below(atom_count)))); }

  LFormula literal(std::size_t atom_count) {
    auto p = atom(atom_count);
    return coin() ? p : cqe::neg(p);
  }

  LFormula formula(std::size_t atom_count, std::size_t depth) {
    if (depth == 0 || below(4) == 0) {
      std::size_t k = below(12);
      if (k == 0) return cqe::bottom();
      if (k == 1) return cqe::top();
      return atom(atom_count);
    }
    switch (below(4)) {
      case 0: return cqe::neg(formula(atom_count, depth - 1));
      case 1: return cqe::conj(formula(atom_count, depth - 1), formula(atom_count, depth - 1));
      case 2: return cqe::disj(formula(atom_count, depth - 1), formula(atom_count, depth - 1));
      default: return cqe::implies(formula(atom_count, depth - 1), formula(atom_count, depth - 1));
    }
  }

  LTheory theory(std::size_t atom_count, std::size_t max_size, std::size_t depth) {
    LTheory t;
    for (std::size_t k = below(max_size + 1); k > 0; --k) t.insert(formula(atom_count, depth));
    return t;
  }

  // Boolean combination of the given box-atoms.
  MFormula modal(const std::vector<LFormula>& pool, std::size_t depth) {
    if (depth == 0 || below(3) == 0) {
      std::size_t k = below(10);
      if (k == 0) return cqe::mbottom();
      if (k == 1) return cqe::mtop();
      return cqe::box(pool[below(pool.size())]);
    }
    switch (below(4)) {
      case 0: return cqe::mneg(modal(pool, depth - 1));
      case 1: return cqe::mconj(modal(pool, depth - 1), modal(pool, depth - 1));
      case 2: return cqe::mdisj(modal(pool, depth - 1), modal(pool, depth - 1));
      default: return cqe::mimplies(modal(pool, depth - 1), modal(pool, depth - 1));
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle

#endif  // CQE_TESTS_ORACLE_HPP_
