// Consequence relation for the object logic (classical propositional logic).

#ifndef CQE_LOGIC_HPP_
#define CQE_LOGIC_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "cqe/formula.hpp"

namespace cqe {

// Answers many derivability questions whose premises and goals are all drawn
// from one fixed list of formulas. Indices refer to positions in that list.
class UniverseOracle {
 public:
  virtual ~UniverseOracle() = default;
  virtual bool derives(std::span<const std::size_t> premises, std::size_t goal) const = 0;
};

// A consequence relation between finite formula sets and formulas. Any
// implementation must be reflexive, closed under weakening, and closed under cut;
// the modal layer relies on nothing else.
class ConsequenceRelation {
 public:
  virtual ~ConsequenceRelation() = default;
  virtual bool derives(const LTheory& premises, const LFormula& goal) const = 0;
  // Default implementation forwards each question to derives().
  virtual std::unique_ptr<UniverseOracle> over(std::span<const LFormula> universe) const;
};

// Classical propositional logic. Small signatures are decided with bit-parallel
// truth tables, larger ones with a DPLL search on a Tseitin encoding.
class ClassicalLogic final : public ConsequenceRelation {
 public:
  // Crossover measured with cqe_bench: DPLL wins on implication chains past ~12 atoms.
  static constexpr std::size_t kTruthTableAtomLimit = 12;

  bool derives(const LTheory& premises, const LFormula& goal) const override;
  std::unique_ptr<UniverseOracle> over(std::span<const LFormula> universe) const override;
};

const ClassicalLogic& classical();

bool derives(const LTheory& premises, const LFormula& goal);
bool is_consistent(const LTheory& theory);
AtomSet atoms_of(const LTheory& theory);

namespace tt {

// Bit-parallel truth table: bit r is the value of a formula under valuation r,
// where atom i is true in row r iff bit i of r is set.
class Table {
 public:
  explicit Table(std::size_t atom_count, bool value = false);

  std::size_t atom_count() const noexcept { return atom_count_; }
  std::size_t rows() const noexcept { return std::size_t{1} << atom_count_; }

  static Table column(std::size_t atom_count, std::size_t atom);

  Table& operator&=(const Table& other);
  Table& operator|=(const Table& other);
  Table operator~() const;

  bool none() const noexcept;
  bool all() const noexcept { return (~*this).none(); }
  // True iff every row set in *this is also set in other.
  bool subset_of(const Table& other) const noexcept;
  bool test(std::size_t row) const noexcept { return (words_[row >> 6] >> (row & 63)) & 1U; }

 private:
  void trim() noexcept;

  std::size_t atom_count_;
  std::vector<std::uint64_t> words_;
};

class Signature {
 public:
  explicit Signature(const AtomSet& atoms);
  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  Table evaluate(const LFormula& f) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Table> columns_;
};

bool derives(const LTheory& premises, const LFormula& goal);

}  // namespace tt

namespace sat {

// Satisfiability of a conjunction of formulas by DPLL over a Tseitin encoding.
bool satisfiable(std::span<const LFormula> formulas);
bool derives(const LTheory& premises, const LFormula& goal);

}  // namespace sat

}  // namespace cqe

#endif  // CQE_LOGIC_HPP_
