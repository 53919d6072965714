// External checkers for the censor properties of a concrete run.
//
// Positions and prefix lengths in reports are 1-based; a prefix length of 0
// refers to the a priori knowledge alone.

#ifndef CQE_VERIFIER_HPP_
#define CQE_VERIFIER_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cqe/censor.hpp"
#include "cqe/privacy.hpp"

namespace cqe {

enum class Verdict { Holds, Violated, Undetermined };

const char* to_string(Verdict v) noexcept;

struct Witness {
  std::optional<std::size_t> index;  // prefix length n or query position i
  std::optional<LFormula> secret;
  std::optional<LTheory> kb;
  std::string note;
};

struct PropertyReport {
  std::string property;
  Verdict verdict = Verdict::Holds;
  Witness witness;

  bool holds() const noexcept { return verdict == Verdict::Holds; }
  bool violated() const noexcept { return verdict == Verdict::Violated; }
  // property=<name> verdict=<v> witness=<key:value,...|->
  std::string to_line() const;
};

// Violated iff some prefix content entails box(s) for a secret s; the witness
// is the least such prefix length with the first such secret.
PropertyReport check_effective(const PrivacyConfiguration& config, const Transcript& tr);
// Violated iff some prefix content is unsatisfiable.
PropertyReport check_credible(const PrivacyConfiguration& config, const Transcript& tr);
// Violated iff some answer is neither the honest evaluation nor a refusal.
PropertyReport check_truthful(const PrivacyConfiguration& config, const Transcript& tr);

// For every distorted position i, puts the honest answer back in place.
//  - If that content already entails a secret or is unsatisfiable, the distortion
//    is necessary.
//  - Otherwise the censor is resumed from the repaired prefix over the remaining
//    queries. If the resumed run stays effective and credible, the distortion was
//    unnecessary: violated, witness i.
//  - If the resumed run fails later, the one-step criterion cannot decide:
//    undetermined.
PropertyReport check_min_invasive(const PrivacyConfiguration& config, const Censor& censor,
                                  std::span<const LFormula> queries);

// All consistent sets of literals over the given atoms (3^n theories).
std::vector<LTheory> literal_kb_universe(const AtomSet& atoms);
// literal_kb_universe over the atoms of kb, the box-atoms of ak, and sec.
std::vector<LTheory> default_kb_universe(const PrivacyConfiguration& config);

// Plausible deniability, searched within a finite universe of candidate
// knowledge bases. Holds iff for every n there is a candidate KB_n that forms a
// valid configuration with ak and sec, derives no secret, and makes the censor
// reproduce the first n answers. Throws std::invalid_argument on an empty universe.
PropertyReport check_repudiating(const PrivacyConfiguration& config, const Censor& censor,
                                 std::span<const LFormula> queries, std::span<const LTheory> kb_universe);
PropertyReport check_repudiating(const PrivacyConfiguration& config, const Censor& censor,
                                 std::span<const LFormula> queries);

}  // namespace cqe

#endif  // CQE_VERIFIER_HPP_
