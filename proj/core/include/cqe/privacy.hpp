// Privacy configurations, query evaluation and the content of answers.

#ifndef CQE_PRIVACY_HPP_
#define CQE_PRIVACY_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cqe/formula.hpp"
#include "cqe/modal.hpp"

namespace cqe {

// t: the query follows from the knowledge base; u: it does not; r: refused.
enum class Answer { True, Unknown, Refuse };

char to_char(Answer a) noexcept;
std::optional<Answer> answer_from_char(char c) noexcept;

struct PrivacyConfiguration {
  LTheory kb;
  MTheory ak;
  LTheory sec;
};

struct ValidationReport {
  bool consistent = true;
  bool truthful_start = true;
  bool hidden_secrets = true;
  // First a-priori formula that is false in the model {kb}.
  std::optional<MFormula> false_ak;
  // First secret s with ak entailing box(s).
  std::optional<LFormula> exposed_secret;

  bool valid() const noexcept { return consistent && truthful_start && hidden_secrets; }
};

class InvalidConfiguration : public std::runtime_error {
 public:
  explicit InvalidConfiguration(const ValidationReport& report);
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

ValidationReport validate(const PrivacyConfiguration& config);

struct TranscriptEvent {
  enum class Kind {
    // Every admissible answer would disclose a secret or contradict earlier answers.
    UnavoidableLeak,
  };
  std::size_t index;  // zero-based query position
  Kind kind;
  std::string detail;
};

// Finite prefix of a query sequence together with the censor's answers.
struct Transcript {
  std::vector<LFormula> queries;
  std::vector<Answer> answers;
  std::vector<TranscriptEvent> events;

  std::size_t size() const noexcept { return answers.size(); }
  // First n queries and answers; events past n are dropped.
  Transcript prefix(std::size_t n) const;
};

Answer eval(const LTheory& kb, const LFormula& q);

// t -> box q, u -> ~box q, r -> top.
MFormula answer_content(const LFormula& q, Answer a);

// Content of the first n answers together with the a priori knowledge.
// Throws std::out_of_range when n exceeds the transcript length.
MTheory transcript_content(const Transcript& tr, const MTheory& ak, std::size_t n);

// Full content of kb restricted to a finite universe of queries.
MTheory full_content(const LTheory& kb, const LTheory& universe);

// Why a content set is unacceptable to publish.
struct Disclosure {
  enum class Kind { Secret, Contradiction };
  Kind kind;
  std::optional<LFormula> secret;
};

// First secret s (in set order) with content entailing box(s), or a
// contradiction if content is unsatisfiable.
std::optional<Disclosure> find_disclosure(const MTheory& content, const LTheory& sec);

}  // namespace cqe

#endif  // CQE_PRIVACY_HPP_
