// Censors: answering strategies that may refuse or lie to keep secrets.
//
// A strategy sees the configuration, the transcript so far and the current
// query, never later queries, so every censor built from one is continuous.

#ifndef CQE_CENSOR_HPP_
#define CQE_CENSOR_HPP_

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "cqe/privacy.hpp"

namespace cqe {

struct Decision {
  Answer answer;
  std::optional<TranscriptEvent> event;
};

class CensorStrategy {
 public:
  virtual ~CensorStrategy() = default;

  virtual std::string name() const = 0;
  virtual bool may_refuse() const noexcept = 0;
  // Must be deterministic in its arguments.
  virtual Decision next_answer(const PrivacyConfiguration& config, const Transcript& history,
                               const LFormula& query) const = 0;
};

using Censor = std::shared_ptr<const CensorStrategy>;

// What a non-refusing censor does when both t and u would disclose.
enum class TieBreak { Honest, Lie };

// Refuses every query.
Censor all_refuse();
// Answers honestly unless the honest answer would immediately let the content
// entail a secret or become unsatisfiable; refuses in that case.
Censor truthful_min();
// Answers honestly unless that discloses; then answers the other of t/u. When
// both disclose, applies the tie-break and records an UnavoidableLeak event.
Censor lying_nonrefusing(TieBreak tie_break = TieBreak::Honest);
// Plain evaluation, no protection at all.
Censor honest();
// Refuses every query that mentions an atom occurring in a secret; otherwise honest.
Censor refuse_secret_atoms();

// CLI names: all-refuse, truthful-min, lying, honest, refuse-secret-atoms.
// Throws std::invalid_argument for unknown names.
Censor censor_by_name(std::string_view name, TieBreak tie_break = TieBreak::Honest);

// Incremental run of a censor: one query at a time.
class Session {
 public:
  // Throws InvalidConfiguration when validate(config) fails.
  Session(PrivacyConfiguration config, Censor censor);

  // Continues from an arbitrary history without re-validating the configuration.
  static Session resume(PrivacyConfiguration config, Censor censor, Transcript history);

  Answer ask(const LFormula& query);

  const Transcript& transcript() const noexcept { return transcript_; }
  const PrivacyConfiguration& config() const noexcept { return config_; }
  const Censor& censor() const noexcept { return censor_; }
  MTheory content() const { return transcript_content(transcript_, config_.ak, transcript_.size()); }

 private:
  Session(PrivacyConfiguration config, Censor censor, Transcript history, bool validated);

  PrivacyConfiguration config_;
  Censor censor_;
  Transcript transcript_;
};

// Answers computed left to right. Throws InvalidConfiguration.
Transcript run(const Censor& censor, const PrivacyConfiguration& config, std::span<const LFormula> queries);

}  // namespace cqe

#endif  // CQE_CENSOR_HPP_
