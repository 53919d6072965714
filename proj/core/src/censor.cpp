#include "cqe/censor.hpp"

#include <algorithm>
#include <stdexcept>

#include "cqe/printer.hpp"

namespace cqe {

namespace {

// Disclosure caused by appending answer a to q after history.
std::optional<Disclosure> disclosure_after(const PrivacyConfiguration& config, const Transcript& history,
                                           const LFormula& q, Answer a) {
  MTheory content = transcript_content(history, config.ak, history.size());
  content.insert(answer_content(q, a));
  return find_disclosure(content, config.sec);
}

std::string describe(const Disclosure& d) {
  if (d.kind == Disclosure::Kind::Contradiction) return "contradiction";
  return "secret " + to_string(*d.secret);
}

Answer flip(Answer a) { return a == Answer::True ? Answer::Unknown : Answer::True; }

class AllRefuse final : public CensorStrategy {
 public:
  std::string name() const override { return "all-refuse"; }
  bool may_refuse() const noexcept override { return true; }
  Decision next_answer(const PrivacyConfiguration&, const Transcript&, const LFormula&) const override {
    return {Answer::Refuse, std::nullopt};
  }
};

class TruthfulMin final : public CensorStrategy {
 public:
  std::string name() const override { return "truthful-min"; }
  bool may_refuse() const noexcept override { return true; }
  Decision next_answer(const PrivacyConfiguration& config, const Transcript& history,
                       const LFormula& q) const override {
    Answer honest = eval(config.kb, q);
    if (disclosure_after(config, history, q, honest)) return {Answer::Refuse, std::nullopt};
    return {honest, std::nullopt};
  }
};

class LyingNonRefusing final : public CensorStrategy {
 public:
  explicit LyingNonRefusing(TieBreak tie_break) : tie_break_(tie_break) {}

  std::string name() const override {
    return tie_break_ == TieBreak::Honest ? "lying(tie-break=honest)" : "lying(tie-break=lie)";
  }
  bool may_refuse() const noexcept override { return false; }

  Decision next_answer(const PrivacyConfiguration& config, const Transcript& history,
                       const LFormula& q) const override {
    Answer honest = eval(config.kb, q);
    auto honest_leak = disclosure_after(config, history, q, honest);
    if (!honest_leak) return {honest, std::nullopt};
    Answer lie = flip(honest);
    auto lie_leak = disclosure_after(config, history, q, lie);
    if (!lie_leak) return {lie, std::nullopt};

    TranscriptEvent event{history.size(), TranscriptEvent::Kind::UnavoidableLeak,
                          std::string("both answers disclose: ") + to_char(honest) + " -> " +
                              describe(*honest_leak) + ", " + to_char(lie) + " -> " + describe(*lie_leak)};
    return {tie_break_ == TieBreak::Honest ? honest : lie, std::move(event)};
  }

 private:
  TieBreak tie_break_;
};

class Honest final : public CensorStrategy {
 public:
  std::string name() const override { return "honest"; }
  bool may_refuse() const noexcept override { return false; }
  Decision next_answer(const PrivacyConfiguration& config, const Transcript&, const LFormula& q) const override {
    return {eval(config.kb, q), std::nullopt};
  }
};

class RefuseSecretAtoms final : public CensorStrategy {
 public:
  std::string name() const override { return "refuse-secret-atoms"; }
  bool may_refuse() const noexcept override { return true; }
  Decision next_answer(const PrivacyConfiguration& config, const Transcript&, const LFormula& q) const override {
    AtomSet secret_atoms = atoms_of(config.sec);
    AtomSet query_atoms = atoms(q);
    bool touches = std::any_of(query_atoms.begin(), query_atoms.end(),
                               [&](const std::string& a) { return secret_atoms.contains(a); });
    if (touches) return {Answer::Refuse, std::nullopt};
    return {eval(config.kb, q), std::nullopt};
  }
};

}  // namespace

Censor all_refuse() { return std::make_shared<AllRefuse>(); }
Censor truthful_min() { return std::make_shared<TruthfulMin>(); }
Censor lying_nonrefusing(TieBreak tie_break) { return std::make_shared<LyingNonRefusing>(tie_break); }
Censor honest() { return std::make_shared<Honest>(); }
Censor refuse_secret_atoms() { return std::make_shared<RefuseSecretAtoms>(); }

Censor censor_by_name(std::string_view name, TieBreak tie_break) {
  if (name == "all-refuse") return all_refuse();
  if (name == "truthful-min") return truthful_min();
  if (name == "lying") return lying_nonrefusing(tie_break);
  if (name == "honest") return honest();
  if (name == "refuse-secret-atoms") return refuse_secret_atoms();
  throw std::invalid_argument("unknown censor '" + std::string(name) + "'");
}

Session::Session(PrivacyConfiguration config, Censor censor, Transcript history, bool validated)
    : config_(std::move(config)), censor_(std::move(censor)), transcript_(std::move(history)) {
  if (!censor_) throw std::invalid_argument("null censor");
  if (!validated) {
    auto report = validate(config_);
    if (!report.valid()) throw InvalidConfiguration(report);
  }
}

Session::Session(PrivacyConfiguration config, Censor censor)
    : Session(std::move(config), std::move(censor), Transcript{}, false) {}

Session Session::resume(PrivacyConfiguration config, Censor censor, Transcript history) {
  return Session(std::move(config), std::move(censor), std::move(history), true);
}

Answer Session::ask(const LFormula& query) {
  Decision d = censor_->next_answer(config_, transcript_, query);
  transcript_.queries.push_back(query);
  transcript_.answers.push_back(d.answer);
  if (d.event) transcript_.events.push_back(std::move(*d.event));
  return d.answer;
}

Transcript run(const Censor& censor, const PrivacyConfiguration& config, std::span<const LFormula> queries) {
  Session session(config, censor);
  for (const auto& q : queries) session.ask(q);
  return session.transcript();
}

}  // namespace cqe
