#include "cqe/privacy.hpp"

#include "cqe/logic.hpp"

namespace cqe {

namespace {

std::string describe(const ValidationReport& report) {
  std::string msg = "invalid privacy configuration:";
  if (!report.consistent) msg += " consistency";
  if (!report.truthful_start) msg += " truthful-start";
  if (!report.hidden_secrets) msg += " hidden-secrets";
  return msg;
}

}  // namespace

char to_char(Answer a) noexcept {
  switch (a) {
    case Answer::True:
      return 't';
    case Answer::Unknown:
      return 'u';
    case Answer::Refuse:
      return 'r';
  }
  return '?';
}

std::optional<Answer> answer_from_char(char c) noexcept {
  switch (c) {
    case 't':
      return Answer::True;
    case 'u':
      return Answer::Unknown;
    case 'r':
      return Answer::Refuse;
    default:
      return std::nullopt;
  }
}

InvalidConfiguration::InvalidConfiguration(const ValidationReport& report)
    : std::runtime_error(describe(report)), report_(report) {}

ValidationReport validate(const PrivacyConfiguration& config) {
  ValidationReport report;
  report.consistent = is_consistent(config.kb);

  const MModel start{{config.kb}};
  for (const auto& f : config.ak) {
    if (!holds(start, f)) {
      report.truthful_start = false;
      report.false_ak = f;
      break;
    }
  }

  for (const auto& s : config.sec) {
    if (entails(config.ak, box(s))) {
      report.hidden_secrets = false;
      report.exposed_secret = s;
      break;
    }
  }
  return report;
}

Transcript Transcript::prefix(std::size_t n) const {
  if (n > size()) throw std::out_of_range("transcript prefix longer than transcript");
  Transcript out;
  out.queries.assign(queries.begin(), queries.begin() + static_cast<std::ptrdiff_t>(n));
  out.answers.assign(answers.begin(), answers.begin() + static_cast<std::ptrdiff_t>(n));
  for (const auto& e : events) {
    if (e.index < n) out.events.push_back(e);
  }
  return out;
}

Answer eval(const LTheory& kb, const LFormula& q) { return derives(kb, q) ? Answer::True : Answer::Unknown; }

MFormula answer_content(const LFormula& q, Answer a) {
  switch (a) {
    case Answer::True:
      return box(q);
    case Answer::Unknown:
      return mneg(box(q));
    case Answer::Refuse:
      return mtop();
  }
  throw std::logic_error("unreachable");
}

MTheory transcript_content(const Transcript& tr, const MTheory& ak, std::size_t n) {
  if (n > tr.size() || tr.queries.size() != tr.answers.size()) {
    throw std::out_of_range("content index " + std::to_string(n) + " beyond transcript of length " +
                            std::to_string(tr.size()));
  }
  MTheory content = ak;
  for (std::size_t i = 0; i < n; ++i) content.insert(answer_content(tr.queries[i], tr.answers[i]));
  return content;
}

MTheory full_content(const LTheory& kb, const LTheory& universe) {
  MTheory out;
  for (const auto& a : universe) out.insert(answer_content(a, eval(kb, a)));
  return out;
}

std::optional<Disclosure> find_disclosure(const MTheory& content, const LTheory& sec) {
  if (!satisfiable(content)) return Disclosure{Disclosure::Kind::Contradiction, std::nullopt};
  for (const auto& s : sec) {
    if (entails(content, box(s))) return Disclosure{Disclosure::Kind::Secret, s};
  }
  return std::nullopt;
}

}  // namespace cqe
