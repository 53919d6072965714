#include "cqe/verifier.hpp"

#include <algorithm>
#include <stdexcept>

#include "cqe/logic.hpp"
#include "cqe/printer.hpp"

namespace cqe {

namespace {

std::string compact(std::string s) {
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  return s;
}

PropertyReport violated(std::string property, Witness w) {
  return PropertyReport{std::move(property), Verdict::Violated, std::move(w)};
}

}  // namespace

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Holds:
      return "holds";
    case Verdict::Violated:
      return "violated";
    case Verdict::Undetermined:
      return "undetermined";
  }
  return "?";
}

std::string PropertyReport::to_line() const {
  std::vector<std::string> parts;
  if (witness.index) parts.push_back("n:" + std::to_string(*witness.index));
  if (witness.secret) parts.push_back("secret:" + compact(cqe::to_string(*witness.secret)));
  if (witness.kb) parts.push_back("kb:" + compact(cqe::to_string(*witness.kb)));
  std::string w;
  for (const auto& p : parts) w += (w.empty() ? "" : ",") + p;
  if (w.empty()) w = "-";
  return "property=" + property + " verdict=" + cqe::to_string(verdict) + " witness=" + w;
}

PropertyReport check_effective(const PrivacyConfiguration& config, const Transcript& tr) {
  for (std::size_t n = 0; n <= tr.size(); ++n) {
    MTheory content = transcript_content(tr, config.ak, n);
    for (const auto& s : config.sec) {
      if (entails(content, box(s))) {
        return violated("effective", {n, s, std::nullopt, "content entails box of a secret"});
      }
    }
  }
  return {"effective", Verdict::Holds, {}};
}

PropertyReport check_credible(const PrivacyConfiguration& config, const Transcript& tr) {
  for (std::size_t n = 0; n <= tr.size(); ++n) {
    if (!satisfiable(transcript_content(tr, config.ak, n))) {
      return violated("credible", {n, std::nullopt, std::nullopt, "content is unsatisfiable"});
    }
  }
  return {"credible", Verdict::Holds, {}};
}

PropertyReport check_truthful(const PrivacyConfiguration& config, const Transcript& tr) {
  for (std::size_t i = 0; i < tr.size(); ++i) {
    Answer a = tr.answers[i];
    Answer honest = eval(config.kb, tr.queries[i]);
    if (a != Answer::Refuse && a != honest) {
      return violated("truthful", {i + 1, std::nullopt, std::nullopt,
                                   std::string("answered ") + to_char(a) + ", evaluation is " + to_char(honest)});
    }
  }
  return {"truthful", Verdict::Holds, {}};
}

PropertyReport check_min_invasive(const PrivacyConfiguration& config, const Censor& censor,
                                  std::span<const LFormula> queries) {
  const Transcript tr = run(censor, config, queries);
  std::optional<std::size_t> undecided;
  for (std::size_t i = 0; i < tr.size(); ++i) {
    Answer honest = eval(config.kb, tr.queries[i]);
    if (tr.answers[i] == honest) continue;

    Transcript repaired = tr.prefix(i);
    repaired.queries.push_back(tr.queries[i]);
    repaired.answers.push_back(honest);
    if (find_disclosure(transcript_content(repaired, config.ak, i + 1), config.sec)) continue;

    Session probe = Session::resume(config, censor, repaired);
    for (std::size_t j = i + 1; j < queries.size(); ++j) probe.ask(queries[j]);
    if (check_effective(config, probe.transcript()).holds() && check_credible(config, probe.transcript()).holds()) {
      return violated("min-invasive", {i + 1, std::nullopt, std::nullopt,
                                       "honest answer is harmless and the continuation stays effective and credible"});
    }
    if (!undecided) undecided = i + 1;
  }
  if (undecided) {
    return {"min-invasive", Verdict::Undetermined,
            {undecided, std::nullopt, std::nullopt, "honest answer leaks only in the continuation probe"}};
  }
  return {"min-invasive", Verdict::Holds, {}};
}

std::vector<LTheory> literal_kb_universe(const AtomSet& atoms) {
  std::vector<LTheory> out{LTheory{}};
  for (const auto& name : atoms) {
    std::vector<LTheory> next;
    next.reserve(out.size() * 3);
    for (const auto& kb : out) {
      next.push_back(kb);
      LTheory pos = kb;
      pos.insert(atom(name));
      next.push_back(std::move(pos));
      LTheory negative = kb;
      negative.insert(neg(atom(name)));
      next.push_back(std::move(negative));
    }
    out = std::move(next);
  }
  return out;
}

std::vector<LTheory> default_kb_universe(const PrivacyConfiguration& config) {
  AtomSet sig = atoms_of(config.kb);
  for (const auto& a : atoms_of(box_atoms(config.ak))) sig.insert(a);
  for (const auto& a : atoms_of(config.sec)) sig.insert(a);
  return literal_kb_universe(sig);
}

PropertyReport check_repudiating(const PrivacyConfiguration& config, const Censor& censor,
                                 std::span<const LFormula> queries, std::span<const LTheory> kb_universe) {
  if (kb_universe.empty()) throw std::invalid_argument("repudiation check needs a non-empty knowledge-base universe");
  const Transcript actual = run(censor, config, queries);
  const std::string scope = " (within a universe of " + std::to_string(kb_universe.size()) + " candidates)";

  std::optional<std::size_t> best;  // longest reproduced prefix
  std::optional<LTheory> best_kb;
  for (const auto& kb : kb_universe) {
    bool secret_free = std::none_of(config.sec.begin(), config.sec.end(),
                                    [&](const LFormula& s) { return derives(kb, s); });
    if (!secret_free) continue;
    PrivacyConfiguration candidate{kb, config.ak, config.sec};
    if (!validate(candidate).valid()) continue;

    Session session = Session::resume(candidate, censor, Transcript{});
    std::size_t matched = 0;
    while (matched < actual.size() && session.ask(actual.queries[matched]) == actual.answers[matched]) ++matched;
    if (!best || matched > *best) {
      best = matched;
      best_kb = kb;
    }
    if (*best == actual.size()) break;
  }

  if (!best) {
    return violated("repudiating", {std::size_t{0}, std::nullopt, std::nullopt,
                                    "no secret-free candidate forms a valid configuration" + scope});
  }
  if (*best < actual.size()) {
    return violated("repudiating", {*best + 1, std::nullopt, std::nullopt,
                                    "no secret-free candidate reproduces this prefix" + scope});
  }
  return {"repudiating", Verdict::Holds, {std::nullopt, std::nullopt, best_kb, "witness knowledge base" + scope}};
}

PropertyReport check_repudiating(const PrivacyConfiguration& config, const Censor& censor,
                                 std::span<const LFormula> queries) {
  auto universe = default_kb_universe(config);
  return check_repudiating(config, censor, queries, universe);
}

}  // namespace cqe
