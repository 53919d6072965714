#include "cqe/scenarios.hpp"

#include <algorithm>
#include <ostream>

#include "cqe/logic.hpp"

namespace cqe {

namespace {

std::string str(const LFormula& f) { return to_string(f); }
std::string str(const MFormula& f) { return to_string(f); }
std::string str(const MTheory& t) { return to_string(t); }

std::string answers_string(const std::vector<Answer>& answers) {
  std::string out = "(";
  for (std::size_t i = 0; i < answers.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_char(answers[i]);
  }
  return out + ")";
}

std::string describe(const std::optional<Disclosure>& d) {
  if (!d) return "no disclosure";
  if (d->kind == Disclosure::Kind::Contradiction) return "unsatisfiable";
  return "entails box(" + str(*d->secret) + ")";
}

// Runs the censor step by step and records, per step, what each candidate
// answer would disclose.
Transcript traced_run(ScenarioReport& report, const PrivacyConfiguration& config, const Censor& censor,
                      const std::vector<LFormula>& queries) {
  Session session(config, censor);
  for (const auto& q : queries) {
    MTheory before = session.content();
    Answer honest = eval(config.kb, q);
    std::vector<std::string> checks;
    checks.push_back(std::string("eval(kb, ") + str(q) + ") = " + to_char(honest));
    for (Answer candidate : {Answer::True, Answer::Unknown}) {
      MTheory content = before;
      content.insert(answer_content(q, candidate));
      checks.push_back(std::string("answer ") + to_char(candidate) + ": content " +
                       describe(find_disclosure(content, config.sec)));
    }
    Answer a = session.ask(q);
    report.steps.push_back({session.transcript().size(), q, a, answer_content(q, a), std::move(checks)});
  }
  for (const auto& e : session.transcript().events) {
    report.notes.push_back("event at query " + std::to_string(e.index + 1) + ": " + e.detail);
  }
  return session.transcript();
}

void claim(ScenarioReport& report, std::string text, std::string source, bool passed) {
  report.claims.push_back({std::move(text), std::move(source), passed});
}

void claim_entails(ScenarioReport& report, const std::string& label, const MTheory& gamma, const MFormula& phi,
                   bool expected) {
  bool result = entails(gamma, phi);
  claim(report, label + (expected ? " entails " : " does not entail ") + str(phi),
        "entails(" + str(gamma) + ", " + str(phi) + ") = " + (result ? "true" : "false"), result == expected);
}

void claim_report(ScenarioReport& report, const PropertyReport& pr, Verdict expected,
                  std::optional<std::size_t> expected_index = std::nullopt) {
  bool ok = pr.verdict == expected;
  if (ok && expected_index) ok = pr.witness.index == expected_index;
  std::string text = pr.property + " " + to_string(expected);
  if (expected_index) text += " at n=" + std::to_string(*expected_index);
  std::string fn = "check_" + pr.property;
  std::replace(fn.begin(), fn.end(), '-', '_');
  claim(report, text, fn + ": " + pr.to_line(), ok);
}

PrivacyConfiguration nogo2_config(bool protect_disjunction) {
  auto a = atom("a"), b = atom("b"), c = atom("c");
  PrivacyConfiguration config;
  config.kb = {a, b};
  config.sec = {a, b};
  if (protect_disjunction) config.sec.insert(disj(a, b));
  config.ak = {
      mimplies(box(implies(c, a)), mdisj(box(neg(c)), box(a))),
      mimplies(box(implies(neg(c), b)), mdisj(box(c), box(b))),
  };
  return config;
}

std::vector<LFormula> nogo2_queries() {
  auto a = atom("a"), b = atom("b"), c = atom("c");
  return {implies(c, a), implies(neg(c), b), c};
}

}  // namespace

bool ScenarioReport::passed() const noexcept {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.passed; });
}

void ScenarioReport::print(std::ostream& os, Notation notation) const {
  os << "scenario " << name << '\n';
  for (const auto& note : notes) os << "  note: " << note << '\n';
  for (const auto& step : steps) {
    os << "  " << step.position << ". " << to_string(step.query, notation) << "  =>  " << to_char(step.answer)
       << "   content += " << to_string(step.content_delta, notation) << '\n';
    for (const auto& c : step.checks) os << "       " << c << '\n';
  }
  for (const auto& c : claims) {
    os << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.text << '\n' << "         by " << c.source << '\n';
  }
  os << "result: " << (passed() ? "all claims pass" : "claim failure") << '\n';
}

ScenarioReport demo_nogo1() {
  ScenarioReport report;
  report.name = "nogo1";
  report.notes.push_back(
      "the query sequence (s, s, ...) is represented by its first three queries; continuity and the "
      "same-query-same-answer property make longer prefixes redundant");

  const auto s = atom("s");
  const PrivacyConfiguration config{{s}, {}, {s}};
  const std::vector<LFormula> queries{s, s, s};
  const Censor censor = truthful_min();

  claim(report, "configuration KB={s}, AK={}, Sec={s} is valid", "validate", validate(config).valid());

  Transcript tr = traced_run(report, config, censor, queries);
  const std::vector<Answer> rrr{Answer::Refuse, Answer::Refuse, Answer::Refuse};
  claim(report, "truthful-min answers (r, r, r)", "run(truthful-min, config, (s, s, s)) = " + answers_string(tr.answers),
        tr.answers == rrr);

  for (std::size_t n = 0; n <= tr.size(); ++n) {
    MTheory content = transcript_content(tr, config.ak, n);
    bool ok = satisfiable(content) && std::all_of(content.begin(), content.end(), [](const MFormula& f) {
                return f.kind() == MFormula::Kind::Top;
              });
    claim(report, "content after " + std::to_string(n) + " answers is a satisfiable subset of {top}",
          "transcript_content(tr, {}, " + std::to_string(n) + ") = " + str(content), ok);
  }

  claim_report(report, check_effective(config, tr), Verdict::Holds);
  claim_report(report, check_truthful(config, tr), Verdict::Holds);
  claim_report(report, check_min_invasive(config, censor, queries), Verdict::Holds);

  const auto universe = literal_kb_universe({"s"});
  claim(report, "repudiation universe is {}, {s}, {~s}", "literal_kb_universe({s})", universe.size() == 3);
  claim_report(report, check_repudiating(config, censor, queries, universe), Verdict::Violated, std::size_t{1});

  // Case analysis over the alternative knowledge bases.
  for (const auto& kb1 : universe) {
    const std::string name = to_string(kb1);
    if (derives(kb1, s)) {
      claim(report, "KB1=" + name + " is excluded: it derives the secret", "derives(" + name + ", s) = true", true);
      continue;
    }
    Answer honest = eval(kb1, s);
    claim(report, "KB1=" + name + ": a truthful answer to s is u or r",
          std::string("eval(") + name + ", s) = " + to_char(honest), honest == Answer::Unknown);
    Transcript alt = run(censor, PrivacyConfiguration{kb1, {}, {s}}, std::span(queries).first(1));
    claim(report, "KB1=" + name + ": truthful-min answers u, which differs from r",
          std::string("run(truthful-min, (") + name + ", {}, {s}), (s)) = " + answers_string(alt.answers),
          alt.answers.front() == Answer::Unknown);
    MTheory honest_content{answer_content(s, Answer::Unknown)};
    bool harmless = !entails(honest_content, box(s)) && satisfiable(honest_content);
    claim(report, "KB1=" + name + ": refusing would not be minimally invasive, honest content {~box(s)} is harmless",
          "entails({~box(s)}, box(s)) = false, satisfiable({~box(s)}) = true", harmless);
  }
  return report;
}

ScenarioReport demo_nogo2() {
  ScenarioReport report;
  report.name = "nogo2";
  const auto a = atom("a"), b = atom("b"), c = atom("c");
  const PrivacyConfiguration config = nogo2_config(false);
  const auto queries = nogo2_queries();
  const Censor censor = lying_nonrefusing(TieBreak::Honest);

  claim(report, "configuration KB={a, b}, Sec={a, b}, AK=atomicity instances is valid", "validate",
        validate(config).valid());

  Transcript tr = traced_run(report, config, censor, queries);
  claim(report, "the first two answers are (t, t)",
        "run(lying, config, queries) = " + answers_string(tr.answers),
        tr.size() == 3 && tr.answers[0] == Answer::True && tr.answers[1] == Answer::True);
  claim(report, "no answer is a refusal", "run(lying, config, queries) = " + answers_string(tr.answers),
        std::none_of(tr.answers.begin(), tr.answers.end(), [](Answer x) { return x == Answer::Refuse; }));

  const MTheory content2 = transcript_content(tr, config.ak, 2);
  const std::string label = "content after 2 answers";
  claim_entails(report, label, content2, box(implies(c, a)), true);
  claim_entails(report, label, content2, box(implies(neg(c), b)), true);
  claim_entails(report, label, content2, mimplies(box(c), box(a)), true);
  claim_entails(report, label, content2, mimplies(box(neg(c)), box(b)), true);
  claim_entails(report, label, content2, mdisj(box(neg(c)), box(a)), true);
  claim_entails(report, label, content2, mdisj(box(c), box(b)), true);
  claim_entails(report, label, content2, mdisj(box(a), box(b)), true);
  claim_entails(report, label, content2, box(a), false);
  claim_entails(report, label, content2, box(b), false);

  // Both candidate answers to the third query c.
  for (Answer third : {Answer::Unknown, Answer::True}) {
    Transcript branch = tr.prefix(2);
    branch.queries.push_back(c);
    branch.answers.push_back(third);
    MTheory content3 = transcript_content(branch, config.ak, 3);
    const LFormula& leaked = third == Answer::Unknown ? b : a;
    claim_entails(report, std::string("third answer ") + to_char(third) + ": content", content3, box(leaked), true);
    PropertyReport eff = check_effective(config, branch);
    bool ok = eff.violated() && eff.witness.index == 3u && eff.witness.secret == leaked;
    claim(report,
          std::string("third answer ") + to_char(third) + ": effectiveness violated at n=3 with secret " + str(leaked),
          "check_effective: " + eff.to_line(), ok);
  }

  claim(report, "the censor flags the unavoidable leak at query 3",
        "transcript events: " + std::to_string(tr.events.size()),
        tr.events.size() == 1 && tr.events.front().index == 2);
  claim_report(report, check_effective(config, tr), Verdict::Violated, std::size_t{3});

  Transcript lie = run(lying_nonrefusing(TieBreak::Lie), config, queries);
  claim_report(report, check_effective(config, lie), Verdict::Violated, std::size_t{3});
  return report;
}

ScenarioReport demo_nogo2_fixed() {
  ScenarioReport report;
  report.name = "nogo2-fixed";
  const auto a = atom("a"), b = atom("b"), c = atom("c");
  const PrivacyConfiguration config = nogo2_config(true);
  const auto queries = nogo2_queries();
  const Censor censor = lying_nonrefusing(TieBreak::Honest);

  claim(report, "configuration with Sec={a, b, a | b} is valid", "validate", validate(config).valid());
  Transcript tr = traced_run(report, config, censor, queries);

  claim(report, "the second query ~c -> b is answered u", "run(lying, config, queries) = " + answers_string(tr.answers),
        tr.size() == 3 && tr.answers[1] == Answer::Unknown);

  Transcript honest2 = tr.prefix(1);
  honest2.queries.push_back(queries[1]);
  honest2.answers.push_back(Answer::True);
  claim_entails(report, "content with the honest second answer t", transcript_content(honest2, config.ak, 2),
                box(disj(a, b)), true);

  for (std::size_t n = 0; n <= tr.size(); ++n) {
    MTheory content = transcript_content(tr, config.ak, n);
    for (const auto& s : {a, b, disj(a, b)}) {
      claim_entails(report, "content after " + std::to_string(n) + " answers", content, box(s), false);
    }
  }
  claim_report(report, check_effective(config, tr), Verdict::Holds);
  claim(report, "no unavoidable leak is flagged", "transcript events: " + std::to_string(tr.events.size()),
        tr.events.empty());
  return report;
}

std::optional<ScenarioReport> demo_by_name(const std::string& name) {
  if (name == "nogo1") return demo_nogo1();
  if (name == "nogo2") return demo_nogo2();
  if (name == "nogo2-fixed") return demo_nogo2_fixed();
  return std::nullopt;
}

}  // namespace cqe
