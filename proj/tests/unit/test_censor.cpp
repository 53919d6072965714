#include <gtest/gtest.h>

#include "cqe/censor.hpp"
#include "cqe/scenarios.hpp"
#include "oracle.hpp"

using namespace cqe;

namespace {

LFormula a = atom("a"), b = atom("b"), c = atom("c"), s = atom("s");

std::vector<Answer> answers(const Censor& censor, const PrivacyConfiguration& config, std::vector<LFormula> qs) {
  return run(censor, config, qs).answers;
}

constexpr Answer T = Answer::True, U = Answer::Unknown, R = Answer::Refuse;

MTheory schema_ak() {
  return {mimplies(box(implies(c, a)), mdisj(box(neg(c)), box(a))),
          mimplies(box(implies(neg(c), b)), mdisj(box(c), box(b)))};
}

}  // namespace

TEST(AllRefuse, RefusesEverything) {
  PrivacyConfiguration config{{a, c}, {}, {c}};
  EXPECT_EQ(answers(all_refuse(), config, {a, b, c}), (std::vector<Answer>{R, R, R}));
  Session session(config, all_refuse());
  session.ask(a);
  session.ask(b);
  EXPECT_EQ(session.content(), MTheory{mtop()});
  EXPECT_TRUE(all_refuse()->may_refuse());
}

TEST(TruthfulMin, RunningExample) {
  PrivacyConfiguration config{{a, c}, {}, {c}};
  EXPECT_EQ(answers(truthful_min(), config, {a, b, c}), (std::vector<Answer>{T, U, R}));
}

TEST(TruthfulMin, FirstNoGoConfiguration) {
  PrivacyConfiguration config{{s}, {}, {s}};
  EXPECT_EQ(answers(truthful_min(), config, {s, s, s}), (std::vector<Answer>{R, R, R}));
  EXPECT_EQ(answers(truthful_min(), config, {s}), (std::vector<Answer>{R}));
}

TEST(TruthfulMin, BenignQueriesAnsweredHonestly) {
  PrivacyConfiguration config{{a, b}, {}, {c}};
  EXPECT_EQ(answers(truthful_min(), config, {a, b, neg(a), disj(a, c)}), (std::vector<Answer>{T, T, U, T}));
}

TEST(Lying, RunningExampleLiesInsteadOfRefusing) {
  PrivacyConfiguration config{{a, c}, {}, {c}};
  auto tr = run(lying_nonrefusing(), config, std::vector<LFormula>{a, b, c});
  EXPECT_EQ(tr.answers, (std::vector<Answer>{T, U, U}));
  EXPECT_TRUE(tr.events.empty());
  EXPECT_FALSE(lying_nonrefusing()->may_refuse());
}

TEST(Lying, SecondNoGoDilemmaIsFlagged) {
  PrivacyConfiguration config{{a, b}, schema_ak(), {a, b}};
  std::vector<LFormula> qs{implies(c, a), implies(neg(c), b)};
  EXPECT_EQ(answers(lying_nonrefusing(), config, qs), (std::vector<Answer>{T, T}));

  qs.push_back(c);
  auto honest_tie = run(lying_nonrefusing(TieBreak::Honest), config, qs);
  EXPECT_EQ(honest_tie.answers[2], U);
  ASSERT_EQ(honest_tie.events.size(), 1U);
  EXPECT_EQ(honest_tie.events[0].index, 2U);
  EXPECT_EQ(honest_tie.events[0].kind, TranscriptEvent::Kind::UnavoidableLeak);

  auto lie_tie = run(lying_nonrefusing(TieBreak::Lie), config, qs);
  EXPECT_EQ(lie_tie.answers[2], T);
  EXPECT_EQ(lie_tie.events.size(), 1U);
}

TEST(Lying, NoSecretsMeansHonest) {
  PrivacyConfiguration config{{a, neg(b)}, {}, {}};
  std::vector<LFormula> qs{a, b, neg(b), disj(a, b), c};
  EXPECT_EQ(answers(lying_nonrefusing(), config, qs), answers(honest(), config, qs));
}

TEST(RefuseSecretAtoms, RefusesQueriesTouchingSecrets) {
  PrivacyConfiguration config{{a, c}, {}, {c}};
  EXPECT_EQ(answers(refuse_secret_atoms(), config, {a, b, implies(a, c)}), (std::vector<Answer>{T, U, R}));
}

TEST(Censor, ByName) {
  for (const char* n : {"all-refuse", "truthful-min", "lying", "honest", "refuse-secret-atoms"}) {
    EXPECT_NO_THROW(censor_by_name(n)) << n;
  }
  EXPECT_THROW(censor_by_name("oracle"), std::invalid_argument);
}

TEST(Session, RejectsInvalidConfiguration) {
  EXPECT_THROW(Session({{a, neg(a)}, {}, {}}, truthful_min()), InvalidConfiguration);
  EXPECT_THROW(run(truthful_min(), {{a}, {box(b)}, {}}, std::vector<LFormula>{a}), InvalidConfiguration);
}

TEST(Session, MatchesRun) {
  PrivacyConfiguration config{{a, c}, {}, {c}};
  Session session(config, truthful_min());
  for (const auto& q : {a, b, c}) session.ask(q);
  EXPECT_EQ(session.transcript().answers, answers(truthful_min(), config, {a, b, c}));
}

TEST(Censor, PrefixAndContinuityLaws) {
  oracle::Gen gen(41);
  std::vector<Censor> censors{all_refuse(), truthful_min(), lying_nonrefusing(TieBreak::Honest),
                              lying_nonrefusing(TieBreak::Lie), honest(), refuse_secret_atoms()};
  for (std::size_t i = 0; i < 150; ++i) {
    FuzzInstance inst = random_instance(41, i, 4, 6);
    for (const auto& censor : censors) {
      auto full = run(censor, inst.config, inst.queries);
      std::size_t m = gen.below(inst.queries.size() + 1);
      std::vector<LFormula> prefix(inst.queries.begin(), inst.queries.begin() + static_cast<std::ptrdiff_t>(m));
      EXPECT_EQ(run(censor, inst.config, prefix).answers, full.prefix(m).answers);
      auto other = prefix;
      for (std::size_t k = gen.below(4); k > 0; --k) other.push_back(gen.formula(4, 2));
      auto diverged = run(censor, inst.config, other);
      EXPECT_EQ(diverged.prefix(m).answers, full.prefix(m).answers) << censor->name() << ' ' << inst.origin;
    }
  }
}

TEST(Censor, TruthfulMinIsTruthfulAndSameQuerySameAnswer) {
  for (std::size_t i = 0; i < 200; ++i) {
    FuzzInstance inst = random_instance(42, i, 4, 6);
    auto qs = inst.queries;
    qs.insert(qs.end(), inst.queries.begin(), inst.queries.end());
    auto tr = run(truthful_min(), inst.config, qs);
    for (std::size_t k = 0; k < tr.size(); ++k) {
      ASSERT_TRUE(tr.answers[k] == R || tr.answers[k] == eval(inst.config.kb, qs[k]));
      for (std::size_t j = 0; j < k; ++j)
        if (qs[j] == qs[k]) ASSERT_EQ(tr.answers[j], tr.answers[k]) << inst.origin;
    }
  }
}

TEST(Censor, LyingNeverRefuses) {
  for (std::size_t i = 0; i < 200; ++i) {
    FuzzInstance inst = random_instance(43, i, 4, 6);
    for (auto tie : {TieBreak::Honest, TieBreak::Lie}) {
      for (Answer x : run(lying_nonrefusing(tie), inst.config, inst.queries).answers) ASSERT_NE(x, R);
    }
  }
}
