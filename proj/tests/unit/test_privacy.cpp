#include <gtest/gtest.h>

#include <algorithm>

#include "cqe/censor.hpp"
#include "cqe/privacy.hpp"
#include "cqe/scenarios.hpp"
#include "oracle.hpp"

using namespace cqe;

namespace {

LFormula a = atom("a"), b = atom("b"), c = atom("c"), s = atom("s");

}  // namespace

TEST(Answer, CharRoundTrip) {
  for (Answer x : {Answer::True, Answer::Unknown, Answer::Refuse}) EXPECT_EQ(answer_from_char(to_char(x)), x);
  EXPECT_EQ(to_char(Answer::True), 't');
  EXPECT_EQ(to_char(Answer::Unknown), 'u');
  EXPECT_EQ(to_char(Answer::Refuse), 'r');
  EXPECT_FALSE(answer_from_char('f').has_value());
}

TEST(Validate, Examples) {
  EXPECT_TRUE(validate({{s}, {}, {s}}).valid());

  auto r = validate({{a, neg(a)}, {}, {}});
  EXPECT_FALSE(r.consistent);
  EXPECT_TRUE(r.truthful_start);
  EXPECT_TRUE(r.hidden_secrets);

  r = validate({{a}, {box(b)}, {}});
  EXPECT_TRUE(r.consistent);
  EXPECT_FALSE(r.truthful_start);
  ASSERT_TRUE(r.false_ak.has_value());
  EXPECT_EQ(*r.false_ak, box(b));

  r = validate({{a}, {box(a)}, {a}});
  EXPECT_TRUE(r.truthful_start);
  EXPECT_FALSE(r.hidden_secrets);
  ASSERT_TRUE(r.exposed_secret.has_value());
  EXPECT_EQ(*r.exposed_secret, a);
}

TEST(Validate, SchemaConfiguration) {
  MTheory ak{mimplies(box(implies(c, a)), mdisj(box(neg(c)), box(a))),
             mimplies(box(implies(neg(c), b)), mdisj(box(c), box(b)))};
  EXPECT_TRUE(validate({{a, b}, ak, {a, b}}).valid());
  EXPECT_TRUE(validate({{a, b}, ak, {a, b, disj(a, b)}}).valid());
  // A tautological secret can never be hidden.
  EXPECT_FALSE(validate({{a}, {}, {disj(b, neg(b))}}).hidden_secrets);
}

TEST(Eval, Examples) {
  EXPECT_EQ(eval({a, c}, a), Answer::True);
  EXPECT_EQ(eval({a, c}, b), Answer::Unknown);
  EXPECT_EQ(eval({}, a), Answer::Unknown);
  EXPECT_EQ(eval({}, top()), Answer::True);
}

TEST(Content, AnswerContent) {
  EXPECT_EQ(answer_content(a, Answer::True), box(a));
  EXPECT_EQ(answer_content(a, Answer::Unknown), mneg(box(a)));
  EXPECT_EQ(answer_content(a, Answer::Refuse), mtop());
}

TEST(Content, TranscriptContent) {
  Transcript tr{{a, b}, {Answer::True, Answer::Unknown}, {}};
  MTheory ak{box(c)};
  EXPECT_EQ(transcript_content(tr, ak, 0), ak);
  EXPECT_EQ(transcript_content(tr, {}, 2), (MTheory{box(a), mneg(box(b))}));
  auto one = transcript_content(tr, ak, 1), two = transcript_content(tr, ak, 2);
  EXPECT_TRUE(std::includes(two.begin(), two.end(), one.begin(), one.end()));
  EXPECT_THROW(transcript_content(tr, ak, 3), std::out_of_range);
}

TEST(Content, RefusalsKeepTop) {
  Transcript tr{{a, b}, {Answer::Refuse, Answer::Refuse}, {}};
  EXPECT_EQ(transcript_content(tr, {}, 2), MTheory{mtop()});
}

TEST(Content, FullContent) {
  EXPECT_EQ(full_content({a}, {a}), MTheory{box(a)});
  EXPECT_EQ(full_content({a}, {a, b}), (MTheory{box(a), mneg(box(b))}));
}

TEST(Content, KnowledgeBaseSatisfiesItsFullContent) {
  oracle::Gen gen(31);
  for (int i = 0; i < 300; ++i) {
    LTheory kb = gen.theory(3, 3, 2);
    LTheory universe = gen.theory(3, 5, 3);
    ASSERT_TRUE(holds_all(MModel{{kb}}, full_content(kb, universe)));
  }
}

TEST(Content, TruthfulContentIsIncludedInFullContent) {
  for (std::size_t i = 0; i < 200; ++i) {
    FuzzInstance inst = random_instance(7, i, 4, 6);
    for (const auto& censor : {truthful_min(), all_refuse(), refuse_secret_atoms(), honest()}) {
      Transcript tr = run(censor, inst.config, inst.queries);
      LTheory universe(inst.queries.begin(), inst.queries.end());
      MTheory bound = full_content(inst.config.kb, universe);
      bound.insert(mtop());
      bound.insert(inst.config.ak.begin(), inst.config.ak.end());
      for (std::size_t n = 0; n <= tr.size(); ++n) {
        auto content = transcript_content(tr, inst.config.ak, n);
        ASSERT_TRUE(std::includes(bound.begin(), bound.end(), content.begin(), content.end()))
            << censor->name() << ' ' << inst.origin;
      }
    }
  }
}

TEST(Disclosure, FindsSecretOrContradiction) {
  auto d = find_disclosure({box(a)}, {b, a});
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->kind, Disclosure::Kind::Secret);
  EXPECT_EQ(d->secret, a);
  d = find_disclosure({box(a), mneg(box(a))}, {b});
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->kind, Disclosure::Kind::Contradiction);
  EXPECT_FALSE(find_disclosure({mneg(box(a))}, {a}).has_value());
}

TEST(Transcript, PrefixDropsLaterEvents) {
  Transcript tr{{a, b, c}, {Answer::True, Answer::True, Answer::Unknown}, {{2, TranscriptEvent::Kind::UnavoidableLeak, "x"}}};
  Transcript p = tr.prefix(2);
  EXPECT_EQ(p.size(), 2U);
  EXPECT_TRUE(p.events.empty());
  EXPECT_EQ(tr.prefix(3).events.size(), 1U);
}
