#include <gtest/gtest.h>

#include "cqe/censor.hpp"
#include "cqe/verifier.hpp"

using namespace cqe;

namespace {

LFormula a = atom("a"), b = atom("b"), c = atom("c"), s = atom("s");
constexpr Answer T = Answer::True, U = Answer::Unknown, R = Answer::Refuse;

MTheory schema_ak() {
  return {mimplies(box(implies(c, a)), mdisj(box(neg(c)), box(a))),
          mimplies(box(implies(neg(c), b)), mdisj(box(c), box(b)))};
}

PrivacyConfiguration nogo2() { return {{a, b}, schema_ak(), {a, b}}; }
std::vector<LFormula> nogo2_queries() { return {implies(c, a), implies(neg(c), b), c}; }

}  // namespace

TEST(Effective, AllRefuseHolds) {
  PrivacyConfiguration config{{a, c}, {}, {c}};
  EXPECT_TRUE(check_effective(config, run(all_refuse(), config, std::vector<LFormula>{a, b, c})).holds());
}

TEST(Effective, SecondNoGoEitherThirdAnswerLeaks) {
  Transcript with_u{nogo2_queries(), {T, T, U}, {}};
  auto r = check_effective(nogo2(), with_u);
  EXPECT_TRUE(r.violated());
  EXPECT_EQ(r.witness.index, 3U);
  EXPECT_EQ(r.witness.secret, b);

  Transcript with_t{nogo2_queries(), {T, T, T}, {}};
  r = check_effective(nogo2(), with_t);
  EXPECT_TRUE(r.violated());
  EXPECT_EQ(r.witness.index, 3U);
  EXPECT_EQ(r.witness.secret, a);
  EXPECT_EQ(r.to_line(), "property=effective verdict=violated witness=n:3,secret:a");
}

TEST(Credible, Examples) {
  PrivacyConfiguration config{{a}, {}, {}};
  EXPECT_TRUE(check_credible(config, run(truthful_min(), config, std::vector<LFormula>{a, b, a})).holds());
  Transcript contradictory{{b, b}, {T, U}, {}};
  auto r = check_credible(config, contradictory);
  EXPECT_TRUE(r.violated());
  EXPECT_EQ(r.witness.index, 2U);
  EXPECT_TRUE(check_credible(nogo2(), Transcript{}).holds());
}

TEST(Truthful, Examples) {
  PrivacyConfiguration config{{a, c}, {}, {c}};
  EXPECT_TRUE(check_truthful(config, run(truthful_min(), config, std::vector<LFormula>{a, b, c})).holds());
  EXPECT_TRUE(check_truthful(config, run(all_refuse(), config, std::vector<LFormula>{a, b, c})).holds());
  auto r = check_truthful(config, run(lying_nonrefusing(), config, std::vector<LFormula>{a, b, c}));
  EXPECT_TRUE(r.violated());
  EXPECT_EQ(r.witness.index, 3U);
}

TEST(MinInvasive, TruthfulMinOnRunningExampleHolds) {
  PrivacyConfiguration config{{a, c}, {}, {c}};
  EXPECT_TRUE(check_min_invasive(config, truthful_min(), std::vector<LFormula>{a, b, c}).holds());
}

TEST(MinInvasive, AllRefuseViolatedAtFirstQuery) {
  PrivacyConfiguration config{{a}, {}, {s}};
  auto r = check_min_invasive(config, all_refuse(), std::vector<LFormula>{a});
  EXPECT_TRUE(r.violated());
  EXPECT_EQ(r.witness.index, 1U);
}

TEST(MinInvasive, TruthfulMinOnFirstNoGoHolds) {
  PrivacyConfiguration config{{s}, {}, {s}};
  EXPECT_TRUE(check_min_invasive(config, truthful_min(), std::vector<LFormula>{s, s, s}).holds());
}

TEST(MinInvasive, HonestHasNothingToJustify) {
  EXPECT_TRUE(check_min_invasive(nogo2(), honest(), nogo2_queries()).holds());
}

TEST(Repudiating, AllRefuseHolds) {
  PrivacyConfiguration config{{a, c}, {}, {c}};
  EXPECT_TRUE(check_repudiating(config, all_refuse(), std::vector<LFormula>{a, b, c}).holds());
}

TEST(Repudiating, TruthfulMinOnFirstNoGoViolatedAtOne) {
  PrivacyConfiguration config{{s}, {}, {s}};
  auto universe = literal_kb_universe({"s"});
  EXPECT_EQ(universe.size(), 3U);
  auto r = check_repudiating(config, truthful_min(), std::vector<LFormula>{s, s, s}, universe);
  EXPECT_TRUE(r.violated());
  EXPECT_EQ(r.witness.index, 1U);
}

TEST(Repudiating, HonestViolatedAtFirstQuery) {
  PrivacyConfiguration config{{s}, {}, {s}};
  auto r = check_repudiating(config, honest(), std::vector<LFormula>{s});
  EXPECT_TRUE(r.violated());
  EXPECT_EQ(r.witness.index, 1U);
}

TEST(Repudiating, EmptyUniverseIsAnError) {
  PrivacyConfiguration config{{s}, {}, {s}};
  EXPECT_THROW(check_repudiating(config, honest(), std::vector<LFormula>{s}, std::vector<LTheory>{}),
               std::invalid_argument);
}

TEST(Universe, LiteralTheories) {
  auto u = literal_kb_universe({"a", "b"});
  EXPECT_EQ(u.size(), 9U);
  for (const auto& kb : u) EXPECT_TRUE(is_consistent(kb));
  EXPECT_EQ(default_kb_universe(nogo2()).size(), 27U);
}

TEST(Verdicts, StableUnderAppendedRefusals) {
  Transcript tr{nogo2_queries(), {T, T, U}, {}};
  Transcript longer = tr;
  longer.queries.push_back(a);
  longer.answers.push_back(R);
  EXPECT_EQ(check_effective(nogo2(), tr).to_line(), check_effective(nogo2(), longer).to_line());
  EXPECT_EQ(check_credible(nogo2(), tr).to_line(), check_credible(nogo2(), longer).to_line());
}

TEST(Report, LineFormat) {
  PropertyReport r;
  r.property = "credible";
  EXPECT_EQ(r.to_line(), "property=credible verdict=holds witness=-");
  EXPECT_STREQ(to_string(Verdict::Undetermined), "undetermined");
}
