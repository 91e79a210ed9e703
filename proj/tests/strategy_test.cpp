#include <gtest/gtest.h>

#include <algorithm>

#include "lnarg/lnarg.hpp"
#include "support.hpp"

using namespace lnarg;

namespace {

Theory load(const char* name) {
  return parse_theory(gen::read_text(std::string(LNARG_CORPUS "/") + name));
}

const ArgumentSet& merged() {
  static const ArgumentSet set = build_argument_set(load("uk_us.lnt"));
  return set;
}

ComplianceReport report(const char* strategy, const ArgumentSet& set = merged()) {
  return apply_strategy(set, Strategy::parse(strategy));
}

std::set<Formula> as_set(const std::vector<Formula>& v) { return {v.begin(), v.end()}; }

Formula f(const char* text) { return parse_formula(text); }

bool consistent(const std::vector<Formula>& conclusions) {
  const auto s = as_set(conclusions);
  for (const auto& c : s)
    if (s.count(Formula::neg(c))) return false;
  return true;
}

void expect_partition(const ArgumentSet& set, const ComplianceReport& r) {
  std::set<Formula> expected;
  for (const auto& a : set.args)
    if (a.kind != ArgumentKind::Strict) expected.insert(a.tconc);
  std::vector<Formula> all;
  for (const auto& a : r.adopted) all.push_back(a.conclusion);
  for (const auto& d : r.dropped) all.push_back(d.conclusion);
  for (const auto& u : r.unresolved) all.push_back(u.conclusion);
  EXPECT_EQ(all.size(), expected.size());
  EXPECT_EQ(as_set(all), expected);
}

}  // namespace

TEST(Strategy, NamesAndParsing) {
  for (const char* name : {"max-consistency", "minimal-adjustment", "caution-first"})
    EXPECT_EQ(Strategy::parse(name).name(), name);
  EXPECT_ANY_THROW(Strategy::parse("gradual"));
  Strategy s;
  s.target_label = s.origin_label;
  EXPECT_ANY_THROW(s.validate());
  s = Strategy{};
  s.strength_position = 0;
  EXPECT_ANY_THROW(s.validate());
}

TEST(Strategy, Policies) {
  using Mode = PreferenceCriterion::Mode;
  EXPECT_EQ(policy_for(Strategy::parse("max-consistency")).criteria,
            (std::vector<PreferenceCriterion>{{2, Mode::HigherWins, 0}, {1, Mode::PreferValue, 2}}));
  EXPECT_EQ(policy_for(Strategy::parse("minimal-adjustment")).criteria,
            (std::vector<PreferenceCriterion>{{2, Mode::HigherWins, 0}, {1, Mode::PreferValue, 1}}));
  EXPECT_EQ(policy_for(Strategy::parse("caution-first")).criteria,
            (std::vector<PreferenceCriterion>{{2, Mode::HigherWins, 0}}));
}

TEST(Strategy, MaxConsistencyOnCorpus) {
  const auto r = report("max-consistency");
  const auto adopted = as_set(r.adopted_conclusions());
  for (const char* c : {"DriveRight(AV)", "~DriveLeft(AV)", "~Turn(AV,RedLight)", "GiveWay(AV,V)",
                        "CallPolice(AV)", "Insurance(AV)"})
    EXPECT_TRUE(adopted.count(f(c))) << c;
  for (const char* c : {"DriveLeft(AV)", "~DriveRight(AV)", "Turn(AV,RedLight)"})
    EXPECT_FALSE(adopted.count(f(c))) << c;
  EXPECT_EQ(r.dropped.size(), 3u);
  EXPECT_TRUE(r.unresolved.empty());
  EXPECT_TRUE(consistent(r.adopted_conclusions()));
  expect_partition(merged(), r);
  for (const char* name : {"A1", "A2", "B3"})
    EXPECT_TRUE(std::count(r.extension_core.begin(), r.extension_core.end(), name)) << name;
}

TEST(Strategy, MinimalAdjustmentMirrors) {
  const auto r = report("minimal-adjustment");
  const auto adopted = as_set(r.adopted_conclusions());
  for (const char* c : {"DriveLeft(AV)", "~DriveRight(AV)", "~Turn(AV,RedLight)"})
    EXPECT_TRUE(adopted.count(f(c))) << c;
  for (const char* c : {"DriveRight(AV)", "~DriveLeft(AV)", "Turn(AV,RedLight)"})
    EXPECT_FALSE(adopted.count(f(c))) << c;
  EXPECT_TRUE(consistent(r.adopted_conclusions()));
  expect_partition(merged(), r);
}

TEST(Strategy, CautionFirstLeavesTiesOpen) {
  const auto r = report("caution-first");
  EXPECT_EQ(as_set(r.unresolved_conclusions()),
            (std::set<Formula>{f("DriveLeft(AV)"), f("DriveRight(AV)"), f("~DriveLeft(AV)"),
                               f("~DriveRight(AV)")}));
  const auto adopted = as_set(r.adopted_conclusions());
  EXPECT_TRUE(adopted.count(f("~Turn(AV,RedLight)")));
  EXPECT_FALSE(adopted.count(f("Turn(AV,RedLight)")));
  EXPECT_TRUE(consistent(r.adopted_conclusions()));
  expect_partition(merged(), r);
}

TEST(Strategy, CautionFirstIsContained) {
  const auto caution = as_set(report("caution-first").adopted_conclusions());
  for (const char* other : {"max-consistency", "minimal-adjustment"}) {
    const auto r = report(other);
    auto allowed = as_set(r.adopted_conclusions());
    for (const auto& u : r.unresolved_conclusions()) allowed.insert(u);
    for (const auto& c : caution) EXPECT_TRUE(allowed.count(c)) << other << ": " << c;
  }
}

TEST(Strategy, RandomJurisdictionPairs) {
  gen::Rng rng(31);
  for (int i = 0; i < 15; ++i) {
    auto [origin, target] = gen::random_jurisdictions(rng);
    const auto merged = merge_jurisdictions(origin, target, 1, 2);
    const auto set = build_argument_set(merged, gen::unbounded_depth(merged));
    const auto caution = report("caution-first", set);
    EXPECT_TRUE(consistent(caution.adopted_conclusions()));
    expect_partition(set, caution);
    for (const char* other : {"max-consistency", "minimal-adjustment"}) {
      const auto r = report(other, set);
      EXPECT_TRUE(consistent(r.adopted_conclusions())) << other;
      expect_partition(set, r);
      auto allowed = as_set(r.adopted_conclusions());
      for (const auto& u : r.unresolved_conclusions()) allowed.insert(u);
      for (const auto& c : caution.adopted_conclusions()) EXPECT_TRUE(allowed.count(c)) << other;
    }
  }
}

TEST(Strategy, MandatedTargetNegationBlocksOriginConclusion) {
  const auto& set = merged();
  const auto r = report("max-consistency");
  for (const auto& a : r.adopted) {
    if (a.jurisdiction != 1u) continue;
    for (const auto& arg : set.args)
      if (arg.kind != ArgumentKind::Strict && arg.tconc == Formula::neg(a.conclusion) &&
          arg.conclusion.label(1) == 2u && arg.conclusion.label(2) == 4u)
        ADD_FAILURE() << a.conclusion << " adopted against " << set.describe(arg.id);
  }
}

TEST(Strategy, PreferredSelection) {
  Strategy s = Strategy::parse("caution-first");
  s.selection = Selection::Preferred;
  const auto r = apply_strategy(merged(), s);
  EXPECT_TRUE(r.unresolved.empty());
  EXPECT_TRUE(consistent(r.adopted_conclusions()));
}

TEST(Strategy, EmptyTheoryGivesEmptyReport) {
  const auto r = apply_strategy(Theory{}, Strategy{});
  EXPECT_TRUE(r.adopted.empty());
  EXPECT_TRUE(r.dropped.empty());
  EXPECT_TRUE(r.unresolved.empty());
}

TEST(Report, TextAndJsonAreDeterministic) {
  const auto a = report("max-consistency");
  const auto b = apply_strategy(build_argument_set(load("uk_us.lnt")), Strategy::parse("max-consistency"));
  EXPECT_EQ(a.text(), b.text());
  EXPECT_EQ(a.json().dump(2), b.json().dump(2));
  const auto j = a.json();
  for (const char* key : {"strategy", "adopted", "dropped", "unresolved", "extension"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["strategy"]["name"], "max-consistency");
  EXPECT_EQ(j["adopted"].size(), a.adopted.size());
}

TEST(Report, DroppedCarriesDefeaterAndReason) {
  const auto r = report("max-consistency");
  for (const auto& d : r.dropped) {
    EXPECT_FALSE(d.defeater.empty());
    EXPECT_FALSE(d.reason.empty());
  }
  const auto turn = std::find_if(r.dropped.begin(), r.dropped.end(), [](const DroppedConclusion& d) {
    return d.conclusion == f("Turn(AV,RedLight)");
  });
  ASSERT_NE(turn, r.dropped.end());
  EXPECT_EQ(turn->argument, "A3");
  EXPECT_EQ(turn->defeater, "B3");
}

TEST(Diff, OriginOnlyAgainstMerged) {
  const auto strategy = Strategy::parse("max-consistency");
  const auto origin = apply_strategy(relabel(load("uk.lnt"), 1), strategy);
  const auto adapted = report("max-consistency");
  const auto diff = diff_jurisdictions(origin, adapted);
  auto change = [&](const char* c) -> const ConclusionChange* {
    for (const auto& ch : diff.changes)
      if (ch.conclusion == f(c)) return &ch;
    return nullptr;
  };
  using Kind = ConclusionChange::Kind;
  ASSERT_TRUE(change("DriveLeft(AV)"));
  EXPECT_EQ(change("DriveLeft(AV)")->kind, Kind::Removed);
  ASSERT_TRUE(change("DriveRight(AV)"));
  EXPECT_EQ(change("DriveRight(AV)")->kind, Kind::Added);
  const auto* lights = change("TurnOnHeadlights(AV,Day)");
  ASSERT_TRUE(lights);
  EXPECT_EQ(lights->kind, Kind::StrengthUpgraded);
  EXPECT_EQ(lights->from_strength, 2u);
  EXPECT_EQ(lights->to_strength, 4u);
  EXPECT_FALSE(lights->norms.empty());
  EXPECT_FALSE(change("GiveWay(AV,V)"));
  EXPECT_FALSE(diff.empty());
  EXPECT_NE(diff.text().find("TurnOnHeadlights"), std::string::npos);
}

TEST(Diff, IdenticalReportsAreEmpty) {
  const auto r = report("max-consistency");
  EXPECT_TRUE(diff_jurisdictions(r, r).empty());
  EXPECT_TRUE(diff_jurisdictions(r, r).warnings.empty());
}

TEST(Diff, VocabularyMismatchWarns) {
  const auto uk = apply_strategy(relabel(load("uk.lnt"), 1), Strategy{});
  const auto merged_report = report("max-consistency");
  const auto diff = diff_jurisdictions(uk, merged_report);
  EXPECT_FALSE(diff.warnings.empty());  // CallPolice and friends only exist in the US rules
}
