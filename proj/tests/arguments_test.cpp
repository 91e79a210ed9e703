#include <gtest/gtest.h>

#include <algorithm>

#include "lnarg/lnarg.hpp"
#include "support.hpp"

using namespace lnarg;

namespace {

struct Corpus {
  ArgumentSet set;
  std::vector<Attack> attacks;
  std::vector<std::string> names;

  std::size_t id(const std::string& name) const {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw std::out_of_range(name);
    return static_cast<std::size_t>(it - names.begin());
  }
  const Argument& operator[](const std::string& name) const { return set[id(name)]; }
};

const Corpus& corpus() {
  static const Corpus c = [] {
    Corpus c;
    c.set = build_argument_set(parse_theory(gen::read_text(LNARG_CORPUS "/uk_us.lnt")));
    c.attacks = attacks(c.set);
    c.names = display_names(c.set, c.attacks);
    return c;
  }();
  return c;
}

bool has_edge(const std::vector<Attack>& edges, std::size_t a, std::size_t t) {
  return std::any_of(edges.begin(), edges.end(),
                     [&](const Attack& e) { return e.attacker == a && e.target == t; });
}

PreferencePolicy strength_only() {
  return PreferencePolicy{{{2, PreferenceCriterion::Mode::HigherWins, 0}}};
}

}  // namespace

TEST(Arguments, OnePremiseArgumentPerFact) {
  const auto& c = corpus();
  const auto premises = std::count_if(c.set.args.begin(), c.set.args.end(), [](const Argument& a) {
    return a.kind == ArgumentKind::Premise;
  });
  EXPECT_EQ(premises, 14);
}

TEST(Arguments, NamedConflictArguments) {
  const auto& c = corpus();
  EXPECT_EQ(c["B1"].conclusion, parse_literal("DriveLeft(AV).1.4"));
  EXPECT_EQ(c["B2"].conclusion, parse_literal("~DriveRight(AV).1.4"));
  EXPECT_EQ(c["B3"].conclusion, parse_literal("~Turn(AV,RedLight).1.4"));
  EXPECT_EQ(c["A1"].conclusion, parse_literal("~DriveLeft(AV).2.4"));
  EXPECT_EQ(c["A2"].conclusion, parse_literal("DriveRight(AV).2.4"));
  EXPECT_EQ(c["A3"].conclusion, parse_literal("Turn(AV,RedLight).2.1"));
  EXPECT_EQ(std::count_if(c.names.begin(), c.names.end(),
                          [](const std::string& n) { return n.rfind("arg", 0) != 0; }),
            6);
}

TEST(Arguments, NormApplicationStructure) {
  const auto& c = corpus();
  const auto& a1 = c["A1"];
  EXPECT_EQ(a1.kind, ArgumentKind::Defeasible);
  EXPECT_EQ(a1.children, std::vector<std::size_t>{c.id("A2")});
  const auto an = analyze(c.set, a1.id);
  ASSERT_EQ(an.norms.size(), 1u);
  EXPECT_EQ(an.norms[0], parse_sequent("DriveRight(AV).2.4 => ~DriveLeft(AV).2.4"));
  EXPECT_EQ(an.prem, std::vector<LabelledLiteral>{parse_literal("DriveRight(AV).2.4")});
  EXPECT_EQ(an.tconc, parse_formula("~DriveLeft(AV)"));
  EXPECT_EQ(an.sub.size(), 2u);

  const auto b1 = analyze(c.set, c.id("B1"));
  EXPECT_TRUE(b1.norms.empty());
  EXPECT_EQ(b1.sub, std::vector<std::size_t>{c.id("B1")});
  EXPECT_EQ(b1.prem, std::vector<LabelledLiteral>{parse_literal("DriveLeft(AV).1.4")});
}

TEST(Arguments, RulesAreNormsAndStrictRules) {
  const auto& c = corpus();
  for (const auto& a : c.set.args) {
    const auto an = analyze(c.set, a.id);
    EXPECT_EQ(an.rules.size(), an.norms.size() + an.strict_rules.size());
  }
}

TEST(Arguments, EmptyTheoryHasNoArguments) {
  Theory t;
  EXPECT_EQ(build_argument_set(t).size(), 0u);
}

TEST(Arguments, MutualAttacksOfTheCorpus) {
  const auto& c = corpus();
  for (auto [x, y] : {std::pair{"B1", "A1"}, {"B2", "A2"}, {"B3", "A3"}}) {
    EXPECT_TRUE(has_edge(c.attacks, c.id(x), c.id(y))) << x << "->" << y;
    EXPECT_TRUE(has_edge(c.attacks, c.id(y), c.id(x))) << y << "->" << x;
  }
  EXPECT_FALSE(has_edge(c.attacks, c.id("B1"), c.id("A2")));  // A2 concludes DriveRight
}

TEST(Arguments, NoConflictNoAttack) {
  Theory t;
  t.add_fact(parse_literal("p"));
  EXPECT_TRUE(attacks(build_argument_set(t)).empty());
}

TEST(Arguments, AttacksNeverTargetStrictTops) {
  const auto& c = corpus();
  for (const auto& at : c.attacks) {
    EXPECT_NE(c.set[at.target_sub].kind, ArgumentKind::Strict);
    EXPECT_TRUE(c.set[at.target].sub.count(at.target_sub));
    EXPECT_TRUE(c.set[at.attacker].conclusion.conflicts_with(c.set[at.target_sub].conclusion));
  }
}

TEST(Preferences, StrengthComparison) {
  const auto& c = corpus();
  EXPECT_TRUE(prefers(c["A3"], c["B3"], 2));
  EXPECT_FALSE(prefers(c["B3"], c["A3"], 2));
  const auto emergency = std::find_if(c.set.args.begin(), c.set.args.end(), [](const Argument& a) {
    return a.kind == ArgumentKind::Premise && a.conclusion.labels.empty();
  });
  ASSERT_NE(emergency, c.set.args.end());
  EXPECT_FALSE(prefers(*emergency, c["B3"], 2));
  EXPECT_FALSE(prefers(c["B3"], *emergency, 2));
}

TEST(Preferences, DefeatFiltering) {
  const auto& c = corpus();
  const auto d2 = defeats(c.set, c.attacks, strength_only());
  EXPECT_FALSE(has_edge(d2, c.id("A3"), c.id("B3")));
  EXPECT_TRUE(has_edge(d2, c.id("B3"), c.id("A3")));
  EXPECT_TRUE(has_edge(d2, c.id("B1"), c.id("A1")));

  const auto d21 = defeats(c.set, c.attacks, policy_for(Strategy::parse("max-consistency")));
  EXPECT_FALSE(has_edge(d21, c.id("B1"), c.id("A1")));
  EXPECT_FALSE(has_edge(d21, c.id("B2"), c.id("A2")));
  EXPECT_FALSE(has_edge(d21, c.id("A3"), c.id("B3")));
  EXPECT_TRUE(has_edge(d21, c.id("A1"), c.id("B1")));
  EXPECT_TRUE(has_edge(d21, c.id("A2"), c.id("B2")));

  EXPECT_EQ(defeats(c.set, c.attacks, {}).size(), c.attacks.size());
}

TEST(Preferences, MutualAttacksKeepOneDirection) {
  const auto& c = corpus();
  for (const auto& strategy : {"max-consistency", "minimal-adjustment", "caution-first"}) {
    const auto d = defeats(c.set, c.attacks, policy_for(Strategy::parse(strategy)));
    for (const auto& at : c.attacks) {
      if (at.target != at.target_sub || !has_edge(c.attacks, at.target, at.attacker)) continue;
      EXPECT_TRUE(has_edge(d, at.attacker, at.target) || has_edge(d, at.target, at.attacker))
          << strategy << ": " << at.attacker << " <-> " << at.target;
    }
  }
}

TEST(Preferences, DefeatsLiftToSuperArguments) {
  const auto& c = corpus();
  const auto d = defeats(c.set, c.attacks, policy_for(Strategy::parse("max-consistency")));
  for (const auto& e : d) {
    EXPECT_TRUE(std::any_of(d.begin(), d.end(), [&](const Attack& f) {
      return f.attacker == e.attacker && f.target == e.target_sub && f.target_sub == e.target_sub;
    }));
    for (const auto& sup : c.set.args)
      if (sup.sub.count(e.target)) {
        EXPECT_TRUE(has_edge(d, e.attacker, sup.id));
      }
  }
}

TEST(Preferences, ReasonableUnderStrictContinuation) {
  const auto& c = corpus();
  std::size_t checked = 0;
  for (const auto& ag1 : c.set.args) {
    for (std::size_t plus : strict_continuations(c.set, {ag1.id})) {
      for (const auto& ag2 : c.set.args)
        for (std::size_t x : {1, 2}) {
          if (!prefers(ag2, ag1, x)) {
            EXPECT_FALSE(prefers(ag2, c.set[plus], x));
          }
          if (!prefers(ag1, ag2, x)) {
            EXPECT_FALSE(prefers(c.set[plus], ag2, x));
          }
        }
      ++checked;
    }
  }
  EXPECT_GT(checked, c.set.size());
}

TEST(StrictContinuation, Definition) {
  const auto& c = corpus();
  for (const auto& a : c.set.args) {
    EXPECT_TRUE(is_strict_continuation(c.set, a.id, {a.id}));
    if (a.kind == ArgumentKind::Strict) {
      EXPECT_TRUE(is_strict_continuation(c.set, a.id, a.children));
    } else if (a.kind == ArgumentKind::Defeasible) {
      EXPECT_FALSE(is_strict_continuation(c.set, a.id, a.children));
    }
  }
}

TEST(StrictContinuation, StrictTopsInheritLastLink) {
  const auto& c = corpus();
  std::size_t strict = 0;
  for (const auto& a : c.set.args) {
    if (a.kind != ArgumentKind::Strict) continue;
    ++strict;
    std::vector<LabelledLiteral> expected;
    for (std::size_t ch : a.children)
      for (const auto& l : c.set[ch].last_link) expected.push_back(l);
    std::sort(expected.begin(), expected.end());
    auto got = a.last_link;
    std::sort(got.begin(), got.end());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    got.erase(std::unique(got.begin(), got.end()), got.end());
    EXPECT_EQ(got, expected) << c.set.describe(a.id);
  }
  EXPECT_GT(strict, 0u);
}

TEST(Arguments, EnumerationIsDeterministic) {
  const auto theory = parse_theory(gen::read_text(LNARG_CORPUS "/uk_us.lnt"));
  const auto a = build_argument_set(theory);
  const auto b = build_argument_set(theory);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a.describe(i), b.describe(i));
}

TEST(Arguments, LimitsReportTheFrontier) {
  const auto theory = parse_theory(gen::read_text(LNARG_CORPUS "/uk_us.lnt"));
  const auto strict = generate_strict_rules(theory);
  try {
    build_arguments(theory, strict, {10, 20});
    FAIL() << "expected LimitExceeded";
  } catch (const LimitExceeded& e) {
    EXPECT_FALSE(e.frontier().empty());
  }
  EXPECT_THROW(build_arguments(theory, strict, {0, 10}), std::invalid_argument);
}

TEST(Arguments, NormsDoNotRepeatOnAPath) {
  Theory t;
  t.add_fact(parse_literal("p.1"));
  Norm loop;
  loop.antecedent = {parse_literal("p.1")};
  loop.consequent = parse_literal("q.1");
  t.add_norm(loop);
  Norm back;
  back.antecedent = {parse_literal("q.1")};
  back.consequent = parse_literal("p.1");
  t.add_norm(back);
  const auto set = build_argument_set(t);
  for (const auto& a : set.args) EXPECT_LE(a.depth, 6u) << set.describe(a.id);
}
