#include <gtest/gtest.h>

#include "fdl/fdl.hpp"
#include "support/random_models.hpp"

using namespace fdl;

TEST(Parser, PrecedenceAndPrinting) {
  EXPECT_EQ(to_string(parse_concept("A and B or C")), "(A and B) or C");
  EXPECT_EQ(to_string(parse_concept("A -> B -> C")), "A -> (B -> C)");
  EXPECT_EQ(to_string(parse_concept("not A and B")), "(not A) and B");
  EXPECT_EQ(to_string(parse_concept("exists r- ; s* . A")), "exists (r-) ; (s*) . A");
  EXPECT_EQ(to_string(parse_concept(">= 2 r . A")), ">= 2 r . A");
  EXPECT_EQ(to_string(parse_concept("< 3 r-")), "< 3 r-");
  EXPECT_EQ(to_string(parse_concept("exists r . self")), "exists r . self");
  EXPECT_EQ(to_string(parse_concept("{a} and 0.5")), "{a} and 0.5");
  EXPECT_EQ(to_string(parse_concept("exists (A ? ; r)* . inv B")), "exists ((A?) ; r)* . (inv B)");
}

TEST(Parser, NamesMayCarryPrimes) {
  auto c = parse_concept("exists r' . A'");
  EXPECT_EQ(c->role->name, "r'");
  EXPECT_EQ(c->lhs->name, "A'");
}

TEST(Parser, RoundTripsRandomConcepts) {
  gen::Rng rng(7);
  gen::ConceptShape shape;
  shape.inv_neg = true;
  const FeatureSet all = FeatureSet::parse("I,O,U,Self,Q2,Q3,N1,N2");
  for (int i = 0; i < 500; ++i) {
    ConceptPtr c = gen::random_concept(rng, all, shape, 4);
    std::string s = to_string(c);
    ConceptPtr back = parse_concept(s);
    EXPECT_TRUE(equal(c, back)) << s;
    EXPECT_EQ(to_string(back), s);
  }
}

TEST(Parser, ReportsPositions) {
  try {
    parse_concept("A and $");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
  try {
    parse_concept("exists r . ");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.position(), 11u);
  }
  EXPECT_THROW(parse_concept(">= 0 r . A"), InputError);
  EXPECT_THROW(parse_concept(">= 2 (r ; s) . A"), InputError);
  EXPECT_THROW(parse_concept("exists r ; s . self"), InputError);
  EXPECT_THROW(parse_concept("A B"), InputError);
  EXPECT_THROW(parse_concept("1.5"), InputError);
  EXPECT_THROW(parse_concept("{and}"), InputError);
}

TEST(Parser, FeatureGate) {
  EXPECT_NO_THROW(parse_concept("exists r- . A", FeatureSet::parse("I")));
  EXPECT_THROW(parse_concept("exists r- . A", FeatureSet{}), FeatureError);
  EXPECT_THROW(parse_concept("{a}", FeatureSet{}), FeatureError);
  EXPECT_THROW(parse_concept("exists U . A", FeatureSet{}), FeatureError);
  EXPECT_THROW(parse_concept("exists r . self", FeatureSet{}), FeatureError);
  EXPECT_THROW(parse_concept(">= 2 r . A", FeatureSet::parse("Q3")), FeatureError);
  EXPECT_THROW(parse_concept(">= 2 r", FeatureSet::parse("Q2")), FeatureError);
  EXPECT_NO_THROW(parse_concept("< 2 r", FeatureSet::parse("N2")));
  EXPECT_THROW(parse_concept("forall (r | s-)* . A", FeatureSet{}), FeatureError);
}

TEST(Features, ParseAndPrint) {
  FeatureSet f = FeatureSet::parse(" I, Q3,N2 ,Self,Q2");
  EXPECT_EQ(f.to_string(), "I,Self,Q2,Q3,N2");
  EXPECT_TRUE(FeatureSet::parse("").empty());
  EXPECT_TRUE(FeatureSet::parse("I,O,U").only_iou());
  EXPECT_FALSE(FeatureSet::parse("Self").only_iou());
  EXPECT_THROW(FeatureSet::parse("Q0"), InputError);
  EXPECT_THROW(FeatureSet::parse("X"), InputError);
  EXPECT_THROW(FeatureSet::parse("Qx"), InputError);
}

TEST(Rewrite, InverseNormalForm) {
  auto r = inverse_normal_form(parse_role("(r ; s- | A?)-*-"));
  EXPECT_EQ(to_string(r), "((r ; (s-)) | (A?))*");
  EXPECT_EQ(to_string(inverse_normal_form(parse_role("U-"))), "U");
  EXPECT_EQ(to_string(inverse_normal_form(parse_role("r--"))), "r");
}

// Both rewrites must preserve extensions; checked by evaluation.
TEST(Rewrite, PreservesSemanticsOnRandomModels) {
  gen::Rng rng(11);
  gen::ModelShape ms;
  ms.roles = {"r", "s"};
  gen::ConceptShape cs;
  cs.roles = ms.roles;
  cs.inv_neg = true;
  const FeatureSet all = FeatureSet::parse("I,O,U,Self,Q2,N2");
  for (int i = 0; i < 60; ++i) {
    ms.values = gen::pick_values(rng);
    Interpretation m = gen::random_model(rng, ms);
    for (int k = 0; k < 20; ++k) {
      ConceptPtr c = gen::random_concept(rng, all, cs, 3);
      Extension want = extension(m, *c);
      EXPECT_EQ(extension(m, *inverse_normal_form(c)), want) << to_string(c);
      ConceptPtr d = rewrite_definable(c);
      EXPECT_EQ(extension(m, *d), want) << to_string(c);
      std::string s = to_string(d);
      EXPECT_EQ(s.find("not "), std::string::npos);
      EXPECT_EQ(s.find(" or "), std::string::npos);
    }
  }
}

TEST(Sublanguage, Classification) {
  auto tags = [](const char* c, const char* f = "I,O,U,Self,Q2,N2") {
    return classify_sublanguage(*parse_concept(c), FeatureSet::parse(f));
  };
  using S = Sublanguage;
  EXPECT_EQ(tags("exists r . (A and 0.5)"), (std::set<S>{S::Base, S::BasePrime, S::InvNeg, S::Delta, S::DeltaPrime}));
  EXPECT_EQ(tags("A -> B"), (std::set<S>{S::Base, S::BasePrime, S::InvNeg, S::Delta}));
  EXPECT_EQ(tags("A -> B", "I"), (std::set<S>{S::Base, S::InvNeg, S::Delta}));
  EXPECT_EQ(tags("delta A"), (std::set<S>{S::InvNeg, S::Delta, S::DeltaPrime}));
  EXPECT_EQ(tags("not inv A"), (std::set<S>{S::InvNeg, S::Delta, S::DeltaPrime}));
  EXPECT_EQ(tags("inv A"), (std::set<S>{S::InvNeg}));
  EXPECT_EQ(tags("forall r . A"), (std::set<S>{S::Base, S::InvNeg, S::Delta}));
  EXPECT_EQ(tags("exists r ; r . A"), (std::set<S>{S::Base, S::InvNeg, S::Delta}));
  EXPECT_EQ(tags("A or B"), (std::set<S>{S::Base, S::InvNeg, S::Delta}));
  EXPECT_EQ(tags("< 2 r . A"), (std::set<S>{S::Base, S::InvNeg, S::Delta}));
  EXPECT_TRUE(tags("exists r- . A", "").empty());
  EXPECT_EQ(to_string(S::DeltaPrime), "L_Phi_delta_prime");
}

namespace {

unsigned concept_height(const ConceptPtr& c) { return height(*c); }

}  // namespace

TEST(Enumerate, LevelsAreFreshAndInsideTheFragment) {
  const Signature sig{{"A", "B"}, {"r"}, {"a"}};
  const std::vector<Degree> consts{Degree::zero(), Degree::ratio(1, 2), Degree::one()};
  for (const char* f : {"", "I", "O,U", "Self,N2", "I,Q2"})
    for (Sublanguage frag : {Sublanguage::BasePrime, Sublanguage::DeltaPrime}) {
      FeatureSet fs = FeatureSet::parse(f);
      auto out = enumerate_fragment(fs, sig, consts, frag, 2);
      std::set<std::string> seen;
      for (const auto& c : out) {
        EXPECT_TRUE(seen.insert(to_string(c)).second) << to_string(c);
        EXPECT_TRUE(in_sublanguage(*c, fs, frag)) << to_string(c) << " under {" << f << "}";
        EXPECT_LE(concept_height(c), 2u);
      }
      auto shallow = enumerate_fragment(fs, sig, consts, frag, 1);
      ASSERT_LE(shallow.size(), out.size());
      for (std::size_t i = 0; i < shallow.size(); ++i) EXPECT_TRUE(equal(shallow[i], out[i]));
    }
}

TEST(Enumerate, DepthZeroIsTheLeaves) {
  const Signature sig{{"A"}, {"r"}, {"a"}};
  auto out = enumerate_fragment(FeatureSet::parse("O,Self,N2"), sig, {Degree::zero(), Degree::one()},
                                Sublanguage::BasePrime, 0);
  std::vector<std::string> names;
  for (const auto& c : out) names.push_back(to_string(c));
  EXPECT_EQ(names, (std::vector<std::string>{"0", "1", "A", "{a}", "exists r . self", ">= 2 r"}));
}

TEST(Enumerate, DeduplicatesCommutedConjunctions) {
  const Signature sig{{"A", "B"}, {}, {}};
  auto out = enumerate_fragment(FeatureSet{}, sig, {}, Sublanguage::BasePrime, 1);
  int ab = 0;
  for (const auto& c : out)
    if (c->kind == ConceptKind::And && c->lhs->kind == ConceptKind::Name && c->rhs->kind == ConceptKind::Name &&
        c->lhs->name != c->rhs->name)
      ++ab;
  EXPECT_EQ(ab, 1);
}

TEST(Enumerate, BudgetAndFragmentGuards) {
  const Signature sig{{"A", "B", "C"}, {"r", "s"}, {}};
  EXPECT_THROW(enumerate_fragment(FeatureSet::parse("I,Q2"), sig, {Degree::zero(), Degree::one()},
                                  Sublanguage::BasePrime, 3, 500),
               BudgetError);
  EXPECT_THROW(enumerate_fragment(FeatureSet{}, sig, {}, Sublanguage::Base, 1), UsageError);
}
