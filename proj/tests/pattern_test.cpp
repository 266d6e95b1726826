#include <gtest/gtest.h>

#include "ctxpath/parser.h"
#include "ctxpath/pattern.h"
#include "support/generators.h"

using namespace ctxpath;

namespace {

const Term bob = Term::iri("Bob"), tim = Term::iri("Tim"),
           knows = Term::iri("knows");
const Variable v("v"), n("n"), x("x"), y("y");

GraphPattern q(const std::string& text) { return parseQuery(text); }

}  // namespace

TEST(Vars, Examples) {
  EXPECT_EQ(vars(PathPattern(tim, PathExpr::star(PathExpr::link(knows)), n)),
            VariableSet{n});
  EXPECT_EQ(vars(q("{ <Bob> <knows> ?v AND ?v <knows> <Tim> }")), VariableSet{v});
  EXPECT_TRUE(vars(PathPattern(bob, PathExpr::link(knows), tim)).empty());
}

TEST(CbVars, Examples) {
  EXPECT_EQ(cbVars(q("?v <knows> <Tim>")), VariableSet{v});
  EXPECT_TRUE(cbVars(q("{ <u1> <p1> ?x UNION <u2> <p2> ?y }")).empty());
  EXPECT_EQ(cbVars(q("{ <Bob> <knows> ?x OPT ?x <knows> ?y }")), VariableSet{x});
  EXPECT_EQ(cbVars(q("{ <a> <p> ?x AND <a> <p> ?y }")), (VariableSet{x, y}));
}

TEST(FreshVariable, Examples) {
  EXPECT_EQ(freshVariable({}), Variable("_fv0"));
  EXPECT_EQ(freshVariable({Variable("_fv0")}), Variable("_fv1"));
  EXPECT_EQ(freshVariable({x, y}), Variable("_fv0"));
  EXPECT_EQ(freshVariable({}, 5), Variable("_fv5"));
  EXPECT_TRUE(isReservedVariableName("_fv12"));
  EXPECT_FALSE(isReservedVariableName("_fvx"));
}

TEST(Substitute, Examples) {
  PathPattern p(v, PathExpr::link(knows), tim);
  EXPECT_EQ(substitute({}, p), p);
  EXPECT_EQ(substitute({{v, bob}}, p), PathPattern(bob, PathExpr::link(knows), tim));
  PathPattern r(v, PathExpr::link(knows), x);
  EXPECT_EQ(substitute({{x, bob}}, r), PathPattern(v, PathExpr::link(knows), bob));
}

TEST(PathPattern, RejectsBlankNodes) {
  EXPECT_THROW(PathPattern(Term::blank("b"), PathExpr::link(knows), x),
               std::invalid_argument);
  EXPECT_THROW(PathPattern(x, PathExpr::link(knows), Term::blank("b")),
               std::invalid_argument);
}

TEST(PathExpr, NegatedSetNeedsIris) {
  EXPECT_THROW(PathExpr::negatedSet({}), std::invalid_argument);
  EXPECT_THROW(PathExpr::link(Term::literal("p")), std::invalid_argument);
}

TEST(PatternProperties, CbVarsWithinVarsAndInverseKeepsVars) {
  ctxpath::testing::Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    auto web = ctxpath::testing::randomWeb(rng, {1, 2, 8, 3});
    GraphPattern p = ctxpath::testing::randomGraphPattern(rng, web);
    const VariableSet all = vars(p), strong = cbVars(p);
    EXPECT_TRUE(std::includes(all.begin(), all.end(), strong.begin(), strong.end()))
        << p.toString();
    PathPattern leaf = ctxpath::testing::randomPathPattern(rng, web);
    PathPattern wrapped(leaf.subject, PathExpr::inverse(leaf.expr), leaf.object);
    EXPECT_EQ(vars(leaf), vars(wrapped));
    EXPECT_EQ(substitute({}, leaf), leaf);
  }
}
