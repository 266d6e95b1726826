#include <gtest/gtest.h>

#include "ctxpath/parser.h"
#include "support/generators.h"

using namespace ctxpath;

namespace {

const Term tim = Term::iri("Tim"), bob = Term::iri("Bob"),
           knows = Term::iri("knows"), name = Term::iri("name");
PathExpr link(const char* iri) { return PathExpr::link(Term::iri(iri)); }

ParseError parseFailure(const std::string& text) {
  try {
    parseQuery(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "parsed: " << text;
  return ParseError(0, 0, {}, "");
}

}  // namespace

TEST(ParseQuery, StarThenSequence) {
  GraphPattern p = parseQuery("<Tim> (<knows>)*/<name> ?n");
  EXPECT_EQ(p, GraphPattern(PathPattern(
                   tim,
                   PathExpr::sequence(PathExpr::star(link("knows")), link("name")),
                   Variable("n"))));
}

TEST(ParseQuery, Inverse) {
  EXPECT_EQ(parseQuery("<Tim> ^<knows> ?p"),
            GraphPattern(PathPattern(tim, PathExpr::inverse(link("knows")),
                                     Variable("p"))));
}

TEST(ParseQuery, Leaf) {
  EXPECT_EQ(parseQuery("?v <knows> <Tim>"),
            GraphPattern(PathPattern(Variable("v"), link("knows"), tim)));
}

TEST(ParseQuery, AndGroup) {
  GraphPattern p = parseQuery("{ <Bob> <knows> ?v AND ?v <knows> <Tim> }");
  EXPECT_EQ(p, GraphPattern::makeAnd(PathPattern(bob, link("knows"), Variable("v")),
                                     PathPattern(Variable("v"), link("knows"), tim)));
}

TEST(ParseQuery, SequenceBindsTighterThanAlternative) {
  EXPECT_EQ(parsePath("<p>/<q>|<r>"),
            PathExpr::alternative(PathExpr::sequence(link("p"), link("q")), link("r")));
  EXPECT_EQ(parsePath("<p>/(<q>|<r>)"),
            PathExpr::sequence(link("p"), PathExpr::alternative(link("q"), link("r"))));
}

TEST(ParseQuery, InverseAppliesToStarredOperand) {
  EXPECT_EQ(parsePath("^<p>*"), PathExpr::inverse(PathExpr::star(link("p"))));
  EXPECT_EQ(parsePath("(^<p>)*"), PathExpr::star(PathExpr::inverse(link("p"))));
}

TEST(ParseQuery, NegatedSets) {
  EXPECT_EQ(parsePath("!<p>"), PathExpr::negatedSet({Term::iri("p")}));
  EXPECT_EQ(parsePath("!(<p>|<q>)"),
            PathExpr::negatedSet({Term::iri("p"), Term::iri("q")}));
}

TEST(ParseQuery, OperatorsAreLeftAssociative) {
  GraphPattern p = parseQuery("{ <a> <p> ?x UNION <b> <p> ?x OPT <c> <p> ?y }");
  const auto* top = p.asBinary();
  ASSERT_NE(top, nullptr);
  EXPECT_EQ(top->op, GraphOp::Opt);
  ASSERT_NE(top->left.asBinary(), nullptr);
  EXPECT_EQ(top->left.asBinary()->op, GraphOp::Union);
}

TEST(ParseQuery, Literals) {
  GraphPattern p = parseQuery(
      "{ ?x <p> \"a\\tb\" AND ?x <p> \"1\"^^<http://dt> AND ?x <p> \"hi\"@en }");
  EXPECT_NE(p.toString().find("\"a\\tb\""), std::string::npos);
  EXPECT_NE(p.toString().find("\"1\"^^<http://dt>"), std::string::npos);
  EXPECT_NE(p.toString().find("\"hi\"@en"), std::string::npos);
}

TEST(ParseQuery, CommentsAndWhitespace) {
  EXPECT_EQ(parseQuery("# people Tim knows\n<Tim>\n  <knows>   ?p  # done"),
            parseQuery("<Tim> <knows> ?p"));
}

TEST(ParseErrors, PositionAndExpectedTokens) {
  ParseError e = parseFailure("{ <a> <p> ?x AND\n  <b> ?y }");
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(e.column(), 7u);
  EXPECT_FALSE(e.expected().empty());
  EXPECT_NE(std::string(e.what()).find("line 2, column 7"), std::string::npos);
}

TEST(ParseErrors, BlankNodesRejected) {
  EXPECT_NE(std::string(parseFailure("_:b <p> ?x").what()).find("blank"),
            std::string::npos);
  parseFailure("?x <p> []");
}

TEST(ParseErrors, SugarRejected) {
  for (const char* text : {"<a> <p>+ ?x", "<a> <p>? ?x", "<a> <p>{2} ?x"}) {
    std::string msg = parseFailure(text).what();
    EXPECT_NE(msg.find("not supported"), std::string::npos) << text;
  }
}

TEST(ParseErrors, ReservedVariables) {
  parseFailure("<a> <p> ?_fv0");
}

TEST(ParseErrors, Miscellaneous) {
  parseFailure("");
  parseFailure("<a> <p>");
  parseFailure("{ <a> <p> ?x");
  parseFailure("<a> <p> ?x }");
  parseFailure("<a> !() ?x");
  parseFailure("<a> \"p\" ?x");
  parseFailure("<a> <p> \"unterminated");
  parseFailure("<a> <p> ?x AND");
}

TEST(ParseQuery, RoundTripOnRandomPatterns) {
  ctxpath::testing::Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    auto web = ctxpath::testing::randomWeb(rng, {1, 2, 8, 3});
    GraphPattern p = ctxpath::testing::randomGraphPattern(rng, web);
    EXPECT_EQ(parseQuery(p.toString()), p) << p.toString();
  }
}
