#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "ctxpath/pattern.h"
#include "ctxpath/solution.h"

namespace ctxpath {

// Mapping that sends the subject and object of a pattern to x and y, if the
// constants match and repeated variables agree.
std::optional<SolutionMapping> matchEnds(const PatternTerm& subject,
                                         const Term& x,
                                         const PatternTerm& object,
                                         const Term& y);

// Case analysis shared by the single-graph semantics and the context-based
// reference semantics. They differ only in which triples a base step may
// use and which start terms a var-var star ranges over.
class PathSemantics {
 public:
  virtual ~PathSemantics() = default;

  SolutionMultiset eval(const PathPattern& p);
  // Visited set of the reachability closure from `start`.
  std::set<Term> reach(const Term& start, const PathExpr& e);

 protected:
  // Triples that a link or negated-set step with this subject may match.
  virtual const RdfGraph& searchSpace(const PatternTerm& subject) = 0;
  virtual const std::set<Term>& starStarts() = 0;

 private:
  SolutionMultiset evalBase(const PathPattern& p);
  SolutionMultiset evalStar(const PathPattern& p, const PathExpr& inner);
  const std::map<Term, std::set<Term>>& step(const PathExpr& e);

  // One-step relation of each starred expression, keyed by canonical text.
  std::map<std::string, std::map<Term, std::set<Term>>> steps_;
};

// AND / UNION / OPT over the path semantics `sem`.
SolutionMultiset evalComposed(const GraphPattern& p, PathSemantics& sem);

}  // namespace ctxpath
