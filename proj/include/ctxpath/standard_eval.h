#pragma once

#include <set>

#include "ctxpath/pattern.h"
#include "ctxpath/solution.h"
#include "ctxpath/wold.h"

namespace ctxpath {

SolutionMultiset evalStandard(const PathPattern& p, const RdfGraph& g);
std::set<Term> alp1(const Term& start, const PathExpr& e, const RdfGraph& g);

// Standard semantics over the union of all documents.
SolutionMultiset evalFullWeb(const PathPattern& p, const Wold& w);

// AND / UNION / OPT composed over a single graph.
SolutionMultiset evalGraphPatternStandard(const GraphPattern& p,
                                          const RdfGraph& g);

}  // namespace ctxpath
