#include "ctxpath/standard_eval.h"

#include "path_semantics.h"

namespace ctxpath {

namespace {

class GraphSemantics : public PathSemantics {
 public:
  explicit GraphSemantics(const RdfGraph& g) : graph_(g) {}

 protected:
  const RdfGraph& searchSpace(const PatternTerm&) override { return graph_; }
  const std::set<Term>& starStarts() override {
    if (!terms_) terms_ = graph_.terms();
    return *terms_;
  }

 private:
  const RdfGraph& graph_;
  std::optional<std::set<Term>> terms_;
};

}  // namespace

SolutionMultiset evalStandard(const PathPattern& p, const RdfGraph& g) {
  GraphSemantics sem(g);
  return sem.eval(p);
}

std::set<Term> alp1(const Term& start, const PathExpr& e, const RdfGraph& g) {
  GraphSemantics sem(g);
  return sem.reach(start, e);
}

SolutionMultiset evalFullWeb(const PathPattern& p, const Wold& w) {
  return evalStandard(p, w.unionGraph());
}

SolutionMultiset evalGraphPatternStandard(const GraphPattern& p,
                                          const RdfGraph& g) {
  GraphSemantics sem(g);
  return evalComposed(p, sem);
}

}  // namespace ctxpath
