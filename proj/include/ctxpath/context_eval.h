#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <stdexcept>

#include "ctxpath/pattern.h"
#include "ctxpath/safety.h"
#include "ctxpath/solution.h"
#include "ctxpath/web.h"
#include "ctxpath/wold.h"

namespace ctxpath {

struct EvalConfig {
  std::optional<std::size_t> maxLookups;  // distinct IRIs; >= 1 when set
  bool forceUnsafe = false;
  bool trace = false;
  // First index tried when picking _fvN variables for rewrites.
  std::size_t freshStart = 0;
};

class NotWebBounded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LookupBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Context-based semantics computed directly from a fully known WoLD.
SolutionMultiset evalContextReference(const GraphPattern& p, const Wold& w);
std::set<Term> alpw1(const Term& start, const PathExpr& e, const Wold& w);

// Evaluates patterns by looking up IRIs on demand. The result of
// evaluate(P, in) is the set of context-based solutions of P that are
// compatible with `in`.
class ContextEvaluator {
 public:
  ContextEvaluator(Web& web, EvalConfig config = {},
                   std::ostream* traceOut = nullptr);

  // Throws NotWebBounded unless CBV(P | dom(in)) = vars(P) or forceUnsafe.
  SolutionMultiset evaluate(const GraphPattern& p,
                            const SolutionMapping& in = {});
  std::set<Term> execAlpw1(const Term& start, const PathExpr& e);

  const Web& web() const { return web_; }

 private:
  SolutionMultiset eval(const GraphPattern& p, const SolutionMapping& in,
                        int depth);
  SolutionMultiset evalPath(const PathPattern& p, const SolutionMapping& in,
                            int depth);
  SolutionMultiset evalBase(const PathPattern& p, const SolutionMapping& in,
                            int depth);
  SolutionMultiset evalBaseAt(const PathPattern& p, const SolutionMapping& in,
                              const Term& subject, int depth);
  SolutionMultiset evalStar(const PathPattern& p, const PathExpr& inner,
                            const SolutionMapping& in, int depth);
  SolutionMultiset evalAnd(const GraphPattern& p1, const GraphPattern& p2,
                           const SolutionMapping& in, int depth);
  SolutionMultiset evalOpt(const GraphPattern& p1, const GraphPattern& p2,
                           const SolutionMapping& in, int depth);
  std::set<Term> closure(const Term& start, const PathExpr& e, int depth);

  DocumentPtr lookup(const Iri& iri, int depth);
  const Wold& enumerationSource(const std::string& what) const;
  void traceLine(int depth, const char* name, const std::string& fragment,
                 const std::string& iri = "-");

  Web& web_;
  EvalConfig config_;
  std::ostream* trace_;
  CbvAnalyzer cbv_;
};

SolutionMultiset evalContextBased(const GraphPattern& p,
                                  const SolutionMapping& in, Web& web,
                                  const EvalConfig& config = {});

}  // namespace ctxpath
