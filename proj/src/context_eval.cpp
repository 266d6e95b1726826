#include "ctxpath/context_eval.h"

#include <iostream>
#include <vector>

#include "ctxpath/standard_eval.h"
#include "path_semantics.h"

namespace ctxpath {

namespace {

class WoldSemantics : public PathSemantics {
 public:
  explicit WoldSemantics(const Wold& w)
      : wold_(w), contexts_(w.contextsUnion()), terms_(w.allTerms()) {}

 protected:
  const RdfGraph& searchSpace(const PatternTerm& subject) override {
    const Term* s = asTerm(subject);
    if (!s) return contexts_;  // variable subject: every context
    auto it = byIri_.find(*s);
    if (it == byIri_.end()) it = byIri_.emplace(*s, wold_.context(*s)).first;
    return it->second;  // empty for literals and unknown IRIs
  }
  const std::set<Term>& starStarts() override { return terms_; }

 private:
  const Wold& wold_;
  RdfGraph contexts_;
  std::set<Term> terms_;
  std::map<Term, RdfGraph> byIri_;
};

std::string describeVars(const VariableSet& vs) {
  std::string s;
  for (const auto& v : vs) s += (s.empty() ? "" : " ") + v.toString();
  return s;
}

}  // namespace

SolutionMultiset evalContextReference(const GraphPattern& p, const Wold& w) {
  WoldSemantics sem(w);
  return evalComposed(p, sem);
}

std::set<Term> alpw1(const Term& start, const PathExpr& e, const Wold& w) {
  WoldSemantics sem(w);
  return sem.reach(start, e);
}

ContextEvaluator::ContextEvaluator(Web& web, EvalConfig config,
                                   std::ostream* traceOut)
    : web_(web),
      config_(config),
      trace_(traceOut),
      cbv_(config.freshStart) {
  if (config_.maxLookups && *config_.maxLookups == 0) {
    throw std::invalid_argument("max lookups must be at least 1");
  }
  if (config_.trace && !trace_) trace_ = &std::cerr;
  if (!config_.trace) trace_ = nullptr;
}

SolutionMultiset ContextEvaluator::evaluate(const GraphPattern& p,
                                            const SolutionMapping& in) {
  if (!config_.forceUnsafe) {
    VariableSet bounded = cbv_.cbv(p, in.domain());
    VariableSet missing;
    for (const auto& v : vars(p)) {
      if (!bounded.count(v)) missing.insert(v);
    }
    if (!missing.empty()) {
      throw NotWebBounded("pattern is not Web-safe under the given bindings; "
                          "unbounded variables: " +
                          describeVars(missing));
    }
  }
  return eval(p, in, 0);
}

std::set<Term> ContextEvaluator::execAlpw1(const Term& start,
                                           const PathExpr& e) {
  return closure(start, e, 0);
}

void ContextEvaluator::traceLine(int depth, const char* name,
                                 const std::string& fragment,
                                 const std::string& iri) {
  if (!trace_) return;
  *trace_ << depth << '\t' << name << '\t' << fragment << '\t' << iri << '\n';
}

DocumentPtr ContextEvaluator::lookup(const Iri& iri, int depth) {
  if (config_.maxLookups && !web_.isMemoized(iri) &&
      web_.ledger().distinctCount() >= *config_.maxLookups) {
    throw LookupBudgetExceeded("lookup budget of " +
                               std::to_string(*config_.maxLookups) +
                               " distinct IRIs exhausted at <" + iri.value +
                               ">");
  }
  traceLine(depth, "lookup", "-", iri.value);
  return web_.lookup(iri);
}

const Wold& ContextEvaluator::enumerationSource(const std::string& what) const {
  const Wold* w = web_.omniscientView();
  if (!config_.forceUnsafe || !w) {
    throw NotWebBounded(what +
                        (config_.forceUnsafe
                             ? " would need every IRI of the Web; refused on "
                               "this backend"
                             : " would need every IRI of the Web"));
  }
  return *w;
}

SolutionMultiset ContextEvaluator::eval(const GraphPattern& p,
                                        const SolutionMapping& in, int depth) {
  if (const auto* leaf = p.leaf()) return evalPath(*leaf, in, depth);
  const auto& b = *p.asBinary();
  switch (b.op) {
    case GraphOp::And:
      traceLine(depth, "and", p.toString());
      return evalAnd(b.left, b.right, in, depth);
    case GraphOp::Union:
      traceLine(depth, "union", p.toString());
      return multisetUnion(eval(b.left, in, depth + 1),
                           eval(b.right, in, depth + 1));
    case GraphOp::Opt:
      traceLine(depth, "opt", p.toString());
      return evalOpt(b.left, b.right, in, depth);
  }
  return {};
}

SolutionMultiset ContextEvaluator::evalPath(const PathPattern& p,
                                            const SolutionMapping& in,
                                            int depth) {
  const PathExpr& e = p.expr;
  if (e.as<PathExpr::Link>() || e.as<PathExpr::NegatedSet>()) {
    return evalBase(p, in, depth);
  }
  if (const auto* inv = e.as<PathExpr::Inverse>()) {
    traceLine(depth, "inverse", p.toString());
    return evalPath(PathPattern(p.object, inv->inner, p.subject), in,
                    depth + 1);
  }
  if (const auto* seq = e.as<PathExpr::Sequence>()) {
    traceLine(depth, "sequence", p.toString());
    VariableSet ends = vars(p);
    VariableSet avoid = in.domain();
    avoid.insert(ends.begin(), ends.end());
    Variable v = freshVariable(avoid, config_.freshStart);
    GraphPattern rewritten =
        GraphPattern::makeAnd(PathPattern(p.subject, seq->first, v),
                              PathPattern(v, seq->second, p.object));
    return multisetProject(ends, eval(rewritten, in, depth + 1));
  }
  if (const auto* alt = e.as<PathExpr::Alternative>()) {
    traceLine(depth, "alternative", p.toString());
    return eval(GraphPattern::makeUnion(
                    PathPattern(p.subject, alt->left, p.object),
                    PathPattern(p.subject, alt->right, p.object)),
                in, depth + 1);
  }
  return evalStar(p, e.as<PathExpr::Star>()->inner, in, depth);
}

SolutionMultiset ContextEvaluator::evalBase(const PathPattern& p,
                                            const SolutionMapping& in,
                                            int depth) {
  traceLine(depth, "base", p.toString());
  const Term* subject = asTerm(p.subject);
  if (const Variable* v = asVariable(p.subject)) subject = in.get(*v);
  if (subject) {
    if (!subject->isIri()) return {};  // literal or blank: empty context
    return evalBaseAt(p, in, *subject, depth);
  }
  // Unbound subject variable: only the whole-Web view can answer this.
  const Wold& w = enumerationSource("subject " + toString(p.subject) +
                                    " of " + p.toString());
  SolutionMultiset out;
  for (const auto& [iri, doc] : w.adoc()) {
    out = multisetUnion(out, evalBaseAt(p, in, Term::iri(iri.value), depth));
  }
  return out;
}

SolutionMultiset ContextEvaluator::evalBaseAt(const PathPattern& p,
                                              const SolutionMapping& in,
                                              const Term& subject, int depth) {
  DocumentPtr doc = lookup(*subject.asIri(), depth + 1);
  if (!doc) return {};
  RdfGraph context = doc->triples.withSubject(subject);
  return evalStandard(p, context).compatibleWith(in);
}

std::set<Term> ContextEvaluator::closure(const Term& start, const PathExpr& e,
                                         int depth) {
  Variable x = freshVariable({}, config_.freshStart);
  Variable y = freshVariable({x}, config_.freshStart);
  PathPattern step(x, e, y);
  std::set<Term> visited;
  std::vector<Term> work{start};
  while (!work.empty()) {
    Term gamma = work.back();
    work.pop_back();
    if (!visited.insert(gamma).second) continue;
    SolutionMapping at;
    at.bind(x, gamma);
    SolutionMultiset next = evalPath(step, at, depth + 1);
    for (auto it = next.end(); it != next.begin();) {
      --it;
      const Term& reached = *it->first.get(y);
      if (!visited.count(reached)) work.push_back(reached);
    }
  }
  return visited;
}

SolutionMultiset ContextEvaluator::evalStar(const PathPattern& p,
                                            const PathExpr& inner,
                                            const SolutionMapping& in,
                                            int depth) {
  const Term* s = asTerm(p.subject);
  const Term* o = asTerm(p.object);
  SolutionMultiset out;

  if (s && o) {
    traceLine(depth, "star-const-const", p.toString());
    if (closure(*s, inner, depth).count(*o)) out.add(SolutionMapping{}, 1);
    return out;
  }
  if (!s && o) {
    traceLine(depth, "star-var-const", p.toString());
    return evalPath(
        PathPattern(p.object, PathExpr::star(PathExpr::inverse(inner)),
                    p.subject),
        in, depth + 1);
  }
  if (s) {
    traceLine(depth, "star-const-var", p.toString());
    for (const Term& x : closure(*s, inner, depth)) {
      auto mu = matchEnds(p.subject, *s, p.object, x);
      if (mu && compatible(*mu, in)) out.add(*mu, 1);
    }
    return out;
  }

  traceLine(depth, "star-var-var", p.toString());
  const Variable& alpha = std::get<Variable>(p.subject);
  const Variable& beta = std::get<Variable>(p.object);
  std::vector<Term> starts;
  if (const Term* bound = in.get(alpha)) {
    starts.push_back(*bound);
  } else if (in.binds(beta)) {
    return evalPath(
        PathPattern(p.object, PathExpr::star(PathExpr::inverse(inner)),
                    p.subject),
        in, depth + 1);
  } else {
    const Wold& w = enumerationSource("star " + p.toString() +
                                      " with both ends unbound");
    for (const Term& t : w.allTerms()) starts.push_back(t);
  }
  for (const Term& start : starts) {
    for (const Term& x : closure(start, inner, depth)) {
      auto mu = matchEnds(p.subject, start, p.object, x);
      if (mu && compatible(*mu, in)) out.add(*mu, 1);
    }
  }
  return out;
}

SolutionMultiset ContextEvaluator::evalAnd(const GraphPattern& p1,
                                           const GraphPattern& p2,
                                           const SolutionMapping& in,
                                           int depth) {
  const bool leftFirst = cbv_.bounded(p1, in.domain());
  const GraphPattern& first = leftFirst ? p1 : p2;
  const GraphPattern& second = leftFirst ? p2 : p1;
  SolutionMultiset out;
  for (const auto& [mu, card] : eval(first, in, depth + 1)) {
    for (const auto& [mu2, card2] : eval(second, merge(in, mu), depth + 1)) {
      out.add(merge(mu, mu2), card * card2);
    }
  }
  return out;
}

SolutionMultiset ContextEvaluator::evalOpt(const GraphPattern& p1,
                                           const GraphPattern& p2,
                                           const SolutionMapping& in,
                                           int depth) {
  SolutionMultiset out;
  for (const auto& [mu, card] : eval(p1, in, depth + 1)) {
    // The optional side is evaluated under mu alone, not in + mu.
    SolutionMultiset right = eval(p2, mu, depth + 1);
    if (right.empty()) {
      out.add(mu, card);
      continue;
    }
    for (const auto& [mu2, card2] : right) {
      if (compatible(mu2, in)) out.add(merge(mu, mu2), card * card2);
    }
  }
  return out;
}

SolutionMultiset evalContextBased(const GraphPattern& p,
                                  const SolutionMapping& in, Web& web,
                                  const EvalConfig& config) {
  ContextEvaluator evaluator(web, config);
  return evaluator.evaluate(p, in);
}

}  // namespace ctxpath
