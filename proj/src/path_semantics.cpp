#include "path_semantics.h"

#include <algorithm>
#include <vector>

namespace ctxpath {

std::optional<SolutionMapping> matchEnds(const PatternTerm& subject,
                                         const Term& x,
                                         const PatternTerm& object,
                                         const Term& y) {
  SolutionMapping mu;
  auto match = [&mu](const PatternTerm& pt, const Term& t) {
    if (const Variable* v = asVariable(pt)) return mu.bind(*v, t);
    return std::get<Term>(pt) == t;
  };
  if (!match(subject, x) || !match(object, y)) return std::nullopt;
  return mu;
}

SolutionMultiset PathSemantics::evalBase(const PathPattern& p) {
  SolutionMultiset out;
  const auto* link = p.expr.as<PathExpr::Link>();
  const auto* negated = p.expr.as<PathExpr::NegatedSet>();
  for (const Triple& t : searchSpace(p.subject)) {
    if (link && t.predicate() != link->iri) continue;
    if (negated && std::find(negated->iris.begin(), negated->iris.end(),
                             t.predicate()) != negated->iris.end()) {
      continue;
    }
    auto mu = matchEnds(p.subject, t.subject(), p.object, t.object());
    // Set semantics: each mapping once, whatever number of triples match.
    if (mu && !out.contains(*mu)) out.add(*mu, 1);
  }
  return out;
}

const std::map<Term, std::set<Term>>& PathSemantics::step(const PathExpr& e) {
  const std::string key = e.toString();
  auto it = steps_.find(key);
  if (it != steps_.end()) return it->second;
  Variable x = freshVariable({});
  Variable y = freshVariable({x});
  std::map<Term, std::set<Term>> adjacency;
  for (const auto& [mu, card] : eval(PathPattern(x, e, y))) {
    adjacency[*mu.get(x)].insert(*mu.get(y));
  }
  return steps_.emplace(key, std::move(adjacency)).first->second;
}

std::set<Term> PathSemantics::reach(const Term& start, const PathExpr& e) {
  const auto& adjacency = step(e);
  std::set<Term> visited{start};
  std::vector<Term> work{start};
  while (!work.empty()) {
    Term node = work.back();
    work.pop_back();
    auto it = adjacency.find(node);
    if (it == adjacency.end()) continue;
    for (const Term& next : it->second) {
      if (visited.insert(next).second) work.push_back(next);
    }
  }
  return visited;
}

SolutionMultiset PathSemantics::evalStar(const PathPattern& p,
                                         const PathExpr& inner) {
  const Term* s = asTerm(p.subject);
  const Term* o = asTerm(p.object);
  SolutionMultiset out;
  if (s && o) {
    if (reach(*s, inner).count(*o)) out.add(SolutionMapping{}, 1);
    return out;
  }
  if (!s && o) {
    return eval(PathPattern(p.object, PathExpr::star(PathExpr::inverse(inner)),
                            p.subject));
  }
  if (s) {
    for (const Term& x : reach(*s, inner)) {
      auto mu = matchEnds(p.subject, *s, p.object, x);
      if (mu) out.add(*mu, 1);
    }
    return out;
  }
  for (const Term& start : starStarts()) {
    for (const Term& x : reach(start, inner)) {
      auto mu = matchEnds(p.subject, start, p.object, x);
      if (mu && !out.contains(*mu)) out.add(*mu, 1);
    }
  }
  return out;
}

SolutionMultiset PathSemantics::eval(const PathPattern& p) {
  const PathExpr& e = p.expr;
  if (e.as<PathExpr::Link>() || e.as<PathExpr::NegatedSet>()) {
    return evalBase(p);
  }
  if (const auto* inv = e.as<PathExpr::Inverse>()) {
    return eval(PathPattern(p.object, inv->inner, p.subject));
  }
  if (const auto* seq = e.as<PathExpr::Sequence>()) {
    VariableSet ends = vars(p);
    Variable v = freshVariable(ends);
    SolutionMultiset joined =
        multisetJoin(eval(PathPattern(p.subject, seq->first, v)),
                     eval(PathPattern(v, seq->second, p.object)));
    return multisetProject(ends, joined);
  }
  if (const auto* alt = e.as<PathExpr::Alternative>()) {
    return multisetUnion(eval(PathPattern(p.subject, alt->left, p.object)),
                         eval(PathPattern(p.subject, alt->right, p.object)));
  }
  return evalStar(p, e.as<PathExpr::Star>()->inner);
}

SolutionMultiset evalComposed(const GraphPattern& p, PathSemantics& sem) {
  if (const auto* leaf = p.leaf()) return sem.eval(*leaf);
  const auto& b = *p.asBinary();
  SolutionMultiset left = evalComposed(b.left, sem);
  SolutionMultiset right = evalComposed(b.right, sem);
  switch (b.op) {
    case GraphOp::And:
      return multisetJoin(left, right);
    case GraphOp::Union:
      return multisetUnion(left, right);
    case GraphOp::Opt:
      return multisetUnion(multisetJoin(left, right),
                           multisetMinus(left, right));
  }
  return {};
}

}  // namespace ctxpath
