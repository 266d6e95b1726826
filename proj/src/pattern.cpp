#include "ctxpath/pattern.h"

#include <algorithm>
#include <iterator>
#include <regex>
#include <stdexcept>

#include "overloaded.h"

namespace ctxpath {

PathExpr::PathExpr(Node node)
    : node_(std::make_shared<const Node>(std::move(node))) {}

PathExpr PathExpr::link(Term iri) {
  if (!iri.isIri()) throw std::invalid_argument("link step must be an IRI");
  return PathExpr(Link{std::move(iri)});
}

PathExpr PathExpr::negatedSet(std::vector<Term> iris) {
  if (iris.empty()) throw std::invalid_argument("negated set is empty");
  for (const auto& t : iris) {
    if (!t.isIri()) throw std::invalid_argument("negated set holds IRIs only");
  }
  return PathExpr(NegatedSet{std::move(iris)});
}

PathExpr PathExpr::inverse(PathExpr inner) {
  return PathExpr(Inverse{std::move(inner)});
}

PathExpr PathExpr::sequence(PathExpr first, PathExpr second) {
  return PathExpr(Sequence{std::move(first), std::move(second)});
}

PathExpr PathExpr::alternative(PathExpr left, PathExpr right) {
  return PathExpr(Alternative{std::move(left), std::move(right)});
}

PathExpr PathExpr::star(PathExpr inner) {
  return PathExpr(Star{std::move(inner)});
}

bool PathExpr::operator==(const PathExpr& other) const {
  return node_ == other.node_ || *node_ == *other.node_;
}

std::string PathExpr::toString() const {
  return std::visit(
      Overloaded{
          [](const Link& l) { return l.iri.toString(); },
          [](const NegatedSet& n) {
            std::string s = "!(";
            for (std::size_t i = 0; i < n.iris.size(); ++i) {
              if (i) s += "|";
              s += n.iris[i].toString();
            }
            return s + ")";
          },
          [](const Inverse& i) { return "(^" + i.inner.toString() + ")"; },
          [](const Sequence& s) {
            return "(" + s.first.toString() + "/" + s.second.toString() + ")";
          },
          [](const Alternative& a) {
            return "(" + a.left.toString() + "|" + a.right.toString() + ")";
          },
          [](const Star& s) { return "(" + s.inner.toString() + "*)"; },
      },
      *node_);
}

std::size_t PathExpr::depth() const {
  return std::visit(
      Overloaded{
          [](const Link&) -> std::size_t { return 1; },
          [](const NegatedSet&) -> std::size_t { return 1; },
          [](const Inverse& i) { return 1 + i.inner.depth(); },
          [](const Sequence& s) {
            return 1 + std::max(s.first.depth(), s.second.depth());
          },
          [](const Alternative& a) {
            return 1 + std::max(a.left.depth(), a.right.depth());
          },
          [](const Star& s) { return 1 + s.inner.depth(); },
      },
      *node_);
}

std::string toString(const PatternTerm& t) {
  if (const auto* v = asVariable(t)) return v->toString();
  return std::get<Term>(t).toString();
}

PathPattern::PathPattern(PatternTerm s, PathExpr e, PatternTerm o)
    : subject(std::move(s)), expr(std::move(e)), object(std::move(o)) {
  for (const auto* t : {asTerm(subject), asTerm(object)}) {
    if (t && t->isBlank()) {
      throw std::invalid_argument("blank nodes are not allowed in patterns");
    }
  }
}

std::string PathPattern::toString() const {
  return ctxpath::toString(subject) + " " + expr.toString() + " " +
         ctxpath::toString(object);
}

GraphPattern::GraphPattern(PathPattern leaf)
    : node_(std::make_shared<const Node>(std::move(leaf))) {}

GraphPattern::GraphPattern(Node node)
    : node_(std::make_shared<const Node>(std::move(node))) {}

GraphPattern GraphPattern::binary(GraphOp op, GraphPattern l, GraphPattern r) {
  return GraphPattern(Node(Binary{op, std::move(l), std::move(r)}));
}
GraphPattern GraphPattern::makeAnd(GraphPattern l, GraphPattern r) {
  return binary(GraphOp::And, std::move(l), std::move(r));
}
GraphPattern GraphPattern::makeUnion(GraphPattern l, GraphPattern r) {
  return binary(GraphOp::Union, std::move(l), std::move(r));
}
GraphPattern GraphPattern::makeOpt(GraphPattern l, GraphPattern r) {
  return binary(GraphOp::Opt, std::move(l), std::move(r));
}

bool GraphPattern::operator==(const GraphPattern& other) const {
  return node_ == other.node_ || *node_ == *other.node_;
}

const char* toString(GraphOp op) {
  switch (op) {
    case GraphOp::And: return "AND";
    case GraphOp::Union: return "UNION";
    case GraphOp::Opt: return "OPT";
  }
  return "?";
}

std::string GraphPattern::toString() const {
  if (const auto* p = leaf()) return p->toString();
  const auto& b = *asBinary();
  return "{ " + b.left.toString() + " " + ctxpath::toString(b.op) + " " +
         b.right.toString() + " }";
}

std::size_t GraphPattern::depth() const {
  if (leaf()) return 1;
  const auto& b = *asBinary();
  return 1 + std::max(b.left.depth(), b.right.depth());
}

VariableSet vars(const PathPattern& p) {
  VariableSet out;
  if (const auto* v = asVariable(p.subject)) out.insert(*v);
  if (const auto* v = asVariable(p.object)) out.insert(*v);
  return out;
}

VariableSet vars(const GraphPattern& p) {
  if (const auto* leaf = p.leaf()) return vars(*leaf);
  const auto& b = *p.asBinary();
  VariableSet out = vars(b.left);
  out.merge(vars(b.right));
  return out;
}

VariableSet cbVars(const GraphPattern& p) {
  if (const auto* leaf = p.leaf()) return vars(*leaf);
  const auto& b = *p.asBinary();
  VariableSet left = cbVars(b.left);
  switch (b.op) {
    case GraphOp::And: {
      left.merge(cbVars(b.right));
      return left;
    }
    case GraphOp::Union: {
      VariableSet right = cbVars(b.right);
      VariableSet out;
      std::set_intersection(left.begin(), left.end(), right.begin(),
                            right.end(), std::inserter(out, out.end()));
      return out;
    }
    case GraphOp::Opt:
      return left;
  }
  return {};
}

bool isReservedVariableName(const std::string& name) {
  static const std::regex kReserved("_fv[0-9]+");
  return std::regex_match(name, kReserved);
}

Variable freshVariable(const VariableSet& avoid, std::size_t start) {
  for (std::size_t i = start;; ++i) {
    Variable v("_fv" + std::to_string(i));
    if (!avoid.count(v)) return v;
  }
}

PathPattern substitute(const SolutionMapping& mu, const PathPattern& p) {
  auto apply = [&](const PatternTerm& t) -> PatternTerm {
    if (const auto* v = asVariable(t)) {
      if (const Term* bound = mu.get(*v)) return *bound;
    }
    return t;
  };
  return PathPattern(apply(p.subject), p.expr, apply(p.object));
}

}  // namespace ctxpath
