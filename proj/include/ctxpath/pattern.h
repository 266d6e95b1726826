#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "ctxpath/rdf.h"
#include "ctxpath/solution.h"

namespace ctxpath {

class PathExpr {
 public:
  struct Link;
  struct NegatedSet;
  struct Inverse;
  struct Sequence;
  struct Alternative;
  struct Star;
  using Node =
      std::variant<Link, NegatedSet, Inverse, Sequence, Alternative, Star>;

  static PathExpr link(Term iri);
  static PathExpr negatedSet(std::vector<Term> iris);
  static PathExpr inverse(PathExpr inner);
  static PathExpr sequence(PathExpr first, PathExpr second);
  static PathExpr alternative(PathExpr left, PathExpr right);
  static PathExpr star(PathExpr inner);

  // Defined below, once the node types are complete.
  const Node& node() const;
  template <typename T>
  const T* as() const;

  // Fully parenthesized canonical text, accepted by the parser.
  std::string toString() const;
  std::size_t depth() const;

  bool operator==(const PathExpr& other) const;

 private:
  explicit PathExpr(Node node);
  std::shared_ptr<const Node> node_;
};

struct PathExpr::Link {
  Term iri;
  bool operator==(const Link&) const = default;
};
struct PathExpr::NegatedSet {
  std::vector<Term> iris;
  bool operator==(const NegatedSet&) const = default;
};
struct PathExpr::Inverse {
  PathExpr inner;
  bool operator==(const Inverse&) const = default;
};
struct PathExpr::Sequence {
  PathExpr first;
  PathExpr second;
  bool operator==(const Sequence&) const = default;
};
struct PathExpr::Alternative {
  PathExpr left;
  PathExpr right;
  bool operator==(const Alternative&) const = default;
};
struct PathExpr::Star {
  PathExpr inner;
  bool operator==(const Star&) const = default;
};

inline const PathExpr::Node& PathExpr::node() const { return *node_; }
template <typename T>
const T* PathExpr::as() const {
  return std::get_if<T>(node_.get());
}

// Subject or object of a path pattern: an IRI, a literal, or a variable.
using PatternTerm = std::variant<Term, Variable>;

inline const Variable* asVariable(const PatternTerm& t) {
  return std::get_if<Variable>(&t);
}
inline const Term* asTerm(const PatternTerm& t) {
  return std::get_if<Term>(&t);
}
std::string toString(const PatternTerm& t);

struct PathPattern {
  PathPattern(PatternTerm subject, PathExpr expr, PatternTerm object);

  PatternTerm subject;
  PathExpr expr;
  PatternTerm object;

  std::string toString() const;
  bool operator==(const PathPattern&) const = default;
};

enum class GraphOp { And, Union, Opt };

class GraphPattern {
 public:
  struct Binary;
  using Node = std::variant<PathPattern, Binary>;

  GraphPattern(PathPattern leaf);  // NOLINT: leaves convert implicitly
  static GraphPattern makeAnd(GraphPattern l, GraphPattern r);
  static GraphPattern makeUnion(GraphPattern l, GraphPattern r);
  static GraphPattern makeOpt(GraphPattern l, GraphPattern r);
  static GraphPattern binary(GraphOp op, GraphPattern l, GraphPattern r);

  const Node& node() const;
  const PathPattern* leaf() const;
  const Binary* asBinary() const;

  std::string toString() const;
  std::size_t depth() const;

  bool operator==(const GraphPattern& other) const;

 private:
  explicit GraphPattern(Node node);
  std::shared_ptr<const Node> node_;
};

struct GraphPattern::Binary {
  GraphOp op;
  GraphPattern left;
  GraphPattern right;
  bool operator==(const Binary&) const = default;
};

inline const GraphPattern::Node& GraphPattern::node() const { return *node_; }
inline const PathPattern* GraphPattern::leaf() const {
  return std::get_if<PathPattern>(node_.get());
}
inline const GraphPattern::Binary* GraphPattern::asBinary() const {
  return std::get_if<Binary>(node_.get());
}

const char* toString(GraphOp op);

VariableSet vars(const PathPattern& p);
VariableSet vars(const GraphPattern& p);
VariableSet cbVars(const GraphPattern& p);

// First of _fv<start>, _fv<start+1>, ... not in `avoid`.
Variable freshVariable(const VariableSet& avoid, std::size_t start = 0);
bool isReservedVariableName(const std::string& name);

PathPattern substitute(const SolutionMapping& mu, const PathPattern& p);

}  // namespace ctxpath
