#include "ctxpath/safety.h"

#include <algorithm>
#include <iterator>
#include <nlohmann/json.hpp>

namespace ctxpath {

namespace {

VariableSet intersect(const VariableSet& a, const VariableSet& b) {
  VariableSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
  return out;
}

VariableSet unite(VariableSet a, const VariableSet& b) {
  a.insert(b.begin(), b.end());
  return a;
}

bool isConstant(const PatternTerm& t) { return asTerm(t) != nullptr; }

}  // namespace

VariableSet CbvAnalyzer::cbv(const GraphPattern& p, const VariableSet& x) {
  auto key = std::make_pair(p.toString(), x);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  int row = 0;
  VariableSet result =
      p.leaf() ? leafRule(*p.leaf(), x, row) : binaryRule(p, x, row);
  trace_.push_back({key.first, row, x, result});
  memo_.emplace(std::move(key), result);
  return result;
}

VariableSet CbvAnalyzer::leafRule(const PathPattern& p, const VariableSet& x,
                                  int& row) {
  const PathExpr& e = p.expr;
  const Variable* alpha = asVariable(p.subject);

  if (e.as<PathExpr::Link>() || e.as<PathExpr::NegatedSet>()) {
    if (!alpha || x.count(*alpha)) {
      row = 1;
      return vars(p);
    }
    row = 2;
    return {};
  }

  if (const auto* star = e.as<PathExpr::Star>()) {
    if (alpha && isConstant(p.object)) {
      row = 3;
      return cbv(PathPattern(p.object,
                             PathExpr::star(PathExpr::inverse(star->inner)),
                             p.subject),
                 x);
    }
    Variable vx = freshVariable({}, freshStart_);
    Variable vy = freshVariable({vx}, freshStart_);
    if (cbv(PathPattern(vx, star->inner, vy), {vx}) == VariableSet{vx, vy}) {
      row = 4;
      return cbv(PathPattern(p.subject, star->inner, p.object), x);
    }
    row = 5;
    return {};
  }

  if (const auto* inv = e.as<PathExpr::Inverse>()) {
    row = 6;
    return cbv(PathPattern(p.object, inv->inner, p.subject), x);
  }

  if (const auto* alt = e.as<PathExpr::Alternative>()) {
    row = 7;
    return cbv(GraphPattern::makeUnion(
                   PathPattern(p.subject, alt->left, p.object),
                   PathPattern(p.subject, alt->right, p.object)),
               x);
  }

  const auto& seq = *e.as<PathExpr::Sequence>();
  Variable v = freshVariable(unite(x, vars(p)), freshStart_);
  VariableSet inner =
      cbv(GraphPattern::makeAnd(PathPattern(p.subject, seq.first, v),
                                PathPattern(v, seq.second, p.object)),
          x);
  if (inner.count(v)) {
    row = 8;
    inner.erase(v);
    return inner;
  }
  row = 9;
  return {};
}

VariableSet CbvAnalyzer::binaryRule(const GraphPattern& p,
                                    const VariableSet& x, int& row) {
  const auto& b = *p.asBinary();
  const GraphPattern& p1 = b.left;
  const GraphPattern& p2 = b.right;

  if (b.op == GraphOp::Union) {
    row = 14;
    return intersect(cbv(p1, x), cbv(p2, x));
  }

  const bool and_ = b.op == GraphOp::And;
  const int base = and_ ? 10 : 15;
  const bool p1Bounded = bounded(p1, x);
  if (p1Bounded && bounded(p2, x)) {
    row = base;
    return vars(p);
  }
  if (p1Bounded && bounded(p2, unite(x, cbVars(p1)))) {
    row = base + 1;
    return vars(p);
  }
  if (and_) {
    if (bounded(p2, x) && bounded(p1, unite(x, cbVars(p2)))) {
      row = 12;
      return vars(p);
    }
    row = 13;
    return {};
  }
  row = 17;
  return {};
}

VariableSet cbv(const GraphPattern& p, const VariableSet& x) {
  return CbvAnalyzer().cbv(p, x);
}

SafetyReport analyzeSafety(const GraphPattern& p) {
  CbvAnalyzer analyzer;
  SafetyReport report;
  report.cbvAtEmpty = analyzer.cbv(p, {});
  const VariableSet all = vars(p);
  std::set_difference(all.begin(), all.end(),
                      report.cbvAtEmpty.begin(), report.cbvAtEmpty.end(),
                      std::inserter(report.missing, report.missing.end()));
  report.webSafe = report.missing.empty();
  report.ruleTrace = analyzer.trace();
  return report;
}

namespace {

nlohmann::json varList(const VariableSet& vs) {
  auto out = nlohmann::json::array();
  for (const auto& v : vs) out.push_back(v.toString());
  return out;
}

}  // namespace

std::string toJson(const SafetyReport& report) {
  nlohmann::json j;
  j["web_safe"] = report.webSafe;
  j["cbv_at_empty"] = varList(report.cbvAtEmpty);
  j["missing"] = varList(report.missing);
  auto trace = nlohmann::json::array();
  for (const auto& r : report.ruleTrace) {
    trace.push_back({{"subpattern", r.subpattern},
                     {"row", r.row},
                     {"x", varList(r.x)},
                     {"result", varList(r.result)}});
  }
  j["rule_trace"] = std::move(trace);
  return j.dump(2);
}

}  // namespace ctxpath
