#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ctxpath/pattern.h"

namespace ctxpath {

struct RuleApplication {
  std::string subpattern;
  int row;
  VariableSet x;
  VariableSet result;
};

struct SafetyReport {
  bool webSafe = false;
  VariableSet cbvAtEmpty;
  VariableSet missing;
  std::vector<RuleApplication> ruleTrace;
};

// Conditionally Web-bounded variables CBV(P | X). Results are memoized per
// analyzer; `freshStart` picks where the search for the auxiliary variables
// of the star and sequence rows begins (the result does not depend on it).
class CbvAnalyzer {
 public:
  explicit CbvAnalyzer(std::size_t freshStart = 0) : freshStart_(freshStart) {}

  VariableSet cbv(const GraphPattern& p, const VariableSet& x);
  bool bounded(const GraphPattern& p, const VariableSet& x) {
    return cbv(p, x) == vars(p);
  }
  const std::vector<RuleApplication>& trace() const { return trace_; }

 private:
  VariableSet leafRule(const PathPattern& p, const VariableSet& x, int& row);
  VariableSet binaryRule(const GraphPattern& p, const VariableSet& x,
                         int& row);

  std::size_t freshStart_;
  std::map<std::pair<std::string, VariableSet>, VariableSet> memo_;
  std::vector<RuleApplication> trace_;
};

VariableSet cbv(const GraphPattern& p, const VariableSet& x);
SafetyReport analyzeSafety(const GraphPattern& p);
std::string toJson(const SafetyReport& report);

}  // namespace ctxpath
