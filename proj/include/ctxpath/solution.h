#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "ctxpath/rdf.h"

namespace ctxpath {

class SolutionMapping {
 public:
  SolutionMapping() = default;
  SolutionMapping(std::initializer_list<std::pair<const Variable, Term>> b)
      : bindings_(b) {}

  // Adds a binding; returns false if the variable is bound to another term.
  bool bind(const Variable& v, const Term& t);
  const Term* get(const Variable& v) const;
  bool binds(const Variable& v) const { return bindings_.count(v) != 0; }

  VariableSet domain() const;
  std::size_t size() const { return bindings_.size(); }
  bool empty() const { return bindings_.empty(); }
  auto begin() const { return bindings_.begin(); }
  auto end() const { return bindings_.end(); }

  SolutionMapping restrictTo(const VariableSet& vars) const;
  std::string toString() const;

  auto operator<=>(const SolutionMapping&) const = default;

 private:
  std::map<Variable, Term> bindings_;
};

class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

bool compatible(const SolutionMapping& a, const SolutionMapping& b);

// Union of two compatible mappings. Throws ContractViolation otherwise.
SolutionMapping merge(const SolutionMapping& a, const SolutionMapping& b);

class SolutionMultiset {
 public:
  using Card = std::uint64_t;

  SolutionMultiset() = default;
  SolutionMultiset(
      std::initializer_list<std::pair<const SolutionMapping, Card>> entries);

  // Adds `card` copies of `mu`. A zero card is ignored.
  void add(const SolutionMapping& mu, Card card = 1);
  Card card(const SolutionMapping& mu) const;
  bool contains(const SolutionMapping& mu) const {
    return entries_.count(mu) != 0;
  }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  Card totalCard() const;
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  // Members compatible with `mu`, cardinalities kept.
  SolutionMultiset compatibleWith(const SolutionMapping& mu) const;

  std::string toString() const;

  bool operator==(const SolutionMultiset&) const = default;

  // {mu_empty: 1}
  static SolutionMultiset unit();

 private:
  std::map<SolutionMapping, Card> entries_;
};

SolutionMultiset multisetUnion(const SolutionMultiset& a,
                               const SolutionMultiset& b);
SolutionMultiset multisetJoin(const SolutionMultiset& a,
                              const SolutionMultiset& b);
SolutionMultiset multisetMinus(const SolutionMultiset& a,
                               const SolutionMultiset& b);
SolutionMultiset multisetProject(const VariableSet& vars,
                                 const SolutionMultiset& m);

}  // namespace ctxpath
