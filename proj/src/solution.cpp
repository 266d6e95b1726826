#include "ctxpath/solution.h"

namespace ctxpath {

bool SolutionMapping::bind(const Variable& v, const Term& t) {
  auto [it, inserted] = bindings_.emplace(v, t);
  return inserted || it->second == t;
}

const Term* SolutionMapping::get(const Variable& v) const {
  auto it = bindings_.find(v);
  return it == bindings_.end() ? nullptr : &it->second;
}

VariableSet SolutionMapping::domain() const {
  VariableSet out;
  for (const auto& [v, t] : bindings_) out.insert(v);
  return out;
}

SolutionMapping SolutionMapping::restrictTo(const VariableSet& vars) const {
  SolutionMapping out;
  for (const auto& [v, t] : bindings_) {
    if (vars.count(v)) out.bindings_.emplace(v, t);
  }
  return out;
}

std::string SolutionMapping::toString() const {
  std::string s = "{";
  bool first = true;
  for (const auto& [v, t] : bindings_) {
    if (!first) s += ", ";
    first = false;
    s += v.toString() + "->" + t.toString();
  }
  return s + "}";
}

bool compatible(const SolutionMapping& a, const SolutionMapping& b) {
  // Both maps are sorted by variable; walk them in step.
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      if (ia->second != ib->second) return false;
      ++ia;
      ++ib;
    }
  }
  return true;
}

SolutionMapping merge(const SolutionMapping& a, const SolutionMapping& b) {
  SolutionMapping out = a;
  for (const auto& [v, t] : b) {
    if (!out.bind(v, t)) {
      throw ContractViolation("merge of incompatible mappings " +
                              a.toString() + " and " + b.toString());
    }
  }
  return out;
}

SolutionMultiset::SolutionMultiset(
    std::initializer_list<std::pair<const SolutionMapping, Card>> entries) {
  for (const auto& [mu, c] : entries) add(mu, c);
}

void SolutionMultiset::add(const SolutionMapping& mu, Card card) {
  if (card == 0) return;
  entries_[mu] += card;
}

SolutionMultiset::Card SolutionMultiset::card(const SolutionMapping& mu) const {
  auto it = entries_.find(mu);
  return it == entries_.end() ? 0 : it->second;
}

SolutionMultiset::Card SolutionMultiset::totalCard() const {
  Card total = 0;
  for (const auto& [mu, c] : entries_) total += c;
  return total;
}

SolutionMultiset SolutionMultiset::compatibleWith(
    const SolutionMapping& mu) const {
  SolutionMultiset out;
  for (const auto& [m, c] : entries_) {
    if (compatible(m, mu)) out.entries_.emplace(m, c);
  }
  return out;
}

std::string SolutionMultiset::toString() const {
  std::string s = "[";
  bool first = true;
  for (const auto& [mu, c] : entries_) {
    if (!first) s += ", ";
    first = false;
    s += mu.toString() + ":" + std::to_string(c);
  }
  return s + "]";
}

SolutionMultiset SolutionMultiset::unit() {
  SolutionMultiset m;
  m.add(SolutionMapping{}, 1);
  return m;
}

SolutionMultiset multisetUnion(const SolutionMultiset& a,
                               const SolutionMultiset& b) {
  SolutionMultiset out = a;
  for (const auto& [mu, c] : b) out.add(mu, c);
  return out;
}

SolutionMultiset multisetJoin(const SolutionMultiset& a,
                              const SolutionMultiset& b) {
  SolutionMultiset out;
  for (const auto& [m1, c1] : a) {
    for (const auto& [m2, c2] : b) {
      if (compatible(m1, m2)) out.add(merge(m1, m2), c1 * c2);
    }
  }
  return out;
}

SolutionMultiset multisetMinus(const SolutionMultiset& a,
                               const SolutionMultiset& b) {
  SolutionMultiset out;
  for (const auto& [m1, c1] : a) {
    bool hasPartner = false;
    for (const auto& [m2, c2] : b) {
      if (compatible(m1, m2)) {
        hasPartner = true;
        break;
      }
    }
    if (!hasPartner) out.add(m1, c1);
  }
  return out;
}

// Sums over the mappings whose restriction is mu. With uniform domains this
// is the same as summing over all compatible mappings.
SolutionMultiset multisetProject(const VariableSet& vars,
                                 const SolutionMultiset& m) {
  SolutionMultiset out;
  for (const auto& [mu, c] : m) out.add(mu.restrictTo(vars), c);
  return out;
}

}  // namespace ctxpath
