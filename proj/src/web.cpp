#include "ctxpath/web.h"

namespace ctxpath {

void LookupLedger::record(const Iri& iri, LookupOutcome outcome) {
  std::lock_guard lock(mutex_);
  attempts_.push_back({iri, outcome});
  distinct_.emplace(iri, outcome);
}

std::vector<LookupAttempt> LookupLedger::attempts() const {
  std::lock_guard lock(mutex_);
  return attempts_;
}

std::size_t LookupLedger::attemptCount() const {
  std::lock_guard lock(mutex_);
  return attempts_.size();
}

std::size_t LookupLedger::distinctCount() const {
  std::lock_guard lock(mutex_);
  return distinct_.size();
}

std::size_t LookupLedger::notRetrievableCount() const {
  std::lock_guard lock(mutex_);
  std::size_t n = 0;
  for (const auto& [iri, outcome] : distinct_) {
    if (outcome == LookupOutcome::NotRetrievable) ++n;
  }
  return n;
}

DocumentPtr Web::lookup(const Iri& iri) {
  std::shared_future<DocumentPtr> result;
  std::promise<DocumentPtr> promise;
  bool owner = false;
  {
    std::lock_guard lock(mutex_);
    auto it = memo_.find(iri);
    if (it == memo_.end()) {
      result = promise.get_future().share();
      memo_.emplace(iri, result);
      owner = true;
    } else {
      result = it->second;
    }
  }
  if (owner) {
    try {
      promise.set_value(source_.retrieve(iri));
    } catch (...) {
      promise.set_exception(std::current_exception());
    }
  }
  DocumentPtr doc = result.get();  // rethrows I/O failures
  ledger_.record(iri, doc ? LookupOutcome::Retrieved
                          : LookupOutcome::NotRetrievable);
  return doc;
}

bool Web::isMemoized(const Iri& iri) const {
  std::lock_guard lock(mutex_);
  return memo_.count(iri) != 0;
}

const Wold& Web::requireOmniscient(const std::string& operation) const {
  const Wold* w = omniscientView();
  if (!w) throw OmniscienceRequired(operation);
  return *w;
}

}  // namespace ctxpath
