#pragma once

#include <future>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "ctxpath/wold.h"

namespace ctxpath {

enum class LookupOutcome { Retrieved, NotRetrievable };

struct LookupAttempt {
  Iri iri;
  LookupOutcome outcome;
};

// Raised when a backend cannot tell whether a document exists, e.g. the
// connection failed. Distinct from a document that is not retrievable.
class LookupIoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DocumentSource {
 public:
  virtual ~DocumentSource() = default;
  // adoc(iri), or nullptr when the IRI does not dereference to a document.
  virtual DocumentPtr retrieve(const Iri& iri) = 0;
  // The whole Web, for backends that know it.
  virtual const Wold* omniscientView() const { return nullptr; }
};

class FixtureSource : public DocumentSource {
 public:
  explicit FixtureSource(const Wold& wold) : wold_(wold) {}
  DocumentPtr retrieve(const Iri& iri) override { return wold_.resolve(iri); }
  const Wold* omniscientView() const override { return &wold_; }

 private:
  const Wold& wold_;
};

class LookupLedger {
 public:
  void record(const Iri& iri, LookupOutcome outcome);

  std::vector<LookupAttempt> attempts() const;
  std::size_t attemptCount() const;
  std::size_t distinctCount() const;
  // Distinct IRIs whose lookup found no document.
  std::size_t notRetrievableCount() const;

 private:
  mutable std::mutex mutex_;
  std::vector<LookupAttempt> attempts_;
  std::map<Iri, LookupOutcome> distinct_;
};

// Lookup interface for one query execution: memoizes per IRI and records
// every call in the ledger. Safe to call from several threads.
class Web {
 public:
  explicit Web(DocumentSource& source) : source_(source) {}

  DocumentPtr lookup(const Iri& iri);
  bool isMemoized(const Iri& iri) const;

  const LookupLedger& ledger() const { return ledger_; }
  const Wold* omniscientView() const { return source_.omniscientView(); }
  const Wold& requireOmniscient(const std::string& operation) const;

 private:
  DocumentSource& source_;
  mutable std::mutex mutex_;
  std::map<Iri, std::shared_future<DocumentPtr>> memo_;
  LookupLedger ledger_;
};

}  // namespace ctxpath
