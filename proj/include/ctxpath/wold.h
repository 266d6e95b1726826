#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ctxpath/pattern.h"
#include "ctxpath/rdf.h"

namespace ctxpath {

struct Document {
  std::string id;
  RdfGraph triples;
};
using DocumentPtr = std::shared_ptr<const Document>;

struct LinkGraph {
  std::size_t nodeCount = 0;
  std::set<std::pair<std::size_t, std::size_t>> edges;
};

class OmniscienceRequired : public std::runtime_error {
 public:
  explicit OmniscienceRequired(const std::string& operation)
      : std::runtime_error(operation +
                           " needs the whole Web and is unavailable on this "
                           "backend") {}
};

// A finite Web of Linked Data: documents plus the partial mapping adoc from
// IRIs to the document they dereference to.
class Wold {
 public:
  // Blank labels of `triples` are renamed to d<index>_<label> so that no two
  // documents share a label. Returns the document index.
  std::size_t addDocument(std::string id, const RdfGraph& triples);
  // Throws std::invalid_argument if the IRI is already mapped.
  void mapIri(const Iri& iri, std::size_t document);

  const std::vector<DocumentPtr>& documents() const { return documents_; }
  const std::map<Iri, std::size_t>& adoc() const { return adoc_; }
  DocumentPtr resolve(const Iri& iri) const;
  std::optional<std::size_t> documentIndex(const Iri& iri) const;

  // Triples of adoc(gamma) whose subject is gamma; empty unless gamma is an
  // IRI in dom(adoc).
  RdfGraph context(const Term& gamma) const;
  RdfGraph context(const PatternTerm& gamma) const;

  // Union of context(u) over u in dom(adoc).
  RdfGraph contextsUnion() const;
  RdfGraph unionGraph() const;
  std::set<Term> allTerms() const;
  LinkGraph linkGraph() const;

 private:
  std::vector<DocumentPtr> documents_;
  std::map<Iri, std::size_t> adoc_;
};

class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Manifest: {"documents": [{"iri": "...", "file": "relative.nt"}, ...]}.
Wold loadFixture(const std::filesystem::path& manifest);

}  // namespace ctxpath
