#include "ctxpath/wold.h"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "ctxpath/ntriples.h"

namespace ctxpath {

namespace {

Term prefixBlank(const Term& t, const std::string& prefix) {
  return t.isBlank() ? Term::blank(prefix + t.lexical()) : t;
}

}  // namespace

std::size_t Wold::addDocument(std::string id, const RdfGraph& triples) {
  std::size_t index = documents_.size();
  std::string prefix = "d" + std::to_string(index) + "_";
  auto doc = std::make_shared<Document>();
  doc->id = std::move(id);
  for (const auto& t : triples) {
    doc->triples.insert(Triple(prefixBlank(t.subject(), prefix), t.predicate(),
                               prefixBlank(t.object(), prefix)));
  }
  documents_.push_back(std::move(doc));
  return index;
}

void Wold::mapIri(const Iri& iri, std::size_t document) {
  if (document >= documents_.size()) {
    throw std::out_of_range("no document with index " +
                            std::to_string(document));
  }
  if (!adoc_.emplace(iri, document).second) {
    throw std::invalid_argument("IRI mapped twice: " + iri.value);
  }
}

DocumentPtr Wold::resolve(const Iri& iri) const {
  auto it = adoc_.find(iri);
  return it == adoc_.end() ? nullptr : documents_[it->second];
}

std::optional<std::size_t> Wold::documentIndex(const Iri& iri) const {
  auto it = adoc_.find(iri);
  if (it == adoc_.end()) return std::nullopt;
  return it->second;
}

RdfGraph Wold::context(const Term& gamma) const {
  auto iri = gamma.asIri();
  if (!iri) return {};
  DocumentPtr doc = resolve(*iri);
  if (!doc) return {};
  return doc->triples.withSubject(gamma);
}

RdfGraph Wold::context(const PatternTerm& gamma) const {
  if (const Term* t = asTerm(gamma)) return context(*t);
  return {};
}

RdfGraph Wold::contextsUnion() const {
  RdfGraph out;
  for (const auto& [iri, index] : adoc_) {
    out.insertAll(documents_[index]->triples.withSubject(Term::iri(iri.value)));
  }
  return out;
}

RdfGraph Wold::unionGraph() const {
  RdfGraph out;
  for (const auto& d : documents_) out.insertAll(d->triples);
  return out;
}

std::set<Term> Wold::allTerms() const { return unionGraph().terms(); }

LinkGraph Wold::linkGraph() const {
  LinkGraph g;
  g.nodeCount = documents_.size();
  for (std::size_t d = 0; d < documents_.size(); ++d) {
    for (const Term& t : documents_[d]->triples.terms()) {
      auto iri = t.asIri();
      if (!iri) continue;
      if (auto target = documentIndex(*iri)) g.edges.emplace(d, *target);
    }
  }
  return g;
}

Wold loadFixture(const std::filesystem::path& manifest) {
  std::ifstream in(manifest);
  if (!in) throw FixtureError("cannot read manifest " + manifest.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw FixtureError("manifest " + manifest.string() +
                       " is not valid JSON: " + e.what());
  }
  if (!j.is_object() || !j.contains("documents") ||
      !j["documents"].is_array()) {
    throw FixtureError("manifest " + manifest.string() +
                       " must have a \"documents\" array");
  }

  Wold w;
  const auto base = manifest.parent_path();
  for (const auto& entry : j["documents"]) {
    if (!entry.is_object() || !entry.contains("iri") ||
        !entry.contains("file") || !entry["iri"].is_string() ||
        !entry["file"].is_string()) {
      throw FixtureError("manifest entry needs string fields iri and file: " +
                         entry.dump());
    }
    const std::string iri = entry["iri"].get<std::string>();
    const std::string file = entry["file"].get<std::string>();
    if (iri.empty()) throw FixtureError("manifest entry with empty iri");
    if (w.adoc().count(Iri(iri))) {
      throw FixtureError("duplicate manifest entry for " + iri);
    }
    const auto path = base / file;
    std::ifstream doc(path);
    if (!doc) throw FixtureError("missing document file " + path.string());
    std::stringstream buf;
    buf << doc.rdbuf();
    RdfGraph g;
    try {
      g = parseNTriples(buf.str());
    } catch (const NTriplesError& e) {
      throw FixtureError(path.string() + ": " + e.what());
    }
    w.mapIri(Iri(iri), w.addDocument(file, g));
  }
  return w;
}

}  // namespace ctxpath
