#include "ctxpath/rdf.h"

#include <stdexcept>

namespace ctxpath {

Iri::Iri(std::string v) : value(std::move(v)) {
  if (value.empty()) throw std::invalid_argument("IRI must not be empty");
}

Term::Term(TermKind kind, std::string lexical, std::string datatype,
           std::string language)
    : kind_(kind),
      lexical_(std::move(lexical)),
      datatype_(std::move(datatype)),
      language_(std::move(language)) {
  if (lexical_.empty()) {
    throw std::invalid_argument("term lexical form must not be empty");
  }
  if (!datatype_.empty() && !language_.empty()) {
    throw std::invalid_argument(
        "literal cannot carry both a datatype and a language tag");
  }
}

Term Term::iri(std::string value) {
  return Term(TermKind::Iri, std::move(value), {}, {});
}

Term Term::blank(std::string label) {
  return Term(TermKind::Blank, std::move(label), {}, {});
}

Term Term::literal(std::string lexical, std::string datatype,
                   std::string language) {
  return Term(TermKind::Literal, std::move(lexical), std::move(datatype),
              std::move(language));
}

std::optional<Iri> Term::asIri() const {
  if (!isIri()) return std::nullopt;
  return Iri(lexical_);
}

std::string escapeLiteral(const std::string& lexical) {
  std::string out;
  out.reserve(lexical.size());
  for (char c : lexical) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

std::string Term::toString() const {
  switch (kind_) {
    case TermKind::Iri:
      return "<" + lexical_ + ">";
    case TermKind::Blank:
      return "_:" + lexical_;
    case TermKind::Literal: {
      std::string s = "\"" + escapeLiteral(lexical_) + "\"";
      if (!datatype_.empty()) s += "^^<" + datatype_ + ">";
      if (!language_.empty()) s += "@" + language_;
      return s;
    }
  }
  return {};
}

Variable::Variable(std::string n) : name(std::move(n)) {
  if (name.empty()) throw std::invalid_argument("variable name is empty");
  if (name.front() == '?') {
    throw std::invalid_argument("variable name must not start with '?'");
  }
}

Triple::Triple(Term subject, Term predicate, Term object)
    : subject_(std::move(subject)),
      predicate_(std::move(predicate)),
      object_(std::move(object)) {
  if (subject_.isLiteral()) {
    throw std::invalid_argument("triple subject cannot be a literal");
  }
  if (!predicate_.isIri()) {
    throw std::invalid_argument("triple predicate must be an IRI");
  }
}

std::string Triple::toString() const {
  return subject_.toString() + " " + predicate_.toString() + " " +
         object_.toString() + " .";
}

RdfGraph::RdfGraph(std::initializer_list<Triple> triples)
    : triples_(triples) {}

void RdfGraph::insertAll(const RdfGraph& other) {
  triples_.insert(other.triples_.begin(), other.triples_.end());
}

std::set<Term> RdfGraph::terms() const {
  std::set<Term> out;
  for (const auto& t : triples_) {
    out.insert(t.subject());
    out.insert(t.predicate());
    out.insert(t.object());
  }
  return out;
}

RdfGraph RdfGraph::withSubject(const Term& subject) const {
  RdfGraph out;
  for (const auto& t : triples_) {
    if (t.subject() == subject) out.insert(t);
  }
  return out;
}

}  // namespace ctxpath
