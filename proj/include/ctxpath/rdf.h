#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ctxpath {

enum class TermKind : std::uint8_t { Iri, Blank, Literal };

// An IRI that is known to be an IRI. Lookups take this type so that only
// IRIs can be dereferenced.
struct Iri {
  std::string value;

  explicit Iri(std::string v);
  auto operator<=>(const Iri&) const = default;
};

class Term {
 public:
  static Term iri(std::string value);
  static Term blank(std::string label);
  static Term literal(std::string lexical, std::string datatype = {},
                      std::string language = {});

  TermKind kind() const { return kind_; }
  bool isIri() const { return kind_ == TermKind::Iri; }
  bool isBlank() const { return kind_ == TermKind::Blank; }
  bool isLiteral() const { return kind_ == TermKind::Literal; }

  const std::string& lexical() const { return lexical_; }
  const std::string& datatype() const { return datatype_; }
  const std::string& language() const { return language_; }

  std::optional<Iri> asIri() const;

  // <iri>, _:label, or an N-Triples literal.
  std::string toString() const;

  auto operator<=>(const Term&) const = default;

 private:
  Term(TermKind kind, std::string lexical, std::string datatype,
       std::string language);

  TermKind kind_;
  std::string lexical_;
  std::string datatype_;
  std::string language_;
};

struct Variable {
  std::string name;

  explicit Variable(std::string n);
  std::string toString() const { return "?" + name; }
  auto operator<=>(const Variable&) const = default;
};

using VariableSet = std::set<Variable>;

class Triple {
 public:
  Triple(Term subject, Term predicate, Term object);

  const Term& subject() const { return subject_; }
  const Term& predicate() const { return predicate_; }
  const Term& object() const { return object_; }

  std::string toString() const;
  auto operator<=>(const Triple&) const = default;

 private:
  Term subject_;
  Term predicate_;
  Term object_;
};

class RdfGraph {
 public:
  RdfGraph() = default;
  RdfGraph(std::initializer_list<Triple> triples);

  void insert(const Triple& t) { triples_.insert(t); }
  void insertAll(const RdfGraph& other);
  bool contains(const Triple& t) const { return triples_.count(t) != 0; }
  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }

  auto begin() const { return triples_.begin(); }
  auto end() const { return triples_.end(); }

  std::set<Term> terms() const;
  RdfGraph withSubject(const Term& subject) const;

  bool operator==(const RdfGraph&) const = default;

 private:
  std::set<Triple> triples_;
};

// Escapes a literal lexical form for N-Triples output.
std::string escapeLiteral(const std::string& lexical);

}  // namespace ctxpath
