#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <sstream>

#include "ctxpath/context_eval.h"
#include "ctxpath/ntriples.h"
#include "ctxpath/parser.h"
#include "ctxpath/safety.h"
#include "ctxpath/standard_eval.h"
#include "ctxpath/wold.h"

namespace py = pybind11;
using namespace ctxpath;

namespace {

using Row = std::pair<std::map<std::string, std::string>, SolutionMultiset::Card>;

std::vector<Row> rows(const SolutionMultiset& result) {
  std::vector<Row> out;
  for (const auto& [mu, card] : result) {
    Row r{{}, card};
    for (const auto& [v, t] : mu) r.first[v.name] = t.toString();
    out.push_back(std::move(r));
  }
  return out;
}

// Terms are written as in N-Triples; parse them as the object of a dummy triple.
Term parseTerm(const std::string& text) {
  RdfGraph g = parseNTriples("<urn:s> <urn:p> " + text + " .\n");
  const Term& t = g.begin()->object();
  if (t.isBlank()) throw std::invalid_argument("blank nodes cannot be bound: " + text);
  return t;
}

SolutionMapping mapping(const std::map<std::string, std::string>& bindings) {
  SolutionMapping mu;
  for (const auto& [name, text] : bindings) {
    mu.bind(Variable(name.rfind('?', 0) == 0 ? name.substr(1) : name), parseTerm(text));
  }
  return mu;
}

std::string readFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

py::dict evalContext(const std::string& query, const Wold& wold,
                     const std::map<std::string, std::string>& bindings,
                     std::optional<std::size_t> maxLookups, bool force) {
  GraphPattern p = parseQuery(query);
  SolutionMapping in = mapping(bindings);
  FixtureSource source(wold);
  Web web(source);
  EvalConfig config;
  config.maxLookups = maxLookups;
  config.forceUnsafe = force;
  SolutionMultiset result;
  {
    py::gil_scoped_release release;
    result = evalContextBased(p, in, web, config);
  }
  py::dict out;
  out["rows"] = rows(result);
  out["distinct_lookups"] = web.ledger().distinctCount();
  out["attempts"] = web.ledger().attemptCount();
  out["not_retrievable"] = web.ledger().notRetrievableCount();
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Property path queries over a Web of Linked Data";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<NTriplesError>(m, "NTriplesError", PyExc_ValueError);
  py::register_exception<NotWebBounded>(m, "NotWebBounded");
  py::register_exception<LookupBudgetExceeded>(m, "LookupBudgetExceeded");
  py::register_exception<FixtureError>(m, "FixtureError", PyExc_OSError);

  py::class_<Wold>(m, "Wold")
      .def_property_readonly("document_count",
                             [](const Wold& w) { return w.documents().size(); })
      .def("iris",
           [](const Wold& w) {
             std::vector<std::string> out;
             for (const auto& [iri, doc] : w.adoc()) out.push_back(iri.value);
             return out;
           })
      .def("context",
           [](const Wold& w, const std::string& iri) {
             return toNTriples(w.context(Term::iri(iri)));
           },
           py::arg("iri"))
      .def("terms", [](const Wold& w) {
        std::vector<std::string> out;
        for (const Term& t : w.allTerms()) out.push_back(t.toString());
        return out;
      });

  m.def("load_fixture", [](const std::string& path) { return loadFixture(path); },
        py::arg("manifest"));

  m.def("normalize", [](const std::string& q) { return parseQuery(q).toString(); },
        py::arg("query"), "Parse a query and print it back in canonical form.");

  m.def("_analyze_json",
        [](const std::string& q) { return toJson(analyzeSafety(parseQuery(q))); },
        py::arg("query"));

  m.def("eval_context", &evalContext, py::arg("query"), py::arg("wold"),
        py::arg("bindings") = std::map<std::string, std::string>{},
        py::arg("max_lookups") = py::none(), py::arg("force") = false);

  m.def("eval_reference",
        [](const std::string& q, const Wold& w) {
          return rows(evalContextReference(parseQuery(q), w));
        },
        py::arg("query"), py::arg("wold"));

  m.def("eval_fullweb",
        [](const std::string& q, const Wold& w) {
          return rows(evalGraphPatternStandard(parseQuery(q), w.unionGraph()));
        },
        py::arg("query"), py::arg("wold"));

  m.def("eval_standard",
        [](const std::string& q, const std::string& path) {
          return rows(evalGraphPatternStandard(parseQuery(q),
                                               parseNTriples(readFile(path), "g_")));
        },
        py::arg("query"), py::arg("graph"));
}
