// ctxpath command line: analyze, eval and lookup.

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <nlohmann/json.hpp>
#include <regex>
#include <sstream>

#include "ctxpath/context_eval.h"
#include "ctxpath/http_source.h"
#include "ctxpath/ntriples.h"
#include "ctxpath/parser.h"
#include "ctxpath/safety.h"
#include "ctxpath/standard_eval.h"
#include "ctxpath/wold.h"

using namespace ctxpath;

namespace {

constexpr int kOk = 0;
constexpr int kParse = 1;
constexpr int kUnsafe = 2;
constexpr int kBudget = 3;
constexpr int kIo = 4;
constexpr int kUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string readFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// "-" reads stdin, "@path" reads a file, anything else is the query itself.
std::string queryText(const std::string& arg) {
  if (arg == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  if (!arg.empty() && arg.front() == '@') return readFile(arg.substr(1));
  return arg;
}

struct Row {
  std::string key;
  nlohmann::json bindings;
  SolutionMultiset::Card card;
};

void printRows(const SolutionMultiset& result, const GraphPattern& p,
               const std::string& format) {
  std::vector<Row> rows;
  for (const auto& [mu, card] : result) {
    nlohmann::json b = nlohmann::json::object();
    for (const auto& [v, t] : mu) b[v.name] = t.toString();
    rows.push_back({b.dump(), b, card});
  }
  std::sort(rows.begin(), rows.end(),
            [](const Row& a, const Row& b) { return a.key < b.key; });

  if (format == "json-lines") {
    for (const auto& r : rows) {
      nlohmann::json line{{"bindings", r.bindings}, {"cardinality", r.card}};
      std::cout << line.dump() << '\n';
    }
    return;
  }
  const VariableSet columns = vars(p);
  for (const auto& v : columns) std::cout << v.toString() << '\t';
  std::cout << "cardinality\n";
  for (const auto& r : rows) {
    for (const auto& v : columns) {
      if (r.bindings.contains(v.name)) {
        std::cout << r.bindings[v.name].get<std::string>();
      }
      std::cout << '\t';
    }
    std::cout << r.card << '\n';
  }
}

void printSummary(const LookupLedger* ledger) {
  std::size_t distinct = ledger ? ledger->distinctCount() : 0;
  std::size_t attempts = ledger ? ledger->attemptCount() : 0;
  std::size_t missing = ledger ? ledger->notRetrievableCount() : 0;
  std::cerr << "lookups: distinct=" << distinct << " attempts=" << attempts
            << " not_retrievable=" << missing << '\n';
}

struct EvalArgs {
  std::string query;
  std::string semantics = "ctx";
  std::string wold;
  std::string graph;
  bool http = false;
  std::string format = "json-lines";
  std::size_t maxLookups = 0;
  bool force = false;
  bool trace = false;
};

int runAnalyze(const std::string& arg) {
  GraphPattern p = parseQuery(queryText(arg));
  SafetyReport report = analyzeSafety(p);
  std::cout << toJson(report) << '\n';
  return report.webSafe ? kOk : kUnsafe;
}

int runEval(const EvalArgs& a) {
  const int sources = !a.wold.empty() + !a.graph.empty() + a.http;
  if (sources != 1) {
    throw UsageError("give exactly one of --wold, --graph, --http");
  }
  if (a.semantics == "std" && a.graph.empty()) {
    throw UsageError("--semantics std evaluates over --graph");
  }
  if ((a.semantics == "fullweb" || a.semantics == "ctx-ref") &&
      a.wold.empty()) {
    throw UsageError("--semantics " + a.semantics + " needs --wold");
  }
  if (a.semantics == "ctx" && !a.graph.empty()) {
    throw UsageError("--semantics ctx needs --wold or --http");
  }

  GraphPattern p = parseQuery(queryText(a.query));

  if (a.semantics == "std") {
    RdfGraph g = parseNTriples(readFile(a.graph), "g_");
    printRows(evalGraphPatternStandard(p, g), p, a.format);
    printSummary(nullptr);
    return kOk;
  }

  std::unique_ptr<Wold> wold;
  if (!a.wold.empty()) wold = std::make_unique<Wold>(loadFixture(a.wold));

  if (a.semantics == "fullweb") {
    // Leaves are evaluated over the union graph and composed as usual.
    printRows(evalGraphPatternStandard(p, wold->unionGraph()), p, a.format);
    printSummary(nullptr);
    return kOk;
  }
  if (a.semantics == "ctx-ref") {
    printRows(evalContextReference(p, *wold), p, a.format);
    printSummary(nullptr);
    return kOk;
  }

  std::unique_ptr<DocumentSource> source;
  if (wold) {
    source = std::make_unique<FixtureSource>(*wold);
  } else {
    source = std::make_unique<HttpSource>();
  }
  Web web(*source);
  EvalConfig config;
  if (a.maxLookups > 0) config.maxLookups = a.maxLookups;
  config.forceUnsafe = a.force;
  config.trace = a.trace;
  ContextEvaluator evaluator(web, config, a.trace ? &std::cerr : nullptr);
  try {
    SolutionMultiset result = evaluator.evaluate(p);
    printRows(result, p, a.format);
  } catch (...) {
    printSummary(&web.ledger());
    throw;
  }
  printSummary(&web.ledger());
  return kOk;
}

Iri lookupIri(std::string arg) {
  if (arg.size() >= 2 && arg.front() == '<' && arg.back() == '>') {
    arg = arg.substr(1, arg.size() - 2);
  }
  static const std::regex kScheme("^[A-Za-z][A-Za-z0-9+.-]*:[^\\s<>\"]*$");
  if (arg.empty() || arg.front() == '"' || arg.rfind("_:", 0) == 0 ||
      !std::regex_match(arg, kScheme)) {
    throw UsageError("lookup takes an IRI, got " + arg);
  }
  return Iri(arg);
}

int runLookup(const std::string& arg, const std::string& woldPath,
              bool http) {
  if (woldPath.empty() == !http) {
    throw UsageError("give exactly one of --wold, --http");
  }
  Iri iri = lookupIri(arg);
  std::unique_ptr<Wold> wold;
  std::unique_ptr<DocumentSource> source;
  if (http) {
    source = std::make_unique<HttpSource>();
  } else {
    wold = std::make_unique<Wold>(loadFixture(woldPath));
    source = std::make_unique<FixtureSource>(*wold);
  }
  Web web(*source);
  DocumentPtr doc = web.lookup(iri);
  if (!doc) {
    std::cout << "# <" << iri.value << "> not retrievable\n";
    return kOk;
  }
  RdfGraph context = doc->triples.withSubject(Term::iri(iri.value));
  std::cout << toNTriples(context);
  std::cout << "# context of <" << iri.value << ">: " << context.size()
            << " of " << doc->triples.size() << " document triples\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Property path queries over a Web of Linked Data"};
  app.require_subcommand(1);

  std::string analyzeQuery;
  auto* analyze =
      app.add_subcommand("analyze", "Check whether a query is Web-safe");
  analyze->add_option("query", analyzeQuery, "Query text, @file or -")
      ->required();

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "Evaluate a query");
  eval->add_option("query", ev.query, "Query text, @file or -")->required();
  eval->add_option("--semantics", ev.semantics, "ctx, ctx-ref, fullweb or std")
      ->check(CLI::IsMember({"ctx", "ctx-ref", "fullweb", "std"}))
      ->capture_default_str();
  eval->add_option("--wold", ev.wold, "Fixture manifest (JSON)");
  eval->add_option("--graph", ev.graph, "N-Triples file (std semantics)");
  eval->add_flag("--http", ev.http, "Dereference IRIs over HTTP");
  eval->add_option("--format", ev.format, "json-lines or tsv")
      ->check(CLI::IsMember({"json-lines", "tsv"}))
      ->capture_default_str();
  eval->add_option("--max-lookups", ev.maxLookups,
                   "Stop after this many distinct lookups")
      ->check(CLI::PositiveNumber);
  eval->add_flag("--force", ev.force, "Evaluate patterns that are not Web-safe");
  eval->add_flag("--trace", ev.trace, "Write an evaluation trace to stderr");

  std::string lookupArg, lookupWold;
  bool lookupHttp = false;
  auto* lookup = app.add_subcommand("lookup", "Show the context of an IRI");
  lookup->add_option("iri", lookupArg, "IRI to dereference")->required();
  lookup->add_option("--wold", lookupWold, "Fixture manifest (JSON)");
  lookup->add_flag("--http", lookupHttp, "Dereference over HTTP");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze) return runAnalyze(analyzeQuery);
    if (*eval) return runEval(ev);
    return runLookup(lookupArg, lookupWold, lookupHttp);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const NotWebBounded& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kUnsafe;
  } catch (const LookupBudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    // Fixture, N-Triples, file and network failures.
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  }
}
