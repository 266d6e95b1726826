#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <thread>

#include "ctxpath/web.h"
#include "ctxpath/wold.h"
#include "support/generators.h"
#include "support/oracles.h"

using namespace ctxpath;
namespace fs = std::filesystem;

namespace {

const std::string kDesk = std::string(CTXPATH_FIXTURE_DIR) + "/desk/manifest.json";

Term ex(const std::string& s) { return Term::iri("http://example.org/" + s); }
Iri exIri(const std::string& s) { return Iri("http://example.org/" + s); }

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("ctxpath-test-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "-" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path write(const std::string& name, const std::string& text) const {
    std::ofstream(path_ / name) << text;
    return path_ / name;
  }

 private:
  fs::path path_;
};

std::string fixtureError(const fs::path& manifest) {
  try {
    loadFixture(manifest);
  } catch (const FixtureError& e) {
    return e.what();
  }
  ADD_FAILURE() << "loaded " << manifest;
  return {};
}

}  // namespace

TEST(DeskFixture, Shape) {
  Wold w = loadFixture(kDesk);
  EXPECT_EQ(w.documents().size(), 3u);
  EXPECT_EQ(w.adoc().size(), 3u);
  EXPECT_EQ(w.unionGraph().size(), 7u);
  EXPECT_FALSE(w.resolve(exIri("Carol")));
}

TEST(DeskFixture, ContextIsSubjectFiltered) {
  Wold w = loadFixture(kDesk);
  RdfGraph bob = w.context(ex("Bob"));
  EXPECT_EQ(bob, (RdfGraph{Triple(ex("Bob"), ex("knows"), ex("Alice")),
                           Triple(ex("Bob"), ex("name"), Term::literal("Bob"))}));
  EXPECT_EQ(w.resolve(exIri("Bob"))->triples.size(), 3u);
  EXPECT_TRUE(w.context(Term::literal("Bob")).empty());
  EXPECT_TRUE(w.context(ex("Nobody")).empty());
  EXPECT_TRUE(w.context(PatternTerm(Variable("v"))).empty());
}

TEST(DeskFixture, AllTerms) {
  Wold w = loadFixture(kDesk);
  std::set<Term> want{ex("Bob"), ex("Alice"), ex("Tim"), ex("Carol"),
                      ex("knows"), ex("name"), Term::literal("Bob"),
                      Term::literal("Alice"), Term::literal("Tim")};
  EXPECT_EQ(w.allTerms(), want);
}

TEST(DeskFixture, LinkGraph) {
  Wold w = loadFixture(kDesk);
  const std::size_t bob = *w.documentIndex(exIri("Bob"));
  const std::size_t alice = *w.documentIndex(exIri("Alice"));
  const std::size_t tim = *w.documentIndex(exIri("Tim"));
  LinkGraph g = w.linkGraph();
  EXPECT_EQ(g.nodeCount, 3u);
  std::set<std::pair<std::size_t, std::size_t>> want{
      {bob, bob}, {bob, alice}, {bob, tim}, {alice, alice},
      {alice, tim}, {tim, tim}, {tim, bob}};
  EXPECT_EQ(g.edges, want);
}

TEST(Wold, EmptyAndSmall) {
  Wold empty;
  EXPECT_TRUE(empty.allTerms().empty());
  EXPECT_TRUE(empty.unionGraph().empty());
  EXPECT_TRUE(empty.linkGraph().edges.empty());

  Wold one;
  const Term a = Term::iri("http://a"), p = Term::iri("http://p"),
             b = Term::iri("http://b");
  one.addDocument("d", RdfGraph{Triple(a, p, b)});
  EXPECT_EQ(one.allTerms(), (std::set<Term>{a, p, b}));
  EXPECT_TRUE(one.linkGraph().edges.empty());  // nothing dereferences
}

TEST(Wold, DuplicateTriplesAcrossDocumentsAppearOnce) {
  Wold w;
  const Term a = Term::iri("http://a"), p = Term::iri("http://p");
  w.addDocument("d0", RdfGraph{Triple(a, p, a)});
  w.addDocument("d1", RdfGraph{Triple(a, p, a)});
  EXPECT_EQ(w.unionGraph().size(), 1u);
}

TEST(Wold, MapIriTwiceIsRejected) {
  Wold w;
  std::size_t d = w.addDocument("d", {});
  w.mapIri(Iri("http://a"), d);
  EXPECT_THROW(w.mapIri(Iri("http://a"), d), std::invalid_argument);
  EXPECT_THROW(w.mapIri(Iri("http://b"), d + 1), std::out_of_range);
}

TEST(Wold, BlankLabelsAreScopedPerDocument) {
  Wold w;
  const Term p = Term::iri("http://p");
  w.addDocument("d0", RdfGraph{Triple(Term::blank("b"), p, Term::blank("c"))});
  w.addDocument("d1", RdfGraph{Triple(Term::blank("b"), p, Term::literal("x"))});
  EXPECT_EQ(w.unionGraph().size(), 2u);
  std::set<Term> blanks0, blanks1;
  for (const auto& t : w.documents()[0]->triples) blanks0.insert(t.subject());
  for (const auto& t : w.documents()[1]->triples) blanks1.insert(t.subject());
  EXPECT_NE(blanks0, blanks1);
}

TEST(LoadFixture, EmptyManifest) {
  TempDir dir;
  Wold w = loadFixture(dir.write("m.json", R"({"documents": []})"));
  EXPECT_TRUE(w.documents().empty());
}

TEST(LoadFixture, MissingFileIsNamed) {
  TempDir dir;
  auto m = dir.write("m.json",
                     R"({"documents": [{"iri": "http://a", "file": "gone.nt"}]})");
  EXPECT_NE(fixtureError(m).find("gone.nt"), std::string::npos);
  EXPECT_NE(fixtureError(dir.write("x.json", "")).find("x.json"), std::string::npos);
}

TEST(LoadFixture, MalformedLineHasNumber) {
  TempDir dir;
  dir.write("bad.nt", "<http://a> <http://p> <http://b> .\n<http://a> oops .\n");
  auto m = dir.write("m.json",
                     R"({"documents": [{"iri": "http://a", "file": "bad.nt"}]})");
  std::string msg = fixtureError(m);
  EXPECT_NE(msg.find("bad.nt"), std::string::npos);
  EXPECT_NE(msg.find("line 2"), std::string::npos) << msg;
}

TEST(LoadFixture, DuplicateIri) {
  TempDir dir;
  dir.write("a.nt", "");
  auto m = dir.write("m.json", R"({"documents": [
      {"iri": "http://a", "file": "a.nt"}, {"iri": "http://a", "file": "a.nt"}]})");
  EXPECT_NE(fixtureError(m).find("duplicate"), std::string::npos);
}

TEST(LoadFixture, EachEntryIsItsOwnDocument) {
  TempDir dir;
  dir.write("a.nt", "<http://a> <http://p> <http://b> .\n");
  auto m = dir.write("m.json", R"({"documents": [
      {"iri": "http://a", "file": "a.nt"}, {"iri": "http://b", "file": "a.nt"}]})");
  Wold w = loadFixture(m);
  EXPECT_EQ(w.documents().size(), 2u);
  EXPECT_NE(w.documentIndex(Iri("http://a")), w.documentIndex(Iri("http://b")));
}

TEST(Web, LookupMemoAndLedger) {
  Wold w = loadFixture(kDesk);
  FixtureSource source(w);
  Web web(source);
  EXPECT_TRUE(web.lookup(exIri("Bob")));
  EXPECT_TRUE(web.lookup(exIri("Bob")));
  EXPECT_FALSE(web.lookup(exIri("Nobody")));
  EXPECT_EQ(web.ledger().attemptCount(), 3u);
  EXPECT_EQ(web.ledger().distinctCount(), 2u);
  EXPECT_EQ(web.ledger().notRetrievableCount(), 1u);
  auto attempts = web.ledger().attempts();
  EXPECT_EQ(attempts[2].outcome, LookupOutcome::NotRetrievable);
  EXPECT_TRUE(web.isMemoized(exIri("Nobody")));
}

TEST(Web, ConcurrentLookupsRetrieveOnce) {
  struct Counting : DocumentSource {
    std::atomic<int> calls{0};
    DocumentPtr retrieve(const Iri&) override {
      ++calls;
      std::this_thread::sleep_for(std::chrono::milliseconds(5));
      return std::make_shared<Document>(Document{"d", {}});
    }
  } source;
  Web web(source);
  std::vector<std::thread> threads;
  for (int i = 0; i < 8; ++i) {
    threads.emplace_back([&] { web.lookup(Iri("http://same")); });
  }
  for (auto& t : threads) t.join();
  EXPECT_EQ(source.calls.load(), 1);
  EXPECT_EQ(web.ledger().attemptCount(), 8u);
  EXPECT_EQ(web.ledger().distinctCount(), 1u);
}

TEST(Web, OmniscienceOnlyOnFixtures) {
  struct Blind : DocumentSource {
    DocumentPtr retrieve(const Iri&) override { return nullptr; }
  } blind;
  Web web(blind);
  EXPECT_THROW(web.requireOmniscient("terms"), OmniscienceRequired);
}

TEST(WoldProperties, ContextsOnRandomWebs) {
  ctxpath::testing::Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    auto web = ctxpath::testing::randomWeb(rng);
    const Wold& w = web.wold;
    const RdfGraph all = w.unionGraph();
    RdfGraph contexts;
    for (const Term& iri : web.iris) {
      RdfGraph c = w.context(iri);
      EXPECT_EQ(c, oracle::bruteContext(w, iri));
      for (const auto& t : c) {
        EXPECT_EQ(t.subject(), iri);
        EXPECT_TRUE(all.contains(t));
      }
      contexts.insertAll(c);
    }
    EXPECT_EQ(contexts, w.contextsUnion());
    EXPECT_EQ(w.allTerms(), oracle::bruteTerms(w));

    // Blank labels never repeat across documents.
    std::map<Term, std::size_t> owner;
    for (std::size_t d = 0; d < w.documents().size(); ++d) {
      for (const Term& t : w.documents()[d]->triples.terms()) {
        if (!t.isBlank()) continue;
        auto [it, fresh] = owner.emplace(t, d);
        EXPECT_TRUE(fresh || it->second == d);
      }
    }
  }
}
