#include "ctxpath/ntriples.h"

#include <cctype>

#include "escape.h"

namespace ctxpath {

NTriplesError::NTriplesError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      line_(line) {}

namespace {

class LineParser {
 public:
  LineParser(std::string_view line, std::size_t lineNo,
             const std::string& blankPrefix)
      : s_(line), lineNo_(lineNo), blankPrefix_(blankPrefix) {}

  // Returns false for blank or comment-only lines.
  bool parse(RdfGraph& out) {
    skipSpace();
    if (atEnd() || s_[i_] == '#') return false;
    Term subject = readSubject();
    skipSpace();
    Term predicate = readIri();
    skipSpace();
    Term object = readObject();
    skipSpace();
    if (atEnd() || s_[i_] != '.') fail("expected '.'");
    ++i_;
    skipSpace();
    if (!atEnd() && s_[i_] != '#') fail("trailing content after '.'");
    try {
      out.insert(Triple(std::move(subject), std::move(predicate),
                        std::move(object)));
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
    return true;
  }

 private:
  bool atEnd() const { return i_ >= s_.size(); }

  void skipSpace() {
    while (!atEnd() && (s_[i_] == ' ' || s_[i_] == '\t' || s_[i_] == '\r')) {
      ++i_;
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw NTriplesError(lineNo_, what + " (column " + std::to_string(i_ + 1) +
                                     ")");
  }

  std::string readIriBody() {
    if (atEnd() || s_[i_] != '<') fail("expected IRI");
    ++i_;
    std::string body;
    while (!atEnd() && s_[i_] != '>') {
      char c = s_[i_];
      if (c == '\\') {
        if (!decodeEscape(s_, i_, body)) fail("invalid escape in IRI");
        continue;
      }
      if (c == ' ' || c == '<' || c == '"' || c == '{' || c == '}') {
        fail("invalid character in IRI");
      }
      body += c;
      ++i_;
    }
    if (atEnd()) fail("unterminated IRI");
    ++i_;
    if (body.empty()) fail("empty IRI");
    return body;
  }

  Term readIri() { return Term::iri(readIriBody()); }

  Term readBlank() {
    i_ += 2;  // "_:"
    std::size_t b = i_;
    while (!atEnd() && (std::isalnum(static_cast<unsigned char>(s_[i_])) ||
                        s_[i_] == '_' || s_[i_] == '-' || s_[i_] == '.')) {
      ++i_;
    }
    // A label cannot end with '.'; that dot terminates the statement.
    while (i_ > b && s_[i_ - 1] == '.') --i_;
    if (i_ == b) fail("empty blank node label");
    return Term::blank(blankPrefix_ + std::string(s_.substr(b, i_ - b)));
  }

  bool atBlank() const { return s_.substr(i_, 2) == "_:"; }

  Term readSubject() {
    if (atBlank()) return readBlank();
    return readIri();
  }

  Term readLiteral() {
    ++i_;
    std::string lexical;
    while (true) {
      if (atEnd()) fail("unterminated literal");
      char c = s_[i_];
      if (c == '"') break;
      if (c == '\\') {
        if (!decodeEscape(s_, i_, lexical)) fail("invalid escape in literal");
        continue;
      }
      lexical += c;
      ++i_;
    }
    ++i_;
    if (lexical.empty()) fail("empty literals are not supported");
    std::string datatype, language;
    if (s_.substr(i_, 2) == "^^") {
      i_ += 2;
      datatype = readIriBody();
    } else if (!atEnd() && s_[i_] == '@') {
      ++i_;
      std::size_t b = i_;
      while (!atEnd() && (std::isalnum(static_cast<unsigned char>(s_[i_])) ||
                          s_[i_] == '-')) {
        ++i_;
      }
      if (i_ == b) fail("empty language tag");
      language = std::string(s_.substr(b, i_ - b));
    }
    return Term::literal(std::move(lexical), std::move(datatype),
                         std::move(language));
  }

  Term readObject() {
    if (atBlank()) return readBlank();
    if (!atEnd() && s_[i_] == '"') return readLiteral();
    return readIri();
  }

  std::string_view s_;
  std::size_t i_ = 0;
  std::size_t lineNo_;
  const std::string& blankPrefix_;
};

}  // namespace

RdfGraph parseNTriples(std::string_view text, const std::string& blankPrefix) {
  RdfGraph g;
  std::size_t lineNo = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    ++lineNo;
    LineParser(text.substr(pos, nl - pos), lineNo, blankPrefix).parse(g);
    pos = nl + 1;
  }
  return g;
}

std::string toNTriples(const RdfGraph& graph) {
  std::string out;
  for (const auto& t : graph) out += t.toString() + "\n";
  return out;
}

}  // namespace ctxpath
