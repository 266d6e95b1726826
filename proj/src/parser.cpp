#include "ctxpath/parser.h"

#include <cctype>
#include <optional>

#include "escape.h"

namespace ctxpath {

namespace {

std::string joinExpected(const std::vector<std::string>& expected) {
  std::string s;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) s += ", ";
    s += expected[i];
  }
  return s;
}

std::string formatMessage(std::size_t line, std::size_t column,
                          const std::vector<std::string>& expected,
                          const std::string& found, const std::string& detail) {
  std::string msg = "line " + std::to_string(line) + ", column " +
                    std::to_string(column) + ": ";
  if (!detail.empty()) msg += detail + "; ";
  msg += "expected " + joinExpected(expected) + ", found " + found;
  return msg;
}

enum class Tok {
  Iri,
  Literal,
  Var,
  Blank,
  LParen,
  RParen,
  LBrace,
  RBrace,
  Slash,
  Pipe,
  Star,
  Caret,
  Bang,
  Plus,
  QMark,
  And,
  Union,
  Opt,
  Word,
  End,
  Bad,
};

struct Token {
  Tok kind = Tok::End;
  std::size_t line = 1;
  std::size_t column = 1;
  std::string text;  // source spelling, for diagnostics
  std::optional<Term> term;
  std::string name;  // variable name
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skipSpace();
    Token t;
    t.line = line_;
    t.column = column_;
    if (pos_ >= src_.size()) {
      t.kind = Tok::End;
      t.text = "end of input";
      return t;
    }
    std::size_t start = pos_;
    char c = src_[pos_];
    auto single = [&](Tok k) {
      advance(1);
      t.kind = k;
    };
    switch (c) {
      case '(': single(Tok::LParen); break;
      case ')': single(Tok::RParen); break;
      case '{': single(Tok::LBrace); break;
      case '}': single(Tok::RBrace); break;
      case '/': single(Tok::Slash); break;
      case '|': single(Tok::Pipe); break;
      case '*': single(Tok::Star); break;
      case '^': single(Tok::Caret); break;
      case '!': single(Tok::Bang); break;
      case '+': single(Tok::Plus); break;
      case '<': lexIri(t); break;
      case '"': lexLiteral(t); break;
      case '?':
        if (pos_ + 1 < src_.size() && isNameChar(src_[pos_ + 1])) {
          advance(1);
          std::size_t b = pos_;
          while (pos_ < src_.size() && isNameChar(src_[pos_])) advance(1);
          t.kind = Tok::Var;
          t.name = std::string(src_.substr(b, pos_ - b));
        } else {
          single(Tok::QMark);
        }
        break;
      case '_':
        if (pos_ + 1 < src_.size() && src_[pos_ + 1] == ':') {
          advance(2);
          while (pos_ < src_.size() && isNameChar(src_[pos_])) advance(1);
          t.kind = Tok::Blank;
          break;
        }
        [[fallthrough]];
      default:
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
          while (pos_ < src_.size() && isNameChar(src_[pos_])) advance(1);
          std::string_view w = src_.substr(start, pos_ - start);
          t.kind = w == "AND"     ? Tok::And
                   : w == "UNION" ? Tok::Union
                   : w == "OPT"   ? Tok::Opt
                                  : Tok::Word;
        } else if (c == '[') {
          // Anonymous blank node "[]".
          advance(1);
          skipSpace();
          if (pos_ < src_.size() && src_[pos_] == ']') advance(1);
          t.kind = Tok::Blank;
        } else {
          advance(1);
          t.kind = Tok::Bad;
        }
    }
    if (t.text.empty()) t.text = "'" + std::string(src_.substr(start, pos_ - start)) + "'";
    return t;
  }

 private:
  static bool isNameChar(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n && pos_ < src_.size(); ++i) {
      if (src_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
      ++pos_;
    }
  }

  void skipSpace() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance(1);
      } else if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance(1);
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(std::size_t line, std::size_t column,
                         std::vector<std::string> expected,
                         const std::string& detail) {
    std::string found = pos_ < src_.size()
                            ? "'" + std::string(1, src_[pos_]) + "'"
                            : "end of input";
    throw ParseError(line, column, std::move(expected), found, detail);
  }

  std::string readIriBody() {
    // Positioned on '<'.
    std::size_t line = line_, column = column_;
    advance(1);
    std::size_t b = pos_;
    while (pos_ < src_.size() && src_[pos_] != '>') {
      char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '<' ||
          c == '"') {
        fail(line_, column_, {"'>'"}, "malformed IRI");
      }
      advance(1);
    }
    if (pos_ >= src_.size()) fail(line, column, {"'>'"}, "unterminated IRI");
    std::string body(src_.substr(b, pos_ - b));
    advance(1);
    if (body.empty()) fail(line, column, {"IRI"}, "empty IRI");
    return body;
  }

  void lexIri(Token& t) {
    t.kind = Tok::Iri;
    t.term = Term::iri(readIriBody());
  }

  void lexLiteral(Token& t) {
    std::size_t line = line_, column = column_;
    advance(1);
    std::string lexical;
    while (true) {
      if (pos_ >= src_.size()) {
        fail(line, column, {"'\"'"}, "unterminated literal");
      }
      char c = src_[pos_];
      if (c == '"') break;
      if (c == '\\') {
        std::size_t i = pos_;
        std::string decoded;
        if (!decodeEscape(src_, i, decoded)) {
          fail(line_, column_, {"escape sequence"}, "invalid escape");
        }
        lexical += decoded;
        advance(i - pos_);
        continue;
      }
      if (c == '\n') fail(line_, column_, {"'\"'"}, "newline in literal");
      lexical += c;
      advance(1);
    }
    advance(1);
    if (lexical.empty()) {
      fail(line, column, {"non-empty literal"}, "empty literal");
    }
    std::string datatype, language;
    if (src_.substr(pos_, 2) == "^^") {
      advance(2);
      if (pos_ >= src_.size() || src_[pos_] != '<') {
        fail(line_, column_, {"datatype IRI"}, "");
      }
      datatype = readIriBody();
    } else if (pos_ < src_.size() && src_[pos_] == '@') {
      advance(1);
      std::size_t b = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '-')) {
        advance(1);
      }
      language = std::string(src_.substr(b, pos_ - b));
      if (language.empty()) fail(line_, column_, {"language tag"}, "");
    }
    t.kind = Tok::Literal;
    t.term = Term::literal(std::move(lexical), std::move(datatype),
                           std::move(language));
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

constexpr const char* kSugar =
    "property path sugar ('?', '+', '{n}') is not supported; "
    "write it with '|', '/' and '*'";

class Parser {
 public:
  explicit Parser(std::string_view src) : lexer_(src) { cur_ = lexer_.next(); }

  GraphPattern query() {
    GraphPattern p = group();
    expect(Tok::End, {"AND", "UNION", "OPT", "end of input"});
    return p;
  }

  PathExpr pathOnly() {
    PathExpr e = path();
    expect(Tok::End, {"'/'", "'|'", "'*'", "end of input"});
    return e;
  }

 private:
  [[noreturn]] void error(std::vector<std::string> expected,
                          std::string detail = {}) {
    throw ParseError(cur_.line, cur_.column, std::move(expected), cur_.text,
                     std::move(detail));
  }

  Token take() {
    Token t = std::move(cur_);
    cur_ = lexer_.next();
    return t;
  }

  void expect(Tok kind, std::vector<std::string> expected) {
    if (cur_.kind != kind) error(std::move(expected));
    take();
  }

  GraphPattern group() {
    GraphPattern left = operand();
    while (true) {
      std::optional<GraphOp> op;
      if (cur_.kind == Tok::And) op = GraphOp::And;
      if (cur_.kind == Tok::Union) op = GraphOp::Union;
      if (cur_.kind == Tok::Opt) op = GraphOp::Opt;
      if (!op) return left;
      take();
      left = GraphPattern::binary(*op, std::move(left), operand());
    }
  }

  GraphPattern operand() {
    if (cur_.kind == Tok::LBrace) {
      take();
      GraphPattern inner = group();
      expect(Tok::RBrace, {"AND", "UNION", "OPT", "'}'"});
      return inner;
    }
    if (!startsNode()) error({"'{'", "IRI", "literal", "variable"});
    PatternTerm s = node();
    PathExpr e = path();
    if (!startsNode()) error({"'/'", "'|'", "'*'", "IRI", "literal", "variable"});
    PatternTerm o = node();
    return GraphPattern(PathPattern(std::move(s), std::move(e), std::move(o)));
  }

  bool startsNode() const {
    return cur_.kind == Tok::Iri || cur_.kind == Tok::Literal ||
           cur_.kind == Tok::Var || cur_.kind == Tok::Blank;
  }

  PatternTerm node() {
    if (cur_.kind == Tok::Blank) {
      error({"IRI", "literal", "variable"},
            "blank nodes are not allowed in patterns");
    }
    if (cur_.kind == Tok::Var) {
      if (isReservedVariableName(cur_.name)) {
        error({"variable"},
              "variable names of the form _fvN are reserved");
      }
      return Variable(take().name);
    }
    return *take().term;
  }

  PathExpr path() {
    PathExpr left = seq();
    while (cur_.kind == Tok::Pipe) {
      take();
      left = PathExpr::alternative(std::move(left), seq());
    }
    return left;
  }

  PathExpr seq() {
    PathExpr left = unary();
    while (cur_.kind == Tok::Slash) {
      take();
      left = PathExpr::sequence(std::move(left), unary());
    }
    return left;
  }

  PathExpr unary() {
    if (cur_.kind == Tok::Caret) {
      take();
      return PathExpr::inverse(unary());
    }
    PathExpr e = primary();
    while (true) {
      if (cur_.kind == Tok::Star) {
        take();
        e = PathExpr::star(std::move(e));
      } else if (cur_.kind == Tok::Plus || cur_.kind == Tok::QMark ||
                 cur_.kind == Tok::LBrace) {
        error({"'*'", "'/'", "'|'", "IRI", "literal", "variable"}, kSugar);
      } else {
        return e;
      }
    }
  }

  PathExpr primary() {
    switch (cur_.kind) {
      case Tok::Iri:
        return PathExpr::link(*take().term);
      case Tok::Bang:
        take();
        return negatedSet();
      case Tok::LParen: {
        take();
        PathExpr inner = path();
        expect(Tok::RParen, {"'/'", "'|'", "'*'", "')'"});
        return inner;
      }
      default:
        error({"IRI", "'^'", "'!'", "'('"});
    }
  }

  PathExpr negatedSet() {
    if (cur_.kind == Tok::Iri) return PathExpr::negatedSet({*take().term});
    if (cur_.kind != Tok::LParen) error({"IRI", "'('"});
    take();
    std::vector<Term> iris;
    while (true) {
      if (cur_.kind != Tok::Iri) error({"IRI"});
      iris.push_back(*take().term);
      if (cur_.kind == Tok::RParen) {
        take();
        return PathExpr::negatedSet(std::move(iris));
      }
      expect(Tok::Pipe, {"'|'", "')'"});
    }
  }

  Lexer lexer_;
  Token cur_;
};

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column,
                       std::vector<std::string> expected, std::string found,
                       std::string detail)
    : std::runtime_error(
          formatMessage(line, column, expected, found, detail)),
      line_(line),
      column_(column),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

GraphPattern parseQuery(std::string_view text) {
  return Parser(text).query();
}

PathExpr parsePath(std::string_view text) { return Parser(text).pathOnly(); }

}  // namespace ctxpath
