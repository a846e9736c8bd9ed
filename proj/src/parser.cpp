#include "hodef/parser.hpp"

#include <cctype>

namespace hodef::parser {

SourceFile SourceFile::from_string(std::string text, std::string path) {
  return SourceFile{std::move(path), std::move(text)};
}

std::pair<int, int> SourceFile::line_col(std::size_t offset) const {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

std::string Diag::str() const {
  std::string s = code;
  if (line > 0) s += " at " + std::to_string(line) + ":" + std::to_string(col);
  return s + ": " + message;
}

bool RawType::operator==(const RawType& other) const {
  return kind == other.kind && parts == other.parts;
}

std::string RawType::str() const {
  switch (kind) {
    case Kind::I:
      return "i";
    case Kind::O:
      return "o";
    case Kind::Arrow: {
      std::string lhs = parts[0].str();
      if (parts[0].kind == Kind::Arrow) lhs = "(" + lhs + ")";
      return lhs + " -> " + parts[1].str();
    }
  }
  return "?";
}

std::vector<const RawTerm*> RawTerm::flat_args() const {
  std::vector<const RawTerm*> out;
  for (const auto& list : arglists)
    for (const auto& t : list) out.push_back(&t);
  return out;
}

bool RawTerm::operator==(const RawTerm& other) const {
  return kind == other.kind && name == other.name &&
         callee_is_var == other.callee_is_var && arglists == other.arglists &&
         eq == other.eq;
}

std::string RawTerm::str() const {
  switch (kind) {
    case Kind::Var:
    case Kind::Name:
      return name;
    case Kind::Apply: {
      std::string s = name;
      for (const auto& list : arglists) {
        s += "(";
        for (std::size_t i = 0; i < list.size(); ++i) {
          if (i) s += ", ";
          s += list[i].str();
        }
        s += ")";
      }
      return s;
    }
    case Kind::Eq:
      return eq[0].str() + " = " + eq[1].str();
  }
  return "?";
}

bool RawDecl::operator==(const RawDecl& other) const {
  return name == other.name && type == other.type;
}

bool RawClause::operator==(const RawClause& other) const {
  return head == other.head && body == other.body;
}

std::string RawClause::str() const {
  std::string s = head.str();
  if (!body.empty()) {
    s += " :- ";
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (i) s += ", ";
      s += body[i].str();
    }
  }
  return s + ".";
}

bool RawProgram::operator==(const RawProgram& other) const {
  return decls == other.decls && clauses == other.clauses;
}

namespace {

enum class Tok : std::uint8_t {
  Name,
  Var,
  LParen,
  RParen,
  Comma,
  Period,
  Turnstile,  // :-
  Colon,
  Equals,
  Arrow,      // ->
  HashType,   // #type
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  Lexer(const std::string& text, std::vector<Diag>& diags)
      : text_(text), diags_(diags) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_ws();
      if (i_ >= text_.size()) break;
      std::size_t start = i_;
      char c = text_[i_];
      if (std::islower(static_cast<unsigned char>(c))) {
        out.push_back({Tok::Name, word(), start});
      } else if (std::isupper(static_cast<unsigned char>(c)) || c == '_') {
        out.push_back({Tok::Var, word(), start});
      } else if (c == '(') {
        ++i_;
        out.push_back({Tok::LParen, "(", start});
      } else if (c == ')') {
        ++i_;
        out.push_back({Tok::RParen, ")", start});
      } else if (c == ',') {
        ++i_;
        out.push_back({Tok::Comma, ",", start});
      } else if (c == '.') {
        ++i_;
        out.push_back({Tok::Period, ".", start});
      } else if (c == '=') {
        ++i_;
        out.push_back({Tok::Equals, "=", start});
      } else if (c == ':') {
        ++i_;
        if (i_ < text_.size() && text_[i_] == '-') {
          ++i_;
          out.push_back({Tok::Turnstile, ":-", start});
        } else {
          out.push_back({Tok::Colon, ":", start});
        }
      } else if (c == '-') {
        ++i_;
        if (i_ < text_.size() && text_[i_] == '>') {
          ++i_;
          out.push_back({Tok::Arrow, "->", start});
        } else {
          diags_.push_back({"SyntaxError", "stray '-'", start});
        }
      } else if (c == '#') {
        ++i_;
        std::string w = word();
        if (w == "type") {
          out.push_back({Tok::HashType, "#type", start});
        } else {
          diags_.push_back({"SyntaxError", "unknown directive #" + w, start});
        }
      } else {
        diags_.push_back(
            {"SyntaxError", std::string("unexpected character '") + c + "'", start});
        ++i_;
      }
    }
    out.push_back({Tok::End, "", text_.size()});
    return out;
  }

 private:
  void skip_ws() {
    while (i_ < text_.size()) {
      char c = text_[i_];
      if (c == '%') {
        while (i_ < text_.size() && text_[i_] != '\n') ++i_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++i_;
      } else {
        break;
      }
    }
  }

  std::string word() {
    std::size_t start = i_;
    while (i_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[i_])) ||
            text_[i_] == '_'))
      ++i_;
    return text_.substr(start, i_ - start);
  }

  const std::string& text_;
  std::vector<Diag>& diags_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  Parser(std::vector<Token> toks, std::vector<Diag>& diags)
      : toks_(std::move(toks)), diags_(diags) {}

  RawProgram run() {
    RawProgram out;
    while (peek().kind != Tok::End) {
      std::size_t before = diags_.size();
      if (peek().kind == Tok::HashType) {
        RawDecl d;
        if (parse_decl(d)) out.decls.push_back(std::move(d));
      } else {
        RawClause c;
        if (parse_clause(c)) out.clauses.push_back(std::move(c));
      }
      if (diags_.size() > before) sync();
    }
    return out;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  const Token& next() { return toks_[i_++]; }

  bool expect(Tok kind, const std::string& what) {
    if (peek().kind == kind) {
      next();
      return true;
    }
    error("expected " + what);
    return false;
  }

  void error(const std::string& msg) {
    diags_.push_back({"SyntaxError", msg + ", found '" + peek().text + "'",
                      peek().pos});
  }

  // Skips past the next period so later clauses still get parsed.
  void sync() {
    while (peek().kind != Tok::End && next().kind != Tok::Period) {
    }
  }

  bool parse_decl(RawDecl& out) {
    out.pos = peek().pos;
    next();  // #type
    if (peek().kind != Tok::Name) {
      error("expected a name after #type");
      return false;
    }
    out.name = next().text;
    if (!expect(Tok::Colon, "':'")) return false;
    if (!parse_type(out.type)) return false;
    return expect(Tok::Period, "'.'");
  }

  bool parse_type(RawType& out) {
    RawType lhs;
    if (!parse_type_atom(lhs)) return false;
    if (peek().kind == Tok::Arrow) {
      next();
      RawType rhs;
      if (!parse_type(rhs)) return false;
      out.kind = RawType::Kind::Arrow;
      out.parts = {std::move(lhs), std::move(rhs)};
    } else {
      out = std::move(lhs);
    }
    return true;
  }

  bool parse_type_atom(RawType& out) {
    if (peek().kind == Tok::LParen) {
      next();
      if (!parse_type(out)) return false;
      return expect(Tok::RParen, "')'");
    }
    if (peek().kind == Tok::Name && peek().text == "i") {
      next();
      out.kind = RawType::Kind::I;
      return true;
    }
    if (peek().kind == Tok::Name && peek().text == "o") {
      next();
      out.kind = RawType::Kind::O;
      return true;
    }
    error("expected a type (i, o, or parenthesized arrow)");
    return false;
  }

  bool parse_clause(RawClause& out) {
    out.pos = peek().pos;
    if (!parse_term(out.head)) return false;
    if (out.head.kind != RawTerm::Kind::Apply) {
      diags_.push_back({"SyntaxError",
                        "clause head must be an applied predicate", out.head.pos});
      return false;
    }
    if (peek().kind == Tok::Turnstile) {
      next();
      while (true) {
        RawTerm atom;
        if (!parse_body_atom(atom)) return false;
        out.body.push_back(std::move(atom));
        if (peek().kind == Tok::Comma) {
          next();
          continue;
        }
        break;
      }
    }
    return expect(Tok::Period, "'.'");
  }

  bool parse_body_atom(RawTerm& out) {
    RawTerm t;
    if (!parse_term(t)) return false;
    if (peek().kind == Tok::Equals) {
      std::size_t pos = next().pos;
      RawTerm rhs;
      if (!parse_term(rhs)) return false;
      out.kind = RawTerm::Kind::Eq;
      out.eq = {std::move(t), std::move(rhs)};
      out.pos = pos;
      return true;
    }
    if (t.kind != RawTerm::Kind::Apply) {
      diags_.push_back({"SyntaxError",
                        "body atom must be an application or an equation", t.pos});
      return false;
    }
    out = std::move(t);
    return true;
  }

  // term := (VAR | NAME) ( "(" term ("," term)* ")" )*
  bool parse_term(RawTerm& out) {
    if (peek().kind != Tok::Name && peek().kind != Tok::Var) {
      error("expected a term");
      return false;
    }
    Token head = next();
    out.pos = head.pos;
    out.name = head.text;
    bool is_var = head.kind == Tok::Var;
    std::vector<std::vector<RawTerm>> arglists;
    while (peek().kind == Tok::LParen) {
      next();
      std::vector<RawTerm> args;
      if (peek().kind == Tok::RParen) {
        error("empty argument list");
        return false;
      }
      while (true) {
        RawTerm arg;
        if (!parse_term(arg)) return false;
        args.push_back(std::move(arg));
        if (peek().kind == Tok::Comma) {
          next();
          continue;
        }
        break;
      }
      if (!expect(Tok::RParen, "')'")) return false;
      arglists.push_back(std::move(args));
    }
    if (arglists.empty()) {
      out.kind = is_var ? RawTerm::Kind::Var : RawTerm::Kind::Name;
    } else {
      out.kind = RawTerm::Kind::Apply;
      out.callee_is_var = is_var;
      out.arglists = std::move(arglists);
    }
    return true;
  }

  std::vector<Token> toks_;
  std::vector<Diag>& diags_;
  std::size_t i_ = 0;
};

}  // namespace

ParseResult parse(const SourceFile& src) {
  ParseResult result;
  Lexer lexer(src.text, result.errors);
  Parser parser(lexer.run(), result.errors);
  result.program = parser.run();
  for (Diag& d : result.errors) {
    auto [line, col] = src.line_col(d.offset);
    d.line = line;
    d.col = col;
  }
  return result;
}

std::string pretty(const RawProgram& p) {
  std::string out;
  for (const RawDecl& d : p.decls)
    out += "#type " + d.name + " : " + d.type.str() + ".\n";
  for (const RawClause& c : p.clauses) out += c.str() + "\n";
  return out;
}

}  // namespace hodef::parser
