#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hodef::parser {

struct SourceFile {
  std::string path;
  std::string text;

  static SourceFile from_string(std::string text, std::string path = "<input>");
  // 1-based line and column for a byte offset.
  std::pair<int, int> line_col(std::size_t offset) const;
};

struct Diag {
  std::string code;
  std::string message;
  std::size_t offset = 0;
  int line = 0, col = 0;
  std::string str() const;
};

// Annotation types as written: i, o, or t -> t (right-associative,
// parentheses allowed). Functional shapes like i -> i are legal here.
struct RawType {
  enum class Kind : std::uint8_t { I, O, Arrow };
  Kind kind = Kind::I;
  std::vector<RawType> parts;  // Arrow: {lhs, rhs}

  bool operator==(const RawType& other) const;
  std::string str() const;
};

struct RawTerm {
  enum class Kind : std::uint8_t { Var, Name, Apply, Eq };
  Kind kind = Kind::Name;
  std::string name;            // Var, Name, Apply callee
  bool callee_is_var = false;  // Apply only
  std::vector<std::vector<RawTerm>> arglists;  // Apply only, each non-empty
  std::vector<RawTerm> eq;     // Eq only: {lhs, rhs}
  std::size_t pos = 0;

  std::vector<const RawTerm*> flat_args() const;
  bool operator==(const RawTerm& other) const;
  std::string str() const;
};

struct RawDecl {
  std::string name;
  RawType type;
  std::size_t pos = 0;
  bool operator==(const RawDecl& other) const;
};

struct RawClause {
  RawTerm head;
  std::vector<RawTerm> body;
  std::size_t pos = 0;
  bool operator==(const RawClause& other) const;
  std::string str() const;
};

struct RawProgram {
  std::vector<RawDecl> decls;
  std::vector<RawClause> clauses;
  bool operator==(const RawProgram& other) const;
};

struct ParseResult {
  RawProgram program;
  std::vector<Diag> errors;
  bool ok() const { return errors.empty(); }
};

ParseResult parse(const SourceFile& src);

// Canonical surface form; parse(pretty(parse(x))) equals parse(x).
std::string pretty(const RawProgram& p);

}  // namespace hodef::parser
