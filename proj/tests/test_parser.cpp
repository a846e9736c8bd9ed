#include <doctest.h>

#include "hodef/parser.hpp"

using namespace hodef::parser;

static ParseResult parse_text(const std::string& text) {
  SourceFile src{"<test>", text};
  return parse(src);
}

TEST_CASE("parses facts and rules") {
  auto res = parse_text("p(a).\nr(P, Q) :- P(a), Q(b).\n");
  REQUIRE(res.errors.empty());
  REQUIRE(res.program.clauses.size() == 2);
  const RawClause& rule = res.program.clauses[1];
  CHECK(rule.head.str() == "r(P, Q)");
  REQUIRE(rule.body.size() == 2);
  CHECK(rule.body[0].str() == "P(a)");
  CHECK(rule.body[1].str() == "Q(b)");
}

TEST_CASE("parses curried application") {
  auto res = parse_text("id(Q)(X) :- Q(X).");
  REQUIRE(res.errors.empty());
  const RawTerm& head = res.program.clauses[0].head;
  CHECK(head.name == "id");
  REQUIRE(head.arglists.size() == 2);
  CHECK(head.str() == "id(Q)(X)");
  CHECK(head.flat_args().size() == 2);
}

TEST_CASE("parses variable-headed clauses") {
  auto res = parse_text("P(a, b).");
  REQUIRE(res.errors.empty());
  CHECK(res.program.clauses[0].head.callee_is_var);
}

TEST_CASE("parses type declarations") {
  auto res = parse_text("#type r : (i -> o) -> (i -> o) -> o.\nr(P, Q).");
  REQUIRE(res.errors.empty());
  REQUIRE(res.program.decls.size() == 1);
  const RawDecl& d = res.program.decls[0];
  CHECK(d.name == "r");
  CHECK(d.type.str() == "(i -> o) -> (i -> o) -> o");
}

TEST_CASE("arrow is right associative") {
  auto res = parse_text("#type f : i -> i -> o.\nf(a, b).");
  REQUIRE(res.errors.empty());
  const RawType& t = res.program.decls[0].type;
  REQUIRE(t.kind == RawType::Kind::Arrow);
  REQUIRE(t.parts.size() == 2);
  CHECK(t.parts[0].kind == RawType::Kind::I);
  CHECK(t.parts[1].kind == RawType::Kind::Arrow);
}

TEST_CASE("parses equality atoms in bodies") {
  auto res = parse_text("q(a). p(X) :- X = a, q(X).");
  REQUIRE(res.errors.empty());
  const RawClause& rule = res.program.clauses[1];
  REQUIRE(rule.body.size() == 2);
  CHECK(rule.body[0].kind == RawTerm::Kind::Eq);
  CHECK(rule.body[0].str() == "X = a");
}

TEST_CASE("comments and whitespace are skipped") {
  auto res = parse_text("% leading note\np(a). % trailing\n\n  q(b).\n");
  REQUIRE(res.errors.empty());
  CHECK(res.program.clauses.size() == 2);
}

TEST_CASE("bare heads are rejected") {
  auto res = parse_text("p.");
  CHECK_FALSE(res.errors.empty());
  CHECK(res.errors[0].code == "SyntaxError");
}

TEST_CASE("missing period is reported with position") {
  auto res = parse_text("p(a)");
  REQUIRE_FALSE(res.errors.empty());
  CHECK(res.errors[0].line == 1);
}

TEST_CASE("recovery continues after a bad clause") {
  auto res = parse_text("p(. q(a).");
  CHECK_FALSE(res.errors.empty());
  // the clause after the error still parses
  REQUIRE(res.program.clauses.size() == 1);
  CHECK(res.program.clauses[0].head.str() == "q(a)");
}

TEST_CASE("unknown directives are reported") {
  auto res = parse_text("#mode p.\np(a).");
  CHECK_FALSE(res.errors.empty());
  CHECK(res.errors[0].message.find("#mode") != std::string::npos);
}

TEST_CASE("pretty output reparses to the same program") {
  std::string text =
      "#type r : (i -> o) -> o.\nq(a). q(b).\nr(P) :- P(a), X = a.\n";
  auto res = parse_text(text);
  REQUIRE(res.errors.empty());
  auto again = parse_text(pretty(res.program));
  REQUIRE(again.errors.empty());
  CHECK(again.program == res.program);
}

TEST_CASE("offsets map to line and column") {
  SourceFile src{"<test>", "p(a).\nq(b).\n"};
  auto [l1, c1] = src.line_col(0);
  CHECK(l1 == 1);
  CHECK(c1 == 1);
  auto [l2, c2] = src.line_col(6);
  CHECK(l2 == 2);
  CHECK(c2 == 1);
}
