#include <doctest.h>

#include <set>

#include "hodef/ast.hpp"
#include "hodef/caps.hpp"
#include "hodef/infer.hpp"
#include "hodef/program.hpp"

using namespace hodef;

TEST_CASE("argtype grammar and rendering") {
  ArgType i = ArgType::iota();
  ArgType o = ArgType::o();
  ArgType io = ArgType::arrow(i, o);
  ArgType iio = ArgType::arrow(i, io);
  ArgType hi = ArgType::arrow(io, o);

  CHECK(i.str() == "i");
  CHECK(o.str() == "o");
  CHECK(io.str() == "i -> o");
  CHECK(iio.str() == "i -> i -> o");
  CHECK(hi.str() == "(i -> o) -> o");

  CHECK(i.is_iota());
  CHECK(o.is_predicate());
  CHECK(io.is_predicate());
  CHECK_FALSE(i.is_predicate());

  // arrow results must stay predicate-typed
  CHECK_THROWS_AS(ArgType::arrow(i, i), TypeMismatchError);

  CHECK(io.flat_args().size() == 1);
  CHECK(iio.flat_args().size() == 2);
  CHECK(hi.flat_args()[0] == io);
}

TEST_CASE("argtype total order") {
  ArgType i = ArgType::iota();
  ArgType o = ArgType::o();
  ArgType io = ArgType::arrow(i, o);
  CHECK(i.compare(i) == 0);
  CHECK(i.compare(o) != 0);
  // antisymmetry of the comparator
  CHECK(i.compare(o) == -o.compare(i));
  CHECK(io.compare(io) == 0);
}

TEST_CASE("expr depth convention") {
  Expr a = Expr::ind_const("a");
  Expr q = Expr::pred_const("q", ArgType::arrow(ArgType::iota(), ArgType::o()));
  CHECK(a.depth() == 0);
  CHECK(q.depth() == 0);

  Expr qa = Expr::app(q, a);
  CHECK(qa.depth() == 1);

  Expr fa = Expr::fun_app("f", {a});
  CHECK(fa.depth() == 1);
  Expr ffa = Expr::fun_app("f", {fa});
  CHECK(ffa.depth() == 2);

  Expr e = Expr::eq(a, fa);
  CHECK(e.depth() == 2);
}

TEST_CASE("expr groundness and variables") {
  Expr a = Expr::ind_const("a");
  Expr x = Expr::ind_var("X");
  CHECK(a.is_ground());
  CHECK_FALSE(x.is_ground());
  CHECK_FALSE(Expr::fun_app("f", {x}).is_ground());
  CHECK(Expr::fun_app("f", {a}).is_ground());
}

TEST_CASE("expr substitution") {
  Expr a = Expr::ind_const("a");
  Expr x = Expr::ind_var("X");
  Expr fx = Expr::fun_app("f", {x});
  std::map<std::string, Expr> theta{{"X", a}};
  Expr fa = substitute(fx, theta);
  CHECK(fa.is_ground());
  CHECK(fa.str() == "f(a)");
  // substitution leaves the original untouched
  CHECK_FALSE(fx.is_ground());
}

TEST_CASE("expr canonical order ranks kinds") {
  Expr a = Expr::ind_const("a");
  Expr q = Expr::pred_const("q", ArgType::arrow(ArgType::iota(), ArgType::o()));
  Expr x = Expr::ind_var("X");
  CHECK(a.compare(q) < 0);
  CHECK(q.compare(x) < 0);
  CHECK(a.compare(a) == 0);
  CHECK(a.compare(Expr::ind_const("b")) < 0);
}

TEST_CASE("argument subterms and replacement") {
  Expr a = Expr::ind_const("a");
  ArgType io = ArgType::arrow(ArgType::iota(), ArgType::o());
  Expr q = Expr::pred_const("q", io);
  Expr qa = Expr::app(q, a);

  auto subs = argument_subterms(qa);
  // proper subterms only: q and a, not qa itself
  std::set<std::string> names;
  for (const auto& [path, sub] : subs) names.insert(sub.str());
  CHECK(names == std::set<std::string>{"q", "a"});

  for (const auto& [path, sub] : subs) {
    if (sub.str() == "a") {
      Expr swapped = replace_at(qa, path, Expr::ind_const("b"));
      CHECK(swapped.str() == "q(b)");
    }
  }
}

TEST_CASE("inference types the pair program") {
  auto res = load_program("p(a). q(b). r(P, Q) :- P(a), Q(b).");
  REQUIRE(res.ok());
  const Program& p = *res.program;
  CHECK(p.classification.cls == ProgramClass::Definitional);
  CHECK(p.signature.individual_constants ==
        std::vector<std::string>{"a", "b"});
  ArgType io = ArgType::arrow(ArgType::iota(), ArgType::o());
  CHECK(p.signature.predicates.at("p") == io);
  CHECK(p.signature.predicates.at("q") == io);
  CHECK(p.signature.predicates.at("r") ==
        ArgType::arrow(io, ArgType::arrow(io, ArgType::o())));
}

TEST_CASE("inference handles curried heads") {
  auto res = load_program("q(a). id(Q)(X) :- Q(X).");
  REQUIRE(res.ok());
  const Program& p = *res.program;
  ArgType io = ArgType::arrow(ArgType::iota(), ArgType::o());
  CHECK(p.signature.predicates.at("id") == ArgType::arrow(io, io));
  const Clause& cl = p.clauses[1];
  CHECK(cl.head_pred == "id");
  REQUIRE(cl.formals.size() == 2);
  CHECK(cl.formals[0].name == "Q");
  CHECK(cl.formals[1].name == "X");
}

TEST_CASE("inference respects declarations and reports conflicts") {
  auto ok = load_program("#type p : i -> o. p(a).");
  REQUIRE(ok.ok());
  CHECK(ok.program->signature.predicates.at("p") ==
        ArgType::arrow(ArgType::iota(), ArgType::o()));

  auto bad = load_program("#type p : o. p(a).");
  CHECK_FALSE(bad.ok());
  REQUIRE_FALSE(bad.errors.empty());
  CHECK(bad.errors[0].code == "TypeConflict");
}

TEST_CASE("function symbols get arities, not predicate types") {
  auto res = load_program("p(f(X, a)) :- q(X). q(a).");
  REQUIRE(res.ok());
  const Program& p = *res.program;
  CHECK(p.signature.functions.at("f") == 2);
  CHECK(p.signature.predicates.count("f") == 0);
}

TEST_CASE("head function terms are desugared through equations") {
  auto res = load_program("q(a). p(f(X)) :- q(X).");
  REQUIRE(res.ok());
  const Clause& cl = res.program->clauses[1];
  REQUIRE(cl.formals.size() == 1);
  // fresh formal plus a leading equation against the original term
  CHECK(cl.formals[0].name.substr(0, 2) == "_G");
  REQUIRE_FALSE(cl.body.empty());
  CHECK(cl.body[0].kind() == ExprKind::Eq);
  CHECK(cl.body[0].str() == "_G0 = f(X)");
}

TEST_CASE("classification covers all four classes") {
  auto def = load_program("p(a).");
  REQUIRE(def.ok());
  CHECK(def.program->classification.cls == ProgramClass::Definitional);

  auto ext = load_program("p(a) :- Q(a).");
  REQUIRE(ext.ok());
  CHECK(ext.program->classification.cls == ProgramClass::Extended);
  REQUIRE(ext.program->classification.issues.size() == 1);
  CHECK(ext.program->classification.issues[0].str() == "ExtraBodyPredVar(Q)");

  auto hoa = load_program("P(a, b).");
  REQUIRE(hoa.ok());
  CHECK(hoa.program->classification.cls == ProgramClass::Hoapata);
  CHECK(hoa.program->classification.issues[0].str() == "PredVarHead(P)");

  auto rej = load_program("p(Q, Q) :- Q(a).");
  REQUIRE(rej.ok());
  CHECK(rej.program->classification.cls == ProgramClass::Rejected);
  CHECK(rej.program->classification.issues[0].str() == "RepeatedFormal(Q)");

  auto rej2 = load_program("q(a). r(q).");
  REQUIRE(rej2.ok());
  CHECK(rej2.program->classification.cls == ProgramClass::Rejected);
  CHECK(rej2.program->classification.issues[0].str() == "PredConstHeadArg(q)");
}

TEST_CASE("rejection outranks the other classes") {
  auto res = load_program("p(Q, Q) :- Q(a). r(a) :- S(a).");
  REQUIRE(res.ok());
  CHECK(res.program->classification.cls == ProgramClass::Rejected);
}

TEST_CASE("extra individual variables stay definitional") {
  auto res = load_program("q(a). p(X) :- q(Y).");
  REQUIRE(res.ok());
  CHECK(res.program->classification.cls == ProgramClass::Definitional);
  const Clause& cl = res.program->clauses[1];
  REQUIRE(cl.extra_ind_vars.size() == 1);
  CHECK(cl.extra_ind_vars[0].name == "Y");
  CHECK(cl.extra_ind_vars[0].type == ArgType::iota());
}

TEST_CASE("default constant keeps the universe nonempty") {
  auto res = load_program("p(X) :- q(X). q(Y) :- p(Y).");
  REQUIRE(res.ok());
  CHECK(res.program->signature.individual_constants ==
        std::vector<std::string>{"$u0"});
}

TEST_CASE("conflicting variable uses are diagnosed") {
  auto res = load_program("q(a). p(X) :- q(X), X(a).");
  CHECK_FALSE(res.ok());
  REQUIRE_FALSE(res.errors.empty());
  CHECK(res.errors[0].code == "TypeConflict");
}

TEST_CASE("variables of functional type are diagnosed") {
  auto res = load_program("q(a). p(F(a)) :- q(a).");
  CHECK_FALSE(res.ok());
  bool found = false;
  for (const auto& d : res.errors)
    found = found || d.code == "UnresolvedHigherOrderType";
  CHECK(found);
}
