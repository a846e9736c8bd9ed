#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hodef/ast.hpp"

namespace hodef {

struct Signature {
  std::vector<std::string> individual_constants;  // sorted, unique
  std::map<std::string, int> functions;           // name -> arity
  std::map<std::string, ArgType> predicates;      // name -> predicate type
};

// Findings that take a clause outside the definitional fragment.
enum class IssueCode : std::uint8_t {
  RepeatedFormal,     // a formal parameter occurs twice in the head
  PredConstHeadArg,   // a head argument of predicate type is not a variable
  ExtraBodyPredVar,   // a body predicate variable missing from the head
  PredVarHead,        // the head starts with a predicate variable
};

std::string issue_code_name(IssueCode code);

struct Issue {
  IssueCode code;
  std::string detail;
  std::size_t clause_index = 0;
  std::string str() const;  // e.g. "RepeatedFormal(Q)"
};

struct TypedVar {
  std::string name;
  ArgType type;
};

struct Clause {
  std::string head_pred;
  bool head_is_var = false;
  ArgType head_type;  // predicate type of the head symbol
  std::vector<TypedVar> formals;
  std::vector<Expr> body;  // expressions of type o
  // Body variables outside the formals, sorted by name.
  std::vector<TypedVar> extra_ind_vars;
  std::vector<TypedVar> extra_pred_vars;
  std::vector<Issue> issues;
  std::map<std::string, ArgType> var_types;  // every variable of the clause

  bool definitional() const { return issues.empty(); }
  Expr head_expr() const;  // head symbol applied to the formals
  std::string str() const;
};

enum class ProgramClass : std::uint8_t {
  Definitional,
  Extended,   // definitional except for extra body predicate variables
  Hoapata,    // additionally allows predicate-variable heads
  Rejected,
};

std::string program_class_name(ProgramClass cls);

struct Classification {
  ProgramClass cls = ProgramClass::Definitional;
  std::vector<Issue> issues;  // aggregated over all clauses
};

struct Program {
  Signature signature;
  std::vector<Clause> clauses;
  Classification classification;

  std::vector<std::size_t> clauses_for(const std::string& pred) const;
  std::string str() const;
};

// Derives the class from per-clause issues. Clause order never matters.
Classification classify(const Program& p);

}  // namespace hodef
