#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hodef/ast.hpp"
#include "hodef/caps.hpp"
#include "hodef/program.hpp"

namespace hodef {

// Ground terms of every reachable type up to a tree depth bound. Leaves have
// depth 0, applications 1 + deepest child. The type set is the closure of
// {i, o}, the signature predicate types, and all clause variable types under
// taking argument and result of an arrow.
class ActiveUniverse {
 public:
  ActiveUniverse(const Program& p, int depth, const Caps& caps = {});

  int depth() const { return depth_; }
  std::vector<ArgType> types() const;  // sorted
  bool has_type(const ArgType& t) const { return terms_.count(t) != 0; }
  // Sorted canonical list; empty for types outside the closure.
  const std::vector<Expr>& terms(const ArgType& t) const;
  // Every o-typed ground term of depth <= depth()+1, sorted. One application
  // step past the bound, so heads built from bound-depth arguments are here.
  std::vector<Expr> atoms() const;
  std::int64_t total_terms() const { return total_; }

 private:
  int depth_;
  std::map<ArgType, std::vector<Expr>> terms_;
  std::int64_t total_ = 0;
};

using GroundSubst = std::map<std::string, Expr>;

struct GroundClause {
  Expr head;               // ground atom
  std::vector<Expr> body;  // ground atoms; equations already decided

  int compare(const GroundClause& other) const;
  bool operator==(const GroundClause& other) const { return compare(other) == 0; }
  bool operator<(const GroundClause& other) const { return compare(other) < 0; }
  std::string str() const;
};

// Every ground instance of p over u's terms, all variables included, sorted
// and duplicate-free. Ground equations are decided on the spot: true ones are
// dropped from the body, false ones drop the whole instance.
std::vector<GroundClause> ground_instantiation(const Program& p,
                                               const ActiveUniverse& u,
                                               const Caps& caps = {});

}  // namespace hodef
