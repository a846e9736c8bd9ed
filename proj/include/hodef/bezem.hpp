#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hodef/ast.hpp"
#include "hodef/caps.hpp"
#include "hodef/program.hpp"
#include "hodef/universe.hpp"

namespace hodef {

// Truth assignment over ground atoms. scope is the atom window of the depth
// bound it was computed at; true_atoms may reach past it, since instantiated
// heads apply one step deeper than their arguments. Equations are not stored:
// their truth is fixed by syntactic identity.
struct GroundModel {
  int depth = 0;
  std::vector<Expr> scope;  // sorted
  std::set<Expr> true_atoms;

  bool truth(const Expr& atom) const;
  bool in_scope(const Expr& atom) const;
  std::vector<Expr> true_in_scope() const;  // sorted
};

// Least fixed point of the ground clause set, by unit propagation over a
// worklist. Linear in total body size.
GroundModel lfp_ground(const std::vector<GroundClause>& clauses,
                       const ActiveUniverse& u, const Caps& caps = {});

// Same fixed point by round-based resaturation. Kept as an independent
// implementation to cross-check lfp_ground.
GroundModel lfp_ground_naive(const std::vector<GroundClause>& clauses,
                             const ActiveUniverse& u, const Caps& caps = {});

struct DeepenResult {
  bool value = false;
  bool settled = false;  // proven at some rung, or window went stable
  int depth_reached = 0; // rung that decided it, else the last one tried
  std::int64_t ground_clauses = 0;  // at the deciding rung
};

// Bounded proof search for one atom: ground and saturate at k0, k0+1, ...,
// kmax. A derivation settles true. False settles once the truth of the whole
// k0 window stops changing between consecutive rungs; past kmax the result
// stays unsettled. The atom must lie in the k0 window.
DeepenResult lfp_deepening(const Program& p, const Expr& atom, int k0,
                           int kmax, const Caps& caps = {});

struct GroundModelCheck {
  std::vector<std::size_t> violations;  // clause indices, head false body true
  std::int64_t skipped = 0;             // clauses touching atoms out of scope
  std::int64_t checked = 0;
  bool ok() const { return violations.empty(); }
};

// Model property of m over the clause set, confined to m's scope.
GroundModelCheck is_ground_model(const GroundModel& m,
                                 const std::vector<GroundClause>& clauses);

// Bounded pointwise order on ground terms of one type: individuals compare
// syntactically, o-typed terms by truth in the model, arrow-typed terms
// pointwise over every bounded argument. Application results deeper than the
// term bound are skipped and counted, not judged.
struct PrecRelation {
  ArgType type;
  std::vector<Expr> terms;        // sorted, the bounded universe of the type
  std::vector<char> table;        // row-major, terms[i] before terms[j]
  std::int64_t skipped = 0;

  bool prec(std::size_t i, std::size_t j) const;
  bool prec_terms(const Expr& a, const Expr& b) const;
};

class PrecTable {
 public:
  PrecTable(const GroundModel& m, const ActiveUniverse& u);
  const PrecRelation& at(const ArgType& t);

 private:
  const GroundModel* m_;
  const ActiveUniverse* u_;
  std::map<ArgType, PrecRelation> rels_;
};

struct PrecMonotonicityReport {
  std::int64_t checked = 0;
  std::int64_t skipped = 0;
  std::vector<std::string> violations;  // rendered "E(D) vs E'(D')"
  bool ok() const { return violations.empty(); }
};

// Application respects the bounded order: E before E' and D before D' force
// E(D) no higher than E'(D') wherever both sides stay within bounds.
PrecMonotonicityReport check_prec_monotonicity(const GroundModel& m,
                                               const ActiveUniverse& u);

struct ExtensionalityReport {
  std::int64_t checked = 0;
  std::int64_t skipped = 0;
  std::vector<std::string> violations;  // rendered "atom with t ~ t'"
  bool ok() const { return violations.empty(); }
};

// Order-equivalent arguments are interchangeable inside true atoms, as far
// as the replaced atom stays within the model's scope.
ExtensionalityReport check_extensionality(const GroundModel& m,
                                          const ActiveUniverse& u);

}  // namespace hodef
