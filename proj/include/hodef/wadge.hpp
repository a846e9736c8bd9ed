#pragma once

#include <map>
#include <string>
#include <vector>

#include "hodef/bezem.hpp"
#include "hodef/caps.hpp"
#include "hodef/domains.hpp"
#include "hodef/program.hpp"
#include "hodef/universe.hpp"

namespace hodef {

// Denotational interpretation: one domain point per signature predicate.
using Interp = std::map<std::string, SemValue>;
using Env = std::map<std::string, SemValue>;

bool interp_leq(const Interp& a, const Interp& b);

struct EvalContext {
  const Program* program;
  const ActiveUniverse* universe;
  DomainCache* doms;
  bool extended = false;  // let body predicate variables range existentially
  Caps caps;
};

// Compositional term evaluation: constants denote themselves, variables read
// the environment, function applications build terms, predicate constants
// read the interpretation, applications apply, equations compare individuals.
SemValue eval_expr(const EvalContext& ctx, const Interp& interp,
                   const Env& env, const Expr& e);

Interp bottom_interp(const EvalContext& ctx);

// One step of the immediate-consequence operator. Extra individual variables
// are existential over the bounded universe; extra predicate variables are
// existential over the enumerated domain and need extended mode.
Interp tp_step(const EvalContext& ctx, const Interp& interp);

struct LfpResult {
  Interp model;
  int iterations = 0;            // steps that changed the interpretation
  std::vector<Interp> steps;     // bottom first, fixed point last
};

// Kleene iteration to the least fixed point. Rejects programs outside the
// engine's class with UnsupportedProgramError: any rejected program, any
// predicate-variable head, and extra body predicate variables unless
// extended mode is on.
LfpResult lfp_wadge(const EvalContext& ctx);

// Every clause holds under every assignment of its variables, extras
// included. Universal where tp_step is existential.
bool is_model(const EvalContext& ctx, const Interp& interp);

bool eval_ground_atom(const EvalContext& ctx, const Interp& interp,
                      const Expr& atom);

// Truth table of the interpretation over the universe's atom window.
GroundModel ground_restrict(const EvalContext& ctx, const Interp& interp);

}  // namespace hodef
