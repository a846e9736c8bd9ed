#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hodef/bezem.hpp"
#include "hodef/caps.hpp"
#include "hodef/program.hpp"
#include "hodef/wadge.hpp"

namespace hodef {

struct AtomRow {
  Expr atom;
  bool wadge_true = false;
  bool bezem_true = false;
  bool bezem_settled = false;
  int settled_at = 0;  // rung that decided the ground side, when settled

  bool disagree() const { return bezem_settled && wadge_true != bezem_true; }
};

struct CompareReport {
  ProgramClass cls = ProgramClass::Definitional;
  int depth = 0;
  int kmax = 0;
  bool extended = false;
  int wadge_iterations = 0;
  std::vector<AtomRow> rows;  // the whole depth-k atom window, sorted
  std::int64_t disagreements = 0;
  std::int64_t unsettled = 0;
  // A settled disagreement on a definitional program. The two semantics agree
  // there; this flag turning up means a bug, and callers treat it as fatal.
  bool forbidden = false;
};

// Both semantics tabulated over the depth-k atom window. The ground side
// shares one deepening ladder up to kmax across all atoms: an atom settles
// true at its first derivation, false when the window saturates.
CompareReport compare(const Program& p, int k, int kmax, bool extended,
                      const Caps& caps = {});

// The documented split between the two semantics on the minimal witness
//   p(a) :- Q(a).
// where Q ranges semantically on one side and syntactically on the other,
// plus a control program with a syntactic witness, where both sides agree.
struct DivergenceReport {
  std::string witness_source;
  std::string control_source;
  bool witness_bezem_false_settled = false;
  bool witness_wadge_extended_true = false;
  std::string witness_plain_rejection;  // error code from the plain engine
  bool control_bezem_true = false;
  bool control_wadge_extended_true = false;

  bool ok() const {
    return witness_bezem_false_settled && witness_wadge_extended_true &&
           witness_plain_rejection == "ExtraBodyPredVar" &&
           control_bezem_true && control_wadge_extended_true;
  }
};

DivergenceReport divergence_suite(int k, int kmax, const Caps& caps = {});

// Pointwise domination of a shallower model by one computed over a deeper
// universe. Shallow values embed into the deeper domains as-is, so this is
// rel_true of the deep value over every shallow minimal tuple.
bool check_semantic_extension(const Interp& deeper, const Interp& shallower);

struct GenConfig {
  int max_constants = 3;
  int max_predicates = 4;
  int max_clauses = 4;
  int max_body_atoms = 3;
  bool allow_extra_pred_vars = false;  // extended-class programs
  int max_attempts = 64;
};

struct GeneratedProgram {
  std::uint64_t seed = 0;
  std::string source;
  Program program;
};

// Deterministic random well-typed program: emits source text with full type
// annotations, then reloads it through the parser and type checker. Bodies
// are flat (variables and constants in argument positions) and function-free,
// which keeps every bounded check below exact.
GeneratedProgram gen_program(std::uint64_t seed, const GenConfig& config = {});

struct SeedResult {
  std::uint64_t seed = 0;
  std::string source;
  std::vector<std::string> failures;  // one line per violated property
  bool ok() const { return failures.empty(); }
};

struct FuzzReport {
  int seeds = 0;
  int failed = 0;
  std::vector<SeedResult> results;
  bool ok() const { return failed == 0; }
};

// Property suite over generated programs: substitution lemma, step
// monotonicity, the fixed point being a minimal model, semantic agreement
// with the ground side, ground-model cross-checks, bounded order
// monotonicity, extensionality, and depth extension.
FuzzReport fuzz_equivalence(std::uint64_t first_seed, int seeds, int k,
                            int kmax, const GenConfig& config = {},
                            const Caps& caps = {});

// Samplers shared by the property suite and the tests. All draws use modulo
// reduction so results are identical across standard libraries.
Expr sample_term(std::mt19937_64& rng, const ActiveUniverse& u,
                 const ArgType& type);
SemValue sample_value(std::mt19937_64& rng, DomainCache& doms,
                      const ArgType& type);
Interp sample_interp(std::mt19937_64& rng, const Program& p,
                     DomainCache& doms);
// A comparable pair: second dominates the first.
std::pair<Interp, Interp> sample_interp_leq(std::mt19937_64& rng,
                                            const Program& p,
                                            DomainCache& doms);

}  // namespace hodef
