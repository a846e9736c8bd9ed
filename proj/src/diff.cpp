#include "hodef/diff.hpp"

#include <algorithm>
#include <iterator>

#include "hodef/infer.hpp"

namespace hodef {

CompareReport compare(const Program& p, int k, int kmax, bool extended,
                      const Caps& caps) {
  CompareReport rep;
  rep.cls = p.classification.cls;
  rep.depth = k;
  rep.kmax = kmax;
  rep.extended = extended;

  ActiveUniverse u(p, k, caps);
  DomainCache doms(u, caps);
  EvalContext ctx{&p, &u, &doms, extended, caps};
  LfpResult lfp = lfp_wadge(ctx);
  rep.wadge_iterations = lfp.iterations;
  GroundModel wm = ground_restrict(ctx, lfp.model);

  rep.rows.reserve(wm.scope.size());
  for (const Expr& atom : wm.scope)
    rep.rows.push_back({atom, wm.truth(atom), false, false, 0});

  std::vector<Expr> prev;
  for (int kk = k; kk <= kmax; ++kk) {
    ActiveUniverse uk(p, kk, caps);
    GroundModel gm = lfp_ground(ground_instantiation(p, uk, caps), uk, caps);
    for (AtomRow& row : rep.rows)
      if (!row.bezem_settled && gm.truth(row.atom)) {
        row.bezem_true = true;
        row.bezem_settled = true;
        row.settled_at = kk;
      }
    std::vector<Expr> cur;
    for (const Expr& atom : wm.scope)
      if (gm.true_atoms.count(atom)) cur.push_back(atom);
    if (kk > k && cur == prev) {
      for (AtomRow& row : rep.rows)
        if (!row.bezem_settled) {
          row.bezem_settled = true;  // window saturated, no derivation left
          row.settled_at = kk;
        }
      break;
    }
    prev = std::move(cur);
  }

  for (const AtomRow& row : rep.rows) {
    if (row.disagree()) ++rep.disagreements;
    if (!row.bezem_settled) ++rep.unsettled;
  }
  rep.forbidden =
      rep.cls == ProgramClass::Definitional && rep.disagreements > 0;
  return rep;
}

DivergenceReport divergence_suite(int k, int kmax, const Caps& caps) {
  DivergenceReport rep;
  rep.witness_source = "p(a) :- Q(a).\n";
  rep.control_source = "p(a) :- Q(a).\nq(a).\n";

  InferResult wr = load_program(rep.witness_source, "<witness>");
  InferResult cr = load_program(rep.control_source, "<control>");
  if (!wr.ok() || !cr.ok())
    throw std::logic_error("divergence sources failed to load");
  const Program& wp = *wr.program;
  const Program& cp = *cr.program;
  auto atom = [](const Program& p) {
    return Expr::app(Expr::pred_const("p", p.signature.predicates.at("p")),
                     Expr::ind_const("a"));
  };

  DeepenResult wd = lfp_deepening(wp, atom(wp), k, kmax, caps);
  rep.witness_bezem_false_settled = wd.settled && !wd.value;

  {
    ActiveUniverse u(wp, k, caps);
    DomainCache doms(u, caps);
    EvalContext ext{&wp, &u, &doms, true, caps};
    rep.witness_wadge_extended_true =
        eval_ground_atom(ext, lfp_wadge(ext).model, atom(wp));
    EvalContext plain{&wp, &u, &doms, false, caps};
    try {
      lfp_wadge(plain);
    } catch (const UnsupportedProgramError& e) {
      rep.witness_plain_rejection = e.code();
    }
  }

  DeepenResult cd = lfp_deepening(cp, atom(cp), k, kmax, caps);
  rep.control_bezem_true = cd.settled && cd.value;
  {
    ActiveUniverse u(cp, k, caps);
    DomainCache doms(u, caps);
    EvalContext ext{&cp, &u, &doms, true, caps};
    rep.control_wadge_extended_true =
        eval_ground_atom(ext, lfp_wadge(ext).model, atom(cp));
  }
  return rep;
}

bool check_semantic_extension(const Interp& deeper, const Interp& shallower) {
  for (const auto& [name, shallow] : shallower) {
    auto it = deeper.find(name);
    if (it == deeper.end()) return false;
    const SemValue& deep = it->second;
    switch (shallow.kind()) {
      case SemValue::Kind::Truth:
        if (shallow.truth_value() && !deep.truth_value()) return false;
        break;
      case SemValue::Kind::Rel:
        for (const Tuple& m : shallow.minimal_true())
          if (!rel_true(deep, m)) return false;
        break;
      case SemValue::Kind::Individual:
        if (shallow != deep) return false;
        break;
    }
  }
  return true;
}

namespace {

struct TypeChoice {
  const char* text;
  bool wide;  // the one shape whose domain blows past the cap at 3 constants
};

constexpr TypeChoice kTypePool[] = {
    {"i -> o", false},
    {"i -> i -> o", false},
    {"(i -> o) -> o", false},
    {"(i -> o) -> i -> o", false},
    {"(i -> o) -> (i -> o) -> o", true},
};

ArgType parse_pool_type(const std::string& text) {
  // Only the five pool shapes reach this; build them structurally.
  const ArgType io = ArgType::arrow(ArgType::iota(), ArgType::o());
  if (text == "i -> o") return io;
  if (text == "i -> i -> o") return ArgType::arrow(ArgType::iota(), io);
  if (text == "(i -> o) -> o") return ArgType::arrow(io, ArgType::o());
  if (text == "(i -> o) -> i -> o") return ArgType::arrow(io, io);
  return ArgType::arrow(io, ArgType::arrow(io, ArgType::o()));
}

}  // namespace

GeneratedProgram gen_program(std::uint64_t seed, const GenConfig& config) {
  std::mt19937_64 rng(seed);
  static const char* kConstNames[] = {"a", "b", "c"};

  for (int attempt = 0; attempt < config.max_attempts; ++attempt) {
    int n_const =
        1 + static_cast<int>(rng() % static_cast<unsigned>(config.max_constants));
    int n_pred = 1 + static_cast<int>(
                         rng() % static_cast<unsigned>(config.max_predicates));
    int n_clause =
        1 + static_cast<int>(rng() % static_cast<unsigned>(config.max_clauses));

    std::vector<std::string> pred_names;
    std::vector<ArgType> pred_types;
    std::string src;
    for (int i = 0; i < n_const; ++i)
      src += std::string("#type ") + kConstNames[i] + " : i.\n";
    for (int i = 0; i < n_pred; ++i) {
      const TypeChoice* pick;
      do {
        pick = &kTypePool[rng() % std::size(kTypePool)];
      } while (pick->wide && n_const > 2);
      pred_names.push_back("p" + std::to_string(i));
      pred_types.push_back(parse_pool_type(pick->text));
      src += "#type " + pred_names.back() + " : " + pick->text + ".\n";
    }

    for (int c = 0; c < n_clause; ++c) {
      int hp = static_cast<int>(rng() % static_cast<unsigned>(n_pred));
      std::vector<ArgType> flat = pred_types[hp].flat_args();

      // Formal list; i-typed slots occasionally take a constant instead,
      // which exercises head desugaring.
      std::vector<std::string> formal_names(flat.size());
      std::vector<std::string> head_args(flat.size());
      for (std::size_t i = 0; i < flat.size(); ++i) {
        formal_names[i] = "X" + std::to_string(i);
        if (flat[i].is_iota() && rng() % 4 == 0) {
          head_args[i] = kConstNames[rng() % static_cast<unsigned>(n_const)];
          formal_names[i].clear();  // not a variable, unusable in the body
        } else {
          head_args[i] = formal_names[i];
        }
      }

      int n_body = static_cast<int>(
          rng() % static_cast<unsigned>(config.max_body_atoms + 1));
      std::vector<std::string> body;
      int extra_ind = 0, extra_pred = 0;
      for (int b = 0; b < n_body; ++b) {
        // Callee: a predicate constant, a predicate-typed formal, or (rarely,
        // when allowed) a fresh predicate variable.
        std::string callee;
        ArgType callee_type = ArgType::o();
        if (config.allow_extra_pred_vars && rng() % 8 == 0) {
          callee = "Q" + std::to_string(extra_pred++);
          callee_type = pred_types[rng() % static_cast<unsigned>(n_pred)];
        } else if (rng() % 3 == 0) {
          std::vector<std::size_t> preds_among_formals;
          for (std::size_t i = 0; i < flat.size(); ++i)
            if (!flat[i].is_iota() && !formal_names[i].empty())
              preds_among_formals.push_back(i);
          if (!preds_among_formals.empty()) {
            std::size_t i =
                preds_among_formals[rng() % preds_among_formals.size()];
            callee = formal_names[i];
            callee_type = flat[i];
          }
        }
        if (callee.empty()) {
          int cp = static_cast<int>(rng() % static_cast<unsigned>(n_pred));
          callee = pred_names[cp];
          callee_type = pred_types[cp];
        }

        std::string atom = callee + "(";
        std::vector<ArgType> cargs = callee_type.flat_args();
        bool atom_ok = true;
        for (std::size_t i = 0; i < cargs.size() && atom_ok; ++i) {
          if (i) atom += ", ";
          if (cargs[i].is_iota()) {
            std::vector<std::string> fillers;
            for (std::size_t f = 0; f < flat.size(); ++f)
              if (flat[f].is_iota() && !formal_names[f].empty())
                fillers.push_back(formal_names[f]);
            if (rng() % 6 == 0)
              atom += "Y" + std::to_string(extra_ind++);
            else if (!fillers.empty() && rng() % 2 == 0)
              atom += fillers[rng() % fillers.size()];
            else
              atom += kConstNames[rng() % static_cast<unsigned>(n_const)];
          } else {
            std::vector<std::string> fillers;
            for (std::size_t f = 0; f < flat.size(); ++f)
              if (flat[f] == cargs[i] && !formal_names[f].empty())
                fillers.push_back(formal_names[f]);
            for (int pi = 0; pi < n_pred; ++pi)
              if (pred_types[pi] == cargs[i]) fillers.push_back(pred_names[pi]);
            if (fillers.empty())
              atom_ok = false;
            else
              atom += fillers[rng() % fillers.size()];
          }
        }
        if (!atom_ok) continue;  // no filler of the right type, drop the atom
        body.push_back(atom + ")");
      }

      std::string clause = pred_names[hp];
      if (!head_args.empty()) {
        clause += "(";
        for (std::size_t i = 0; i < head_args.size(); ++i) {
          if (i) clause += ", ";
          clause += head_args[i];
        }
        clause += ")";
      }
      if (!body.empty()) {
        clause += " :- ";
        for (std::size_t i = 0; i < body.size(); ++i) {
          if (i) clause += ", ";
          clause += body[i];
        }
      }
      src += clause + ".\n";
    }

    InferResult res = load_program(src, "<generated>");
    if (!res.ok()) continue;
    ProgramClass cls = res.program->classification.cls;
    if (cls != ProgramClass::Definitional &&
        !(config.allow_extra_pred_vars && cls == ProgramClass::Extended))
      continue;
    return {seed, src, std::move(*res.program)};
  }
  throw GenerationExhaustedError("no valid program after " +
                                 std::to_string(config.max_attempts) +
                                 " attempts for seed " + std::to_string(seed));
}

Expr sample_term(std::mt19937_64& rng, const ActiveUniverse& u,
                 const ArgType& type) {
  const std::vector<Expr>& ts = u.terms(type);
  if (ts.empty())
    throw GenerationExhaustedError("no ground terms of type " + type.str());
  return ts[rng() % ts.size()];
}

SemValue sample_value(std::mt19937_64& rng, DomainCache& doms,
                      const ArgType& type) {
  const std::vector<SemValue>& d = doms.domain(type);
  if (d.empty())
    throw GenerationExhaustedError("empty domain for type " + type.str());
  return d[rng() % d.size()];
}

Interp sample_interp(std::mt19937_64& rng, const Program& p,
                     DomainCache& doms) {
  Interp out;
  for (const auto& [name, ty] : p.signature.predicates)
    out.emplace(name, sample_value(rng, doms, ty));
  return out;
}

std::pair<Interp, Interp> sample_interp_leq(std::mt19937_64& rng,
                                            const Program& p,
                                            DomainCache& doms) {
  Interp lo = sample_interp(rng, p, doms);
  Interp hi;
  for (const auto& [name, value] : lo) {
    const std::vector<SemValue>& d =
        doms.domain(p.signature.predicates.at(name));
    std::vector<const SemValue*> above;
    for (const SemValue& v : d)
      if (leq(value, v)) above.push_back(&v);
    hi.emplace(name, *above[rng() % above.size()]);  // value itself is there
  }
  return {std::move(lo), std::move(hi)};
}

FuzzReport fuzz_equivalence(std::uint64_t first_seed, int seeds, int k,
                            int kmax, const GenConfig& config,
                            const Caps& caps) {
  FuzzReport rep;
  rep.seeds = seeds;
  for (int s = 0; s < seeds; ++s) {
    SeedResult r;
    r.seed = first_seed + static_cast<std::uint64_t>(s);
    try {
      GeneratedProgram g = gen_program(r.seed, config);
      r.source = g.source;
      const Program& p = g.program;
      ActiveUniverse u(p, k, caps);
      DomainCache doms(u, caps);
      bool ext = p.classification.cls == ProgramClass::Extended;
      EvalContext ctx{&p, &u, &doms, ext, caps};
      std::mt19937_64 rng(r.seed ^ 0x9e3779b97f4a7c15ULL);

      LfpResult lfp = lfp_wadge(ctx);
      if (!is_model(ctx, lfp.model)) r.failures.push_back("lfp_not_model");

      // Substitution lemma: evaluating an instantiated atom equals
      // evaluating the atom under the meanings of the instances.
      for (int t = 0; t < 8; ++t) {
        const Clause& cl = p.clauses[rng() % p.clauses.size()];
        std::vector<Expr> pool = cl.body;
        pool.push_back(cl.head_expr());
        const Expr& e = pool[rng() % pool.size()];
        std::map<std::string, ArgType> vars;
        e.collect_vars(vars);
        GroundSubst theta;
        Env env;
        bool feasible = true;
        for (const auto& [vn, ty] : vars) {
          if (u.terms(ty).empty()) {
            feasible = false;
            break;
          }
          Expr term = sample_term(rng, u, ty);
          theta.emplace(vn, term);
          env.emplace(vn, eval_expr(ctx, lfp.model, {}, term));
        }
        if (!feasible) continue;
        SemValue direct = eval_expr(ctx, lfp.model, {}, substitute(e, theta));
        SemValue via_env = eval_expr(ctx, lfp.model, env, e);
        if (direct != via_env) {
          r.failures.push_back("substitution_lemma");
          break;
        }
      }

      for (int t = 0; t < 4; ++t) {
        auto [lo, hi] = sample_interp_leq(rng, p, doms);
        if (!interp_leq(tp_step(ctx, lo), tp_step(ctx, hi))) {
          r.failures.push_back("tp_not_monotone");
          break;
        }
      }

      for (int t = 0; t < 8; ++t) {
        Interp m = sample_interp(rng, p, doms);
        if (is_model(ctx, m) && !interp_leq(lfp.model, m)) {
          r.failures.push_back("lfp_not_minimal");
          break;
        }
      }

      std::vector<GroundClause> gcs = ground_instantiation(p, u, caps);
      GroundModel gm = lfp_ground(gcs, u, caps);
      GroundModel gm2 = lfp_ground_naive(gcs, u, caps);
      if (gm.true_atoms != gm2.true_atoms)
        r.failures.push_back("worklist_naive_differ");
      if (!is_ground_model(gm, gcs).ok())
        r.failures.push_back("ground_lfp_not_model");

      CompareReport cr = compare(p, k, kmax, ext, caps);
      if (cr.disagreements > 0 && cr.cls == ProgramClass::Definitional)
        r.failures.push_back("settled_disagreement");
      GroundModel wm = ground_restrict(ctx, lfp.model);
      for (const Expr& atom : gm.true_in_scope())
        if (!wm.truth(atom)) {
          r.failures.push_back("ground_exceeds_denotational");
          break;
        }

      if (!check_prec_monotonicity(gm, u).ok())
        r.failures.push_back("prec_monotonicity");
      if (!check_extensionality(gm, u).ok())
        r.failures.push_back("extensionality");

      ActiveUniverse u2(p, k + 1, caps);
      DomainCache doms2(u2, caps);
      EvalContext ctx2{&p, &u2, &doms2, ext, caps};
      if (!check_semantic_extension(lfp_wadge(ctx2).model, lfp.model))
        r.failures.push_back("not_depth_monotone");
    } catch (const std::exception& e) {
      r.failures.push_back(std::string("exception: ") + e.what());
    }
    if (!r.ok()) ++rep.failed;
    rep.results.push_back(std::move(r));
  }
  return rep;
}

}  // namespace hodef
