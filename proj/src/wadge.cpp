#include "hodef/wadge.hpp"

#include <algorithm>

namespace hodef {

namespace {

// Odometer over per-slot value lists; empty slot list means zero assignments.
class Assignments {
 public:
  explicit Assignments(std::vector<const std::vector<SemValue>*> slots)
      : slots_(std::move(slots)), idx_(slots_.size(), 0) {
    for (const auto* s : slots_) live_ = live_ && !s->empty();
  }

  bool live() const { return live_; }
  const SemValue& at(std::size_t i) const { return (*slots_[i])[idx_[i]]; }

  bool advance() {
    for (std::size_t j = 0; j < idx_.size(); ++j) {
      if (++idx_[j] < slots_[j]->size()) return true;
      idx_[j] = 0;
    }
    return false;
  }

 private:
  std::vector<const std::vector<SemValue>*> slots_;
  std::vector<std::size_t> idx_;
  bool live_ = true;
};

bool body_true(const EvalContext& ctx, const Interp& interp, const Env& env,
               const Clause& cl) {
  for (const Expr& b : cl.body)
    if (!eval_expr(ctx, interp, env, b).truth_value()) return false;
  return true;
}

// Existential closure of the body over the clause's extra variables.
bool body_exists(const EvalContext& ctx, const Interp& interp, Env env,
                 const Clause& cl) {
  std::vector<std::string> names;
  std::vector<const std::vector<SemValue>*> slots;
  for (const TypedVar& v : cl.extra_ind_vars) {
    names.push_back(v.name);
    slots.push_back(&ctx.doms->domain(v.type));
  }
  for (const TypedVar& v : cl.extra_pred_vars) {
    if (!ctx.extended)
      throw UnsupportedProgramError("ExtraBodyPredVar", v.name);
    names.push_back(v.name);
    slots.push_back(&ctx.doms->domain(v.type));
  }
  Assignments a(std::move(slots));
  if (!a.live()) return false;
  if (names.empty()) return body_true(ctx, interp, env, cl);
  do {
    for (std::size_t i = 0; i < names.size(); ++i)
      env.insert_or_assign(names[i], a.at(i));
    if (body_true(ctx, interp, env, cl)) return true;
  } while (a.advance());
  return false;
}

}  // namespace

bool interp_leq(const Interp& a, const Interp& b) {
  for (const auto& [name, value] : a) {
    auto it = b.find(name);
    if (it == b.end() || !leq(value, it->second)) return false;
  }
  return true;
}

SemValue eval_expr(const EvalContext& ctx, const Interp& interp,
                   const Env& env, const Expr& e) {
  switch (e.kind()) {
    case ExprKind::IndConst:
      return SemValue::individual(e);
    case ExprKind::IndVar:
    case ExprKind::PredVar: {
      auto it = env.find(e.name());
      if (it == env.end()) throw UnboundVariableError(e.name());
      return it->second;
    }
    case ExprKind::FunApp: {
      if (e.is_ground()) return SemValue::individual(e);
      std::vector<Expr> args;
      args.reserve(e.args().size());
      for (const Expr& a : e.args())
        args.push_back(eval_expr(ctx, interp, env, a).ind());
      return SemValue::individual(Expr::fun_app(e.name(), std::move(args)));
    }
    case ExprKind::PredConst: {
      auto it = interp.find(e.name());
      if (it == interp.end())
        throw TypeMismatchError("predicate " + e.name() +
                                " missing from interpretation");
      return it->second;
    }
    case ExprKind::App:
      return apply(eval_expr(ctx, interp, env, e.fun()),
                   eval_expr(ctx, interp, env, e.arg()));
    case ExprKind::Eq:
      return SemValue::truth(eval_expr(ctx, interp, env, e.args()[0]).ind() ==
                             eval_expr(ctx, interp, env, e.args()[1]).ind());
  }
  throw TypeMismatchError("malformed expression");
}

Interp bottom_interp(const EvalContext& ctx) {
  Interp out;
  for (const auto& [name, ty] : ctx.program->signature.predicates)
    out.emplace(name, bottom_value(ty));
  return out;
}

Interp tp_step(const EvalContext& ctx, const Interp& interp) {
  Interp out;
  for (const auto& [name, ty] : ctx.program->signature.predicates) {
    std::vector<std::size_t> defs = ctx.program->clauses_for(name);
    if (ty.is_o()) {
      bool val = false;
      for (std::size_t ci : defs) {
        if (body_exists(ctx, interp, {}, ctx.program->clauses[ci])) {
          val = true;
          break;
        }
      }
      out.emplace(name, SemValue::truth(val));
      continue;
    }
    std::vector<ArgType> flat = ty.flat_args();
    std::vector<const std::vector<SemValue>*> slots;
    for (const ArgType& a : flat) slots.push_back(&ctx.doms->domain(a));
    std::vector<Tuple> true_tuples;
    Assignments tuple(std::move(slots));
    if (tuple.live() && !defs.empty()) {
      do {
        for (std::size_t ci : defs) {
          const Clause& cl = ctx.program->clauses[ci];
          Env env;
          for (std::size_t i = 0; i < cl.formals.size(); ++i)
            env.emplace(cl.formals[i].name, tuple.at(i));
          if (body_exists(ctx, interp, std::move(env), cl)) {
            Tuple t;
            t.reserve(flat.size());
            for (std::size_t i = 0; i < flat.size(); ++i)
              t.push_back(tuple.at(i));
            true_tuples.push_back(std::move(t));
            break;
          }
        }
      } while (tuple.advance());
    }
    out.emplace(name, SemValue::rel(std::move(flat), std::move(true_tuples)));
  }
  return out;
}

LfpResult lfp_wadge(const EvalContext& ctx) {
  const Classification& cls = ctx.program->classification;
  if (cls.cls == ProgramClass::Rejected) {
    for (const Issue& issue : cls.issues)
      if (issue.code == IssueCode::RepeatedFormal ||
          issue.code == IssueCode::PredConstHeadArg)
        throw UnsupportedProgramError(issue_code_name(issue.code),
                                      issue.detail);
  }
  if (cls.cls == ProgramClass::Hoapata) {
    for (const Issue& issue : cls.issues)
      if (issue.code == IssueCode::PredVarHead)
        throw UnsupportedProgramError(issue_code_name(issue.code),
                                      issue.detail);
  }
  if (cls.cls == ProgramClass::Extended && !ctx.extended) {
    for (const Issue& issue : cls.issues)
      if (issue.code == IssueCode::ExtraBodyPredVar)
        throw UnsupportedProgramError(issue_code_name(issue.code),
                                      issue.detail);
  }

  LfpResult res;
  Interp cur = bottom_interp(ctx);
  res.steps.push_back(cur);
  while (true) {
    if (res.iterations > ctx.caps.lfp_iterations)
      throw IterationCapError("fixed point exceeded " +
                              std::to_string(ctx.caps.lfp_iterations) +
                              " iterations");
    Interp next = tp_step(ctx, cur);
    if (next == cur) break;
    ++res.iterations;
    res.steps.push_back(next);
    cur = std::move(next);
  }
  res.model = std::move(cur);
  return res;
}

bool is_model(const EvalContext& ctx, const Interp& interp) {
  for (const Clause& cl : ctx.program->clauses) {
    if (cl.head_is_var)
      throw UnsupportedProgramError("PredVarHead", cl.head_pred);
    std::vector<std::string> names;
    std::vector<const std::vector<SemValue>*> slots;
    for (const TypedVar& v : cl.formals) {
      names.push_back(v.name);
      slots.push_back(&ctx.doms->domain(v.type));
    }
    for (const TypedVar& v : cl.extra_ind_vars) {
      names.push_back(v.name);
      slots.push_back(&ctx.doms->domain(v.type));
    }
    for (const TypedVar& v : cl.extra_pred_vars) {
      if (!ctx.extended)
        throw UnsupportedProgramError("ExtraBodyPredVar", v.name);
      names.push_back(v.name);
      slots.push_back(&ctx.doms->domain(v.type));
    }
    const SemValue& head_val = interp.at(cl.head_pred);
    Assignments a(std::move(slots));
    if (!a.live()) continue;
    do {
      Env env;
      for (std::size_t i = 0; i < names.size(); ++i)
        env.emplace(names[i], a.at(i));
      if (!body_true(ctx, interp, env, cl)) continue;
      if (cl.formals.empty()) {
        if (!head_val.truth_value()) return false;
        continue;
      }
      Tuple t;
      t.reserve(cl.formals.size());
      for (std::size_t i = 0; i < cl.formals.size(); ++i)
        t.push_back(env.at(cl.formals[i].name));
      if (!rel_true(head_val, t)) return false;
    } while (a.advance());
  }
  return true;
}

bool eval_ground_atom(const EvalContext& ctx, const Interp& interp,
                      const Expr& atom) {
  return eval_expr(ctx, interp, {}, atom).truth_value();
}

GroundModel ground_restrict(const EvalContext& ctx, const Interp& interp) {
  GroundModel m;
  m.depth = ctx.universe->depth();
  m.scope = ctx.universe->atoms();
  for (const Expr& atom : m.scope)
    if (eval_ground_atom(ctx, interp, atom)) m.true_atoms.insert(atom);
  return m;
}

}  // namespace hodef
