#include "hodef/infer.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace hodef {

namespace {

using parser::Diag;
using parser::RawClause;
using parser::RawProgram;
using parser::RawTerm;
using parser::RawType;

// Union-find over type nodes. Monomorphic: one node per symbol, one per
// clause-local variable. Functional shapes (arrows ending in i) are
// representable here and sorted out during classification.
class TypeGraph {
 public:
  enum class Kind : std::uint8_t { Var, Iota, O, Arrow };

  int fresh_var() { return add(Kind::Var, -1, -1); }
  int mk_iota() { return add(Kind::Iota, -1, -1); }
  int mk_o() { return add(Kind::O, -1, -1); }
  int mk_arrow(int a, int b) { return add(Kind::Arrow, a, b); }

  int from_raw(const RawType& t) {
    switch (t.kind) {
      case RawType::Kind::I:
        return mk_iota();
      case RawType::Kind::O:
        return mk_o();
      case RawType::Kind::Arrow:
        return mk_arrow(from_raw(t.parts[0]), from_raw(t.parts[1]));
    }
    return mk_iota();
  }

  int find(int x) const {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  Kind kind(int x) const { return nodes_[find(x)].kind; }
  int left(int x) const { return nodes_[find(x)].a; }
  int right(int x) const { return nodes_[find(x)].b; }

  bool unify(int a, int b, std::size_t pos, std::vector<Diag>& errs) {
    a = find(a);
    b = find(b);
    if (a == b) return true;
    Kind ka = nodes_[a].kind, kb = nodes_[b].kind;
    if (ka == Kind::Var) {
      if (occurs(a, b)) {
        errs.push_back({"TypeConflict", "infinite type in application", pos});
        return false;
      }
      parent_[a] = b;
      return true;
    }
    if (kb == Kind::Var) return unify(b, a, pos, errs);
    if (ka != kb) {
      errs.push_back({"TypeConflict",
                      "type mismatch: " + str(a) + " vs " + str(b), pos});
      return false;
    }
    if (ka == Kind::Arrow) {
      int a1 = nodes_[a].a, a2 = nodes_[a].b;
      int b1 = nodes_[b].a, b2 = nodes_[b].b;
      parent_[a] = b;  // link before descending, keeps cycles finite
      bool ok = unify(a1, b1, pos, errs);
      ok = unify(a2, b2, pos, errs) && ok;
      return ok;
    }
    parent_[a] = b;
    return true;
  }

  // Remaining free slots default to i.
  void default_vars() {
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      int r = find(static_cast<int>(i));
      if (nodes_[r].kind == Kind::Var) nodes_[r].kind = Kind::Iota;
    }
  }

  // Concrete ArgType, or nullopt for functional / mixed shapes.
  std::optional<ArgType> to_argtype(int x) const {
    x = find(x);
    switch (nodes_[x].kind) {
      case Kind::Iota:
        return ArgType::iota();
      case Kind::O:
        return ArgType::o();
      case Kind::Arrow: {
        auto lhs = to_argtype(nodes_[x].a);
        auto rhs = to_argtype(nodes_[x].b);
        if (!lhs || !rhs || !rhs->is_predicate()) return std::nullopt;
        return ArgType::arrow(*lhs, *rhs);
      }
      case Kind::Var:
        return std::nullopt;
    }
    return std::nullopt;
  }

  // Arity n for the shape i -> ... -> i (n >= 1 arrows, all i), else nullopt.
  std::optional<int> func_arity(int x) const {
    int n = 0;
    x = find(x);
    while (nodes_[x].kind == Kind::Arrow) {
      if (kind(nodes_[x].a) != Kind::Iota) return std::nullopt;
      ++n;
      x = find(nodes_[x].b);
    }
    if (n >= 1 && nodes_[x].kind == Kind::Iota) return n;
    return std::nullopt;
  }

  std::string str(int x) const {
    x = find(x);
    switch (nodes_[x].kind) {
      case Kind::Var:
        return "?";
      case Kind::Iota:
        return "i";
      case Kind::O:
        return "o";
      case Kind::Arrow: {
        std::string lhs = str(nodes_[x].a);
        if (kind(nodes_[x].a) == Kind::Arrow) lhs = "(" + lhs + ")";
        return lhs + " -> " + str(nodes_[x].b);
      }
    }
    return "?";
  }

 private:
  struct Node {
    Kind kind;
    int a, b;  // Arrow children
  };

  int add(Kind k, int a, int b) {
    nodes_.push_back({k, a, b});
    parent_.push_back(static_cast<int>(nodes_.size()) - 1);
    return static_cast<int>(nodes_.size()) - 1;
  }

  bool occurs(int v, int t) const {
    t = find(t);
    if (t == v) return true;
    if (nodes_[t].kind != Kind::Arrow) return false;
    return occurs(v, nodes_[t].a) || occurs(v, nodes_[t].b);
  }

  std::vector<Node> nodes_;
  mutable std::vector<int> parent_;
};

struct SymbolInfo {
  enum class Kind : std::uint8_t { Ind, Fun, Pred };
  Kind kind = Kind::Ind;
  int arity = 0;      // Fun only
  ArgType type;       // Pred only
};

class Inferencer {
 public:
  explicit Inferencer(const RawProgram& raw) : raw_(raw) {}

  InferResult run() {
    gather_constraints();
    if (!errs_.empty()) return {std::nullopt, errs_};
    graph_.default_vars();
    classify_symbols();
    classify_clause_vars();
    if (!errs_.empty()) return {std::nullopt, errs_};
    Program p;
    build_signature(p);
    for (std::size_t ci = 0; ci < raw_.clauses.size(); ++ci)
      build_clause(p, raw_.clauses[ci], ci);
    if (!errs_.empty()) return {std::nullopt, errs_};
    p.classification = classify(p);
    return {std::move(p), errs_};
  }

 private:
  int symbol_node(const std::string& name, std::size_t pos) {
    auto it = sym_node_.find(name);
    if (it != sym_node_.end()) return it->second;
    int n = graph_.fresh_var();
    sym_node_.emplace(name, n);
    sym_pos_.emplace(name, pos);
    return n;
  }

  int var_node(const std::string& name, std::size_t pos) {
    auto it = var_node_.find(name);
    if (it != var_node_.end()) return it->second;
    int n = graph_.fresh_var();
    var_node_.emplace(name, n);
    var_pos_.emplace(name, pos);
    return n;
  }

  // Node of the term; applications constrain the callee one argument at a
  // time, so grouped and curried arglists solve identically.
  int gen(const RawTerm& t) {
    switch (t.kind) {
      case RawTerm::Kind::Var:
        return var_node(t.name, t.pos);
      case RawTerm::Kind::Name:
        return symbol_node(t.name, t.pos);
      case RawTerm::Kind::Apply: {
        int cur = t.callee_is_var ? var_node(t.name, t.pos)
                                  : symbol_node(t.name, t.pos);
        for (const RawTerm* arg : t.flat_args()) {
          int an = gen(*arg);
          int res = graph_.fresh_var();
          graph_.unify(cur, graph_.mk_arrow(an, res), arg->pos, errs_);
          cur = res;
        }
        return cur;
      }
      case RawTerm::Kind::Eq: {
        graph_.unify(gen(t.eq[0]), graph_.mk_iota(), t.eq[0].pos, errs_);
        graph_.unify(gen(t.eq[1]), graph_.mk_iota(), t.eq[1].pos, errs_);
        return graph_.mk_o();
      }
    }
    return graph_.fresh_var();
  }

  void gather_constraints() {
    for (const auto& d : raw_.decls) {
      int s = symbol_node(d.name, d.pos);
      graph_.unify(s, graph_.from_raw(d.type), d.pos, errs_);
    }
    for (const auto& c : raw_.clauses) {
      var_node_.clear();
      var_pos_.clear();
      graph_.unify(gen(c.head), graph_.mk_o(), c.head.pos, errs_);
      for (const auto& b : c.body)
        if (b.kind != RawTerm::Kind::Eq)
          graph_.unify(gen(b), graph_.mk_o(), b.pos, errs_);
        else
          gen(b);
      clause_vars_.push_back(var_node_);
    }
  }

  void classify_symbols() {
    for (const auto& [name, node] : sym_node_) {
      SymbolInfo info;
      if (graph_.kind(node) == TypeGraph::Kind::Iota) {
        info.kind = SymbolInfo::Kind::Ind;
      } else if (auto arity = graph_.func_arity(node)) {
        info.kind = SymbolInfo::Kind::Fun;
        info.arity = *arity;
      } else if (auto ty = graph_.to_argtype(node)) {
        info.kind = SymbolInfo::Kind::Pred;
        info.type = *ty;
      } else {
        errs_.push_back({"UnresolvedHigherOrderType",
                         "symbol " + name + " has unsupported type " +
                             graph_.str(node),
                         sym_pos_.at(name)});
        continue;
      }
      symbols_.emplace(name, info);
    }
  }

  void classify_clause_vars() {
    for (std::size_t ci = 0; ci < raw_.clauses.size(); ++ci) {
      for (const auto& [name, node] : clause_vars_[ci]) {
        if (graph_.kind(node) == TypeGraph::Kind::Iota) continue;
        if (auto ty = graph_.to_argtype(node); ty && ty->is_predicate())
          continue;
        errs_.push_back({"UnresolvedHigherOrderType",
                         "variable " + name + " has unsupported type " +
                             graph_.str(node),
                         raw_.clauses[ci].pos});
      }
    }
  }

  void build_signature(Program& p) {
    for (const auto& [name, info] : symbols_) {
      switch (info.kind) {
        case SymbolInfo::Kind::Ind:
          p.signature.individual_constants.push_back(name);
          break;
        case SymbolInfo::Kind::Fun:
          p.signature.functions.emplace(name, info.arity);
          break;
        case SymbolInfo::Kind::Pred:
          p.signature.predicates.emplace(name, info.type);
          break;
      }
    }
    std::sort(p.signature.individual_constants.begin(),
              p.signature.individual_constants.end());
    if (p.signature.individual_constants.empty())
      p.signature.individual_constants.push_back("$u0");  // keeps U_i nonempty
  }

  ArgType var_type(std::size_t ci, const std::string& name) const {
    int node = clause_vars_[ci].at(name);
    if (graph_.kind(node) == TypeGraph::Kind::Iota) return ArgType::iota();
    return *graph_.to_argtype(node);
  }

  std::optional<Expr> to_expr(std::size_t ci, const RawTerm& t) {
    switch (t.kind) {
      case RawTerm::Kind::Var: {
        ArgType ty = var_type(ci, t.name);
        return ty.is_iota() ? Expr::ind_var(t.name)
                            : Expr::pred_var(t.name, ty);
      }
      case RawTerm::Kind::Name:
        return name_expr(t);
      case RawTerm::Kind::Apply: {
        std::vector<const RawTerm*> args = t.flat_args();
        if (!t.callee_is_var) {
          const SymbolInfo& info = symbols_.at(t.name);
          if (info.kind == SymbolInfo::Kind::Fun)
            return fun_expr(ci, t, info, args);
        }
        std::optional<Expr> cur =
            t.callee_is_var
                ? std::optional<Expr>(
                      Expr::pred_var(t.name, var_type(ci, t.name)))
                : name_expr(t);
        for (const RawTerm* arg : args) {
          auto ae = to_expr(ci, *arg);
          if (!cur || !ae) return std::nullopt;
          cur = Expr::app(*cur, *ae);
        }
        return cur;
      }
      case RawTerm::Kind::Eq: {
        auto lhs = to_expr(ci, t.eq[0]);
        auto rhs = to_expr(ci, t.eq[1]);
        if (!lhs || !rhs) return std::nullopt;
        return Expr::eq(*lhs, *rhs);
      }
    }
    return std::nullopt;
  }

  std::optional<Expr> name_expr(const RawTerm& t) {
    const SymbolInfo& info = symbols_.at(t.name);
    switch (info.kind) {
      case SymbolInfo::Kind::Ind:
        return Expr::ind_const(t.name);
      case SymbolInfo::Kind::Pred:
        return Expr::pred_const(t.name, info.type);
      case SymbolInfo::Kind::Fun:
        errs_.push_back({"ArityMismatch",
                         "function symbol " + t.name +
                             " needs " + std::to_string(info.arity) +
                             " arguments",
                         t.pos});
        return std::nullopt;
    }
    return std::nullopt;
  }

  std::optional<Expr> fun_expr(std::size_t ci, const RawTerm& t,
                               const SymbolInfo& info,
                               const std::vector<const RawTerm*>& args) {
    if (static_cast<int>(args.size()) != info.arity) {
      errs_.push_back({"ArityMismatch",
                       "function symbol " + t.name + " needs " +
                           std::to_string(info.arity) + " arguments, got " +
                           std::to_string(args.size()),
                       t.pos});
      return std::nullopt;
    }
    std::vector<Expr> sub;
    for (const RawTerm* arg : args) {
      auto ae = to_expr(ci, *arg);
      if (!ae) return std::nullopt;
      sub.push_back(*ae);
    }
    return Expr::fun_app(t.name, std::move(sub));
  }

  void build_clause(Program& p, const RawClause& rc, std::size_t ci) {
    Clause cl;
    const RawTerm& head = rc.head;
    if (head.callee_is_var) {
      cl.head_is_var = true;
      cl.head_pred = head.name;
      cl.head_type = var_type(ci, head.name);
      cl.issues.push_back({IssueCode::PredVarHead, head.name, ci});
    } else {
      const SymbolInfo& info = symbols_.at(head.name);
      if (info.kind != SymbolInfo::Kind::Pred) {
        errs_.push_back({"TypeConflict",
                         "clause head " + head.name + " is not a predicate",
                         head.pos});
        return;
      }
      cl.head_pred = head.name;
      cl.head_type = info.type;
    }

    std::set<std::string> used_names;
    for (const auto& [vn, node] : clause_vars_[ci]) used_names.insert(vn);

    std::vector<Expr> prefix;  // equations introduced for non-variable i args
    std::set<std::string> seen;
    int fresh = 0;
    for (const RawTerm* arg : head.flat_args()) {
      if (arg->kind == RawTerm::Kind::Var) {
        ArgType ty = var_type(ci, arg->name);
        if (!seen.insert(arg->name).second)
          cl.issues.push_back({IssueCode::RepeatedFormal, arg->name, ci});
        cl.formals.push_back({arg->name, ty});
        continue;
      }
      auto ae = to_expr(ci, *arg);
      if (!ae) return;
      std::string g;
      do {
        g = "_G" + std::to_string(fresh++);
      } while (used_names.count(g));
      used_names.insert(g);
      cl.formals.push_back({g, ae->type()});
      if (ae->type().is_iota()) {
        prefix.push_back(Expr::eq(Expr::ind_var(g), *ae));
      } else {
        cl.issues.push_back({IssueCode::PredConstHeadArg, ae->str(), ci});
      }
    }

    cl.body = std::move(prefix);
    for (const auto& b : rc.body) {
      auto be = to_expr(ci, b);
      if (!be) return;
      cl.body.push_back(*be);
    }

    std::set<std::string> bound;
    for (const auto& f : cl.formals) {
      bound.insert(f.name);
      cl.var_types.emplace(f.name, f.type);
    }
    if (cl.head_is_var) {
      bound.insert(cl.head_pred);
      cl.var_types.emplace(cl.head_pred, cl.head_type);
    }
    std::map<std::string, ArgType> body_vars;
    for (const auto& b : cl.body) b.collect_vars(body_vars);
    for (const auto& [vn, ty] : body_vars) {
      cl.var_types.emplace(vn, ty);
      if (bound.count(vn)) continue;
      if (ty.is_iota()) {
        cl.extra_ind_vars.push_back({vn, ty});
      } else {
        cl.extra_pred_vars.push_back({vn, ty});
        cl.issues.push_back({IssueCode::ExtraBodyPredVar, vn, ci});
      }
    }
    p.clauses.push_back(std::move(cl));
  }

  const RawProgram& raw_;
  TypeGraph graph_;
  std::vector<Diag> errs_;
  std::map<std::string, int> sym_node_;
  std::map<std::string, std::size_t> sym_pos_;
  std::map<std::string, int> var_node_;        // current clause
  std::map<std::string, std::size_t> var_pos_;
  std::vector<std::map<std::string, int>> clause_vars_;
  std::map<std::string, SymbolInfo> symbols_;
};

}  // namespace

InferResult infer_types(const RawProgram& raw) {
  return Inferencer(raw).run();
}

InferResult load_program(const std::string& text, const std::string& path) {
  parser::SourceFile src = parser::SourceFile::from_string(text, path);
  parser::ParseResult pr = parser::parse(src);
  if (!pr.ok()) return {std::nullopt, pr.errors};
  InferResult res = infer_types(pr.program);
  for (auto& d : res.errors) {
    auto [line, col] = src.line_col(d.offset);
    d.line = line;
    d.col = col;
  }
  return res;
}

}  // namespace hodef
