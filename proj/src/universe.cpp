#include "hodef/universe.hpp"

#include <algorithm>
#include <set>

namespace hodef {

namespace {

void close_types(const ArgType& t, std::set<ArgType>& out) {
  if (!out.insert(t).second) return;
  if (t.is_arrow()) {
    close_types(t.arg(), out);
    close_types(t.result(), out);
  }
}

}  // namespace

ActiveUniverse::ActiveUniverse(const Program& p, int depth, const Caps& caps)
    : depth_(depth) {
  std::set<ArgType> types;
  close_types(ArgType::iota(), types);
  close_types(ArgType::o(), types);
  for (const auto& [name, ty] : p.signature.predicates) close_types(ty, types);
  for (const Clause& c : p.clauses)
    for (const auto& [name, ty] : c.var_types) close_types(ty, types);

  auto emit = [&](const ArgType& ty, Expr e) {
    if (++total_ > caps.universe_terms)
      throw UniverseOverflowError("universe exceeds cap of " +
                                  std::to_string(caps.universe_terms) +
                                  " terms at depth " + std::to_string(depth_));
    terms_[ty].push_back(std::move(e));
  };

  for (const ArgType& ty : types) {
    terms_[ty];
    if (ty.is_iota()) {
      for (const std::string& c : p.signature.individual_constants)
        emit(ty, Expr::ind_const(c));
    } else {
      for (const auto& [name, pty] : p.signature.predicates)
        if (pty == ty) emit(ty, Expr::pred_const(name, pty));
    }
  }

  for (int d = 1; d <= depth_; ++d) {
    std::map<ArgType, std::vector<Expr>> fresh;
    const std::vector<Expr>& inds = terms_.at(ArgType::iota());
    for (const auto& [fname, arity] : p.signature.functions) {
      std::vector<std::size_t> idx(arity, 0);
      if (inds.empty() && arity > 0) continue;
      while (true) {
        int max_child = 0;
        std::vector<Expr> args;
        args.reserve(arity);
        for (std::size_t i : idx) {
          max_child = std::max(max_child, inds[i].depth());
          args.push_back(inds[i]);
        }
        if (max_child == d - 1)
          fresh[ArgType::iota()].push_back(Expr::fun_app(fname, args));
        std::size_t j = 0;
        for (; j < idx.size(); ++j) {
          if (++idx[j] < inds.size()) break;
          idx[j] = 0;
        }
        if (j == idx.size()) break;
      }
    }
    for (const ArgType& ty : types) {
      if (!ty.is_arrow()) continue;
      const std::vector<Expr>& funs = terms_.at(ty);
      const std::vector<Expr>& args = terms_.at(ty.arg());
      for (const Expr& f : funs)
        for (const Expr& a : args)
          if (std::max(f.depth(), a.depth()) == d - 1)
            fresh[ty.result()].push_back(Expr::app(f, a));
    }
    for (auto& [ty, list] : fresh)
      for (Expr& e : list) emit(ty, std::move(e));
  }

  for (auto& [ty, list] : terms_) std::sort(list.begin(), list.end());
}

std::vector<ArgType> ActiveUniverse::types() const {
  std::vector<ArgType> out;
  out.reserve(terms_.size());
  for (const auto& [ty, list] : terms_) out.push_back(ty);
  return out;
}

const std::vector<Expr>& ActiveUniverse::terms(const ArgType& t) const {
  static const std::vector<Expr> empty;
  auto it = terms_.find(t);
  return it == terms_.end() ? empty : it->second;
}

std::vector<Expr> ActiveUniverse::atoms() const {
  std::vector<Expr> out;
  for (const Expr& e : terms(ArgType::o()))
    if (e.kind() == ExprKind::PredConst) out.push_back(e);
  for (const auto& [ty, funs] : terms_) {
    if (!ty.is_arrow() || !ty.result().is_o()) continue;
    for (const Expr& f : funs)
      for (const Expr& a : terms(ty.arg())) out.push_back(Expr::app(f, a));
  }
  std::sort(out.begin(), out.end());
  return out;
}

int GroundClause::compare(const GroundClause& other) const {
  if (int c = head.compare(other.head)) return c;
  if (body.size() != other.body.size())
    return body.size() < other.body.size() ? -1 : 1;
  for (std::size_t i = 0; i < body.size(); ++i)
    if (int c = body[i].compare(other.body[i])) return c;
  return 0;
}

std::string GroundClause::str() const {
  std::string s = head.str();
  if (!body.empty()) {
    s += " :- ";
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (i) s += ", ";
      s += body[i].str();
    }
  }
  return s + ".";
}

std::vector<GroundClause> ground_instantiation(const Program& p,
                                               const ActiveUniverse& u,
                                               const Caps& caps) {
  std::set<GroundClause> out;
  std::int64_t iters = 0;
  for (const Clause& cl : p.clauses) {
    std::vector<std::string> names;
    std::vector<const std::vector<Expr>*> doms;
    bool empty_domain = false;
    for (const auto& [name, ty] : cl.var_types) {
      names.push_back(name);
      doms.push_back(&u.terms(ty));
      empty_domain = empty_domain || doms.back()->empty();
    }
    if (empty_domain) continue;
    Expr head_pattern = cl.head_expr();

    std::vector<std::size_t> idx(names.size(), 0);
    while (true) {
      if (++iters > caps.ground_iterations)
        throw ResourceError("ground instantiation exceeds iteration cap of " +
                            std::to_string(caps.ground_iterations));
      GroundSubst theta;
      for (std::size_t i = 0; i < names.size(); ++i)
        theta.emplace(names[i], (*doms[i])[idx[i]]);

      GroundClause gc{substitute(head_pattern, theta), {}};
      bool dropped = false;
      for (const Expr& b : cl.body) {
        Expr g = substitute(b, theta);
        if (g.kind() == ExprKind::Eq) {
          if (g.args()[0] != g.args()[1]) {
            dropped = true;
            break;
          }
          continue;  // a true equation carries no information
        }
        gc.body.push_back(std::move(g));
      }
      if (!dropped) {
        out.insert(std::move(gc));
        if (static_cast<std::int64_t>(out.size()) > caps.ground_clauses)
          throw ResourceError("ground instantiation exceeds cap of " +
                              std::to_string(caps.ground_clauses) +
                              " clauses");
      }

      std::size_t j = 0;
      for (; j < idx.size(); ++j) {
        if (++idx[j] < doms[j]->size()) break;
        idx[j] = 0;
      }
      if (j == idx.size()) break;
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace hodef
