#include "hodef/ast.hpp"

#include <algorithm>
#include <cassert>

#include "hodef/caps.hpp"

namespace hodef {

namespace {

std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

const ArgType& ArgType::iota() {
  static const ArgType t;
  return t;
}

const ArgType& ArgType::o() {
  static const ArgType t(Kind::O, nullptr);
  return t;
}

ArgType ArgType::arrow(const ArgType& arg, const ArgType& result) {
  if (!result.is_predicate())
    throw TypeMismatchError("arrow result must be a predicate type, got " +
                            result.str());
  return ArgType(Kind::Arrow,
                 std::make_shared<const std::pair<ArgType, ArgType>>(arg, result));
}

ArgType ArgType::predicate(const std::vector<ArgType>& args) {
  ArgType t = o();
  for (auto it = args.rbegin(); it != args.rend(); ++it) t = arrow(*it, t);
  return t;
}

const ArgType& ArgType::arg() const {
  assert(is_arrow());
  return parts_->first;
}

const ArgType& ArgType::result() const {
  assert(is_arrow());
  return parts_->second;
}

std::vector<ArgType> ArgType::flat_args() const {
  std::vector<ArgType> out;
  const ArgType* t = this;
  while (t->is_arrow()) {
    out.push_back(t->arg());
    t = &t->result();
  }
  return out;
}

int ArgType::compare(const ArgType& other) const {
  if (kind_ != other.kind_)
    return static_cast<int>(kind_) < static_cast<int>(other.kind_) ? -1 : 1;
  if (kind_ != Kind::Arrow) return 0;
  if (parts_ == other.parts_) return 0;
  if (int c = parts_->first.compare(other.parts_->first)) return c;
  return parts_->second.compare(other.parts_->second);
}

std::size_t ArgType::hash() const {
  std::size_t h = static_cast<std::size_t>(kind_) + 1;
  if (kind_ == Kind::Arrow) {
    h = hash_combine(h, parts_->first.hash());
    h = hash_combine(h, parts_->second.hash());
  }
  return h;
}

std::string ArgType::str() const {
  switch (kind_) {
    case Kind::Iota:
      return "i";
    case Kind::O:
      return "o";
    case Kind::Arrow: {
      std::string lhs = arg().str();
      if (arg().is_arrow()) lhs = "(" + lhs + ")";
      return lhs + " -> " + result().str();
    }
  }
  return "?";
}

Expr Expr::make(Node n) {
  n.depth = 0;
  n.ground = true;
  std::size_t h = hash_combine(static_cast<std::size_t>(n.kind) + 17,
                               std::hash<std::string>()(n.name));
  for (const Expr& a : n.args) {
    n.depth = std::max(n.depth, a.depth());
    n.ground = n.ground && a.is_ground();
    h = hash_combine(h, a.hash());
  }
  if (n.kind == ExprKind::FunApp || n.kind == ExprKind::App ||
      n.kind == ExprKind::Eq)
    n.depth += 1;
  if (n.kind == ExprKind::IndVar || n.kind == ExprKind::PredVar)
    n.ground = false;
  n.hash = h;
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::ind_const(std::string name) {
  return make(Node{ExprKind::IndConst, std::move(name), {}, ArgType::iota()});
}

Expr Expr::pred_const(std::string name, ArgType type) {
  if (!type.is_predicate())
    throw TypeMismatchError("predicate constant " + name +
                            " needs a predicate type");
  return make(Node{ExprKind::PredConst, std::move(name), {}, std::move(type)});
}

Expr Expr::ind_var(std::string name) {
  return make(Node{ExprKind::IndVar, std::move(name), {}, ArgType::iota()});
}

Expr Expr::pred_var(std::string name, ArgType type) {
  if (!type.is_predicate())
    throw TypeMismatchError("predicate variable " + name +
                            " needs a predicate type");
  return make(Node{ExprKind::PredVar, std::move(name), {}, std::move(type)});
}

Expr Expr::fun_app(std::string sym, std::vector<Expr> args) {
  if (args.empty())
    throw TypeMismatchError("function symbol " + sym + " applied to no arguments");
  for (const Expr& a : args)
    if (!a.type().is_iota())
      throw TypeMismatchError("function argument " + a.str() + " is not of type i");
  return make(Node{ExprKind::FunApp, std::move(sym), std::move(args),
                   ArgType::iota()});
}

Expr Expr::app(Expr fun, Expr arg) {
  if (!fun.type().is_arrow())
    throw TypeMismatchError("cannot apply " + fun.str() + " : " +
                            fun.type().str());
  if (fun.type().arg() != arg.type())
    throw TypeMismatchError("argument type mismatch applying " + fun.str() +
                            " to " + arg.str() + " (" + fun.type().arg().str() +
                            " vs " + arg.type().str() + ")");
  ArgType result = fun.type().result();
  return make(Node{ExprKind::App, "", {std::move(fun), std::move(arg)},
                   std::move(result)});
}

Expr Expr::eq(Expr lhs, Expr rhs) {
  if (!lhs.type().is_iota() || !rhs.type().is_iota())
    throw TypeMismatchError("equality compares terms of type i only");
  return make(Node{ExprKind::Eq, "", {std::move(lhs), std::move(rhs)},
                   ArgType::o()});
}

ExprKind Expr::kind() const { return n_->kind; }
const std::string& Expr::name() const { return n_->name; }
const std::vector<Expr>& Expr::args() const { return n_->args; }
const ArgType& Expr::type() const { return n_->type; }
int Expr::depth() const { return n_->depth; }
bool Expr::is_ground() const { return n_->ground; }

bool Expr::is_var() const {
  return n_->kind == ExprKind::IndVar || n_->kind == ExprKind::PredVar;
}

std::pair<Expr, std::vector<Expr>> Expr::spine() const {
  if (kind() != ExprKind::App) return {*this, {}};
  auto inner = fun().spine();
  inner.second.push_back(arg());
  return inner;
}

void Expr::collect_vars(std::map<std::string, ArgType>& out) const {
  if (is_var()) {
    out.emplace(name(), type());
    return;
  }
  for (const Expr& a : args()) a.collect_vars(out);
}

std::string Expr::str() const {
  switch (kind()) {
    case ExprKind::IndConst:
    case ExprKind::PredConst:
    case ExprKind::IndVar:
    case ExprKind::PredVar:
      return name();
    case ExprKind::FunApp: {
      std::string s = name() + "(";
      for (std::size_t i = 0; i < args().size(); ++i) {
        if (i) s += ", ";
        s += args()[i].str();
      }
      return s + ")";
    }
    case ExprKind::App:
      return fun().str() + "(" + arg().str() + ")";
    case ExprKind::Eq:
      return args()[0].str() + " = " + args()[1].str();
  }
  return "?";
}

int Expr::compare(const Expr& other) const {
  if (n_ == other.n_) return 0;
  if (kind() != other.kind())
    return static_cast<int>(kind()) < static_cast<int>(other.kind()) ? -1 : 1;
  if (int c = name().compare(other.name())) return c < 0 ? -1 : 1;
  if (args().size() != other.args().size())
    return args().size() < other.args().size() ? -1 : 1;
  for (std::size_t i = 0; i < args().size(); ++i)
    if (int c = args()[i].compare(other.args()[i])) return c;
  return type().compare(other.type());
}

bool Expr::operator==(const Expr& other) const {
  if (n_ == other.n_) return true;
  if (hash() != other.hash()) return false;
  return compare(other) == 0;
}

std::size_t Expr::hash() const { return n_->hash; }

Expr substitute(const Expr& e, const std::map<std::string, Expr>& theta) {
  switch (e.kind()) {
    case ExprKind::IndConst:
    case ExprKind::PredConst:
      return e;
    case ExprKind::IndVar:
    case ExprKind::PredVar: {
      auto it = theta.find(e.name());
      if (it == theta.end()) return e;
      if (it->second.type() != e.type())
        throw TypeMismatchError("substitution binds " + e.name() + " : " +
                                e.type().str() + " to " + it->second.str() +
                                " : " + it->second.type().str());
      return it->second;
    }
    case ExprKind::FunApp: {
      std::vector<Expr> args;
      args.reserve(e.args().size());
      for (const Expr& a : e.args()) args.push_back(substitute(a, theta));
      return Expr::fun_app(e.name(), std::move(args));
    }
    case ExprKind::App:
      return Expr::app(substitute(e.fun(), theta), substitute(e.arg(), theta));
    case ExprKind::Eq:
      return Expr::eq(substitute(e.args()[0], theta),
                      substitute(e.args()[1], theta));
  }
  return e;
}

namespace {

void collect_subterms(const Expr& e, std::vector<int>& path,
                      std::vector<std::pair<std::vector<int>, Expr>>& out) {
  for (std::size_t i = 0; i < e.args().size(); ++i) {
    const Expr& child = e.args()[i];
    path.push_back(static_cast<int>(i));
    out.emplace_back(path, child);
    collect_subterms(child, path, out);
    path.pop_back();
  }
}

}  // namespace

std::vector<std::pair<std::vector<int>, Expr>> argument_subterms(const Expr& e) {
  std::vector<std::pair<std::vector<int>, Expr>> out;
  std::vector<int> path;
  collect_subterms(e, path, out);
  return out;
}

Expr replace_at(const Expr& root, const std::vector<int>& path,
                const Expr& replacement) {
  if (path.empty()) return replacement;
  std::vector<Expr> args = root.args();
  int i = path.front();
  args[i] = replace_at(args[i], std::vector<int>(path.begin() + 1, path.end()),
                       replacement);
  switch (root.kind()) {
    case ExprKind::FunApp:
      return Expr::fun_app(root.name(), std::move(args));
    case ExprKind::App:
      return Expr::app(args[0], args[1]);
    case ExprKind::Eq:
      return Expr::eq(args[0], args[1]);
    default:
      throw TypeMismatchError("replace_at: path into a leaf");
  }
}

}  // namespace hodef
