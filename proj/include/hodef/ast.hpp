#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace hodef {

// Argument types: i (individuals), o (truth values), and arrow types whose
// result is again a predicate type. Functional types i^n -> i never appear
// here; function symbols carry a plain arity in the signature instead.
class ArgType {
 public:
  enum class Kind : std::uint8_t { Iota, O, Arrow };

  ArgType() = default;  // i
  static const ArgType& iota();
  static const ArgType& o();
  static ArgType arrow(const ArgType& arg, const ArgType& result);
  // rho1 -> ... -> rhon -> o
  static ArgType predicate(const std::vector<ArgType>& args);

  Kind kind() const { return kind_; }
  bool is_iota() const { return kind_ == Kind::Iota; }
  bool is_o() const { return kind_ == Kind::O; }
  bool is_arrow() const { return kind_ == Kind::Arrow; }
  bool is_predicate() const { return kind_ != Kind::Iota; }

  const ArgType& arg() const;
  const ArgType& result() const;

  // Argument list of a predicate type, outermost first; empty for o.
  std::vector<ArgType> flat_args() const;

  int compare(const ArgType& other) const;
  bool operator==(const ArgType& other) const { return compare(other) == 0; }
  bool operator!=(const ArgType& other) const { return compare(other) != 0; }
  bool operator<(const ArgType& other) const { return compare(other) < 0; }

  std::size_t hash() const;
  std::string str() const;

 private:
  ArgType(Kind kind, std::shared_ptr<const std::pair<ArgType, ArgType>> parts)
      : kind_(kind), parts_(std::move(parts)) {}

  Kind kind_ = Kind::Iota;
  std::shared_ptr<const std::pair<ArgType, ArgType>> parts_;  // Arrow only
};

// Expression kinds, declared in canonical term order.
enum class ExprKind : std::uint8_t {
  IndConst,
  PredConst,
  IndVar,
  PredVar,
  FunApp,
  App,
  Eq,
};

// Immutable typed expression. Terms are the Eq-free fragment; atoms are
// expressions of type o.
class Expr {
 public:
  Expr() = default;  // invalid placeholder
  bool valid() const { return n_ != nullptr; }

  static Expr ind_const(std::string name);
  static Expr pred_const(std::string name, ArgType type);
  static Expr ind_var(std::string name);
  static Expr pred_var(std::string name, ArgType type);
  static Expr fun_app(std::string sym, std::vector<Expr> args);
  static Expr app(Expr fun, Expr arg);
  static Expr eq(Expr lhs, Expr rhs);

  ExprKind kind() const;
  const std::string& name() const;
  // FunApp arguments; App {fun, arg}; Eq {lhs, rhs}; empty otherwise.
  const std::vector<Expr>& args() const;
  const Expr& fun() const { return args()[0]; }
  const Expr& arg() const { return args()[1]; }
  const ArgType& type() const;

  // Constants have depth 0; FunApp and App add one over their deepest child.
  int depth() const;
  bool is_ground() const;
  bool is_var() const;
  bool is_atom() const { return type().is_o(); }

  // Head symbol of a nested application plus all arguments, outermost last:
  // p(t1)(t2) yields {p, [t1, t2]}.
  std::pair<Expr, std::vector<Expr>> spine() const;

  void collect_vars(std::map<std::string, ArgType>& out) const;

  std::string str() const;

  int compare(const Expr& other) const;
  bool operator==(const Expr& other) const;
  bool operator!=(const Expr& other) const { return !(*this == other); }
  bool operator<(const Expr& other) const { return compare(other) < 0; }

  std::size_t hash() const;

 private:
  struct Node {
    ExprKind kind;
    std::string name;
    std::vector<Expr> args;
    ArgType type;
    int depth = 0;
    bool ground = true;
    std::size_t hash = 0;
  };

  explicit Expr(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  static Expr make(Node n);

  std::shared_ptr<const Node> n_;
};

struct ExprHash {
  std::size_t operator()(const Expr& e) const { return e.hash(); }
};

// Replaces variables by name. Bindings must match the variable's type.
Expr substitute(const Expr& e, const std::map<std::string, Expr>& theta);

// Positions of proper subterms (paths of argument indices). Collects every
// subterm of argument type, including partial applications.
std::vector<std::pair<std::vector<int>, Expr>> argument_subterms(const Expr& e);
Expr replace_at(const Expr& root, const std::vector<int>& path,
                const Expr& replacement);

}  // namespace hodef
