#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hodef/ast.hpp"
#include "hodef/caps.hpp"
#include "hodef/universe.hpp"

namespace hodef {

// A point of a semantic domain. Individuals are ground first-order terms and
// compare discretely; truth values order false below true; relation values
// are monotone maps into truth values, kept uncurried as the antichain of
// minimal true argument tuples. Immutable and cheap to copy.
class SemValue {
 public:
  enum class Kind : std::uint8_t { Individual, Truth, Rel };
  using Tuple = std::vector<SemValue>;

  static SemValue individual(Expr term);
  static SemValue truth(bool value);
  // Canonicalizes: sorts, removes dominated and duplicate tuples. Every tuple
  // must match arg_types coordinatewise; arg_types must be non-empty.
  static SemValue rel(std::vector<ArgType> arg_types,
                      std::vector<Tuple> minimal_true);

  Kind kind() const { return impl_->kind; }
  const Expr& ind() const { return impl_->ind; }
  bool truth_value() const { return impl_->truth; }
  const std::vector<ArgType>& rel_args() const { return impl_->arg_types; }
  const std::vector<Tuple>& minimal_true() const { return impl_->minimal; }

  int compare(const SemValue& other) const;
  bool operator==(const SemValue& other) const { return compare(other) == 0; }
  bool operator!=(const SemValue& other) const { return compare(other) != 0; }
  bool operator<(const SemValue& other) const { return compare(other) < 0; }
  std::string str() const;

 private:
  struct Impl {
    Kind kind;
    bool truth = false;
    Expr ind;
    std::vector<ArgType> arg_types;
    std::vector<Tuple> minimal;
  };
  explicit SemValue(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

using Tuple = SemValue::Tuple;

// Pointwise domain order; both sides must inhabit the same domain.
bool leq(const SemValue& a, const SemValue& b);
bool tuple_leq(const Tuple& a, const Tuple& b);

// Truth of an uncurried relation at a full argument tuple.
bool rel_true(const SemValue& rel, const Tuple& args);

// One currying step: fix the first coordinate. Yields Truth when the last
// coordinate is consumed. Exact because currying is an order isomorphism.
SemValue apply(const SemValue& rel, const SemValue& arg);

// Least and greatest points of a predicate-type domain.
SemValue bottom_value(const ArgType& predicate_type);
SemValue top_value(const ArgType& predicate_type, const ActiveUniverse& u);

// Enumerated finite domains over a fixed universe, one per type, memoized.
// Relation domains are produced as antichains of the argument tuple poset in
// canonical order. Sizes beyond the cap raise DomainOverflowError.
class DomainCache {
 public:
  DomainCache(const ActiveUniverse& u, const Caps& caps = {});

  const std::vector<SemValue>& domain(const ArgType& t);  // sorted
  std::vector<Tuple> tuple_space(const ArgType& predicate_type);  // sorted
  const ActiveUniverse& universe() const { return *u_; }

 private:
  const ActiveUniverse* u_;
  Caps caps_;
  std::map<ArgType, std::vector<SemValue>> cache_;
};

}  // namespace hodef
