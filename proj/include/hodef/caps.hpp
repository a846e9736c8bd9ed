#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace hodef {

// Resource limits for enumerations. Exceeding a cap is a hard error, never a
// silent truncation: results are exact or absent.
struct Caps {
  std::int64_t universe_terms = 100'000;     // per-type ground term lists
  std::int64_t ground_clauses = 1'000'000;   // emitted ground instances
  std::int64_t ground_iterations = 10'000'000;
  std::int64_t domain_values = 1'000'000;    // per-type semantic domain size
  int lfp_iterations = 100'000;
};

class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

class UniverseOverflowError : public ResourceError {
 public:
  using ResourceError::ResourceError;
};

class DomainOverflowError : public ResourceError {
 public:
  DomainOverflowError(const std::string& type, std::int64_t at_least)
      : ResourceError("semantic domain for " + type + " exceeds cap (>= " +
                      std::to_string(at_least) + " values)"),
        type_(type),
        at_least_(at_least) {}
  const std::string& type() const { return type_; }
  std::int64_t at_least() const { return at_least_; }

 private:
  std::string type_;
  std::int64_t at_least_;
};

// Hitting this signals a bug: every fixed-point computed here lives in a
// finite lattice.
class IterationCapError : public ResourceError {
 public:
  using ResourceError::ResourceError;
};

class TypeMismatchError : public std::logic_error {
 public:
  explicit TypeMismatchError(const std::string& what) : std::logic_error(what) {}
};

class UnboundVariableError : public std::logic_error {
 public:
  explicit UnboundVariableError(const std::string& name)
      : std::logic_error("unbound variable " + name), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

// A program outside the class an engine supports (e.g. an extended program
// handed to the plain denotational engine).
class UnsupportedProgramError : public std::runtime_error {
 public:
  UnsupportedProgramError(std::string code, std::string detail)
      : std::runtime_error("unsupported program: " + code +
                           (detail.empty() ? "" : "(" + detail + ")")),
        code_(std::move(code)),
        detail_(std::move(detail)) {}
  const std::string& code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string code_;
  std::string detail_;
};

class GenerationExhaustedError : public std::runtime_error {
 public:
  explicit GenerationExhaustedError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace hodef
