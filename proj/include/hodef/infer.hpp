#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hodef/parser.hpp"
#include "hodef/program.hpp"

namespace hodef {

struct InferResult {
  std::optional<Program> program;
  std::vector<parser::Diag> errors;
  bool ok() const { return program.has_value(); }
};

// Monomorphic type reconstruction and lowering. Unconstrained slots default
// to i. Non-variable head arguments of type i are replaced by fresh formals
// with an equation in the body; predicate-typed ones are reported as issues.
// A program without individual constants gets the synthetic constant $u0.
InferResult infer_types(const parser::RawProgram& raw);

// parse + infer in one step, with positions resolved against the source.
InferResult load_program(const std::string& text,
                         const std::string& path = "<input>");

}  // namespace hodef
