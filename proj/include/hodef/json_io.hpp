#pragma once

#include <json.hpp>

#include "hodef/diff.hpp"
#include "hodef/infer.hpp"
#include "hodef/program.hpp"
#include "hodef/universe.hpp"
#include "hodef/wadge.hpp"

namespace hodef {

// Insertion-ordered so serialized reports are byte-stable.
using Json = nlohmann::ordered_json;

Json expr_json(const Expr& e);
Json value_json(const SemValue& v);
Json issue_json(const Issue& issue);
Json diag_json(const parser::Diag& d);
Json signature_json(const Signature& sig);
Json clause_json(const Clause& c);
Json program_json(const Program& p);
Json ground_clause_json(const GroundClause& gc);
Json interp_json(const Interp& m);
Json ground_model_json(const GroundModel& m);
Json compare_json(const CompareReport& rep);
Json divergence_json(const DivergenceReport& rep);
Json fuzz_json(const FuzzReport& rep);

}  // namespace hodef
