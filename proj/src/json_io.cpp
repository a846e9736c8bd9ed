#include "hodef/json_io.hpp"

namespace hodef {

namespace {

const char* expr_kind_name(ExprKind k) {
  switch (k) {
    case ExprKind::IndConst:
      return "ind_const";
    case ExprKind::PredConst:
      return "pred_const";
    case ExprKind::IndVar:
      return "ind_var";
    case ExprKind::PredVar:
      return "pred_var";
    case ExprKind::FunApp:
      return "fun_app";
    case ExprKind::App:
      return "app";
    case ExprKind::Eq:
      return "eq";
  }
  return "?";
}

}  // namespace

Json expr_json(const Expr& e) {
  Json j;
  j["kind"] = expr_kind_name(e.kind());
  if (!e.name().empty()) j["name"] = e.name();
  j["type"] = e.type().str();
  if (!e.args().empty()) {
    Json args = Json::array();
    for (const Expr& a : e.args()) args.push_back(expr_json(a));
    j["args"] = std::move(args);
  }
  j["text"] = e.str();
  return j;
}

Json value_json(const SemValue& v) {
  Json j;
  switch (v.kind()) {
    case SemValue::Kind::Individual:
      j["kind"] = "individual";
      j["term"] = v.ind().str();
      break;
    case SemValue::Kind::Truth:
      j["kind"] = "truth";
      j["value"] = v.truth_value();
      break;
    case SemValue::Kind::Rel: {
      j["kind"] = "rel";
      Json types = Json::array();
      for (const ArgType& t : v.rel_args()) types.push_back(t.str());
      j["arg_types"] = std::move(types);
      Json tuples = Json::array();
      for (const Tuple& m : v.minimal_true()) {
        Json tuple = Json::array();
        for (const SemValue& c : m) tuple.push_back(value_json(c));
        tuples.push_back(std::move(tuple));
      }
      j["minimal_true"] = std::move(tuples);
      j["text"] = v.str();
      break;
    }
  }
  return j;
}

Json issue_json(const Issue& issue) {
  Json j;
  j["code"] = issue_code_name(issue.code);
  j["detail"] = issue.detail;
  j["clause"] = issue.clause_index;
  return j;
}

Json diag_json(const parser::Diag& d) {
  Json j;
  j["code"] = d.code;
  j["message"] = d.message;
  j["line"] = d.line;
  j["col"] = d.col;
  return j;
}

Json signature_json(const Signature& sig) {
  Json j;
  j["constants"] = sig.individual_constants;
  Json funs = Json::object();
  for (const auto& [name, arity] : sig.functions) funs[name] = arity;
  j["functions"] = std::move(funs);
  Json preds = Json::object();
  for (const auto& [name, ty] : sig.predicates) preds[name] = ty.str();
  j["predicates"] = std::move(preds);
  return j;
}

Json clause_json(const Clause& c) {
  Json j;
  j["text"] = c.str();
  j["head"] = c.head_pred;
  j["head_is_var"] = c.head_is_var;
  Json formals = Json::array();
  for (const TypedVar& v : c.formals) {
    Json f;
    f["name"] = v.name;
    f["type"] = v.type.str();
    formals.push_back(std::move(f));
  }
  j["formals"] = std::move(formals);
  Json body = Json::array();
  for (const Expr& b : c.body) body.push_back(expr_json(b));
  j["body"] = std::move(body);
  Json extras = Json::array();
  for (const TypedVar& v : c.extra_ind_vars) extras.push_back(v.name);
  for (const TypedVar& v : c.extra_pred_vars) extras.push_back(v.name);
  j["extra_vars"] = std::move(extras);
  Json issues = Json::array();
  for (const Issue& issue : c.issues) issues.push_back(issue_json(issue));
  j["issues"] = std::move(issues);
  return j;
}

Json program_json(const Program& p) {
  Json j;
  j["class"] = program_class_name(p.classification.cls);
  Json issues = Json::array();
  for (const Issue& issue : p.classification.issues)
    issues.push_back(issue_json(issue));
  j["issues"] = std::move(issues);
  j["signature"] = signature_json(p.signature);
  Json clauses = Json::array();
  for (const Clause& c : p.clauses) clauses.push_back(clause_json(c));
  j["clauses"] = std::move(clauses);
  return j;
}

Json ground_clause_json(const GroundClause& gc) {
  Json j;
  j["head"] = gc.head.str();
  Json body = Json::array();
  for (const Expr& b : gc.body) body.push_back(b.str());
  j["body"] = std::move(body);
  return j;
}

Json interp_json(const Interp& m) {
  Json j = Json::object();
  for (const auto& [name, value] : m) j[name] = value_json(value);
  return j;
}

Json ground_model_json(const GroundModel& m) {
  Json j;
  j["depth"] = m.depth;
  j["scope_size"] = m.scope.size();
  std::vector<Expr> in_scope = m.true_in_scope();
  Json atoms = Json::array();
  for (const Expr& a : in_scope) atoms.push_back(a.str());
  j["true_atoms"] = std::move(atoms);
  j["true_beyond_scope"] = m.true_atoms.size() - in_scope.size();
  return j;
}

Json compare_json(const CompareReport& rep) {
  Json j;
  j["class"] = program_class_name(rep.cls);
  j["depth"] = rep.depth;
  j["kmax"] = rep.kmax;
  j["extended"] = rep.extended;
  j["wadge_iterations"] = rep.wadge_iterations;
  Json rows = Json::array();
  for (const AtomRow& row : rep.rows) {
    Json r;
    r["atom"] = row.atom.str();
    r["wadge"] = row.wadge_true;
    r["bezem"] = row.bezem_true;
    r["settled"] = row.bezem_settled;
    if (row.bezem_settled) r["settled_at"] = row.settled_at;
    r["disagree"] = row.disagree();
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  j["disagreements"] = rep.disagreements;
  j["unsettled"] = rep.unsettled;
  j["forbidden"] = rep.forbidden;
  return j;
}

Json divergence_json(const DivergenceReport& rep) {
  Json j;
  j["witness_source"] = rep.witness_source;
  j["control_source"] = rep.control_source;
  j["witness_bezem_false_settled"] = rep.witness_bezem_false_settled;
  j["witness_wadge_extended_true"] = rep.witness_wadge_extended_true;
  j["witness_plain_rejection"] = rep.witness_plain_rejection;
  j["control_bezem_true"] = rep.control_bezem_true;
  j["control_wadge_extended_true"] = rep.control_wadge_extended_true;
  j["ok"] = rep.ok();
  return j;
}

Json fuzz_json(const FuzzReport& rep) {
  Json j;
  j["seeds"] = rep.seeds;
  j["failed"] = rep.failed;
  Json results = Json::array();
  for (const SeedResult& r : rep.results) {
    Json s;
    s["seed"] = r.seed;
    s["ok"] = r.ok();
    if (!r.ok()) {
      s["failures"] = r.failures;
      s["source"] = r.source;
    }
    results.push_back(std::move(s));
  }
  j["results"] = std::move(results);
  return j;
}

}  // namespace hodef
