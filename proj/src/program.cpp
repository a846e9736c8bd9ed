#include "hodef/program.hpp"

namespace hodef {

std::string issue_code_name(IssueCode code) {
  switch (code) {
    case IssueCode::RepeatedFormal:
      return "RepeatedFormal";
    case IssueCode::PredConstHeadArg:
      return "PredConstHeadArg";
    case IssueCode::ExtraBodyPredVar:
      return "ExtraBodyPredVar";
    case IssueCode::PredVarHead:
      return "PredVarHead";
  }
  return "?";
}

std::string Issue::str() const {
  std::string s = issue_code_name(code);
  if (!detail.empty()) s += "(" + detail + ")";
  return s;
}

Expr Clause::head_expr() const {
  Expr head = head_is_var ? Expr::pred_var(head_pred, head_type)
                          : Expr::pred_const(head_pred, head_type);
  for (const TypedVar& v : formals) {
    Expr arg = v.type.is_iota() ? Expr::ind_var(v.name)
                                : Expr::pred_var(v.name, v.type);
    head = Expr::app(std::move(head), std::move(arg));
  }
  return head;
}

std::string Clause::str() const {
  std::string s = head_expr().str();
  if (!body.empty()) {
    s += " :- ";
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (i) s += ", ";
      s += body[i].str();
    }
  }
  return s + ".";
}

std::string program_class_name(ProgramClass cls) {
  switch (cls) {
    case ProgramClass::Definitional:
      return "definitional";
    case ProgramClass::Extended:
      return "extended";
    case ProgramClass::Hoapata:
      return "hoapata";
    case ProgramClass::Rejected:
      return "rejected";
  }
  return "?";
}

std::vector<std::size_t> Program::clauses_for(const std::string& pred) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < clauses.size(); ++i)
    if (!clauses[i].head_is_var && clauses[i].head_pred == pred) out.push_back(i);
  return out;
}

std::string Program::str() const {
  std::string s;
  for (const Clause& c : clauses) s += c.str() + "\n";
  return s;
}

Classification classify(const Program& p) {
  Classification out;
  bool rejected = false, pred_var_head = false, extra_pred_var = false;
  for (std::size_t i = 0; i < p.clauses.size(); ++i) {
    for (Issue issue : p.clauses[i].issues) {
      issue.clause_index = i;
      switch (issue.code) {
        case IssueCode::RepeatedFormal:
        case IssueCode::PredConstHeadArg:
          rejected = true;
          break;
        case IssueCode::PredVarHead:
          pred_var_head = true;
          break;
        case IssueCode::ExtraBodyPredVar:
          extra_pred_var = true;
          break;
      }
      out.issues.push_back(std::move(issue));
    }
  }
  if (rejected)
    out.cls = ProgramClass::Rejected;
  else if (pred_var_head)
    out.cls = ProgramClass::Hoapata;
  else if (extra_pred_var)
    out.cls = ProgramClass::Extended;
  else
    out.cls = ProgramClass::Definitional;
  return out;
}

}  // namespace hodef
