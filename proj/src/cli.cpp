#include "hodef/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hodef/caps.hpp"
#include "hodef/diff.hpp"
#include "hodef/infer.hpp"
#include "hodef/json_io.hpp"

namespace hodef {

namespace {

struct CliError {
  int code;
  std::string message;
};

std::string parse_caps_into(const std::string& text, Caps& caps) {
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) return "expected key=value, got '" + item + "'";
    std::string key = item.substr(0, eq);
    std::int64_t value = 0;
    try {
      value = std::stoll(item.substr(eq + 1));
    } catch (const std::exception&) {
      return "bad number in '" + item + "'";
    }
    if (value <= 0) return "cap must be positive in '" + item + "'";
    if (key == "universe_terms")
      caps.universe_terms = value;
    else if (key == "ground_clauses")
      caps.ground_clauses = value;
    else if (key == "ground_iterations")
      caps.ground_iterations = value;
    else if (key == "domain_values")
      caps.domain_values = value;
    else if (key == "lfp_iterations")
      caps.lfp_iterations = static_cast<int>(value);
    else
      return "unknown cap '" + key + "'";
  }
  return "";
}

std::string read_input(const std::string& file) {
  if (file == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(file, std::ios::binary);
  if (!in) throw CliError{1, "cannot open " + file};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Program load_or_fail(const std::string& file, bool json, std::ostream& out,
                     const std::string& command) {
  std::string text = read_input(file);
  InferResult res = load_program(text, file);
  if (!res.ok()) {
    if (json) {
      Json j;
      j["command"] = command;
      j["ok"] = false;
      Json errors = Json::array();
      for (const parser::Diag& d : res.errors) errors.push_back(diag_json(d));
      j["errors"] = std::move(errors);
      out << j.dump(2) << "\n";
      throw CliError{1, ""};
    }
    std::string msg;
    for (const parser::Diag& d : res.errors) msg += d.str() + "\n";
    throw CliError{1, msg};
  }
  return std::move(*res.program);
}

void print_interp(std::ostream& out, const Interp& m) {
  for (const auto& [name, value] : m) out << name << " = " << value.str() << "\n";
}

int cmd_check(const std::string& file, bool json, std::ostream& out) {
  Program p = load_or_fail(file, json, out, "check");
  bool ok = p.classification.cls != ProgramClass::Rejected;
  if (json) {
    Json j;
    j["command"] = "check";
    j["ok"] = ok;
    j.update(program_json(p));
    out << j.dump(2) << "\n";
  } else {
    out << "class: " << program_class_name(p.classification.cls) << "\n";
    for (const Issue& issue : p.classification.issues)
      out << "issue: " << issue.str() << " in clause "
          << issue.clause_index << "\n";
    out << "constants:";
    for (const std::string& c : p.signature.individual_constants)
      out << " " << c;
    out << "\n";
    for (const auto& [name, arity] : p.signature.functions)
      out << "function: " << name << "/" << arity << "\n";
    for (const auto& [name, ty] : p.signature.predicates)
      out << "predicate: " << name << " : " << ty.str() << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_eval(const std::string& file, int k, bool extended, bool trace,
             bool json, std::ostream& out, const Caps& caps) {
  Program p = load_or_fail(file, json, out, "eval");
  ActiveUniverse u(p, k, caps);
  DomainCache doms(u, caps);
  EvalContext ctx{&p, &u, &doms, extended, caps};
  LfpResult res = lfp_wadge(ctx);
  if (json) {
    Json j;
    j["command"] = "eval";
    j["ok"] = true;
    j["class"] = program_class_name(p.classification.cls);
    j["depth"] = k;
    j["extended"] = extended;
    j["iterations"] = res.iterations;
    j["model"] = interp_json(res.model);
    if (trace) {
      Json steps = Json::array();
      for (const Interp& step : res.steps) steps.push_back(interp_json(step));
      j["trace"] = std::move(steps);
    }
    out << j.dump(2) << "\n";
  } else {
    out << "class: " << program_class_name(p.classification.cls) << "\n";
    out << "iterations: " << res.iterations << "\n";
    if (trace)
      for (std::size_t i = 0; i < res.steps.size(); ++i) {
        out << "step " << i << ":\n";
        print_interp(out, res.steps[i]);
      }
    print_interp(out, res.model);
  }
  return 0;
}

int cmd_ground(const std::string& file, int k, bool json, std::ostream& out,
               const Caps& caps) {
  Program p = load_or_fail(file, json, out, "ground");
  ActiveUniverse u(p, k, caps);
  std::vector<GroundClause> gcs = ground_instantiation(p, u, caps);
  if (json) {
    Json j;
    j["command"] = "ground";
    j["ok"] = true;
    j["depth"] = k;
    j["count"] = gcs.size();
    Json clauses = Json::array();
    for (const GroundClause& gc : gcs) clauses.push_back(ground_clause_json(gc));
    j["clauses"] = std::move(clauses);
    out << j.dump(2) << "\n";
  } else {
    out << "ground clauses at depth " << k << ": " << gcs.size() << "\n";
    for (const GroundClause& gc : gcs) out << gc.str() << "\n";
  }
  return 0;
}

int cmd_bezem(const std::string& file, int k, int kmax,
              const std::string& atom_text, bool naive, bool json,
              std::ostream& out, const Caps& caps) {
  Program p = load_or_fail(file, json, out, "bezem");
  ActiveUniverse u(p, k, caps);
  if (!atom_text.empty()) {
    Expr atom;
    for (const Expr& a : u.atoms())
      if (a.str() == atom_text) {
        atom = a;
        break;
      }
    if (!atom.valid())
      throw CliError{1, "atom '" + atom_text + "' not in the depth-" +
                            std::to_string(k) + " window"};
    DeepenResult res = lfp_deepening(p, atom, k, kmax, caps);
    if (json) {
      Json j;
      j["command"] = "bezem";
      j["ok"] = true;
      j["atom"] = atom.str();
      j["value"] = res.value;
      j["settled"] = res.settled;
      j["depth_reached"] = res.depth_reached;
      j["ground_clauses"] = res.ground_clauses;
      out << j.dump(2) << "\n";
    } else {
      out << atom.str() << ": "
          << (res.settled ? (res.value ? "true" : "false") : "unsettled")
          << " at depth " << res.depth_reached << "\n";
    }
    return 0;
  }
  std::vector<GroundClause> gcs = ground_instantiation(p, u, caps);
  GroundModel m =
      naive ? lfp_ground_naive(gcs, u, caps) : lfp_ground(gcs, u, caps);
  if (json) {
    Json j;
    j["command"] = "bezem";
    j["ok"] = true;
    j["ground_clauses"] = gcs.size();
    j.update(ground_model_json(m));
    out << j.dump(2) << "\n";
  } else {
    out << "ground clauses: " << gcs.size() << "\n";
    out << "true atoms within depth " << k + 1 << ":\n";
    for (const Expr& a : m.true_in_scope()) out << a.str() << "\n";
  }
  return 0;
}

int cmd_compare(const std::string& file, int k, int kmax, bool extended,
                bool json, std::ostream& out, const Caps& caps) {
  Program p = load_or_fail(file, json, out, "compare");
  CompareReport rep = compare(p, k, kmax, extended, caps);
  if (json) {
    Json j;
    j["command"] = "compare";
    j["ok"] = !rep.forbidden;
    j.update(compare_json(rep));
    out << j.dump(2) << "\n";
  } else {
    out << "class: " << program_class_name(rep.cls) << " depth: " << rep.depth
        << " kmax: " << rep.kmax << (rep.extended ? " extended" : "") << "\n";
    for (const AtomRow& row : rep.rows) {
      out << row.atom.str() << ": wadge=" << (row.wadge_true ? "true" : "false")
          << " bezem=";
      if (row.bezem_settled)
        out << (row.bezem_true ? "true" : "false") << "@" << row.settled_at;
      else
        out << "unsettled";
      if (row.disagree()) out << "  <-- disagree";
      out << "\n";
    }
    out << "atoms: " << rep.rows.size()
        << " disagreements: " << rep.disagreements
        << " unsettled: " << rep.unsettled << "\n";
    if (rep.forbidden) out << "forbidden disagreement on a definitional program\n";
  }
  return rep.forbidden ? 2 : 0;
}

int cmd_fuzz(std::uint64_t seed, int seeds, int k, int kmax, bool extended,
             bool json, std::ostream& out, const Caps& caps) {
  GenConfig config;
  config.allow_extra_pred_vars = extended;
  FuzzReport rep = fuzz_equivalence(seed, seeds, k, kmax, config, caps);
  if (json) {
    Json j;
    j["command"] = "fuzz";
    j["ok"] = rep.ok();
    j.update(fuzz_json(rep));
    out << j.dump(2) << "\n";
  } else {
    out << "seeds: " << rep.seeds << " failed: " << rep.failed << "\n";
    for (const SeedResult& r : rep.results) {
      if (r.ok()) continue;
      out << "seed " << r.seed << ":";
      for (const std::string& f : r.failures) out << " " << f;
      out << "\n" << r.source;
    }
  }
  return rep.ok() ? 0 : 2;
}

int cmd_domains(const std::string& file, int k, const std::string& type_text,
                bool values, bool hasse, bool json, std::ostream& out,
                const Caps& caps) {
  Program p = load_or_fail(file, json, out, "domains");
  ActiveUniverse u(p, k, caps);
  DomainCache doms(u, caps);

  std::vector<ArgType> targets;
  if (!type_text.empty()) {
    for (const ArgType& t : u.types())
      if (t.str() == type_text) targets.push_back(t);
    if (targets.empty())
      throw CliError{1, "type '" + type_text + "' not in this program"};
  } else {
    targets = u.types();
  }

  Json jtypes = Json::array();
  for (const ArgType& t : targets) {
    const std::vector<SemValue>& d = doms.domain(t);
    if (json) {
      Json jt;
      jt["type"] = t.str();
      jt["terms"] = u.terms(t).size();
      jt["size"] = d.size();
      if (values) {
        Json vals = Json::array();
        for (const SemValue& v : d) vals.push_back(value_json(v));
        jt["values"] = std::move(vals);
      }
      if (hasse) {
        Json edges = Json::array();
        for (std::size_t i = 0; i < d.size(); ++i)
          for (std::size_t j2 = 0; j2 < d.size(); ++j2) {
            if (i == j2 || !leq(d[i], d[j2])) continue;
            bool covered = false;
            for (std::size_t m = 0; m < d.size() && !covered; ++m)
              covered = m != i && m != j2 && leq(d[i], d[m]) && leq(d[m], d[j2]);
            if (!covered) edges.push_back(Json::array({i, j2}));
          }
        jt["hasse"] = std::move(edges);
      }
      jtypes.push_back(std::move(jt));
    } else {
      out << t.str() << ": terms=" << u.terms(t).size()
          << " domain=" << d.size() << "\n";
      if (values)
        for (std::size_t i = 0; i < d.size(); ++i)
          out << "  [" << i << "] " << d[i].str() << "\n";
      if (hasse)
        for (std::size_t i = 0; i < d.size(); ++i)
          for (std::size_t j2 = 0; j2 < d.size(); ++j2) {
            if (i == j2 || !leq(d[i], d[j2])) continue;
            bool covered = false;
            for (std::size_t m = 0; m < d.size() && !covered; ++m)
              covered = m != i && m != j2 && leq(d[i], d[m]) && leq(d[m], d[j2]);
            if (!covered) out << "  " << i << " < " << j2 << "\n";
          }
    }
  }
  if (json) {
    Json j;
    j["command"] = "domains";
    j["ok"] = true;
    j["depth"] = k;
    j["types"] = std::move(jtypes);
    out << j.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"dual-semantics interpreter for higher-order logic programs"};
  app.require_subcommand(1);

  std::string file;
  std::string caps_text;
  std::string atom_text;
  std::string type_text;
  int k = 2, kmax = 4, seeds = 100;
  std::uint64_t seed = 1;
  bool json = false, extended = false, trace = false, naive = false;
  bool values = false, hasse = false;

  auto add_common = [&](CLI::App* sub, bool with_file) {
    if (with_file)
      sub->add_option("file", file, "program file, or - for stdin")->required();
    sub->add_option("-k,--depth", k, "universe depth bound")
        ->capture_default_str();
    sub->add_flag("--json", json, "machine-readable report");
    sub->add_option("--caps", caps_text,
                    "override resource caps, key=value comma-separated");
  };

  CLI::App* c_check = app.add_subcommand("check", "parse, type, classify");
  add_common(c_check, true);

  CLI::App* c_eval =
      app.add_subcommand("eval", "denotational least fixed point");
  add_common(c_eval, true);
  c_eval->add_flag("--extended", extended,
                   "existential body predicate variables");
  c_eval->add_flag("--trace", trace, "show every iteration step");

  CLI::App* c_ground =
      app.add_subcommand("ground", "depth-bounded ground instantiation");
  add_common(c_ground, true);

  CLI::App* c_bezem =
      app.add_subcommand("bezem", "ground least fixed point");
  add_common(c_bezem, true);
  c_bezem->add_option("--kmax", kmax, "deepening limit")->capture_default_str();
  c_bezem->add_option("--atom", atom_text, "settle one atom by deepening");
  c_bezem->add_flag("--naive", naive, "use the round-based engine");

  CLI::App* c_compare =
      app.add_subcommand("compare", "both semantics over the atom window");
  add_common(c_compare, true);
  c_compare->add_option("--kmax", kmax, "deepening limit")
      ->capture_default_str();
  c_compare->add_flag("--extended", extended,
                      "existential body predicate variables");

  CLI::App* c_fuzz =
      app.add_subcommand("fuzz", "property suite on generated programs");
  add_common(c_fuzz, false);
  c_fuzz->add_option("--kmax", kmax, "deepening limit")->capture_default_str();
  c_fuzz->add_option("--seeds", seeds, "number of programs")
      ->capture_default_str();
  c_fuzz->add_option("--seed", seed, "first seed")->capture_default_str();
  c_fuzz->add_flag("--extended", extended,
                   "generate extended-class programs too");

  CLI::App* c_domains =
      app.add_subcommand("domains", "enumerated semantic domains");
  add_common(c_domains, true);
  c_domains->add_option("--type", type_text, "single type to show");
  c_domains->add_flag("--values", values, "list every domain value");
  c_domains->add_flag("--hasse", hasse, "covering pairs of the domain order");

  std::vector<const char*> argv;
  argv.push_back("hodef");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    // collapse CLI11's exit-code family onto the documented usage code
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  Caps caps;
  if (const char* env = std::getenv("HODEF_CAPS")) {
    std::string msg = parse_caps_into(env, caps);
    if (!msg.empty()) {
      err << "HODEF_CAPS: " << msg << "\n";
      return 1;
    }
  }
  if (!caps_text.empty()) {
    std::string msg = parse_caps_into(caps_text, caps);
    if (!msg.empty()) {
      err << "--caps: " << msg << "\n";
      return 1;
    }
  }

  try {
    if (app.got_subcommand(c_check)) return cmd_check(file, json, out);
    if (app.got_subcommand(c_eval))
      return cmd_eval(file, k, extended, trace, json, out, caps);
    if (app.got_subcommand(c_ground))
      return cmd_ground(file, k, json, out, caps);
    if (app.got_subcommand(c_bezem))
      return cmd_bezem(file, k, kmax, atom_text, naive, json, out, caps);
    if (app.got_subcommand(c_compare))
      return cmd_compare(file, k, kmax, extended, json, out, caps);
    if (app.got_subcommand(c_fuzz))
      return cmd_fuzz(seed, seeds, k, kmax, extended, json, out, caps);
    if (app.got_subcommand(c_domains))
      return cmd_domains(file, k, type_text, values, hasse, json, out, caps);
  } catch (const CliError& e) {
    if (!e.message.empty()) err << e.message << (e.message.back() == '\n' ? "" : "\n");
    return e.code;
  } catch (const ResourceError& e) {
    err << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const UnsupportedProgramError& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace hodef
