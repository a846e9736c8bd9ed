#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hodef/cli.hpp"

using hodef::run_cli;
using Json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

// Just enough of json-schema to check the shipped report schema: type,
// enum, properties, required, items, additionalProperties, oneOf.
bool type_ok(const std::string& t, const Json& v) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "boolean") return v.is_boolean();
  if (t == "integer") return v.is_number_integer();
  if (t == "number") return v.is_number();
  if (t == "null") return v.is_null();
  return false;
}

bool matches(const Json& schema, const Json& value) {
  if (schema.contains("oneOf")) {
    int hits = 0;
    for (const Json& branch : schema["oneOf"])
      if (matches(branch, value)) ++hits;
    return hits == 1;
  }
  if (schema.contains("enum")) {
    bool any = false;
    for (const Json& e : schema["enum"]) any = any || e == value;
    if (!any) return false;
  }
  if (schema.contains("type") &&
      !type_ok(schema["type"].get<std::string>(), value))
    return false;
  if (value.is_object()) {
    if (schema.contains("required"))
      for (const Json& key : schema["required"])
        if (!value.contains(key.get<std::string>())) return false;
    const Json* props =
        schema.contains("properties") ? &schema["properties"] : nullptr;
    for (auto it = value.begin(); it != value.end(); ++it) {
      if (props && props->contains(it.key())) {
        if (!matches((*props)[it.key()], it.value())) return false;
      } else if (schema.contains("additionalProperties") &&
                 schema["additionalProperties"].is_object()) {
        if (!matches(schema["additionalProperties"], it.value())) return false;
      }
    }
  }
  if (value.is_array() && schema.contains("items"))
    for (const Json& item : value)
      if (!matches(schema["items"], item)) return false;
  return true;
}

const Json& report_schema() {
  static Json schema = [] {
    std::ifstream in("docs/cli-report.schema.json");
    REQUIRE_MESSAGE(in.good(), "schema must sit next to the corpus");
    Json j;
    in >> j;
    return j;
  }();
  return schema;
}

Json parse_report(const Run& r) {
  Json j = Json::parse(r.out);
  CHECK_MESSAGE(matches(report_schema(), j), "schema mismatch:\n" << r.out);
  return j;
}

std::string temp_program(const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / "hodef_cli_test.hodef";
  std::ofstream out(path);
  out << text;
  return path.string();
}

}  // namespace

TEST_CASE("check reports classes with matching exit codes") {
  Run ok = cli({"check", "corpus/pairs.hodef"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("definitional") != std::string::npos);

  Run rej = cli({"check", "corpus/reject_repeated_formal.hodef"});
  CHECK(rej.code == 1);
  CHECK(rej.out.find("RepeatedFormal(Q)") != std::string::npos);
}

TEST_CASE("check emits a schema-conforming report") {
  Run r = cli({"check", "corpus/identity.hodef", "--json"});
  CHECK(r.code == 0);
  Json j = parse_report(r);
  CHECK(j["command"] == "check");
  CHECK(j["class"] == "definitional");
  CHECK(j["signature"]["predicates"].size() == 3);
}

TEST_CASE("parse failures produce an error report and exit 1") {
  std::string path = temp_program("p(a");
  Run text = cli({"check", path});
  CHECK(text.code == 1);
  CHECK_FALSE(text.err.empty());

  Run json = cli({"check", path, "--json"});
  CHECK(json.code == 1);
  Json j = parse_report(json);
  CHECK(j["ok"] == false);
  CHECK_FALSE(j["errors"].empty());
}

TEST_CASE("missing files exit 1") {
  Run r = cli({"check", "corpus/no_such_file.hodef"});
  CHECK(r.code == 1);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("eval prints the fixed point") {
  Run r = cli({"eval", "corpus/pairs.hodef", "--json"});
  CHECK(r.code == 0);
  Json j = parse_report(r);
  CHECK(j["iterations"] == 1);
  CHECK(j["model"]["p"]["text"] == "{(a)}");
  CHECK(j["model"]["r"]["minimal_true"].size() == 1);
}

TEST_CASE("eval traces every step when asked") {
  Run r = cli({"eval", "corpus/identity.hodef", "--trace", "--json"});
  Json j = parse_report(r);
  REQUIRE(j.contains("trace"));
  CHECK(j["trace"].size() == j["iterations"].get<int>() + 1);
}

TEST_CASE("eval refuses existential predicate variables without the flag") {
  Run plain = cli({"eval", "corpus/exists_pred.hodef"});
  CHECK(plain.code == 1);
  CHECK(plain.err.find("ExtraBodyPredVar") != std::string::npos);

  Run ext = cli({"eval", "corpus/exists_pred.hodef", "--extended", "--json"});
  CHECK(ext.code == 0);
  Json j = parse_report(ext);
  CHECK(j["model"]["p"]["text"] == "{(a)}");
}

TEST_CASE("ground lists the simplified instantiation") {
  Run r = cli({"ground", "corpus/identity.hodef", "-k", "1", "--json"});
  CHECK(r.code == 0);
  Json j = parse_report(r);
  CHECK(j["count"] == 8);
  CHECK(j["clauses"].size() == 8);
}

TEST_CASE("bezem reports the window model") {
  Run r = cli({"bezem", "corpus/identity.hodef", "--json"});
  CHECK(r.code == 0);
  Json j = parse_report(r);
  CHECK(j["true_atoms"].size() == 9);
}

TEST_CASE("bezem settles single atoms by deepening") {
  Run t = cli({"bezem", "corpus/exists_pred_control.hodef", "--atom", "p(a)",
               "--json"});
  CHECK(t.code == 0);
  Json jt = parse_report(t);
  CHECK(jt["settled"] == true);
  CHECK(jt["value"] == true);

  Run f = cli({"bezem", "corpus/exists_pred.hodef", "--atom", "p(a)",
               "--json"});
  Json jf = parse_report(f);
  CHECK(jf["settled"] == true);
  CHECK(jf["value"] == false);

  Run missing = cli({"bezem", "corpus/identity.hodef", "--atom", "nope(x)"});
  CHECK(missing.code == 1);
}

TEST_CASE("compare agrees on definitional corpus programs") {
  for (const char* file : {"corpus/pairs.hodef", "corpus/identity.hodef"}) {
    Run r = cli({"compare", file, "--json"});
    CHECK(r.code == 0);
    Json j = parse_report(r);
    CHECK(j["disagreements"] == 0);
    CHECK(j["unsettled"] == 0);
    CHECK(j["forbidden"] == false);
  }
}

TEST_CASE("compare surfaces the extended split without failing") {
  Run r = cli({"compare", "corpus/exists_pred.hodef", "--extended", "--json"});
  CHECK(r.code == 0);
  Json j = parse_report(r);
  CHECK(j["disagreements"] == 1);
  CHECK(j["forbidden"] == false);
  CHECK(j["rows"][0]["atom"] == "p(a)");
}

TEST_CASE("fuzz runs a seed block") {
  Run r = cli({"fuzz", "--seeds", "5", "--json"});
  CHECK(r.code == 0);
  Json j = parse_report(r);
  CHECK(j["seeds"] == 5);
  CHECK(j["failed"] == 0);
}

TEST_CASE("domains lists sizes, values and cover edges") {
  Run r = cli({"domains", "corpus/pairs.hodef", "--type", "(i -> o) -> o",
               "--values", "--hasse", "--json"});
  CHECK(r.code == 0);
  Json j = parse_report(r);
  REQUIRE(j["types"].size() == 1);
  CHECK(j["types"][0]["size"] == 6);
  CHECK(j["types"][0]["values"].size() == 6);
  CHECK(j["types"][0]["hasse"].size() == 6);

  Run missing = cli({"domains", "corpus/pairs.hodef", "--type", "i -> i"});
  CHECK(missing.code == 1);
}

TEST_CASE("reports are byte-stable across runs") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"compare", "corpus/identity.hodef", "--json"},
        std::vector<std::string>{"eval", "corpus/pairs.hodef", "--json"},
        std::vector<std::string>{"fuzz", "--seeds", "3", "--json"}}) {
    Run first = cli(args);
    Run second = cli(args);
    CHECK(first.out == second.out);
    CHECK(first.code == second.code);
  }
}

TEST_CASE("resource caps exit 3") {
  Run r = cli({"eval", "corpus/pairs.hodef", "--caps", "domain_values=3"});
  CHECK(r.code == 3);
  CHECK(r.err.find("resource cap") != std::string::npos);
}

TEST_CASE("malformed cap strings exit 1") {
  Run r = cli({"eval", "corpus/pairs.hodef", "--caps", "bogus=1"});
  CHECK(r.code == 1);
  Run r2 = cli({"eval", "corpus/pairs.hodef", "--caps", "universe_terms=x"});
  CHECK(r2.code == 1);
}

TEST_CASE("usage errors exit 1, help exits 0") {
  CHECK(cli({}).code == 1);
  CHECK(cli({"frobnicate", "corpus/pairs.hodef"}).code == 1);
  CHECK(cli({"eval"}).code == 1);
  CHECK(cli({"--help"}).code == 0);
}
