#include "doctest.h"
#include "geostruct/cli.hpp"

#include <json.hpp>

#include <fstream>
#include <regex>
#include <sstream>

using Json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = geostruct::run(args, out, err);
  return {code, out.str(), err.str()};
}

const Json& schema() {
  static const Json s = [] {
    std::ifstream in(std::string(GEOSTRUCT_SOURCE_DIR) + "/docs/report-schema.json");
    REQUIRE(in.good());
    return Json::parse(in);
  }();
  return s;
}

bool has_type(const Json& v, const std::string& t) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "integer") return v.is_number_integer();
  if (t == "boolean") return v.is_boolean();
  if (t == "null") return v.is_null();
  return false;
}

// The subset of JSON Schema the published schema uses: $ref into $defs,
// type (single or list), required, properties, items, enum, pattern.
void validate(const Json& v, const Json& s, const std::string& path) {
  if (s.contains("$ref")) {
    const std::string ref = s["$ref"];
    REQUIRE(ref.rfind("#/$defs/", 0) == 0);
    validate(v, schema()["$defs"][ref.substr(8)], path);
    return;
  }
  if (s.contains("type")) {
    bool ok = false;
    if (s["type"].is_array())
      for (const auto& t : s["type"]) ok = ok || has_type(v, t);
    else
      ok = has_type(v, s["type"]);
    INFO(path);
    REQUIRE(ok);
  }
  if (v.is_null()) return;
  if (s.contains("enum")) {
    INFO(path);
    CHECK(std::find(s["enum"].begin(), s["enum"].end(), v) != s["enum"].end());
  }
  if (s.contains("pattern") && v.is_string()) {
    INFO(path << " = " << v);
    CHECK(std::regex_match(v.get<std::string>(), std::regex(s["pattern"].get<std::string>())));
  }
  if (s.contains("required"))
    for (const auto& k : s["required"]) {
      INFO(path << "." << k);
      CHECK(v.contains(k.get<std::string>()));
    }
  if (s.contains("properties") && v.is_object())
    for (const auto& [k, sub] : s["properties"].items())
      if (v.contains(k)) validate(v[k], sub, path + "." + k);
  if (s.contains("items") && v.is_array())
    for (std::size_t i = 0; i < v.size(); ++i) validate(v[i], s["items"], path + "[" + std::to_string(i) + "]");
}

Json parse_report(const Result& r) {
  const auto j = Json::parse(r.out);
  validate(j, schema(), "$");
  return j;
}

std::string strip_timestamp(const std::string& text) {
  return std::regex_replace(text, std::regex("\"generated_at\": \"[^\"]*\""), "\"generated_at\": \"\"");
}

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"classify"}).code == 2);
  CHECK(run({"classify", "--space", "LCH(2)", "--format", "xml"}).code == 2);
  CHECK(run({"flowcheck", "--samples", "0"}).code == 2);
  CHECK(run({"flowcheck", "--chart", "torus"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("unknown or unsupported spaces exit 2 with the grammar") {
  const auto r = run({"classify", "--space", "LXX(9)"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("LminusE(p1,q)") != std::string::npos);
  CHECK(run({"classify", "--space", "LminusS(3,0)"}).code == 2);
  CHECK(run({"table1", "--rows", "LCH(2);LCP(1)"}).code == 2);
}

TEST_CASE("classify emits a schema-valid report") {
  const auto r = run({"classify", "--space", "LCH(2)", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = parse_report(r);
  CHECK(j["schema_version"] == geostruct::kReportSchemaVersion);
  REQUIRE(j["reports"].size() == 1);
  const auto& rep = j["reports"][0];
  CHECK(rep["id"] == "LCH(2)");
  CHECK(rep["complex"]["none"] == true);
  CHECK(rep["para"]["count"] == 2);
  CHECK(rep["para"]["integrable"] == 1);
  CHECK(rep["symplectic"]["closed_dim"] == 2);
  CHECK(rep["comparison"]["verdict"] == "MATCH");
  CHECK(j["summary"]["pass"] == true);
}

TEST_CASE("a mismatching row exits 1") {
  // three of the four complex structures on L(CP^2) are integrable where the
  // table states two
  const auto r = run({"classify", "--space", "LCP(2)", "--format", "json"});
  CHECK(r.code == 1);
  const auto j = parse_report(r);
  const auto& rep = j["reports"][0];
  CHECK(rep["complex"]["count"] == 4);
  CHECK(rep["complex"]["integrable"] == 3);
  CHECK(rep["para"]["count"] == 0);
  CHECK(rep["comparison"]["verdict"] == "MISMATCH");
  CHECK(j["summary"]["verdicts"]["MISMATCH"] == 1);
}

TEST_CASE("table1") {
  SUBCASE("matching rows") {
    const auto r = run({"table1", "--rows", "LCH(2); LHH(2);LplusS(4,0)", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = parse_report(r);
    CHECK(j["summary"]["rows"] == 3);
    CHECK(j["summary"]["verdicts"]["MATCH"] == 3);
  }
  SUBCASE("convention rows pass") {
    const auto r = run({"table1", "--rows", "convention"});
    CHECK(r.code == 0);
    CHECK(r.out.find("MATCH-UP-TO-CONVENTION") != std::string::npos);
    CHECK(r.out.find("PASS: 7 rows") != std::string::npos);
  }
  SUBCASE("generic battery fails on the complex projective rows") {
    const auto r = run({"table1", "--format", "json"});
    CHECK(r.code == 1);
    const auto j = parse_report(r);
    CHECK(j["summary"]["rows"] == 9);
    CHECK(j["summary"]["verdicts"]["MISMATCH"] == 2);
    for (const auto& rep : j["reports"])
      if (rep["comparison"]["verdict"] == "MISMATCH") CHECK(rep["id"].get<std::string>().rfind("LCP", 0) == 0);
  }
}

TEST_CASE("json output is byte-stable apart from the timestamp") {
  const auto a = run({"classify", "--space", "LHP(2)", "--format", "json"});
  const auto b = run({"classify", "--space", "LHP(2)", "--format", "json"});
  CHECK(a.code == b.code);
  CHECK(strip_timestamp(a.out) == strip_timestamp(b.out));
  CHECK(std::regex_search(a.out, std::regex("\"generated_at\": \"[0-9]{4}-[0-9]{2}-[0-9]{2}T[0-9:]{8}Z\"")));
  // key order is fixed
  CHECK(a.out.find("\"schema_version\"") < a.out.find("\"generated_at\""));
  CHECK(a.out.find("\"generated_at\"") < a.out.find("\"reports\""));
}

TEST_CASE("selftest and flowcheck") {
  const auto s = run({"selftest", "--format", "json"});
  CHECK(s.code == 0);
  const auto j = Json::parse(s.out);
  CHECK(j["pass"] == true);
  CHECK(j["identities"].size() >= 20);
  bool has_f4 = false;
  for (const auto& a : j["algebras"]) has_f4 = has_f4 || (a["algebra"] == "f4" && a["dim"] == 52);
  CHECK(has_f4);

  const auto f = run({"flowcheck", "--chart", "hyperbolic", "--samples", "50", "--format", "json"});
  CHECK(f.code == 0);
  CHECK(Json::parse(f.out)["pass"] == true);
  // a tolerance below the finite-difference noise is a residual failure
  CHECK(run({"flowcheck", "--tol", "1e-20"}).code == 1);
}
