#include "geostruct/cli.hpp"

#include "geostruct/flowcheck.hpp"
#include "geostruct/spaces.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <ctime>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace geostruct {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kOk = 0, kFail = 1, kUsage = 2;

// ---- serialization --------------------------------------------------------

Json to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const Signature& s) { return Json{{"pos", s.pos}, {"neg", s.neg}, {"null", s.null}}; }

Json to_json(const StructureCandidate& c) {
  return Json{{"epsilon", c.epsilon},         {"plus_dim", c.plus_dim},
              {"minus_dim", c.minus_dim},     {"integrable", c.integrable},
              {"nijenhuis_rank", c.nijenhuis_rank}, {"endomorphism", to_json(c.endo)}};
}

Json to_json(const StructureClass& s) {
  Json j{{"epsilon", s.epsilon}, {"none", s.none}};
  if (s.none) j["none_reason"] = s.none_reason;
  j["count"] = s.structures.size();
  j["integrable"] = s.integrable();
  Json cands = Json::array();
  for (const auto& c : s.structures) cands.push_back(to_json(c));
  j["candidates"] = std::move(cands);
  j["unbalanced_product_structures"] = s.product_structures.size();
  if (s.family)
    j["family"] = Json{{"tangent_dim", s.family->tangent_dim}, {"representative", to_json(s.family->representative)}};
  else
    j["family"] = nullptr;
  return j;
}

Json to_json(const std::vector<PairRecord>& pairs) {
  Json out = Json::array();
  for (const auto& p : pairs)
    out.push_back(Json{{"candidate", p.candidate},
                       {"epsilon", p.epsilon},
                       {"integrable", p.integrable},
                       {"signature", to_json(p.signature)},
                       {"metric_family_dim", p.family_dim},
                       {"metric", to_json(p.metric)},
                       {"kahler_form", to_json(p.kahler_form)}});
  return out;
}

Json to_json(const ClassificationReport& r) {
  Json j;
  j["id"] = r.id.to_string();
  j["coset"] = r.coset;
  j["dims"] = Json{{"g", r.dim_g}, {"h", r.dim_h}, {"m", r.dim_m}};
  j["symmetric_pair"] = r.symmetric_pair;
  j["invariant_tensors"] = Json{{"sym2", r.sym2_dim}, {"alt2", r.alt2_dim}};
  Json closed = Json::array();
  for (const auto& w : r.closed_basis) closed.push_back(to_json(w));
  j["symplectic"] = Json{{"closed_dim", r.closed_dim},
                         {"closed_basis", std::move(closed)},
                         {"sample_coefficients", r.sample_coefficients},
                         {"sample", r.symplectic_sample ? to_json(*r.symplectic_sample) : Json(nullptr)}};
  j["commutant"] = Json{{"dim", r.commutant_dim}, {"commutative", r.commutant_commutative}};
  j["complex"] = to_json(r.complex);
  j["para"] = to_json(r.para);
  j["kahler"] = to_json(r.kahler);
  j["parakahler"] = to_json(r.parakahler);
  Json observed;
  for (const auto& col : table_columns()) observed[col] = r.observed.at(col).to_string();
  j["observed"] = std::move(observed);
  Json cmp{{"verdict", to_string(r.comparison.verdict)}, {"row", r.expected.row_label}};
  if (r.expected.convention_flag) cmp["convention_note"] = r.expected.convention_note;
  Json cols = Json::array();
  for (const auto& c : r.comparison.columns)
    cols.push_back(Json{{"column", c.column},
                        {"expected", c.expected},
                        {"observed", c.observed},
                        {"match", c.match},
                        {"convention", c.convention},
                        {"citation", c.citation}});
  cmp["columns"] = std::move(cols);
  j["comparison"] = std::move(cmp);
  return j;
}

std::string timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

Json document(const std::string& command, const std::vector<ClassificationReport>& reports) {
  Json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["generated_at"] = timestamp();
  doc["command"] = command;
  Json list = Json::array();
  std::map<std::string, std::size_t> counts;
  for (const auto& v : {Verdict::Match, Verdict::MatchUpToConvention, Verdict::Mismatch, Verdict::NoExpectation})
    counts[to_string(v)] = 0;
  bool pass = true;
  for (const auto& r : reports) {
    list.push_back(to_json(r));
    ++counts[to_string(r.comparison.verdict)];
    pass = pass && r.comparison.verdict != Verdict::Mismatch;
  }
  doc["reports"] = std::move(list);
  Json verdicts;
  for (const auto& [k, v] : counts) verdicts[k] = v;
  doc["summary"] = Json{{"rows", reports.size()}, {"verdicts", std::move(verdicts)}, {"pass", pass}};
  return doc;
}

// ---- text output ----------------------------------------------------------

void print_text(std::ostream& out, const ClassificationReport& r) {
  out << r.id.to_string() << "  " << r.coset << "\n";
  out << "  dims g/h/m: " << r.dim_g << "/" << r.dim_h << "/" << r.dim_m
      << (r.symmetric_pair ? ", symmetric pair" : "") << "\n";
  out << "  invariant forms: sym2 " << r.sym2_dim << ", alt2 " << r.alt2_dim << ", closed " << r.closed_dim
      << (r.symplectic_sample ? "" : " (all degenerate)") << "\n";
  out << "  commutant: dim " << r.commutant_dim << (r.commutant_commutative ? ", commutative" : "") << "\n";
  auto structures = [&](const char* name, const StructureClass& c) {
    out << "  " << name << ": ";
    if (c.none)
      out << "none\n";
    else
      out << c.structures.size() << " up to sign, " << c.integrable() << " integrable"
          << (c.family ? ", solution family" : "") << "\n";
  };
  structures("complex", r.complex);
  structures("para-complex", r.para);
  auto pairs = [&](const char* name, const std::vector<PairRecord>& ps) {
    out << "  " << name << ":";
    if (ps.empty()) out << " none";
    for (const auto& p : ps)
      out << " [" << p.candidate << (p.integrable ? " int" : " non") << " (" << p.signature.pos << ","
          << p.signature.neg << ")]";
    out << "\n";
  };
  pairs("Kähler pairs", r.kahler);
  pairs("para-Kähler pairs", r.parakahler);
  out << "  verdict: " << to_string(r.comparison.verdict) << "\n";
  for (const auto& c : r.comparison.columns) {
    if (c.match) continue;
    out << "    " << c.column << ": expected " << c.expected << ", observed " << c.observed
        << (c.convention ? " (convention-dependent)" : "") << "  [" << c.citation << "]\n";
  }
}

// ---- subcommands ----------------------------------------------------------

std::vector<GeodesicSpaceId> parse_rows(const std::string& text) {
  std::vector<GeodesicSpaceId> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ';')) {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    item = item.substr(first, item.find_last_not_of(" \t") - first + 1);
    if (item == "generic") {
      for (const auto& id : generic_battery()) out.push_back(id);
    } else if (item == "convention") {
      for (const auto& id : convention_battery()) out.push_back(id);
    } else {
      out.push_back(GeodesicSpaceId::parse(item));
    }
  }
  return out;
}

int emit(std::ostream& out, const std::string& format, const std::string& command,
         const std::vector<ClassificationReport>& reports) {
  bool pass = true;
  for (const auto& r : reports) pass = pass && r.comparison.verdict != Verdict::Mismatch;
  if (format == "json") {
    out << document(command, reports).dump(2) << "\n";
  } else {
    for (const auto& r : reports) print_text(out, r);
    if (reports.size() != 1) out << (pass ? "PASS" : "FAIL") << ": " << reports.size() << " rows\n";
  }
  return pass ? kOk : kFail;
}

struct AlgebraCase {
  std::string name;
  std::function<LabeledAlgebra()> build;
};

std::vector<AlgebraCase> selftest_algebras() {
  std::vector<AlgebraCase> out;
  for (int n = 3; n <= 7; ++n)
    for (int q = 0; q <= n / 2; ++q)
      out.push_back({"so(" + std::to_string(n - q) + "," + std::to_string(q) + ")",
                     [=] { return build_so(n - q, q); }});
  for (int n = 2; n <= 5; ++n)
    for (int q = 0; q <= 1; ++q)
      out.push_back({"e(" + std::to_string(n - q) + "," + std::to_string(q) + ")",
                     [=] { return build_e(n - q, q); }});
  for (int n = 2; n <= 4; ++n) {
    out.push_back({"su(" + std::to_string(n + 1) + ")", [=] { return build_su(n + 1, 0); }});
    out.push_back({"su(1," + std::to_string(n) + ")", [=] { return build_su(1, n); }});
  }
  for (int n = 1; n <= 2; ++n) {
    out.push_back({"sp(" + std::to_string(n + 1) + ")", [=] { return build_sp(n + 1, 0); }});
    out.push_back({"sp(1," + std::to_string(n) + ")", [=] { return build_sp(1, n); }});
  }
  out.push_back({"f4", [] { return build_f4(); }});
  return out;
}

int selftest(std::ostream& out, const std::string& format) {
  bool pass = true;
  Json algebras = Json::array(), identities = Json::array();
  for (const auto& c : selftest_algebras()) {
    const auto l = c.build();
    const auto v = validate(l.algebra);
    pass = pass && !v;
    algebras.push_back(Json{{"algebra", c.name}, {"dim", l.algebra.dim()}, {"valid", !v}});
    if (format == "text") out << (v ? "FAIL " : "ok   ") << c.name << " (dim " << l.algebra.dim() << ")\n";
  }
  for (const auto& g : golden_identities()) {
    const bool ok = g.holds();
    pass = pass && ok;
    Json j{{"family", g.family}, {"statement", g.statement}, {"holds", ok}, {"as_displayed", g.as_displayed}};
    if (!g.note.empty()) j["note"] = g.note;
    identities.push_back(std::move(j));
    if (format == "text")
      out << (ok ? "ok   " : "FAIL ") << "[" << g.family << "] " << g.statement
          << (g.as_displayed ? "" : "  (corrected: " + g.note + ")") << "\n";
  }
  if (format == "json") {
    Json doc{{"schema_version", kReportSchemaVersion},
             {"generated_at", timestamp()},
             {"command", "selftest"},
             {"algebras", std::move(algebras)},
             {"identities", std::move(identities)},
             {"pass", pass}};
    out << doc.dump(2) << "\n";
  } else {
    out << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? kOk : kFail;
}

int flowcheck(std::ostream& out, const std::string& format, const std::string& chart, std::size_t samples,
              double tol, unsigned long long seed) {
  const auto r = flow::contact_residuals(flow::make_chart(chart), samples, tol, seed);
  if (format == "json") {
    Json doc{{"schema_version", kReportSchemaVersion},
             {"generated_at", timestamp()},
             {"command", "flowcheck"},
             {"chart", chart},
             {"samples", r.samples},
             {"seed", seed},
             {"tol", tol},
             {"max_theta_residual", r.max_theta},
             {"mean_theta_residual", r.mean_theta},
             {"max_dtheta_residual", r.max_dtheta},
             {"mean_dtheta_residual", r.mean_dtheta},
             {"pass", r.pass}};
    out << doc.dump(2) << "\n";
  } else {
    out << "chart " << chart << ", " << r.samples << " samples\n"
        << "  |theta(Gamma) - 1|     max " << r.max_theta << ", mean " << r.mean_theta << "\n"
        << "  |dtheta(Gamma, .)|     max " << r.max_dtheta << ", mean " << r.mean_dtheta << "\n"
        << (r.pass ? "PASS" : "FAIL") << " at tol " << tol << "\n";
  }
  return r.pass ? kOk : kFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariant geometric structures on spaces of oriented geodesics"};
  app.name("geostruct");
  app.require_subcommand(1);
  std::string format = "text";
  const std::vector<std::string> formats{"text", "json"};

  auto* classify_cmd = app.add_subcommand("classify", "classify one space");
  std::string space;
  classify_cmd->add_option("--space", space, "space id, e.g. LCP(2)")->required();
  classify_cmd->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* table_cmd = app.add_subcommand("table1", "compare rows with the classification table");
  std::string rows = "generic";
  table_cmd->add_option("--rows", rows, "';'-separated ids, or 'generic' / 'convention'");
  table_cmd->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* selftest_cmd = app.add_subcommand("selftest", "validate the algebras and the bracket identities");
  selftest_cmd->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* flow_cmd = app.add_subcommand("flowcheck", "contact identities of a unit sphere bundle");
  std::string chart = "sphere";
  std::size_t samples = 100;
  double tol = 1e-6;
  unsigned long long seed = 1;
  flow_cmd->add_option("--chart", chart, "sphere, hyperbolic or desitter");
  flow_cmd->add_option("--samples", samples)->check(CLI::PositiveNumber);
  flow_cmd->add_option("--tol", tol)->check(CLI::PositiveNumber);
  flow_cmd->add_option("--seed", seed);
  flow_cmd->add_option("--format", format)->check(CLI::IsMember(formats));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*classify_cmd) {
      const auto r = classify(GeodesicSpaceId::parse(space));
      return emit(out, format, "classify", {r});
    }
    if (*table_cmd) {
      const auto t = table1_compare(parse_rows(rows));
      return emit(out, format, "table1", t.reports);
    }
    if (*selftest_cmd) return selftest(out, format);
    if (*flow_cmd) return flowcheck(out, format, chart, samples, tol, seed);
  } catch (const InvalidSpaceId& e) {
    err << "error: " << e.what() << "\nsupported ids: " << supported_space_grammar() << "\n";
    return kUsage;
  } catch (const UnsupportedParameters& e) {
    err << "error: " << e.what() << "\nsupported ids: " << supported_space_grammar() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    // unknown chart names and similar argument errors
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace geostruct
