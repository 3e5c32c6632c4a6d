#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "slopes/report.hpp"

using json = nlohmann::ordered_json;
using namespace slopes;

namespace {

constexpr const char* kVersion = "slopes 1.0.0";

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return 2;
}

std::optional<Integer> triangle_bound_override() {
  const char* env = std::getenv("SLOPES_TRIANGLE_BOUND");
  if (env == nullptr || *env == '\0') return std::nullopt;
  try {
    return Integer(env);
  } catch (const std::exception&) {
    throw CLI::ValidationError("SLOPES_TRIANGLE_BOUND",
                               "must be a positive integer");
  }
}

std::string vertex_list(const Edgepath& path) {
  if (path.constant)
    return "constant at u = " + rat_to_string(path.constant_u);
  return path.to_string();
}

json system_json(const SystemRecord& rec) {
  json sys;
  sys["type"] = system_type_name(rec.system.type);
  sys["twist"] = rat_to_string(rec.system.twist);
  sys["slope"] = rat_to_string(rec.slope);
  sys["paths"] = json::array();
  for (const auto& p : rec.system.paths) sys["paths"].push_back(vertex_list(p));
  sys["basic_paths"] = json::array();
  for (const auto& p : rec.system.basic)
    sys["basic_paths"].push_back(vertex_list(p));
  if (rec.r_cycle)
    sys["r_cycle"] = rec.r_cycle->to_string();
  else
    sys["r_cycle"] = nullptr;
  sys["status"] = status_name(rec.verdict.status);
  sys["rule"] = rule_name(rec.verdict.rule);
  if (!rec.verdict.notes.empty()) sys["notes"] = rec.verdict.notes;
  return sys;
}

json checks_json(const std::vector<CheckLine>& checks) {
  json arr = json::array();
  for (const auto& c : checks) {
    json line;
    line["name"] = c.name;
    line["ok"] = c.ok;
    if (!c.detail.empty()) line["detail"] = c.detail;
    arr.push_back(line);
  }
  return arr;
}

json certificate_json(const Certificate& cert) {
  json out;
  out["n"] = cert.n;
  out["ok"] = cert.ok;
  out["cases"] = json::array();
  for (const auto& c : cert.cases) {
    json cj;
    cj["case"] = c.case_id;
    cj["ok"] = c.ok();
    cj["identities"] = checks_json(c.identities);
    cj["forcings"] = c.forcings;
    cj["finiteness"] = json::array();
    for (const auto& w : c.finiteness) {
      json wj;
      wj["source"] = w.source;
      wj["polynomial"] = w.polynomial;
      wj["degree"] = w.degree;
      cj["finiteness"].push_back(wj);
    }
    cj["lambda"] = json::array();
    for (const auto& l : c.lambda) {
      json lj;
      lj["source"] = l.source;
      lj["value"] = l.value;
      lj["explicit"] = l.explicit_value;
      cj["lambda"].push_back(lj);
    }
    cj["discrepancies"] = c.discrepancies;
    out["cases"].push_back(cj);
  }
  out["lambda"] = json::array();
  for (const auto& l : cert.lambda.entries) {
    json lj;
    lj["source"] = l.source;
    lj["value"] = l.value;
    lj["explicit"] = l.explicit_value;
    out["lambda"].push_back(lj);
  }
  out["discrepancies"] = cert.discrepancies;
  return out;
}

void print_checks_text(std::ostream& os, const std::vector<CheckLine>& checks) {
  for (const auto& c : checks) {
    os << (c.ok ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << "\n";
  }
}

void print_certificate_text(std::ostream& os, const json& cert) {
  os << "Lambda (candidate trace set, n = " << cert["n"].get<int>() << "):\n";
  for (const auto& l : cert["lambda"]) {
    os << "  " << l["value"].get<std::string>() << "  [from "
       << l["source"].get<std::string>() << "]\n";
  }
  os << "finiteness witnesses:\n";
  for (const auto& c : cert["cases"])
    for (const auto& w : c["finiteness"])
      os << "  " << c["case"].get<std::string>() << ": "
         << w["source"].get<std::string>() << ": "
         << w["polynomial"].get<std::string>() << " (degree "
         << w["degree"].get<int>() << ")\n";
}

void emit(const json& report, const std::string& format,
          const std::vector<CheckLine>* checks) {
  if (format == "json") {
    std::cout << report.dump(2) << "\n";
    return;
  }
  std::cout << report["tool"].get<std::string>() << " "
            << report["command"].get<std::string>() << "\n";
  if (report.contains("input"))
    std::cout << "input: " << report["input"].dump() << "\n";
  if (checks != nullptr) print_checks_text(std::cout, *checks);
  if (report.contains("slope_table")) {
    for (const auto& rec : report["slope_table"]) {
      std::cout << "slope " << rec["slope"].get<std::string>() << ":\n";
      for (const auto& sys : rec["systems"]) {
        std::cout << "  type " << sys["type"].get<std::string>() << ", twist "
                  << sys["twist"].get<std::string>() << ", "
                  << sys["status"].get<std::string>() << " ("
                  << sys["rule"].get<std::string>() << ")";
        if (!sys["r_cycle"].is_null())
          std::cout << ", r-cycle " << sys["r_cycle"].get<std::string>();
        std::cout << "\n";
        for (const auto& p : sys["paths"])
          std::cout << "    " << p.get<std::string>() << "\n";
      }
    }
  }
  if (report.contains("certificate"))
    print_certificate_text(std::cout, report["certificate"]);
  if (report.contains("reports"))
    for (const auto& per : report["reports"])
      print_certificate_text(std::cout, per["section3"]["certificate"]);
  if (report.contains("ok"))
    std::cout << (report["ok"].get<bool>() ? "all checks passed"
                                           : "CHECKS FAILED")
              << "\n";
}

int cmd_knot(const std::string& tangles, std::optional<long> ref_override,
             const std::string& json_path, const std::string& format) {
  auto knot = MontesinosKnot::parse(tangles);
  if (!knot) return usage_error("malformed tangle list: " + tangles);
  Rational ref;
  if (ref_override) {
    ref = Rational(*ref_override);
  } else {
    auto computed = reference_twist(*knot);
    if (!computed)
      return usage_error(
          "reference twist is not computable for this knot; pass "
          "--reference-twist");
    ref = *computed;
  }
  Integer bound =
      triangle_bound_override().value_or(default_triangle_bound(*knot));
  auto table = slope_table(*knot, ref, bound);

  json report;
  report["tool"] = kVersion;
  report["command"] = "knot";
  report["input"] = {{"tangles", knot->to_string()},
                     {"reference_twist", rat_to_string(ref)},
                     {"triangle_bound", bound.str()}};
  report["slope_table"] = json::array();
  for (const auto& rec : table) {
    json rj;
    rj["slope"] = rat_to_string(rec.slope);
    rj["systems"] = json::array();
    for (const auto& sys : rec.systems) rj["systems"].push_back(system_json(sys));
    report["slope_table"].push_back(rj);
  }
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) return usage_error("cannot write " + json_path);
    out << report.dump(2) << "\n";
  }
  emit(report, format, nullptr);
  return 0;
}

json section2_json(const Section2Report& rep) {
  json report;
  report["tool"] = kVersion;
  report["command"] = "verify-section2";
  report["input"] = {{"n", rep.n}};
  report["checks"] = checks_json(rep.checks);
  report["ok"] = rep.ok();
  return report;
}

json section3_json(const Section3Report& rep) {
  json report;
  report["tool"] = kVersion;
  report["command"] = "verify-section3";
  report["input"] = {{"n", rep.n}};
  report["checks"] = checks_json(rep.checks);
  report["certificate"] = certificate_json(rep.certificate);
  report["ok"] = rep.ok();
  return report;
}

int cmd_verify_section2(int n, const std::string& format) {
  MontesinosKnot knot = kn_knot(n);
  Integer bound =
      triangle_bound_override().value_or(default_triangle_bound(knot));
  Section2Report rep = verify_section2_claims(n, bound);
  emit(section2_json(rep), format, &rep.checks);
  return rep.ok() ? 0 : 1;
}

int cmd_verify_section3(int n, const std::string& format) {
  Section3Report rep = verify_section3_claims(n);
  emit(section3_json(rep), format, &rep.checks);
  return rep.ok() ? 0 : 1;
}

int cmd_paper(const std::string& range, const std::string& format) {
  auto sep = range.find("..");
  if (sep == std::string::npos)
    return usage_error("--n-range expects <a>..<b>");
  int lo = 0, hi = 0;
  try {
    lo = std::stoi(range.substr(0, sep));
    hi = std::stoi(range.substr(sep + 2));
  } catch (const std::exception&) {
    return usage_error("--n-range expects integers <a>..<b>");
  }
  if (lo < 2 || hi < lo) return usage_error("--n-range requires 2 <= a <= b");

  struct PerN {
    Section2Report s2;
    Section3Report s3;
  };
  std::vector<PerN> results(hi - lo + 1);
  std::vector<std::thread> workers;
  for (int n = lo; n <= hi; ++n)
    workers.emplace_back([n, lo, &results] {
      MontesinosKnot knot = kn_knot(n);
      Integer bound =
          triangle_bound_override().value_or(default_triangle_bound(knot));
      results[n - lo].s2 = verify_section2_claims(n, bound);
      results[n - lo].s3 = verify_section3_claims(n);
    });
  for (auto& w : workers) w.join();

  json report;
  report["tool"] = kVersion;
  report["command"] = "paper";
  report["input"] = {{"n_range", range}};
  report["reports"] = json::array();
  bool all_ok = true;
  std::vector<CheckLine> flat;
  for (int n = lo; n <= hi; ++n) {
    const PerN& r = results[n - lo];
    json per;
    per["n"] = n;
    per["section2"] = section2_json(r.s2);
    per["section3"] = section3_json(r.s3);
    per["ok"] = r.s2.ok() && r.s3.ok();
    report["reports"].push_back(per);
    all_ok = all_ok && r.s2.ok() && r.s3.ok();
    for (const auto& c : r.s2.checks)
      flat.push_back({"n=" + std::to_string(n) + " section2: " + c.name, c.ok,
                      c.detail});
    for (const auto& c : r.s3.checks)
      flat.push_back({"n=" + std::to_string(n) + " section3: " + c.name, c.ok,
                      c.detail});
  }
  report["ok"] = all_ok;
  emit(report, format, &flat);
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boundary slopes of Montesinos knots via the Hatcher-Oertel "
               "edgepath algorithm, with symbolic character-variety "
               "verification"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));

  auto* knot_cmd = app.add_subcommand("knot", "Slope table for a knot");
  std::string tangles, json_path;
  std::optional<long> ref_override;
  knot_cmd->add_option("--tangles", tangles, "Comma-separated tangle fractions")
      ->required();
  knot_cmd->add_option("--reference-twist", ref_override,
                       "Override the Seifert reference twist");
  knot_cmd->add_option("--json", json_path, "Also write a JSON report here");

  auto* s2_cmd = app.add_subcommand("verify-section2",
                                    "Verify the edgepath-system claims");
  int n2 = 0;
  s2_cmd->add_option("--n", n2, "Twist parameter (n >= 2)")->required();

  auto* s3_cmd = app.add_subcommand("verify-section3",
                                    "Verify the character-variety claims");
  int n3 = 0;
  s3_cmd->add_option("--n", n3, "Twist parameter (n >= 2)")->required();

  auto* paper_cmd =
      app.add_subcommand("paper", "Run both verifications over a range of n");
  std::string range;
  paper_cmd->add_option("--n-range", range, "Range <a>..<b>")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (knot_cmd->parsed())
      return cmd_knot(tangles, ref_override, json_path, format);
    if (s2_cmd->parsed()) {
      if (n2 < 2) return usage_error("verify-section2 requires --n >= 2");
      return cmd_verify_section2(n2, format);
    }
    if (s3_cmd->parsed()) {
      if (n3 < 2) return usage_error("verify-section3 requires --n >= 2");
      return cmd_verify_section3(n3, format);
    }
    if (paper_cmd->parsed()) return cmd_paper(range, format);
  } catch (const CLI::ValidationError& e) {
    return usage_error(e.what());
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  }
  return usage_error("no command");
}
