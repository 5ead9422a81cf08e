// seltwist: local/global ratio bookkeeping for sextic twist families of
// curves y^2 + axy + by = x^3, congruence twist sets, and the proportion
// certificates built from them.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "seltwist/report.hpp"

using namespace seltwist;
using nlohmann::json;

namespace {

int emit(const ReportDocument& doc, bool text) {
  if (text)
    std::cout << doc.to_text();
  else
    std::cout << doc.to_json().dump(2) << "\n";
  return 0;
}

int emit_error(const std::string& type, const std::string& message, bool text, int code) {
  if (text) {
    std::cout << "error (" << type << "): " << message << "\n";
  } else {
    json j;
    j["error"] = {{"type", type}, {"message", message}};
    std::cout << j.dump(2) << "\n";
  }
  return code;
}

int classify_and_emit(const std::exception& e, bool text) {
  if (dynamic_cast<const HypothesisNoneError*>(&e))
    return emit_error("hypothesis_none", e.what(), text, 2);
  if (dynamic_cast<const RatioNotOneError*>(&e))
    return emit_error("ratio_not_one", e.what(), text, 3);
  if (dynamic_cast<const SigmaMembershipError*>(&e))
    return emit_error("not_in_sigma", e.what(), text, 4);
  if (dynamic_cast<const ScenarioFileError*>(&e))
    return emit_error("scenario_file", e.what(), text, 5);
  if (dynamic_cast<const CurveError*>(&e))
    return emit_error("invalid_curve", e.what(), text, 1);
  return emit_error("invalid_input", e.what(), text, 1);
}

json place_row(const CurveEab& c, const TwistClass& d, const Place& v) {
  json row;
  row["place"] = v.to_string();
  json exps, vals;
  for (IsogenyId iso : {IsogenyId::Phi, IsogenyId::PhiPrime, IsogenyId::Psi, IsogenyId::PsiPrime}) {
    SelmerRatio r = v.infinite ? local_ratio_infty(iso, d) : local_ratio(c, iso, d, v.p);
    exps[isogeny_name(iso)] = std::to_string(r.exponent);
    vals[isogeny_name(iso)] = r.to_string();
  }
  row["exponents"] = exps;
  row["values"] = vals;
  return row;
}

int cmd_analyze(long long a, long long b, long long sample_height, bool text) {
  CurveEab curve{BigInt(a), BigInt(b)};
  AnalysisReport rep = analyze(curve, sample_height);
  ReportDocument doc;
  doc.command = "analyze";
  doc.inputs = {{"a", std::to_string(a)},
                {"b", std::to_string(b)},
                {"sample_height", std::to_string(sample_height)}};
  doc.body = analysis_json(rep);
  doc.citations = rep.narrative;
  return emit(doc, text);
}

int cmd_ratios(long long a, long long b, long long d, const std::string& place, bool text) {
  CurveEab curve{BigInt(a), BigInt(b)};
  TwistClass t{BigInt(d)};
  require_in_sigma(curve, t);

  ReportDocument doc;
  doc.command = "ratios";
  doc.inputs = {{"a", std::to_string(a)},
                {"b", std::to_string(b)},
                {"d", std::to_string(d)},
                {"place", place}};
  json rows = json::array();
  if (place == "all") {
    for (const Place& v : support_places(curve, t)) rows.push_back(place_row(curve, t, v));
  } else if (place == "inf") {
    rows.push_back(place_row(curve, t, Place::at_infinity()));
  } else {
    BigInt p = BigInt::from_string(place);
    if (!is_prime(p)) throw DomainError("--place must be a prime, inf, or all");
    rows.push_back(place_row(curve, t, Place::finite(p)));
  }
  doc.body["local"] = rows;
  json globals;
  for (IsogenyId iso : {IsogenyId::Phi, IsogenyId::PhiPrime, IsogenyId::Psi, IsogenyId::PsiPrime}) {
    SelmerRatio r = global_ratio(curve, iso, t);
    globals[isogeny_name(iso)] = r.to_string();
  }
  doc.body["global"] = globals;
  doc.citations = {
      {"away from 3, the conductor and the twist support, every local ratio is 1",
       "computed: good-reduction comparison"},
      {"values at conductor primes follow the split/nonsplit table",
       "computed: twisted reduction types and j-invariant valuations"}};
  return emit(doc, text);
}

int cmd_scan(long long a, long long b, long long height, bool text) {
  CurveEab curve{BigInt(a), BigInt(b)};
  CongruenceSet tp = t_prime_set(curve);
  std::vector<long long> members = enumerate_members(tp, height);

  ReportDocument doc;
  doc.command = "scan";
  doc.inputs = {{"a", std::to_string(a)},
                {"b", std::to_string(b)},
                {"height", std::to_string(height)}};
  json rows = json::array();
  long long count = 0;
  for (long long d : members) {
    TwistClass t{BigInt(d)};
    bool ok = true;
    for (IsogenyId iso :
         {IsogenyId::Phi, IsogenyId::PhiPrime, IsogenyId::Psi, IsogenyId::PsiPrime})
      ok = ok && global_ratio(curve, iso, t).exponent == 0;
    ++count;
    long long h = d < 0 ? -d : d;
    json row;
    row["d"] = std::to_string(d);
    row["verified"] = ok;
    row["running_count"] = std::to_string(count);
    row["running_density"] = Rational(count, 2 * h).to_string();
    row["empirical"] = true;
    rows.push_back(row);
  }
  doc.body["members"] = rows;
  doc.body["count"] = std::to_string(count);
  if (height > 0) {
    json emp;
    emp["value"] = Rational(count, 2 * height).to_string();
    emp["empirical"] = true;
    doc.body["empirical_density"] = emp;
  }
  doc.body["expected_density"] = density_json(density(tp));
  doc.citations = {{"every member has all four global ratios equal to 1",
                    "computed: per-member verification along the scan"}};
  return emit(doc, text);
}

int cmd_prym(long long a, long long b, const std::string& scenario_file, bool text) {
  if (!(a > b && b > 0)) throw DomainError("prym family needs a > b > 0");
  PrymFamily fam{BigInt(a), BigInt(b)};
  std::optional<ScenarioOracle> oracle;
  if (!scenario_file.empty()) {
    std::ifstream in(scenario_file);
    if (!in) throw ScenarioFileError("cannot open scenario file: " + scenario_file);
    std::stringstream buf;
    buf << in.rdbuf();
    oracle = parse_scenario_table(buf.str());
  }
  PrymCertificate cert = scenario_analysis(fam, oracle);
  ReportDocument doc;
  doc.command = "prym";
  doc.inputs = {{"a", std::to_string(a)},
                {"b", std::to_string(b)},
                {"scenario_file", scenario_file.empty() ? "(none)" : scenario_file}};
  doc.body = prym_json(cert);
  doc.citations = cert.narrative;
  return emit(doc, text);
}

int cmd_oracle(int trials, unsigned seed, long long x, bool text) {
  OracleReport residues = run_residue_class_checks(100, 1000000);
  OracleReport ratios = run_ratio_cross_checks(trials, seed);
  OracleReport dens = run_density_checks(x, 0.05);

  ReportDocument doc;
  doc.command = "oracle";
  doc.inputs = {{"trials", std::to_string(trials)},
                {"seed", std::to_string(seed)},
                {"X", std::to_string(x)}};
  doc.body["residue_checks"] = oracle_report_json(residues);
  doc.body["ratio_checks"] = oracle_report_json(ratios);
  doc.body["density_checks"] = oracle_report_json(dens);
  bool all = residues.passed() && ratios.passed() && dens.passed();
  doc.body["passed"] = all;
  doc.citations = {{"enumerated unit powers match the closed-form residue predicates",
                    "computed: exhaustive enumeration"},
                   {"table entries match the reduction-type route",
                    "computed: independent code paths compared bit for bit"}};
  emit(doc, text);
  return all ? 0 : 6;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"selmer-ratio bookkeeping for sextic twist families"};
  app.require_subcommand(1);

  long long a = 0, b = 0, d = 0;
  long long sample_height = 2000, height = 1000;
  std::string place = "all", scenario_file;
  int trials = 1000;
  unsigned seed = 20240601;
  long long oracle_x = 100000;
  bool text = false;

  auto add_mode = [&](CLI::App* sub) {
    sub->add_flag("--text", text, "human-readable output (default: JSON)");
    sub->add_flag("--json", "JSON output (default)");
  };

  CLI::App* s_analyze = app.add_subcommand("analyze", "full proportion certificate for a curve");
  s_analyze->add_option("a", a, "curve coefficient a")->required();
  s_analyze->add_option("b", b, "curve coefficient b")->required();
  s_analyze->add_option("--sample-height", sample_height, "verify members up to this height");
  add_mode(s_analyze);

  CLI::App* s_ratios = app.add_subcommand("ratios", "local and global ratios for one twist");
  s_ratios->add_option("a", a)->required();
  s_ratios->add_option("b", b)->required();
  s_ratios->add_option("d", d, "twist class")->required();
  s_ratios->add_option("--place", place, "prime, inf, or all");
  add_mode(s_ratios);

  CLI::App* s_scan = app.add_subcommand("scan", "enumerate the twist set and verify ratios");
  s_scan->add_option("a", a)->required();
  s_scan->add_option("b", b)->required();
  s_scan->add_option("--height", height, "height bound");
  add_mode(s_scan);

  CLI::App* s_prym = app.add_subcommand("prym", "two-branch certificate for a prym family");
  s_prym->add_option("a", a)->required();
  s_prym->add_option("b", b)->required();
  s_prym->add_option("--scenario-file", scenario_file, "d,e1,e2,e3,e4 table");
  add_mode(s_prym);

  CLI::App* s_oracle = app.add_subcommand("oracle", "run the brute-force cross-checks");
  s_oracle->add_option("--trials", trials, "ratio cross-check sample count");
  s_oracle->add_option("--seed", seed, "sampling seed");
  s_oracle->add_option("--max-X", oracle_x, "density enumeration bound");
  add_mode(s_oracle);

  CLI11_PARSE(app, argc, argv);

  try {
    if (s_analyze->parsed()) return cmd_analyze(a, b, sample_height, text);
    if (s_ratios->parsed()) return cmd_ratios(a, b, d, place, text);
    if (s_scan->parsed()) return cmd_scan(a, b, height, text);
    if (s_prym->parsed()) return cmd_prym(a, b, scenario_file, text);
    if (s_oracle->parsed()) return cmd_oracle(trials, seed, oracle_x, text);
  } catch (const std::exception& e) {
    return classify_and_emit(e, text);
  }
  return 1;
}
