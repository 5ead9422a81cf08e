#include "seltwist/report.hpp"

#include <iomanip>
#include <sstream>

namespace seltwist {

using nlohmann::json;

namespace {

std::string approx_str(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

void render(const json& j, const std::string& prefix, std::ostringstream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
      render(it.value(), key, os);
    }
  } else if (j.is_array()) {
    int i = 0;
    for (const auto& item : j) {
      render(item, prefix + "[" + std::to_string(i++) + "]", os);
    }
    if (j.empty()) os << prefix << ": []\n";
  } else if (j.is_string()) {
    os << prefix << ": " << j.get<std::string>() << "\n";
  } else {
    os << prefix << ": " << j.dump() << "\n";
  }
}

}  // namespace

json ReportDocument::to_json() const {
  json j;
  j["schema_version"] = schema_version;
  j["command"] = command;
  j["inputs"] = inputs;
  j["body"] = body;
  json cit = json::array();
  for (const auto& [claim, basis] : citations) cit.push_back({{"claim", claim}, {"basis", basis}});
  j["citations"] = cit;
  return j;
}

ReportDocument ReportDocument::from_json(const json& j) {
  ReportDocument r;
  r.schema_version = j.at("schema_version").get<std::string>();
  r.command = j.at("command").get<std::string>();
  r.inputs = j.at("inputs");
  r.body = j.at("body");
  for (const auto& c : j.at("citations"))
    r.citations.emplace_back(c.at("claim").get<std::string>(), c.at("basis").get<std::string>());
  return r;
}

std::string ReportDocument::to_text() const {
  std::ostringstream os;
  os << "# " << command << " (schema " << schema_version << ")\n";
  render(inputs, "input", os);
  render(body, "", os);
  for (const auto& [claim, basis] : citations) os << "note: " << claim << " [" << basis << "]\n";
  return os.str();
}

json density_json(const Density& dens) {
  json j;
  j["relative"] = dens.relative.to_string();
  j["ambient"] = dens.ambient == Ambient::Squarefree ? "squarefree" : "sixth-power-free";
  std::string vals;
  for (size_t i = 0; i < dens.global_vals.size(); ++i)
    vals += (i ? "," : "") + std::to_string(dens.global_vals[i]);
  j["vals"] = vals;
  j["ambient_constant_approx"] = approx_str(dens.ambient_constant());
  j["approx"] = approx_str(dens.approx());
  j["empirical"] = false;
  return j;
}

json congruence_set_json(const CongruenceSet& s) {
  json j;
  j["serialized"] = s.serialize();
  json conds = json::array();
  for (const auto& c : s.conditions) conds.push_back(c.serialize());
  j["conditions"] = conds;
  return j;
}

json certificate_json(const CorrelationCertificate& cert) {
  json j;
  j["m"] = std::to_string(cert.m);
  j["avg_min_lb"] = cert.avg_min_lb.to_string();
  j["avg_max_ub"] = cert.avg_max_ub.to_string();
  j["s0_lb"] = cert.s0_lb.to_string();
  return j;
}

json hypothesis_json(const HypothesisCase& h) {
  json j;
  switch (h.kind) {
    case HypothesisCase::Kind::Case1:
      j["case"] = "1";
      j["q"] = h.q.to_string();
      break;
    case HypothesisCase::Kind::Case2:
      j["case"] = "2";
      j["q1"] = h.q1.to_string();
      j["q2"] = h.q2.to_string();
      break;
    case HypothesisCase::Kind::None:
      j["case"] = "none";
      break;
  }
  return j;
}

json analysis_json(const AnalysisReport& rep) {
  json j;
  j["curve"] = {{"a", rep.a.to_string()}, {"b", rep.b.to_string()}};
  j["hypothesis"] = hypothesis_json(rep.hypothesis);
  j["t_prime"] = congruence_set_json(rep.t_prime);
  j["eta_exponent"] = {{"m", std::to_string(rep.eta_exponent)},
                       {"method", rep.eta_exponent_exact ? "exact" : "empirical"},
                       {"sampled_max", std::to_string(rep.eta_exponent_sampled)}};
  j["certificate"] = certificate_json(rep.certificate);
  j["relative_proportion_lb"] = rep.relative_proportion_lb.to_string();
  j["t_prime_density"] = density_json(rep.t_prime_density);
  j["absolute_lb"] = {{"relative_factor", rep.absolute_lb_relative.to_string()},
                      {"note", "multiply by the ambient density constant"}};
  j["samples"] = {{"height", std::to_string(rep.sample_height)},
                  {"checked", std::to_string(rep.samples_checked)}};
  json ver = json::array();
  for (const auto& s : rep.sample_verification) {
    ver.push_back({{"d", std::to_string(s.d)},
                   {"phi", std::to_string(s.phi)},
                   {"phi_prime", std::to_string(s.phi_prime)},
                   {"psi", std::to_string(s.psi)},
                   {"psi_prime", std::to_string(s.psi_prime)}});
  }
  j["samples"]["verified_prefix"] = ver;
  return j;
}

json prym_json(const PrymCertificate& cert) {
  json j;
  json bad = json::array();
  for (const auto& p : cert.family.bad_primes) bad.push_back(p.to_string());
  j["family"] = {{"a", cert.family.a.to_string()},
                 {"b", cert.family.b.to_string()},
                 {"bad_primes", bad},
                 {"bad_primes_default", cert.family.bad_primes_default}};
  j["sigma"] = congruence_set_json(cert.sigma);
  j["sigma_density"] = density_json(cert.sigma_density);
  json sc = json::array();
  for (const auto& s : cert.scenarios)
    sc.push_back({std::to_string(s.e[0]), std::to_string(s.e[1]), std::to_string(s.e[2]),
                  std::to_string(s.e[3])});
  j["scenarios"] = sc;
  j["branch_a"] = {{"input_half", cert.branch_a.half.to_string()},
                   {"input_five_sixths", cert.branch_a.five_sixths.to_string()},
                   {"proportion", cert.branch_a.proportion.to_string()}};
  j["branch_b"] = {{"positive_case", certificate_json(cert.branch_b.positive_case)},
                   {"negative_case", certificate_json(cert.branch_b.negative_case)},
                   {"sign_flip_k", cert.branch_b.sign_flip_k.to_string()}};
  j["conditional"] = cert.conditional;
  json res = json::array();
  for (const auto& [d, tag] : cert.oracle_resolution)
    res.push_back({{"d", std::to_string(d)}, {"resolution", tag}});
  j["resolutions"] = res;
  return j;
}

json oracle_report_json(const OracleReport& rep) {
  json j;
  j["checked"] = std::to_string(rep.checked);
  json mism = json::array();
  for (const auto& m : rep.mismatches)
    mism.push_back({{"input", m.input}, {"expected", m.expected}, {"got", m.got}});
  j["mismatches"] = mism;
  j["passed"] = rep.passed();
  return j;
}

}  // namespace seltwist
