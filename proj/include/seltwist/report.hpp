#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "seltwist/congruence.hpp"
#include "seltwist/correlation.hpp"
#include "seltwist/oracle.hpp"
#include "seltwist/prym.hpp"

namespace seltwist {

// Envelope for every CLI answer.  Certificate numerics are exact-rational
// strings ("p/q" or an integer string); floats appear only in fields marked
// as numeric approximations, and empirical estimates carry "empirical": true.
struct ReportDocument {
  std::string schema_version = "1";
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json body = nlohmann::json::object();
  std::vector<std::pair<std::string, std::string>> citations;  // (claim, basis)

  nlohmann::json to_json() const;
  static ReportDocument from_json(const nlohmann::json& j);
  std::string to_text() const;
};

// body builders shared by the CLI and the tests
nlohmann::json density_json(const Density& dens);
nlohmann::json congruence_set_json(const CongruenceSet& s);
nlohmann::json certificate_json(const CorrelationCertificate& cert);
nlohmann::json analysis_json(const AnalysisReport& rep);
nlohmann::json prym_json(const PrymCertificate& cert);
nlohmann::json oracle_report_json(const OracleReport& rep);
nlohmann::json hypothesis_json(const HypothesisCase& h);

}  // namespace seltwist
