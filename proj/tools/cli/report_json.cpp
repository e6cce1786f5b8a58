#include "report_json.hpp"

#include "balancegate/errors.hpp"

namespace balancegate::cli {

namespace {

Severity severity_from(const std::string& s) {
  if (s == "guarantee") return Severity::kGuarantee;
  if (s == "warning") return Severity::kWarning;
  throw ValidationError("unknown severity '" + s + "'");
}

Verdict verdict_from(const std::string& s) {
  if (s == "accept") return Verdict::kAccept;
  if (s == "reject") return Verdict::kReject;
  throw ValidationError("unknown verdict '" + s + "'");
}

}  // namespace

nlohmann::json finding_to_json(const RuleFinding& f) {
  return {{"rule_id", f.rule_id},
          {"severity", to_string(f.severity)},
          {"message", f.message},
          {"evidence", f.evidence}};
}

nlohmann::json report_to_json(const AnalysisReport& r) {
  nlohmann::json regs = nlohmann::json::array();
  for (const auto& [name, length] : r.registers)
    regs.push_back({{"name", std::string(1, name)}, {"length", length}});
  nlohmann::json findings = nlohmann::json::array();
  for (const auto& f : r.findings) findings.push_back(finding_to_json(f));
  nlohmann::json h = nlohmann::json::array();
  for (const auto& e : r.final_h) h.push_back({{"mask", e.mask}, {"coefficient", e.coefficient.str()}});
  return {{"function", r.function},
          {"registers", regs},
          {"period", r.period.str()},
          {"ones", r.ones.str()},
          {"zeros", r.zeros.str()},
          {"deviation", to_fraction_string(r.deviation)},
          {"tolerance", to_fraction_string(r.tolerance)},
          {"verdict", to_string(r.verdict)},
          {"magnitude", r.magnitude_label},
          {"findings", findings},
          {"final_h", h}};
}

AnalysisReport report_from_json(const nlohmann::json& doc) {
  AnalysisReport r;
  r.function = doc.at("function").get<std::string>();
  for (const auto& reg : doc.at("registers"))
    r.registers.emplace_back(reg.at("name").get<std::string>().at(0), reg.at("length").get<std::size_t>());
  r.period = parse_bigint(doc.at("period").get<std::string>());
  r.ones = parse_bigint(doc.at("ones").get<std::string>());
  r.zeros = parse_bigint(doc.at("zeros").get<std::string>());
  r.deviation = parse_rational(doc.at("deviation").get<std::string>());
  r.tolerance = parse_rational(doc.at("tolerance").get<std::string>());
  r.verdict = verdict_from(doc.at("verdict").get<std::string>());
  r.magnitude_label = doc.at("magnitude").get<std::string>();
  for (const auto& f : doc.at("findings"))
    r.findings.push_back({f.at("rule_id").get<std::string>(),
                          severity_from(f.at("severity").get<std::string>()),
                          f.at("message").get<std::string>(),
                          f.at("evidence").get<std::vector<std::string>>()});
  for (const auto& e : doc.at("final_h"))
    r.final_h.push_back({e.at("mask").get<std::string>(),
                         parse_bigint(e.at("coefficient").get<std::string>())});
  return r;
}

}  // namespace balancegate::cli
