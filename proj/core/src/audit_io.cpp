#include "sysgraph/audit.hpp"

#include <json.hpp>

namespace sysgraph {

namespace {

using nlohmann::json;

json finite_or_infinity(const std::optional<int>& v) {
  if (v) return *v;
  return "infinity";
}

json record_json(const AuditRecord& rec) {
  json checks = json::array();
  for (const AuditCheckRow& row : rec.checks) {
    checks.push_back({{"id", audit_check_name(row.id)},
                      {"value", row.value},
                      {"satisfied", row.satisfied},
                      {"tight", row.tight}});
  }
  json j{{"graph6", rec.graph6},
         {"n", rec.n},
         {"chi", rec.chi},
         {"girth", finite_or_infinity(rec.girth)},
         {"oddGirth", finite_or_infinity(rec.odd_girth)},
         {"essentiality", rec.essentiality},
         {"forestEssentiality", rec.forest_essentiality},
         {"checks", std::move(checks)}};
  if (rec.k)
    j["k"] = *rec.k;
  else
    j["k"] = nullptr;
  return j;
}

json records_json(const std::vector<AuditRecord>& records) {
  json arr = json::array();
  for (const AuditRecord& rec : records) arr.push_back(record_json(rec));
  return arr;
}

json names_json(const std::vector<AuditCheck>& checks) {
  json arr = json::array();
  for (AuditCheck c : checks) arr.push_back(audit_check_name(c));
  return arr;
}

}  // namespace

std::string audit_report_to_json(const AuditReport& report) {
  json stats = json::array();
  for (const AuditCheckStats& s : report.stats) {
    stats.push_back({{"id", audit_check_name(s.id)},
                     {"applied", s.applied},
                     {"violated", s.violated},
                     {"tight", s.tight}});
  }
  json j{{"source", report.source},
         {"totalGraphs", report.total_graphs},
         {"violationCount", report.violation_count},
         {"findingCount", report.finding_count},
         {"tightCount", report.tight_count},
         {"violations", records_json(report.violations)},
         {"reportFindings", records_json(report.report_findings)},
         {"tightInstances", records_json(report.tight_instances)},
         {"stats", std::move(stats)},
         // config echoes what determines the result; jobs only schedules it,
         // and reports stay byte-identical across worker counts.
         {"config",
          {{"mandatory", names_json(report.config.mandatory)},
           {"reportOnly", names_json(report.config.report_only)},
           {"dedup", report.config.dedup},
           {"maxViolations", report.config.max_violations},
           {"maxFindings", report.config.max_findings},
           {"maxTight", report.config.max_tight}}}};
  return j.dump(2) + "\n";
}

std::string audit_report_to_csv(const AuditReport& report) {
  std::string out = "check,applied,violated,tight\n";
  for (const AuditCheckStats& s : report.stats) {
    out += audit_check_name(s.id);
    out += ',';
    out += std::to_string(s.applied);
    out += ',';
    out += std::to_string(s.violated);
    out += ',';
    out += std::to_string(s.tight);
    out += '\n';
  }
  return out;
}

}  // namespace sysgraph
