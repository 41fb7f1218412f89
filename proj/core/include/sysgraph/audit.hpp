#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sysgraph/bounds.hpp"
#include "sysgraph/graph.hpp"

namespace sysgraph {

/// Checks the auditor can run per graph: the bound catalog plus two structural
/// identities.
enum class AuditCheck {
  Sys,
  BB1,
  BB2,
  BB3,
  Mix1,
  Mix2,
  Mix3Printed,
  Mix3Recursive,
  BallA,
  BallB,
  Eq2,
  Gromov,
  EssentialityId,     // essentiality == ceil(chi/2) - 1
  TrivialityRadius,   // triviality radius == k - 1
};

std::string audit_check_name(AuditCheck c);
std::optional<AuditCheck> audit_check_from_name(std::string_view name);

/// Default mandatory suite: every check whose source theorem applies
/// unconditionally on its guarded domain. Mix3Printed is deliberately absent
/// (it is the report-only default: its printed form overstates small cases).
std::vector<AuditCheck> default_mandatory_checks();
std::vector<AuditCheck> default_report_only_checks();

/// Domain in which a check's source theorem applies and the auditor will run
/// it: the product-based estimates need k >= 2, and BB2/Mix1 (whose product is
/// taken at chi-2) additionally need chi >= 4; BallA needs k >= 2. Everything
/// else runs whenever chi >= 3, k >= 1.
bool audit_check_applicable(AuditCheck c, int chi, int k);

struct AuditCheckRow {
  AuditCheck id{};
  long long value = 0;
  bool satisfied = true;
  bool tight = false;
};

/// Everything the auditor derived from one graph. Ball-size estimates (BallA,
/// Eq2: radius k-1; BallB: radius k) are compared against the maximum ball
/// size at their radius, vertex-count estimates against n.
struct AuditRecord {
  std::string graph6;
  int n = 0;
  int chi = 0;
  std::optional<int> girth;
  std::optional<int> odd_girth;
  std::optional<int> k;  // (odd_girth - 1) / 2 when finite
  int essentiality = 0;
  int forest_essentiality = 0;
  std::vector<AuditCheckRow> checks;
};

struct AuditConfig {
  std::vector<AuditCheck> mandatory = default_mandatory_checks();
  std::vector<AuditCheck> report_only = default_report_only_checks();
  int jobs = 1;
  bool dedup = false;  // enumeration sources only: keep canonical representatives
  std::size_t max_violations = 1000;
  std::size_t max_findings = 1000;
  std::size_t max_tight = 500;
};

struct AuditCheckStats {
  AuditCheck id{};
  std::uint64_t applied = 0;
  std::uint64_t violated = 0;
  std::uint64_t tight = 0;
};

/// Sweep outcome. The record lists are sorted by graph6 key and truncated to
/// the configured caps; the *_count fields always hold the full totals, and
/// stats aggregates per check. Two runs over the same source with the same
/// config produce byte-identical serialized reports regardless of job count.
struct AuditReport {
  std::uint64_t total_graphs = 0;
  std::uint64_t violation_count = 0;
  std::uint64_t finding_count = 0;
  std::uint64_t tight_count = 0;
  std::vector<AuditRecord> violations;
  std::vector<AuditRecord> report_findings;
  std::vector<AuditRecord> tight_instances;
  std::vector<AuditCheckStats> stats;
  std::string source;
  AuditConfig config;
};

/// Audits one graph: exact invariants plus every applicable requested check.
/// Bipartite graphs yield an invariants-only record (the essentiality identity
/// is still checked; bound checks need an odd cycle). Checks appearing in both
/// lists are evaluated once.
AuditRecord audit_graph(const Graph& g, std::span<const AuditCheck> mandatory,
                        std::span<const AuditCheck> report_only);

/// Audits all labeled graphs on n_min..n_max vertices (2^C(n,2) per order, or
/// canonical representatives with config.dedup).
AuditReport audit_sweep_enumerate(int n_min, int n_max, const AuditConfig& config);

/// Audits a stream of graph6 lines (one graph per line).
AuditReport audit_sweep_lines(const std::vector<std::string>& lines, const std::string& source_name,
                              const AuditConfig& config);

/// Visits all 2^C(n,2) labeled graphs on n vertices in mask order (or only
/// canonical representatives when dedup is set); returns the visit count.
std::uint64_t enumerate_labeled(int n, const std::function<void(const Graph&)>& visit,
                                bool dedup = false);

std::string audit_report_to_json(const AuditReport& report);
std::string audit_report_to_csv(const AuditReport& report);

}  // namespace sysgraph
