#include "sysgraph/audit.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <exception>
#include <limits>
#include <map>
#include <stdexcept>
#include <thread>

#include "sysgraph/graph6.hpp"
#include "sysgraph/invariants.hpp"

namespace sysgraph {

namespace {

constexpr std::array<AuditCheck, 14> kAllChecks = {
    AuditCheck::Sys,           AuditCheck::BB1,
    AuditCheck::BB2,           AuditCheck::BB3,
    AuditCheck::Mix1,          AuditCheck::Mix2,
    AuditCheck::Mix3Printed,   AuditCheck::Mix3Recursive,
    AuditCheck::BallA,         AuditCheck::BallB,
    AuditCheck::Eq2,           AuditCheck::Gromov,
    AuditCheck::EssentialityId, AuditCheck::TrivialityRadius,
};

// The first twelve audit checks are the bound catalog, in the same order.
static_assert(static_cast<int>(AuditCheck::Sys) == static_cast<int>(BoundId::Sys));
static_assert(static_cast<int>(AuditCheck::Gromov) == static_cast<int>(BoundId::Gromov));

bool is_bound_check(AuditCheck c) {
  return static_cast<int>(c) <= static_cast<int>(AuditCheck::Gromov);
}

long long saturate(const BigInt& v) {
  // Values beyond int64 only arise far outside any graph this tool can hold;
  // the saturated value still compares as a violation against every order.
  if (v > std::numeric_limits<long long>::max()) return std::numeric_limits<long long>::max();
  return static_cast<long long>(v);
}

/// Per-worker cache of ceiled bound values, keyed by the check parameters.
struct BoundMemo {
  std::map<std::tuple<int, int, int>, long long> by_chik;
  std::map<std::pair<int, int>, long long> by_gromov;

  long long bound_value(AuditCheck c, int chi, int k) {
    auto key = std::make_tuple(static_cast<int>(c), chi, k);
    auto it = by_chik.find(key);
    if (it != by_chik.end()) return it->second;
    long long value = saturate(evaluate_bound(static_cast<BoundId>(c), {chi, k}).ceiled);
    by_chik.emplace(key, value);
    return value;
  }

  long long gromov_value(int n_essential, int s) {
    auto key = std::make_pair(n_essential, s);
    auto it = by_gromov.find(key);
    if (it != by_gromov.end()) return it->second;
    long long value = saturate(bound_gromov(n_essential, s).ceiled);
    by_gromov.emplace(key, value);
    return value;
  }
};

struct CheckSet {
  std::array<bool, kAllChecks.size()> flags{};
  bool test(AuditCheck c) const { return flags[static_cast<std::size_t>(c)]; }
};

CheckSet to_set(std::span<const AuditCheck> checks) {
  CheckSet s;
  for (AuditCheck c : checks) s.flags[static_cast<std::size_t>(c)] = true;
  return s;
}

AuditRecord audit_graph_impl(const Graph& g, const CheckSet& mandatory, const CheckSet& report_only,
                             BoundMemo& memo) {
  AuditRecord rec;
  rec.graph6 = to_graph6(g);
  rec.n = g.order();
  rec.chi = chromatic_number(g);
  rec.girth = girth(g);
  rec.odd_girth = odd_girth(g);
  if (rec.odd_girth) rec.k = (*rec.odd_girth - 1) / 2;
  rec.essentiality = essentiality(g).n;
  rec.forest_essentiality = forest_essentiality(g).n;

  const int k = rec.k.value_or(0);
  std::optional<int> ball_small, ball_large;  // radius k-1 / k, computed on demand
  auto max_ball = [&](int radius, std::optional<int>& cache) {
    if (!cache) cache = max_ball_size(g, radius).size;
    return *cache;
  };

  for (AuditCheck c : kAllChecks) {
    if (!mandatory.test(c) && !report_only.test(c)) continue;
    if (!audit_check_applicable(c, rec.chi, k)) continue;
    AuditCheckRow row;
    row.id = c;
    switch (c) {
      case AuditCheck::EssentialityId:
        row.value = (rec.chi + 1) / 2 - 1;  // ceil(chi/2) - 1
        row.satisfied = rec.essentiality == row.value;
        break;
      case AuditCheck::TrivialityRadius:
        row.value = k - 1;
        row.satisfied = triviality_radius(g) == std::optional<int>(k - 1);
        break;
      case AuditCheck::Gromov: {
        row.value = memo.gromov_value(rec.forest_essentiality, rec.girth.value());
        row.satisfied = row.value <= rec.n;
        row.tight = row.value == rec.n;
        break;
      }
      default: {
        row.value = memo.bound_value(c, rec.chi, k);
        long long target;
        if (c == AuditCheck::BallA || c == AuditCheck::Eq2)
          target = max_ball(k - 1, ball_small);
        else if (c == AuditCheck::BallB)
          target = max_ball(k, ball_large);
        else
          target = rec.n;
        row.satisfied = row.value <= target;
        row.tight = row.value == target;
        break;
      }
    }
    rec.checks.push_back(row);
  }
  return rec;
}

/// One worker's accumulation; lists are compacted to the cap by graph6 key.
struct Accumulator {
  const AuditConfig* config = nullptr;
  CheckSet mandatory, report_only;
  BoundMemo memo;
  std::uint64_t total = 0, violations = 0, findings = 0, tights = 0;
  std::array<AuditCheckStats, kAllChecks.size()> stats{};
  std::vector<AuditRecord> violation_list, finding_list, tight_list;

  void init(const AuditConfig& cfg) {
    config = &cfg;
    mandatory = to_set(cfg.mandatory);
    report_only = to_set(cfg.report_only);
    for (std::size_t i = 0; i < kAllChecks.size(); ++i) stats[i].id = kAllChecks[i];
  }

  static void push_capped(std::vector<AuditRecord>& list, std::size_t cap, AuditRecord rec) {
    if (cap == 0) return;
    list.push_back(std::move(rec));
    if (list.size() >= 2 * cap) {
      std::stable_sort(list.begin(), list.end(),
                       [](const AuditRecord& a, const AuditRecord& b) { return a.graph6 < b.graph6; });
      list.resize(cap);
    }
  }

  void process(const Graph& g) {
    AuditRecord rec = audit_graph_impl(g, mandatory, report_only, memo);
    ++total;
    bool mand_violation = false, report_violation = false, any_tight = false;
    for (const AuditCheckRow& row : rec.checks) {
      auto& s = stats[static_cast<std::size_t>(row.id)];
      ++s.applied;
      if (!row.satisfied) {
        ++s.violated;
        (mandatory.test(row.id) ? mand_violation : report_violation) = true;
      }
      if (row.tight) {
        ++s.tight;
        any_tight = true;
      }
    }
    if (mand_violation) {
      ++violations;
      push_capped(violation_list, config->max_violations, rec);
    }
    if (report_violation) {
      ++findings;
      push_capped(finding_list, config->max_findings, rec);
    }
    if (any_tight) {
      ++tights;
      push_capped(tight_list, config->max_tight, std::move(rec));
    }
  }
};

void merge_sorted_capped(std::vector<std::vector<AuditRecord>*> parts, std::size_t cap,
                         std::vector<AuditRecord>& out) {
  for (auto* part : parts)
    out.insert(out.end(), std::make_move_iterator(part->begin()),
               std::make_move_iterator(part->end()));
  std::stable_sort(out.begin(), out.end(),
                   [](const AuditRecord& a, const AuditRecord& b) { return a.graph6 < b.graph6; });
  if (out.size() > cap) out.resize(cap);
}

AuditReport merge(std::vector<Accumulator>& workers, std::string source, const AuditConfig& config) {
  AuditReport report;
  report.source = std::move(source);
  report.config = config;
  std::vector<std::vector<AuditRecord>*> vio, fin, tig;
  for (Accumulator& w : workers) {
    report.total_graphs += w.total;
    report.violation_count += w.violations;
    report.finding_count += w.findings;
    report.tight_count += w.tights;
    vio.push_back(&w.violation_list);
    fin.push_back(&w.finding_list);
    tig.push_back(&w.tight_list);
  }
  merge_sorted_capped(std::move(vio), config.max_violations, report.violations);
  merge_sorted_capped(std::move(fin), config.max_findings, report.report_findings);
  merge_sorted_capped(std::move(tig), config.max_tight, report.tight_instances);

  CheckSet requested = to_set(config.mandatory);
  for (AuditCheck c : config.report_only) requested.flags[static_cast<std::size_t>(c)] = true;
  for (std::size_t i = 0; i < kAllChecks.size(); ++i) {
    if (!requested.flags[i]) continue;
    AuditCheckStats total{kAllChecks[i], 0, 0, 0};
    for (const Accumulator& w : workers) {
      total.applied += w.stats[i].applied;
      total.violated += w.stats[i].violated;
      total.tight += w.stats[i].tight;
    }
    report.stats.push_back(total);
  }
  return report;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int bit = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit)
      if ((mask >> bit) & 1) g.add_edge(u, v);
  return g;
}

/// Runs `body(worker_index)` on `jobs` workers (inline when jobs == 1).
void run_workers(int jobs, const std::function<void(int)>& body) {
  if (jobs <= 1) {
    body(0);
    return;
  }
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(jobs));
  for (int w = 0; w < jobs; ++w) {
    threads.emplace_back([&, w] {
      try {
        body(w);
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
}

}  // namespace

std::string audit_check_name(AuditCheck c) {
  if (is_bound_check(c)) return bound_name(static_cast<BoundId>(c));
  switch (c) {
    case AuditCheck::EssentialityId: return "essentiality_id";
    case AuditCheck::TrivialityRadius: return "triviality_radius";
    default: break;
  }
  throw std::invalid_argument("audit_check_name: unknown check");
}

std::optional<AuditCheck> audit_check_from_name(std::string_view name) {
  for (AuditCheck c : kAllChecks)
    if (audit_check_name(c) == name) return c;
  return std::nullopt;
}

std::vector<AuditCheck> default_mandatory_checks() {
  std::vector<AuditCheck> checks;
  for (AuditCheck c : kAllChecks)
    if (c != AuditCheck::Mix3Printed) checks.push_back(c);
  return checks;
}

std::vector<AuditCheck> default_report_only_checks() { return {AuditCheck::Mix3Printed}; }

bool audit_check_applicable(AuditCheck c, int chi, int k) {
  switch (c) {
    case AuditCheck::EssentialityId:
      return true;
    case AuditCheck::BB1:
    case AuditCheck::BallA:
      return chi >= 3 && k >= 2;
    case AuditCheck::BB2:
    case AuditCheck::Mix1:
      return chi >= 4 && k >= 2;
    default:
      return chi >= 3 && k >= 1;
  }
}

AuditRecord audit_graph(const Graph& g, std::span<const AuditCheck> mandatory,
                        std::span<const AuditCheck> report_only) {
  BoundMemo memo;
  return audit_graph_impl(g, to_set(mandatory), to_set(report_only), memo);
}

std::uint64_t enumerate_labeled(int n, const std::function<void(const Graph&)>& visit, bool dedup) {
  if (n < 0 || n > 7)
    throw std::invalid_argument("enumerate_labeled: exhaustive labeled mode needs 0 <= n <= 7");
  const int bits = n * (n - 1) / 2;
  std::uint64_t visited = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    Graph g = graph_from_mask(n, mask);
    if (dedup && to_graph6(g) != canonical_form(g)) continue;
    ++visited;
    visit(g);
  }
  return visited;
}

AuditReport audit_sweep_enumerate(int n_min, int n_max, const AuditConfig& config) {
  if (n_min < 0 || n_max > 7 || n_min > n_max)
    throw std::invalid_argument("audit_sweep_enumerate: need 0 <= n_min <= n_max <= 7");
  if (config.jobs < 1) throw std::invalid_argument("audit_sweep_enumerate: jobs >= 1");

  const int jobs = config.jobs;
  std::vector<Accumulator> workers(static_cast<std::size_t>(jobs));
  for (auto& w : workers) w.init(config);

  run_workers(jobs, [&](int index) {
    Accumulator& acc = workers[static_cast<std::size_t>(index)];
    for (int n = n_min; n <= n_max; ++n) {
      const int bits = n * (n - 1) / 2;
      const std::uint64_t count = std::uint64_t{1} << bits;
      for (std::uint64_t mask = static_cast<std::uint64_t>(index); mask < count; mask += jobs) {
        Graph g = graph_from_mask(n, mask);
        if (config.dedup && to_graph6(g) != canonical_form(g)) continue;
        acc.process(g);
      }
    }
  });

  return merge(workers, "enumerate:" + std::to_string(n_min) + ".." + std::to_string(n_max),
               config);
}

AuditReport audit_sweep_lines(const std::vector<std::string>& lines, const std::string& source_name,
                              const AuditConfig& config) {
  if (config.jobs < 1) throw std::invalid_argument("audit_sweep_lines: jobs >= 1");

  std::vector<std::string> cleaned;
  cleaned.reserve(lines.size());
  for (std::string line : lines) {
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    std::size_t start = 0;
    while (start < line.size() && std::isspace(static_cast<unsigned char>(line[start]))) ++start;
    if (start > 0) line.erase(0, start);
    if (!line.empty()) cleaned.push_back(std::move(line));
  }

  const int jobs = config.jobs;
  std::vector<Accumulator> workers(static_cast<std::size_t>(jobs));
  for (auto& w : workers) w.init(config);

  run_workers(jobs, [&](int index) {
    Accumulator& acc = workers[static_cast<std::size_t>(index)];
    for (std::size_t i = static_cast<std::size_t>(index); i < cleaned.size();
         i += static_cast<std::size_t>(jobs))
      acc.process(parse_graph6(cleaned[i]));
  });

  return merge(workers, source_name, config);
}

}  // namespace sysgraph
