// Command-line front end: invariant inspection, bound evaluation, table
// reproduction, audits, peel colorings, and family generation.
//
// Exit codes: 0 success, 1 audit found mandatory violations, 2 usage/parse/IO.

#include <sysgraph/audit.hpp>
#include <sysgraph/bounds.hpp>
#include <sysgraph/generators.hpp>
#include <sysgraph/graph.hpp>
#include <sysgraph/graph6.hpp>
#include <sysgraph/invariants.hpp>
#include <sysgraph/peeling.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace sysgraph;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::optional<std::string>& out_path, const std::string& text) {
  if (!out_path) {
    std::cout << text;
    return;
  }
  std::ofstream out(*out_path, std::ios::binary);
  if (!out || !(out << text) || !out.flush()) throw UsageError("cannot write " + *out_path);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) return parts;
    start = pos + 1;
  }
}

int parse_int(const std::string& tok, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used == tok.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(what + ": expected an integer, got \"" + tok + "\"");
}

std::string_view trimmed(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Graph load_graph(const std::string& spec);

// Family specs: petersen | groetzsch | path:N | cycle:N | complete:N |
// kneser:G:S | mycielski:SOURCE | genmycielski:LEVELS:SOURCE. SOURCE is any
// graph spec, so towers compose ("mycielski:mycielski:cycle:5").
std::optional<Graph> try_family(const std::string& spec) {
  auto colon = spec.find(':');
  std::string head = spec.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  auto need = [&](bool ok) {
    if (!ok) throw UsageError("family " + head + ": bad parameters in \"" + spec + "\"");
  };
  if (head == "petersen") {
    need(rest.empty());
    return gen_petersen();
  }
  if (head == "groetzsch") {
    need(rest.empty());
    return gen_groetzsch();
  }
  if (head == "path") {
    need(!rest.empty());
    return gen_path(parse_int(rest, "path order"));
  }
  if (head == "cycle") {
    need(!rest.empty());
    return gen_cycle(parse_int(rest, "cycle length"));
  }
  if (head == "complete") {
    need(!rest.empty());
    return gen_complete(parse_int(rest, "complete graph order"));
  }
  if (head == "kneser") {
    auto parts = split(rest, ':');
    need(parts.size() == 2);
    return gen_kneser(parse_int(parts[0], "kneser ground size"),
                      parse_int(parts[1], "kneser subset size"));
  }
  if (head == "mycielski") {
    need(!rest.empty());
    return gen_mycielski(load_graph(rest));
  }
  if (head == "genmycielski") {
    auto pos = rest.find(':');
    need(pos != std::string::npos && pos > 0);
    int levels = parse_int(rest.substr(0, pos), "mycielski levels");
    return gen_general_mycielski(load_graph(rest.substr(pos + 1)), levels);
  }
  return std::nullopt;
}

// File sniffing: the first payload line decides the format. graph6 bytes live
// in 63..126, so a leading decimal digit can only start an edge list.
Graph graph_from_text(const std::string& text, const std::string& name) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string_view payload = trimmed(line);
    if (payload.empty() || payload.front() == '#') continue;
    if (payload.substr(0, 10) == ">>graph6<<") payload.remove_prefix(10);
    if (payload.empty()) continue;
    if (std::isdigit(static_cast<unsigned char>(payload.front()))) return parse_edge_list(text);
    return parse_graph6(payload);
  }
  throw UsageError(name + ": no graph data in file");
}

// Accepts a family spec, a file path (graph6 or edge list), or a literal
// graph6 string, in that precedence order.
Graph load_graph(const std::string& spec) {
  if (auto fam = try_family(spec)) return *fam;
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec)) return graph_from_text(read_file(spec), spec);
  try {
    return parse_graph6(trimmed(spec));
  } catch (const ParseError& e) {
    throw UsageError("\"" + spec + "\" is not a known family, an existing file, or graph6: " +
                     e.what());
  }
}

std::vector<std::string> graph6_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string_view payload = trimmed(line);
    if (payload.empty() || payload.front() == '#') continue;
    if (payload.substr(0, 10) == ">>graph6<<") payload.remove_prefix(10);
    if (payload.empty()) continue;
    lines.emplace_back(payload);
  }
  return lines;
}

json finite_or_infinity(std::optional<int> v) {
  if (v) return *v;
  return "infinity";
}

// ---------------------------------------------------------------------------
// info

int run_info(const std::string& source, const std::string& format,
             const std::optional<std::string>& out) {
  Graph g = load_graph(source);
  int n = g.order();
  auto og = odd_girth(g);
  auto gir = girth(g);
  std::optional<int> k;
  if (og) k = (*og - 1) / 2;
  int chi = chromatic_number(g);
  int ess = essentiality(g).n;
  int fess = forest_essentiality(g).n;
  auto triv = triviality_radius(g);
  std::optional<BallMax> dmax;
  if (k) dmax = max_ball_size(g, *k - 1);

  if (format == "json") {
    json j;
    j["graph6"] = to_graph6(g);
    j["n"] = n;
    j["edges"] = g.edge_count();
    j["girth"] = finite_or_infinity(gir);
    j["oddGirth"] = finite_or_infinity(og);
    j["k"] = k ? json(*k) : json(nullptr);
    j["chi"] = chi;
    j["ess"] = ess;
    j["forestEss"] = fess;
    j["trivRadius"] = triv ? json(*triv) : json(nullptr);
    if (dmax) {
      j["maxBall"] = {{"radius", *k - 1}, {"size", dmax->size}, {"center", dmax->center}};
    } else {
      j["maxBall"] = nullptr;
    }
    write_output(out, j.dump(2) + "\n");
    return 0;
  }
  if (format != "text") throw UsageError("info supports --format text|json");
  std::ostringstream os;
  os << "graph6:              " << to_graph6(g) << "\n";
  os << "n:                   " << n << "\n";
  os << "edges:               " << g.edge_count() << "\n";
  os << "girth:               " << (gir ? std::to_string(*gir) : "infinity") << "\n";
  os << "odd girth:           " << (og ? std::to_string(*og) : "infinity") << "\n";
  if (k) os << "k:                   " << *k << "\n";
  os << "chi:                 " << chi << "\n";
  os << "essentiality:        " << ess << "\n";
  os << "forest essentiality: " << fess << "\n";
  if (triv) os << "triviality radius:   " << *triv << "\n";
  if (dmax) {
    os << "max ball, radius " << *k - 1 << ":  " << dmax->size << " vertices (center "
       << dmax->center << ")\n";
  }
  write_output(out, os.str());
  return 0;
}

// ---------------------------------------------------------------------------
// bounds

// The printed estimate catalog plus the recursion-backed MIX-3 variant.
const std::vector<BoundId> kDefaultBoundCatalog{
    BoundId::Sys,  BoundId::BB1,         BoundId::BB2,          BoundId::BB3,
    BoundId::Mix1, BoundId::Mix2,        BoundId::Mix3Printed,  BoundId::Mix3Recursive,
};

const std::vector<BoundId> kAllBoundCatalog{
    BoundId::Sys,   BoundId::BB1,   BoundId::BB2, BoundId::BB3,
    BoundId::Mix1,  BoundId::Mix2,  BoundId::Mix3Printed, BoundId::Mix3Recursive,
    BoundId::BallA, BoundId::BallB, BoundId::Eq2,
};

std::vector<BoundId> parse_bound_catalog(const std::string& name) {
  if (name.empty() || name == "default") return kDefaultBoundCatalog;
  if (name == "all") return kAllBoundCatalog;
  if (name == "table1") return {table1_catalog.begin(), table1_catalog.end()};
  if (name == "table2") return {table2_catalog.begin(), table2_catalog.end()};
  std::vector<BoundId> ids;
  for (const auto& tok : split(name, ',')) {
    auto id = bound_from_name(tok);
    if (!id) throw UsageError("unknown bound \"" + tok + "\"");
    if (*id == BoundId::Gromov) {
      throw UsageError("gromov is evaluated from a graph (forest essentiality and girth), "
                       "not from (chi, k); use `audit` or `info`");
    }
    ids.push_back(*id);
  }
  if (ids.empty()) throw UsageError("empty bound catalog");
  return ids;
}

int run_bounds(int chi, int k, const std::string& catalog_name, const std::string& format,
               const std::optional<std::string>& out) {
  if (chi < 1 || k < 1) throw UsageError("bounds needs chi >= 1 and k >= 1");
  auto catalog = parse_bound_catalog(catalog_name);
  BoundParams p{chi, k};

  struct Row {
    BoundId id;
    std::optional<BoundValue> value;
    std::string guard;
  };
  std::vector<Row> rows;
  std::vector<BoundId> evaluated;
  for (BoundId id : catalog) {
    try {
      rows.push_back({id, evaluate_bound(id, p), {}});
      evaluated.push_back(id);
    } catch (const std::domain_error& e) {
      rows.push_back({id, std::nullopt, e.what()});
    }
  }
  std::optional<BoundValue> winner;
  if (!evaluated.empty()) winner = best_bound(p, evaluated);

  if (format == "json") {
    json j;
    j["chi"] = chi;
    j["k"] = k;
    json list = json::array();
    for (const auto& row : rows) {
      json r;
      r["id"] = bound_name(row.id);
      r["label"] = bound_label(row.id);
      if (row.value) {
        r["raw"] = rat_string(row.value->raw);
        r["bound"] = row.value->ceiled.str();
      } else {
        r["guard"] = row.guard;
      }
      list.push_back(std::move(r));
    }
    j["bounds"] = std::move(list);
    if (winner) {
      j["winner"] = {{"id", bound_name(winner->id)},
                     {"label", bound_label(winner->id)},
                     {"raw", rat_string(winner->raw)},
                     {"bound", winner->ceiled.str()}};
    } else {
      j["winner"] = nullptr;
    }
    write_output(out, j.dump(2) + "\n");
    return 0;
  }
  if (format != "text") throw UsageError("bounds supports --format text|json");
  std::ostringstream os;
  os << "chi=" << chi << " k=" << k << "\n";
  for (const auto& row : rows) {
    os << std::left << std::setw(10) << bound_label(row.id);
    if (row.value) {
      os << " raw " << std::setw(14) << rat_string(row.value->raw) << " bound "
         << row.value->ceiled.str() << "\n";
    } else {
      os << " guard: " << row.guard << "\n";
    }
  }
  if (winner) {
    os << "winner: " << bound_label(winner->id) << " (raw " << rat_string(winner->raw)
       << ", bound " << winner->ceiled.str() << ")\n";
  } else {
    os << "winner: none (no bound applicable)\n";
  }
  write_output(out, os.str());
  return 0;
}

// ---------------------------------------------------------------------------
// table

int run_table(const std::string& preset, int chi_min, int chi_max, int k_min, int k_max,
              const std::string& format, const std::optional<std::string>& out) {
  std::vector<BoundId> catalog;
  if (preset == "table1") {
    catalog.assign(table1_catalog.begin(), table1_catalog.end());
  } else if (preset == "table2") {
    catalog.assign(table2_catalog.begin(), table2_catalog.end());
  } else {
    catalog = parse_bound_catalog(preset);
  }
  if (chi_min > chi_max || k_min > k_max) throw UsageError("empty table range");
  if (chi_min < 1 || k_min < 1) throw UsageError("table domain needs chi >= 1 and k >= 1");

  std::vector<std::vector<BoundValue>> cells;
  for (int chi = chi_min; chi <= chi_max; ++chi) {
    auto& row = cells.emplace_back();
    for (int k = k_min; k <= k_max; ++k) row.push_back(best_bound({chi, k}, catalog));
  }

  std::ostringstream os;
  if (format == "csv") {
    os << "chi/k";
    for (int k = k_min; k <= k_max; ++k) os << "," << k;
    os << "\n";
    for (int chi = chi_min; chi <= chi_max; ++chi) {
      os << chi;
      for (const auto& cell : cells[static_cast<std::size_t>(chi - chi_min)]) {
        os << "," << bound_label(cell.id);
      }
      os << "\n";
    }
  } else if (format == "md") {
    os << "| chi\\k |";
    for (int k = k_min; k <= k_max; ++k) os << " " << k << " |";
    os << "\n|---|";
    for (int k = k_min; k <= k_max; ++k) os << "---|";
    os << "\n";
    for (int chi = chi_min; chi <= chi_max; ++chi) {
      os << "| " << chi << " |";
      for (const auto& cell : cells[static_cast<std::size_t>(chi - chi_min)]) {
        os << " " << bound_label(cell.id) << " |";
      }
      os << "\n";
    }
  } else if (format == "json") {
    json j;
    j["chiMin"] = chi_min;
    j["chiMax"] = chi_max;
    j["kMin"] = k_min;
    j["kMax"] = k_max;
    json cat = json::array();
    for (BoundId id : catalog) cat.push_back(bound_name(id));
    j["catalog"] = std::move(cat);
    json rows = json::array();
    for (int chi = chi_min; chi <= chi_max; ++chi) {
      json row;
      row["chi"] = chi;
      json winners = json::array();
      for (const auto& cell : cells[static_cast<std::size_t>(chi - chi_min)]) {
        winners.push_back({{"k", k_min + static_cast<int>(winners.size())},
                           {"winner", bound_label(cell.id)},
                           {"raw", rat_string(cell.raw)},
                           {"bound", cell.ceiled.str()}});
      }
      row["cells"] = std::move(winners);
      rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    os << j.dump(2) << "\n";
  } else {
    throw UsageError("table supports --format md|csv|json");
  }
  write_output(out, os.str());
  return 0;
}

// ---------------------------------------------------------------------------
// audit

std::vector<AuditCheck> parse_check_list(const std::string& name) {
  if (name == "none") return {};
  std::vector<AuditCheck> checks;
  for (const auto& tok : split(name, ',')) {
    auto c = audit_check_from_name(tok);
    if (!c) {
      std::string valid;
      for (int i = 0; i <= static_cast<int>(AuditCheck::TrivialityRadius); ++i) {
        if (i) valid += ", ";
        valid += audit_check_name(static_cast<AuditCheck>(i));
      }
      throw UsageError("unknown check \"" + tok + "\" (valid: " + valid + ")");
    }
    checks.push_back(*c);
  }
  return checks;
}

// "N" audits the labeled graphs on exactly N vertices, "A..B" a range of
// orders.
std::pair<int, int> parse_enumerate_range(const std::string& s) {
  auto pos = s.find("..");
  if (pos == std::string::npos) {
    int n = parse_int(s, "--enumerate");
    return {n, n};
  }
  return {parse_int(s.substr(0, pos), "--enumerate low end"),
          parse_int(s.substr(pos + 2), "--enumerate high end")};
}

int run_audit(const std::optional<std::string>& enumerate_spec,
              const std::optional<std::string>& graph6_file,
              const std::optional<std::string>& graph_spec, bool dedup,
              const std::optional<std::string>& mandatory,
              const std::optional<std::string>& report_only, int jobs, const std::string& format,
              const std::optional<std::string>& out) {
  int sources = (enumerate_spec ? 1 : 0) + (graph6_file ? 1 : 0) + (graph_spec ? 1 : 0);
  if (sources != 1) {
    throw UsageError("audit needs exactly one source: --enumerate, --graph6-file, or a graph");
  }
  AuditConfig config;
  if (mandatory) config.mandatory = parse_check_list(*mandatory);
  if (report_only) config.report_only = parse_check_list(*report_only);
  if (jobs < 1) throw UsageError("--jobs must be >= 1");
  config.jobs = jobs;
  config.dedup = dedup;

  AuditReport report;
  if (enumerate_spec) {
    auto [lo, hi] = parse_enumerate_range(*enumerate_spec);
    report = audit_sweep_enumerate(lo, hi, config);
  } else if (graph6_file) {
    report = audit_sweep_lines(graph6_lines(read_file(*graph6_file)), *graph6_file, config);
  } else {
    report = audit_sweep_lines({to_graph6(load_graph(*graph_spec))}, *graph_spec, config);
  }

  std::string text;
  if (format == "json") {
    text = audit_report_to_json(report);
  } else if (format == "csv") {
    text = audit_report_to_csv(report);
  } else {
    throw UsageError("audit supports --format json|csv");
  }
  write_output(out, text);
  if (out) {
    std::cerr << "audited " << report.total_graphs << " graphs: " << report.violation_count
              << " mandatory violations, " << report.finding_count << " report-only findings\n";
  }
  return report.violation_count > 0 ? 1 : 0;
}

// ---------------------------------------------------------------------------
// color

int run_color(const std::string& source, std::optional<int> k_flag, const std::string& format,
              const std::optional<std::string>& out) {
  Graph g = load_graph(source);
  auto og = odd_girth(g);
  int k;
  if (k_flag) {
    k = *k_flag;
    if (k < 1) throw UsageError("--k must be >= 1");
    if (og && *og < 2 * k + 1) {
      throw UsageError("odd girth " + std::to_string(*og) + " < " + std::to_string(2 * k + 1) +
                       ": k=" + std::to_string(k) + " needs odd girth >= 2k+1");
    }
  } else {
    k = og ? (*og - 1) / 2 : 1;  // bipartite graphs peel trivially at any k
  }

  auto result = ball_peel_coloring(g, k);
  if (!verify_coloring(g, result.coloring)) throw std::logic_error("coloring verification failed");
  auto check = peel_soundness_check(g, result.trace, result.coloring);
  if (!check.ok) throw std::logic_error("peel soundness check failed: " + check.reason);

  if (format == "json") {
    json j;
    j["graph6"] = to_graph6(g);
    j["k"] = k;
    j["count"] = result.coloring.count;
    j["colors"] = result.coloring.colors;
    json peels = json::array();
    for (std::size_t i = 0; i < result.trace.peels.size(); ++i) {
      const auto& peel = result.trace.peels[i];
      peels.push_back({{"center", peel.center},
                       {"ballSize", static_cast<int>(peel.ball.count())},
                       {"freshColor", 2 + static_cast<int>(i)}});
    }
    j["peels"] = std::move(peels);
    j["remainderSize"] = static_cast<int>(result.trace.remainder.count());
    j["verified"] = true;
    write_output(out, j.dump(2) + "\n");
    return 0;
  }
  if (format != "text") throw UsageError("color supports --format text|json");
  std::ostringstream os;
  os << "k: " << k << "\n";
  os << "colors: " << result.coloring.count << "\n";
  os << "peels: " << result.trace.peels.size() << "\n";
  for (std::size_t i = 0; i < result.trace.peels.size(); ++i) {
    const auto& peel = result.trace.peels[i];
    os << "  peel " << i << ": center " << peel.center << ", ball " << peel.ball.count()
       << " vertices, fresh color " << 2 + i << "\n";
  }
  os << "remainder: " << result.trace.remainder.count() << " vertices\n";
  for (int v = 0; v < g.order(); ++v) {
    os << v << " " << result.coloring.colors[static_cast<std::size_t>(v)] << "\n";
  }
  write_output(out, os.str());
  return 0;
}

// ---------------------------------------------------------------------------
// gen

int run_gen(const std::string& family, const std::optional<std::string>& base,
            std::optional<int> levels, const std::optional<std::string>& out) {
  Graph g;
  if (base) {
    if (family != "mycielski" && family != "genmycielski") {
      throw UsageError("--base applies to the mycielski families");
    }
    g = gen_general_mycielski(load_graph(*base), levels.value_or(2));
  } else {
    if (levels) throw UsageError("--levels needs --base");
    g = load_graph(family);
  }
  write_output(out, to_graph6(g) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph invariants, vertex-count estimates, and soundness audits"};
  app.require_subcommand(1);
  int exit_code = 0;

  // info
  auto* info = app.add_subcommand("info", "invariants of one graph");
  std::string info_source;
  std::string info_format = "text";
  std::optional<std::string> info_out;
  info->add_option("graph", info_source,
                   "family (cycle:7, petersen, kneser:5:2, mycielski:cycle:5, ...), "
                   "file (graph6 or edge list), or graph6 string")
      ->required();
  info->add_option("--format", info_format, "text|json");
  info->add_option("--out", info_out, "write to file instead of stdout");
  info->callback([&] { exit_code = run_info(info_source, info_format, info_out); });

  // bounds
  auto* bounds = app.add_subcommand("bounds", "evaluate the estimate catalog at (chi, k)");
  int bounds_chi = 0;
  int bounds_k = 0;
  std::string bounds_catalog = "default";
  std::string bounds_format = "text";
  std::optional<std::string> bounds_out;
  bounds->add_option("chi", bounds_chi, "chromatic number, >= 1")->required();
  bounds->add_option("k", bounds_k, "odd-girth parameter, >= 1")->required();
  bounds->add_option("--catalog", bounds_catalog,
                     "default|all|table1|table2 or comma-separated bound names");
  bounds->add_option("--format", bounds_format, "text|json");
  bounds->add_option("--out", bounds_out, "write to file instead of stdout");
  bounds->callback([&] {
    exit_code = run_bounds(bounds_chi, bounds_k, bounds_catalog, bounds_format, bounds_out);
  });

  // table
  auto* table = app.add_subcommand("table", "winner matrix over a (chi, k) grid");
  std::string table_preset = "table2";
  int chi_min = 3, chi_max = 15, k_min = 2, k_max = 10;
  std::string table_format = "md";
  std::optional<std::string> table_out;
  table->add_option("preset", table_preset,
                    "table1|table2 or comma-separated bound names (default table2)");
  table->add_option("--chi-min", chi_min, "default 3");
  table->add_option("--chi-max", chi_max, "default 15");
  table->add_option("--k-min", k_min, "default 2");
  table->add_option("--k-max", k_max, "default 10");
  table->add_option("--format", table_format, "md|csv|json");
  table->add_option("--out", table_out, "write to file instead of stdout");
  table->callback([&] {
    exit_code = run_table(table_preset, chi_min, chi_max, k_min, k_max, table_format, table_out);
  });

  // audit
  auto* audit = app.add_subcommand("audit", "check the estimates against graphs");
  std::optional<std::string> audit_enumerate, audit_file, audit_graph_spec, audit_mandatory,
      audit_report_only, audit_out;
  bool audit_dedup = false;
  int audit_jobs = 1;
  std::string audit_format = "json";
  audit->add_option("graph", audit_graph_spec, "audit a single graph (family, file, or graph6)");
  audit->add_option("--enumerate", audit_enumerate,
                    "all labeled graphs on N vertices, or a range A..B of orders (max 7)");
  audit->add_option("--graph6-file", audit_file, "audit every graph6 line of a file");
  audit->add_flag("--dedup", audit_dedup,
                  "enumerate canonical representatives only (one per isomorphism class)");
  audit->add_option("--mandatory", audit_mandatory,
                    "comma-separated checks whose violation fails the run, or \"none\"");
  audit->add_option("--report-only", audit_report_only,
                    "comma-separated checks recorded without failing the run, or \"none\"");
  audit->add_option("--jobs", audit_jobs, "worker threads (default 1)");
  audit->add_option("--format", audit_format, "json|csv");
  audit->add_option("--out", audit_out, "write the report to a file instead of stdout");
  audit->callback([&] {
    exit_code = run_audit(audit_enumerate, audit_file, audit_graph_spec, audit_dedup,
                          audit_mandatory, audit_report_only, audit_jobs, audit_format, audit_out);
  });

  // color
  auto* color = app.add_subcommand("color", "ball-peeling coloring");
  std::string color_source;
  std::optional<int> color_k;
  std::string color_format = "text";
  std::optional<std::string> color_out;
  color->add_option("graph", color_source, "family, file, or graph6 string")->required();
  color->add_option("--k", color_k,
                    "odd-girth parameter; the graph needs odd girth >= 2k+1 "
                    "(default: derived from the graph)");
  color->add_option("--format", color_format, "text|json");
  color->add_option("--out", color_out, "write to file instead of stdout");
  color->callback([&] { exit_code = run_color(color_source, color_k, color_format, color_out); });

  // gen
  auto* gen = app.add_subcommand("gen", "emit a graph as graph6");
  std::string gen_family;
  std::optional<std::string> gen_base, gen_out;
  std::optional<int> gen_levels;
  gen->add_option("family", gen_family,
                  "family spec (cycle:5, petersen, kneser:5:2, ...), file, or graph6")
      ->required();
  gen->add_option("--base", gen_base, "base graph for the mycielski families");
  gen->add_option("--levels", gen_levels, "generalized mycielski levels (default 2)");
  gen->add_option("--out", gen_out, "write to file instead of stdout");
  gen->callback([&] { exit_code = run_gen(gen_family, gen_base, gen_levels, gen_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
