#pragma once

// Benchmark harness: runs (instance x heuristic) cells, collects per-cell
// records, summarizes win counts, and renders CSV or markdown reports.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "nsdp/dop.hpp"
#include "nsdp/orderings.hpp"
#include "nsdp/solver.hpp"

namespace nsdp {

struct BenchRecord {
  std::string instance;
  int n = 0;
  int m = 0;                        // constraint count
  HeuristicId heuristic = HeuristicId::kMinDegree;
  double order_time_s = 0.0;        // heuristic runtime only
  double solve_time_s = 0.0;        // forward + backward pass
  int induced_width = 0;            // full elimination game, valid for any status
  long long total_fill = 0;
  std::uint64_t peak_cells = 0;
  SolveStatus status = SolveStatus::kOptimal;
  Value optimum = Value::neg_inf(); // meaningful only when status is Optimal/Infeasible
};

// Runs every heuristic on every instance. Ordering and solve are each timed
// as the median of `repeats` wall-clock runs; width, fill, optimum, and
// status come from a single deterministic run. Instances that fail
// validation are skipped with a note on `diag` (when non-null). Heuristics
// whose Optimal optima disagree on one instance indicate a solver defect
// and raise std::logic_error.
std::vector<BenchRecord> run_benchmark(const std::vector<DopInstance>& instances,
                                       const std::vector<HeuristicId>& heuristics,
                                       int repeats = 3,
                                       std::uint64_t cell_budget = kDefaultCellBudget,
                                       std::ostream* diag = nullptr);

enum class WinMetric { kInducedWidth, kSolveTime };

std::string_view win_metric_token(WinMetric m);  // "width" / "time"
WinMetric parse_win_metric(std::string_view token);

struct WinRow {
  HeuristicId heuristic;
  int wins = 0;
  double percent = 0.0;
};

struct WinTable {
  WinMetric metric = WinMetric::kInducedWidth;
  int instance_count = 0;           // instances with at least one eligible record
  std::vector<WinRow> rows;         // heuristic enum order
};

// Per heuristic, counts instances on which it attains the minimum of the
// metric; ties award every tied heuristic. For the time metric only records
// with status Optimal compete; for width every record competes. Requires
// every instance to cover the same heuristic set.
WinTable summarize_wins(const std::vector<BenchRecord>& records, WinMetric metric);

std::string format_win_table(const WinTable& table);

enum class ReportFormat { kCsv, kMarkdown };

// CSV: fixed header, one row per record, rows ordered by instance
// first-appearance then heuristic enum order, '.' decimal separator.
// Markdown: one row per instance with a per-heuristic total-time column
// (order + solve); the per-row minima are bold, non-optimal cells show the
// status token. Byte-identical output for identical records.
void emit_report(std::ostream& out, const std::vector<BenchRecord>& records,
                 ReportFormat format);

std::string format_seconds(double s);  // fixed six decimals, to_chars based

}  // namespace nsdp
