#include "nsdp/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "nsdp/graph.hpp"

namespace nsdp {

namespace {

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::string fixed_decimal(double x, int precision) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, precision);
  return std::string(buf, res.ptr);
}

// Instance names in first-appearance order plus a per-(instance, heuristic)
// lookup. Shared by summarize_wins and emit_report.
struct Grouped {
  std::vector<std::string> instances;
  std::vector<std::vector<const BenchRecord*>> by_instance;  // heuristic enum order
  std::vector<HeuristicId> heuristics;                       // union, enum order
};

Grouped group_records(const std::vector<BenchRecord>& records) {
  Grouped g;
  std::unordered_map<std::string, std::size_t> index;
  bool covered[kAllHeuristics.size()] = {};
  for (const auto& r : records) {
    auto [it, fresh] = index.try_emplace(r.instance, g.instances.size());
    if (fresh) {
      g.instances.push_back(r.instance);
      g.by_instance.emplace_back(kAllHeuristics.size(), nullptr);
    }
    g.by_instance[it->second][static_cast<std::size_t>(r.heuristic)] = &r;
    covered[static_cast<std::size_t>(r.heuristic)] = true;
  }
  for (HeuristicId h : kAllHeuristics)
    if (covered[static_cast<std::size_t>(h)]) g.heuristics.push_back(h);
  return g;
}

}  // namespace

std::string format_seconds(double s) { return fixed_decimal(s, 6); }

std::vector<BenchRecord> run_benchmark(const std::vector<DopInstance>& instances,
                                       const std::vector<HeuristicId>& heuristics,
                                       int repeats, std::uint64_t cell_budget,
                                       std::ostream* diag) {
  if (repeats < 1) throw std::invalid_argument("repeats must be positive");
  if (heuristics.empty()) throw std::invalid_argument("no heuristics selected");

  std::vector<BenchRecord> records;
  for (const auto& inst : instances) {
    auto report = validate_instance(inst);
    if (!report.ok()) {
      if (diag)
        *diag << "skipping instance '" << inst.name << "': " << report.issues.front() << "\n";
      continue;
    }
    InteractionGraph graph = build_interaction_graph(inst);
    bool have_optimum = false;
    Value agreed = Value::neg_inf();

    for (HeuristicId h : heuristics) {
      BenchRecord rec;
      rec.instance = inst.name;
      rec.n = inst.n;
      rec.m = static_cast<int>(inst.constraints.size());
      rec.heuristic = h;

      EliminationOrdering ord;
      std::vector<double> order_times;
      for (int r = 0; r < repeats; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        ord = compute_ordering(h, graph);
        order_times.push_back(
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
      }
      rec.order_time_s = median_of(std::move(order_times));

      EliminationTrace trace = run_elimination_game(graph, ord);
      rec.induced_width = trace.induced_width;
      rec.total_fill = trace.total_fill;

      SolveResult result;
      std::vector<double> solve_times;
      for (int r = 0; r < repeats; ++r) {
        result = solve(inst, ord, cell_budget);
        solve_times.push_back(result.stats.forward_seconds + result.stats.backward_seconds);
      }
      rec.solve_time_s = median_of(std::move(solve_times));
      rec.peak_cells = result.stats.peak_cells;
      rec.status = result.status;
      rec.optimum = result.optimum;

      if (result.status == SolveStatus::kOptimal) {
        if (have_optimum && result.optimum != agreed)
          throw std::logic_error("optimum disagreement on instance '" + inst.name + "': " +
                                 to_string(agreed) + " vs " + to_string(result.optimum) +
                                 " under " + std::string(heuristic_label(h)));
        agreed = result.optimum;
        have_optimum = true;
      }
      records.push_back(std::move(rec));
    }
  }
  return records;
}

std::string_view win_metric_token(WinMetric m) {
  return m == WinMetric::kInducedWidth ? "width" : "time";
}

WinMetric parse_win_metric(std::string_view token) {
  if (token == "width" || token == "induced_width") return WinMetric::kInducedWidth;
  if (token == "time" || token == "solve_time") return WinMetric::kSolveTime;
  throw std::invalid_argument("unknown win metric '" + std::string(token) + "'");
}

WinTable summarize_wins(const std::vector<BenchRecord>& records, WinMetric metric) {
  Grouped g = group_records(records);

  // Every instance must cover the same heuristic set.
  for (std::size_t i = 0; i < g.instances.size(); ++i)
    for (HeuristicId h : g.heuristics)
      if (g.by_instance[i][static_cast<std::size_t>(h)] == nullptr)
        throw std::runtime_error("instance '" + g.instances[i] + "' is missing a record for " +
                                 std::string(heuristic_label(h)));

  WinTable table;
  table.metric = metric;
  std::vector<int> wins(kAllHeuristics.size(), 0);

  for (std::size_t i = 0; i < g.instances.size(); ++i) {
    std::vector<const BenchRecord*> eligible;
    for (HeuristicId h : g.heuristics) {
      const BenchRecord* r = g.by_instance[i][static_cast<std::size_t>(h)];
      if (metric == WinMetric::kSolveTime && r->status != SolveStatus::kOptimal) continue;
      eligible.push_back(r);
    }
    if (eligible.empty()) continue;
    ++table.instance_count;

    auto value = [metric](const BenchRecord* r) {
      return metric == WinMetric::kInducedWidth ? static_cast<double>(r->induced_width)
                                                : r->solve_time_s;
    };
    double best = value(eligible.front());
    for (const BenchRecord* r : eligible) best = std::min(best, value(r));
    for (const BenchRecord* r : eligible)
      if (value(r) == best) ++wins[static_cast<std::size_t>(r->heuristic)];
  }

  for (HeuristicId h : g.heuristics) {
    WinRow row;
    row.heuristic = h;
    row.wins = wins[static_cast<std::size_t>(h)];
    row.percent =
        table.instance_count ? 100.0 * row.wins / table.instance_count : 0.0;
    table.rows.push_back(row);
  }
  return table;
}

std::string format_win_table(const WinTable& table) {
  std::ostringstream out;
  out << "win counts by " << win_metric_token(table.metric) << " over "
      << table.instance_count << " instance" << (table.instance_count == 1 ? "" : "s") << "\n";
  for (const WinRow& row : table.rows) {
    std::string label(heuristic_label(row.heuristic));
    label.resize(8, ' ');
    std::string pct = fixed_decimal(row.percent, 1);
    out << "  " << label << " " << std::string(row.wins < 10 ? 3 : row.wins < 100 ? 2 : 1, ' ')
        << row.wins << "  " << std::string(pct.size() < 5 ? 5 - pct.size() : 0, ' ') << pct
        << "%\n";
  }
  return out.str();
}

void emit_report(std::ostream& out, const std::vector<BenchRecord>& records,
                 ReportFormat format) {
  Grouped g = group_records(records);

  if (format == ReportFormat::kCsv) {
    out << "instance,n,m,heuristic,order_time_s,solve_time_s,induced_width,total_fill,"
           "peak_cells,status,optimum\n";
    for (std::size_t i = 0; i < g.instances.size(); ++i)
      for (HeuristicId h : g.heuristics) {
        const BenchRecord* r = g.by_instance[i][static_cast<std::size_t>(h)];
        if (!r) continue;
        out << r->instance << ',' << r->n << ',' << r->m << ',' << heuristic_label(h) << ','
            << format_seconds(r->order_time_s) << ',' << format_seconds(r->solve_time_s) << ','
            << r->induced_width << ',' << r->total_fill << ',' << r->peak_cells << ','
            << status_token(r->status) << ',';
        if (r->status != SolveStatus::kWidthExceeded) out << to_string(r->optimum);
        out << '\n';
      }
    return;
  }

  out << "| instance | n | m |";
  for (HeuristicId h : g.heuristics) out << ' ' << heuristic_label(h) << " |";
  out << "\n| --- | --- | --- |";
  for (std::size_t k = 0; k < g.heuristics.size(); ++k) out << " --- |";
  out << "\n";

  for (std::size_t i = 0; i < g.instances.size(); ++i) {
    const auto& row = g.by_instance[i];
    int n = 0, m = 0;
    bool have_min = false;
    double min_total = 0.0;
    for (HeuristicId h : g.heuristics) {
      const BenchRecord* r = row[static_cast<std::size_t>(h)];
      if (!r) continue;
      n = r->n;
      m = r->m;
      if (r->status != SolveStatus::kOptimal) continue;
      double total = r->order_time_s + r->solve_time_s;
      if (!have_min || total < min_total) min_total = total;
      have_min = true;
    }
    out << "| " << g.instances[i] << " | " << n << " | " << m << " |";
    for (HeuristicId h : g.heuristics) {
      const BenchRecord* r = row[static_cast<std::size_t>(h)];
      if (!r) {
        out << " - |";
      } else if (r->status != SolveStatus::kOptimal) {
        out << ' ' << status_token(r->status) << " |";
      } else {
        double total = r->order_time_s + r->solve_time_s;
        if (have_min && total == min_total)
          out << " **" << format_seconds(total) << "** |";
        else
          out << ' ' << format_seconds(total) << " |";
      }
    }
    out << "\n";
  }
}

}  // namespace nsdp
