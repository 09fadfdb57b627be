// nsdp command line tool.
//
// Subcommands:
//   gen    generate a random instance from a structured family or a
//          hypergraph file
//   order  compute an elimination ordering for an instance
//   solve  run the elimination solver along a heuristic ordering
//   bench  run instance x heuristic benchmark cells and emit a report
//
// Exit codes: 0 success, 1 usage or IO error, 2 infeasible (solve),
// 3 width budget exceeded (solve).

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nsdp/bench.hpp"
#include "nsdp/generator.hpp"
#include "nsdp/graph.hpp"
#include "nsdp/orderings.hpp"
#include "nsdp/solver.hpp"

namespace fs = std::filesystem;

namespace {

nsdp::DopInstance load_instance(const std::string& path) {
  nsdp::DopInstance inst = nsdp::parse_instance_file(path);
  auto report = nsdp::validate_instance(inst);
  if (!report.ok())
    throw std::runtime_error(path + ": invalid instance: " + report.issues.front());
  return inst;
}

std::vector<nsdp::HeuristicId> heuristics_from(const std::string& tokens) {
  auto parsed = nsdp::parse_heuristic_list(tokens);
  if (!parsed || parsed->empty())
    throw std::runtime_error("unknown heuristic list '" + tokens + "'");
  return *parsed;
}

void print_solve_result(const nsdp::SolveResult& res) {
  std::cout << "status " << nsdp::status_token(res.status) << "\n";
  switch (res.status) {
    case nsdp::SolveStatus::kOptimal: {
      std::cout << "optimum " << nsdp::to_string(res.optimum) << "\n";
      std::cout << "assignment";
      for (std::int64_t v : res.assignment->to_vector()) std::cout << ' ' << v;
      std::cout << "\n";
      break;
    }
    case nsdp::SolveStatus::kInfeasible:
      std::cout << "optimum -inf\n";
      break;
    case nsdp::SolveStatus::kWidthExceeded:
      std::cout << "failed_step " << res.failed_step->position << "\n";
      std::cout << "failed_vertex " << res.failed_step->vertex << "\n";
      std::cout << "cells_required " << res.failed_step->cells_required << "\n";
      break;
  }
  std::cout << "induced_width " << res.stats.induced_width << "\n";
  std::cout << "total_fill " << res.stats.total_fill << "\n";
  std::cout << "peak_cells " << res.stats.peak_cells << "\n";
  std::cout << "solve_time_s "
            << nsdp::format_seconds(res.stats.forward_seconds + res.stats.backward_seconds)
            << "\n";
}

std::vector<std::string> expand_instance_paths(const std::vector<std::string>& inputs) {
  std::vector<std::string> paths;
  for (const auto& input : inputs) {
    if (fs::is_directory(input)) {
      std::vector<std::string> found;
      for (const auto& entry : fs::directory_iterator(input))
        if (entry.is_regular_file() && entry.path().extension() == ".dop")
          found.push_back(entry.path().string());
      std::sort(found.begin(), found.end());
      paths.insert(paths.end(), found.begin(), found.end());
    } else {
      paths.push_back(input);
    }
  }
  if (paths.empty()) throw std::runtime_error("no instance files found");
  return paths;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nonserial dynamic programming solver and ordering benchmark"};
  app.require_subcommand(1);
  int exit_code = 0;

  // --- gen ---------------------------------------------------------------
  std::string gen_family, gen_hypergraph, gen_out, gen_relation = "le";
  std::uint64_t gen_seed = 0;
  int gen_n = 0, gen_width = 2, gen_overlap = 1, gen_rows = 0, gen_cols = 0, gen_k = 3,
      gen_m = 0;
  std::int64_t gen_lo = 1, gen_hi = 100;

  auto* gen = app.add_subcommand("gen", "generate a random instance");
  auto* fam_opt = gen->add_option("--family", gen_family, "structured family: chain|grid|random")
                      ->check(CLI::IsMember({"chain", "grid", "random"}));
  auto* hg_opt = gen->add_option("--hypergraph", gen_hypergraph, "hypergraph structure file");
  fam_opt->excludes(hg_opt);
  gen->add_option("--n", gen_n, "vertex count (chain, random)");
  gen->add_option("--width", gen_width, "window width (chain)")->capture_default_str();
  gen->add_option("--overlap", gen_overlap, "window overlap (chain)")->capture_default_str();
  gen->add_option("--rows", gen_rows, "grid rows");
  gen->add_option("--cols", gen_cols, "grid columns");
  gen->add_option("--k", gen_k, "edge size (random)")->capture_default_str();
  gen->add_option("--m", gen_m, "edge count (random)");
  gen->add_option("--seed", gen_seed, "PRNG seed")->capture_default_str();
  gen->add_option("--coeff-lo", gen_lo, "coefficient lower bound")->capture_default_str();
  gen->add_option("--coeff-hi", gen_hi, "coefficient upper bound")->capture_default_str();
  gen->add_option("--relation", gen_relation, "constraint relation: le|eq|ge")
      ->capture_default_str()
      ->check(CLI::IsMember({"le", "eq", "ge"}));
  gen->add_option("--out", gen_out, "output instance path")->required();
  gen->callback([&] {
    nsdp::Hypergraph h;
    if (!gen_family.empty()) {
      if (gen_family == "chain")
        h = nsdp::make_chain(gen_n, gen_width, gen_overlap);
      else if (gen_family == "grid")
        h = nsdp::make_grid(gen_rows, gen_cols);
      else
        h = nsdp::make_random_k_uniform(gen_n, gen_k, gen_m, gen_seed);
    } else if (!gen_hypergraph.empty()) {
      h = nsdp::parse_hypergraph_file(gen_hypergraph);
    } else {
      throw std::runtime_error("gen requires --family or --hypergraph");
    }
    nsdp::GeneratorConfig cfg;
    cfg.seed = gen_seed;
    cfg.coeff_lo = gen_lo;
    cfg.coeff_hi = gen_hi;
    auto rel = nsdp::parse_relation(gen_relation);
    if (!rel) throw std::runtime_error("unknown relation '" + gen_relation + "'");
    cfg.relation = *rel;
    nsdp::DopInstance inst = nsdp::generate_instance(h, cfg);
    std::ofstream out(gen_out);
    if (!out) throw std::runtime_error("cannot open '" + gen_out + "' for writing");
    out << nsdp::write_instance(inst);
  });

  // --- order -------------------------------------------------------------
  std::string order_instance, order_tok;
  bool order_stats = false;

  auto* order = app.add_subcommand("order", "compute an elimination ordering");
  order->add_option("--instance", order_instance, "instance path")->required();
  order->add_option("--ordering", order_tok, "heuristic: md|nd|mcs|minfill|lexbfs")->required();
  order->add_flag("--stats", order_stats, "also print induced width and fill");
  order->callback([&] {
    nsdp::DopInstance inst = load_instance(order_instance);
    nsdp::InteractionGraph g = nsdp::build_interaction_graph(inst);
    auto h = nsdp::parse_heuristic(order_tok);
    if (!h) throw std::runtime_error("unknown heuristic '" + order_tok + "'");
    auto t0 = std::chrono::steady_clock::now();
    nsdp::EliminationOrdering ord = nsdp::compute_ordering(*h, g);
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (std::size_t i = 0; i < ord.order.size(); ++i)
      std::cout << (i ? " " : "") << ord.order[i];
    std::cout << "\n";
    if (order_stats) {
      nsdp::EliminationTrace trace = nsdp::run_elimination_game(g, ord);
      std::cout << "induced_width " << trace.induced_width << "\n";
      std::cout << "total_fill " << trace.total_fill << "\n";
      std::cout << "order_time_s " << nsdp::format_seconds(dt) << "\n";
    }
  });

  // --- solve -------------------------------------------------------------
  std::string solve_instance, solve_tok;
  bool solve_verify = false;
  std::uint64_t solve_budget = nsdp::kDefaultCellBudget;

  auto* solve_cmd = app.add_subcommand("solve", "solve along a heuristic ordering");
  solve_cmd->add_option("--instance", solve_instance, "instance path")->required();
  solve_cmd->add_option("--ordering", solve_tok, "heuristic token or 'all'")->required();
  solve_cmd->add_flag("--verify-oracle", solve_verify,
                      "cross-check against brute-force enumeration");
  solve_cmd->add_option("--budget", solve_budget, "table cell budget")->capture_default_str();
  solve_cmd->callback([&] {
    nsdp::DopInstance inst = load_instance(solve_instance);
    nsdp::InteractionGraph g = nsdp::build_interaction_graph(inst);
    std::vector<nsdp::HeuristicId> heuristics = heuristics_from(solve_tok);
    bool any_optimal = false, any_infeasible = false;
    for (nsdp::HeuristicId h : heuristics) {
      if (heuristics.size() > 1) std::cout << "heuristic " << nsdp::heuristic_label(h) << "\n";
      nsdp::EliminationOrdering ord = nsdp::compute_ordering(h, g);
      nsdp::SolveResult res = nsdp::solve(inst, ord, solve_budget);
      print_solve_result(res);
      if (solve_verify) {
        if (res.status == nsdp::SolveStatus::kWidthExceeded) {
          std::cout << "oracle_check skipped\n";
        } else {
          nsdp::SolveResult oracle = nsdp::brute_force_solve(inst);
          bool ok = oracle.status == res.status && oracle.optimum == res.optimum;
          std::cout << "oracle_check " << (ok ? "ok" : "mismatch") << "\n";
          if (!ok) throw std::runtime_error("solver disagrees with brute-force oracle");
        }
      }
      any_optimal = any_optimal || res.status == nsdp::SolveStatus::kOptimal;
      any_infeasible = any_infeasible || res.status == nsdp::SolveStatus::kInfeasible;
    }
    exit_code = any_optimal ? 0 : any_infeasible ? 2 : 3;
  });

  // --- bench -------------------------------------------------------------
  std::vector<std::string> bench_inputs;
  std::string bench_orderings = "all", bench_format = "csv", bench_out, bench_metric = "width";
  int bench_repeats = 3;
  std::uint64_t bench_budget = nsdp::kDefaultCellBudget;

  auto* bench = app.add_subcommand("bench", "benchmark orderings across instances");
  bench->add_option("--instances", bench_inputs, "instance files or directories of .dop files")
      ->required();
  bench->add_option("--orderings", bench_orderings, "comma list of heuristics or 'all'")
      ->capture_default_str();
  bench->add_option("--repeats", bench_repeats, "timing repetitions per cell")
      ->capture_default_str();
  bench->add_option("--format", bench_format, "report format: csv|markdown")
      ->capture_default_str()
      ->check(CLI::IsMember({"csv", "markdown"}));
  bench->add_option("--out", bench_out, "report path (stdout when omitted)");
  bench->add_option("--metric", bench_metric, "win metric: width|time")
      ->capture_default_str()
      ->check(CLI::IsMember({"width", "time"}));
  bench->add_option("--budget", bench_budget, "table cell budget")->capture_default_str();
  bench->callback([&] {
    std::vector<nsdp::DopInstance> instances;
    for (const auto& path : expand_instance_paths(bench_inputs))
      instances.push_back(load_instance(path));
    std::vector<nsdp::HeuristicId> heuristics = heuristics_from(bench_orderings);
    std::vector<nsdp::BenchRecord> records =
        nsdp::run_benchmark(instances, heuristics, bench_repeats, bench_budget, &std::cerr);
    nsdp::ReportFormat fmt = bench_format == "markdown" ? nsdp::ReportFormat::kMarkdown
                                                        : nsdp::ReportFormat::kCsv;
    if (bench_out.empty()) {
      nsdp::emit_report(std::cout, records, fmt);
      std::cout << "\n";
    } else {
      std::ofstream out(bench_out);
      if (!out) throw std::runtime_error("cannot open '" + bench_out + "' for writing");
      nsdp::emit_report(out, records, fmt);
    }
    nsdp::WinTable wins =
        nsdp::summarize_wins(records, nsdp::parse_win_metric(bench_metric));
    std::cout << nsdp::format_win_table(wins);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
