#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "nsdp/dop.hpp"
#include "nsdp/graph.hpp"

namespace nsdp {

/// Per-table cell cap; one binary table of width 25 hits it.
inline constexpr std::uint64_t kDefaultCellBudget = 1ull << 25;
/// Assignment-space cap for the brute-force oracle.
inline constexpr std::uint64_t kDefaultOracleBound = 1ull << 20;

enum class SolveStatus { kOptimal, kInfeasible, kWidthExceeded };

std::string_view status_token(SolveStatus s);

/// The message produced by eliminating one variable: h over the variable's
/// neighborhood at elimination time, plus the maximizing domain value per
/// row for solution recovery. argmax entries are meaningful exactly where
/// the corresponding value is finite.
struct LocalTable {
  int eliminated_var = -1;
  ScopeIndexer indexer;
  std::vector<Value> values;
  std::vector<std::int64_t> argmax;

  const Scope& scope() const { return indexer.scope(); }
};

struct FailedStep {
  int position = -1;
  int vertex = -1;
  std::uint64_t cells_required = 0;
};

struct SolveStats {
  int induced_width = 0;
  long long total_fill = 0;
  std::uint64_t peak_cells = 0;
  double forward_seconds = 0.0;
  double backward_seconds = 0.0;
};

struct SolveResult {
  SolveStatus status = SolveStatus::kInfeasible;
  Value optimum = Value::neg_inf();
  std::optional<Assignment> assignment;
  SolveStats stats;
  std::optional<FailedStep> failed_step;
};

/// Working state of a variable-elimination run: the live component and
/// constraint lists, the evolving interaction graph, the accumulated
/// constant from empty-scope tables, and all tables produced so far.
class SolverState {
 public:
  explicit SolverState(const DopInstance& inst, std::uint64_t cell_budget = kDefaultCellBudget);

  struct StepOutcome {
    bool ok = false;
    std::uint64_t cells_required = 0;
  };

  /// Eliminates v: builds h over Nb(v) maximizing over v's domain subject to
  /// the constraints containing v, consumes those constraints and the
  /// components containing v, adds h as a new tabular component (or folds a
  /// scalar into the running constant), and eliminates v from the graph.
  /// Fails without side effects when the scan space over Nb(v) and v
  /// exceeds the cell budget. Ties in the inner max go to the smallest
  /// domain position.
  StepOutcome eliminate_variable(int v);

  const InteractionGraph& graph() const { return graph_; }
  const std::vector<LocalTable>& tables() const { return tables_; }
  Value running_constant() const { return constant_; }
  bool is_eliminated(int v) const;
  int eliminated_count() const { return eliminated_count_; }
  std::vector<const ObjectiveComponent*> live_components() const;
  std::vector<const LinearConstraint*> live_constraints() const;

  int induced_width() const { return width_; }
  long long total_fill() const { return fill_; }
  std::uint64_t peak_cells() const { return peak_cells_; }

 private:
  Value component_at_positions(const ObjectiveComponent& c) const;
  bool constraints_hold_at_positions(const std::vector<std::size_t>& idxs) const;

  const DopInstance* inst_;
  std::uint64_t budget_;
  InteractionGraph graph_;
  std::vector<ObjectiveComponent> components_;
  std::vector<char> component_live_;
  std::vector<char> constraint_live_;
  std::vector<char> eliminated_;
  std::vector<int> pos_;
  std::vector<LocalTable> tables_;
  Value constant_ = Value::of(0);
  int eliminated_count_ = 0;
  int width_ = 0;
  long long fill_ = 0;
  std::uint64_t live_cells_ = 0;
  std::uint64_t peak_cells_ = 0;
};

/// Variable elimination along ord: the forward pass folds every variable
/// into local tables, the backward pass reads the stored argmax rows to
/// recover a maximizing total assignment. Exact integer arithmetic
/// throughout; equal optima across valid orderings.
SolveResult solve(const DopInstance& inst, const EliminationOrdering& ord,
                  std::uint64_t cell_budget = kDefaultCellBudget);

/// Exhaustive oracle: enumerates every assignment (variable 0 the most
/// significant digit) and returns the maximum feasible objective with the
/// first maximizing assignment in that enumeration order. Throws when the
/// assignment space exceeds `enumeration_bound`.
SolveResult brute_force_solve(const DopInstance& inst,
                              std::uint64_t enumeration_bound = kDefaultOracleBound);

}  // namespace nsdp
