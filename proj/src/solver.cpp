#include "nsdp/solver.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <stdexcept>

namespace nsdp {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > UINT64_MAX / b) return UINT64_MAX;
  return a * b;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in multiplication");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in addition");
  return r;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

std::string_view status_token(SolveStatus s) {
  switch (s) {
    case SolveStatus::kOptimal: return "optimal";
    case SolveStatus::kInfeasible: return "infeasible";
    case SolveStatus::kWidthExceeded: return "width_exceeded";
  }
  return "?";
}

SolverState::SolverState(const DopInstance& inst, std::uint64_t cell_budget)
    : inst_(&inst),
      budget_(cell_budget),
      graph_(build_interaction_graph(inst)),
      components_(inst.components),
      component_live_(inst.components.size(), 1),
      constraint_live_(inst.constraints.size(), 1),
      eliminated_(static_cast<std::size_t>(inst.n), 0),
      pos_(static_cast<std::size_t>(inst.n), -1) {
  for (const auto& c : components_)
    if (c.kind == ComponentKind::kTabular) live_cells_ += c.table.size();
  peak_cells_ = live_cells_;
}

bool SolverState::is_eliminated(int v) const {
  if (v < 0 || v >= inst_->n)
    throw std::invalid_argument("variable " + std::to_string(v) + " out of range");
  return eliminated_[static_cast<std::size_t>(v)] != 0;
}

std::vector<const ObjectiveComponent*> SolverState::live_components() const {
  std::vector<const ObjectiveComponent*> out;
  for (std::size_t k = 0; k < components_.size(); ++k)
    if (component_live_[k]) out.push_back(&components_[k]);
  return out;
}

std::vector<const LinearConstraint*> SolverState::live_constraints() const {
  std::vector<const LinearConstraint*> out;
  for (std::size_t i = 0; i < inst_->constraints.size(); ++i)
    if (constraint_live_[i]) out.push_back(&inst_->constraints[i]);
  return out;
}

Value SolverState::component_at_positions(const ObjectiveComponent& c) const {
  if (c.kind == ComponentKind::kLinear) {
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < c.scope.size(); ++i) {
      int var = c.scope[i];
      assert(pos_[static_cast<std::size_t>(var)] >= 0);
      std::int64_t value =
          inst_->domains[static_cast<std::size_t>(var)]
                        [static_cast<std::size_t>(pos_[static_cast<std::size_t>(var)])];
      acc = checked_add(acc, checked_mul(c.coeffs[i], value));
    }
    return Value::of(acc);
  }
  std::uint64_t idx = 0;
  for (int var : c.scope) {
    assert(pos_[static_cast<std::size_t>(var)] >= 0);
    idx = idx * inst_->domains[static_cast<std::size_t>(var)].size() +
          static_cast<std::uint64_t>(pos_[static_cast<std::size_t>(var)]);
  }
  return c.table[idx];
}

bool SolverState::constraints_hold_at_positions(const std::vector<std::size_t>& idxs) const {
  for (std::size_t i : idxs) {
    const LinearConstraint& c = inst_->constraints[i];
    std::int64_t lhs = 0;
    for (std::size_t k = 0; k < c.scope.size(); ++k) {
      int var = c.scope[k];
      assert(pos_[static_cast<std::size_t>(var)] >= 0);
      std::int64_t value =
          inst_->domains[static_cast<std::size_t>(var)]
                        [static_cast<std::size_t>(pos_[static_cast<std::size_t>(var)])];
      lhs = checked_add(lhs, checked_mul(c.coeffs[k], value));
    }
    bool ok = c.relation == Relation::kLe   ? lhs <= c.rhs
              : c.relation == Relation::kEq ? lhs == c.rhs
                                            : lhs >= c.rhs;
    if (!ok) return false;
  }
  return true;
}

SolverState::StepOutcome SolverState::eliminate_variable(int v) {
  if (v < 0 || v >= inst_->n)
    throw std::invalid_argument("variable " + std::to_string(v) + " out of range");
  if (eliminated_[static_cast<std::size_t>(v)])
    throw std::invalid_argument("variable " + std::to_string(v) + " already eliminated");

  const Scope scope = graph_.neighbors(v);
  const auto& dom_v = inst_->domains[static_cast<std::size_t>(v)];

  std::uint64_t cells = dom_v.size();
  for (int s : scope)
    cells = saturating_mul(cells, inst_->domains[static_cast<std::size_t>(s)].size());
  if (cells > budget_) return {false, cells};

  // Constraints and components containing v. Live scopes that contain v sit
  // inside {v} u Nb(v): original scopes are cliques of the interaction graph
  // and generated table scopes were cliqued when their variable left.
  std::vector<std::size_t> consumed_constraints;
  for (std::size_t i = 0; i < inst_->constraints.size(); ++i)
    if (constraint_live_[i] &&
        std::find(inst_->constraints[i].scope.begin(), inst_->constraints[i].scope.end(), v) !=
            inst_->constraints[i].scope.end())
      consumed_constraints.push_back(i);
  std::vector<std::size_t> consumed_components;
  for (std::size_t k = 0; k < components_.size(); ++k)
    if (component_live_[k] &&
        std::find(components_[k].scope.begin(), components_[k].scope.end(), v) !=
            components_[k].scope.end())
      consumed_components.push_back(k);

  ScopeIndexer indexer(*inst_, scope);
  std::vector<Value> values(indexer.size(), Value::neg_inf());
  std::vector<std::int64_t> argmax(indexer.size(), 0);
  std::vector<int> row_positions(scope.size());

  for (std::uint64_t row = 0; row < indexer.size(); ++row) {
    indexer.positions_of(row, row_positions);
    for (std::size_t i = 0; i < scope.size(); ++i)
      pos_[static_cast<std::size_t>(scope[i])] = row_positions[i];

    Value best = Value::neg_inf();
    int best_pos = -1;
    for (int dp = 0; dp < static_cast<int>(dom_v.size()); ++dp) {
      pos_[static_cast<std::size_t>(v)] = dp;
      if (!constraints_hold_at_positions(consumed_constraints)) continue;
      Value val = Value::of(0);
      for (std::size_t k : consumed_components) val += component_at_positions(components_[k]);
      if (val > best) {
        best = val;
        best_pos = dp;
      }
    }
    values[row] = best;
    if (best_pos >= 0) argmax[row] = dom_v[static_cast<std::size_t>(best_pos)];
  }
  for (int s : scope) pos_[static_cast<std::size_t>(s)] = -1;
  pos_[static_cast<std::size_t>(v)] = -1;

  for (std::size_t i : consumed_constraints) constraint_live_[i] = 0;
  for (std::size_t k : consumed_components) {
    component_live_[k] = 0;
    if (components_[k].kind == ComponentKind::kTabular)
      live_cells_ -= components_[k].table.size();
  }
  if (scope.empty()) {
    constant_ += values[0];
  } else {
    components_.push_back(ObjectiveComponent::tabular(scope, values));
    component_live_.push_back(1);
    live_cells_ += values.size();
  }
  peak_cells_ = std::max(peak_cells_, live_cells_);

  LocalTable table;
  table.eliminated_var = v;
  table.indexer = std::move(indexer);
  table.values = std::move(values);
  table.argmax = std::move(argmax);
  tables_.push_back(std::move(table));

  auto fill = graph_.eliminate(v);
  width_ = std::max(width_, static_cast<int>(scope.size()));
  fill_ += static_cast<long long>(fill.size());
  eliminated_[static_cast<std::size_t>(v)] = 1;
  ++eliminated_count_;
  return {true, cells};
}

SolveResult solve(const DopInstance& inst, const EliminationOrdering& ord,
                  std::uint64_t cell_budget) {
  auto rep = validate_instance(inst);
  if (!rep.ok()) throw std::invalid_argument("invalid instance: " + rep.issues.front());
  if (!is_permutation(ord, inst.n))
    throw std::invalid_argument("ordering is not a permutation of the instance variables");

  SolverState state(inst, cell_budget);
  SolveResult result;
  auto t0 = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < ord.order.size(); ++i) {
    auto outcome = state.eliminate_variable(ord.order[i]);
    if (!outcome.ok) {
      result.status = SolveStatus::kWidthExceeded;
      result.failed_step = FailedStep{static_cast<int>(i), ord.order[i], outcome.cells_required};
      result.stats = {state.induced_width(), state.total_fill(), state.peak_cells(),
                      seconds_since(t0), 0.0};
      return result;
    }
  }
  result.stats = {state.induced_width(), state.total_fill(), state.peak_cells(),
                  seconds_since(t0), 0.0};

  Value optimum = state.running_constant();
  if (optimum.is_neg_inf()) {
    result.status = SolveStatus::kInfeasible;
    return result;
  }

  auto t1 = std::chrono::steady_clock::now();
  Assignment a(inst.n);
  const auto& tables = state.tables();
  std::vector<int> positions;
  for (auto it = tables.rbegin(); it != tables.rend(); ++it) {
    positions.resize(it->scope().size());
    for (std::size_t i = 0; i < it->scope().size(); ++i) {
      int var = it->scope()[i];
      auto value = a.get(var);
      if (!value) throw std::logic_error("internal: table scope variable not yet assigned");
      positions[i] = domain_position(inst, var, *value);
    }
    std::uint64_t row = it->indexer.index_of(positions);
    if (it->values[row].is_neg_inf())
      throw std::logic_error("internal: backward pass reached an infeasible table row");
    a.set(it->eliminated_var, it->argmax[row]);
  }
  result.stats.backward_seconds = seconds_since(t1);

  if (evaluate_objective(inst, a) != optimum || !check_feasible(inst, a))
    throw std::logic_error("internal: recovered assignment does not attain the optimum");
  result.status = SolveStatus::kOptimal;
  result.optimum = optimum;
  result.assignment = std::move(a);
  return result;
}

SolveResult brute_force_solve(const DopInstance& inst, std::uint64_t enumeration_bound) {
  auto rep = validate_instance(inst);
  if (!rep.ok()) throw std::invalid_argument("invalid instance: " + rep.issues.front());

  std::uint64_t total = 1;
  for (const auto& dom : inst.domains) total = saturating_mul(total, dom.size());
  if (total > enumeration_bound)
    throw std::runtime_error("assignment space of " + std::to_string(total) +
                             " exceeds the enumeration bound of " +
                             std::to_string(enumeration_bound));

  SolveResult result;
  auto t0 = std::chrono::steady_clock::now();
  std::vector<int> pos(static_cast<std::size_t>(inst.n), 0);
  Assignment a(inst.n);
  Value best = Value::neg_inf();
  std::optional<Assignment> best_assignment;
  for (std::uint64_t step = 0; step < total; ++step) {
    for (int j = 0; j < inst.n; ++j)
      a.set(j, inst.domains[static_cast<std::size_t>(j)][static_cast<std::size_t>(pos[static_cast<std::size_t>(j)])]);
    if (check_feasible(inst, a)) {
      Value val = evaluate_objective(inst, a);
      if (val > best) {
        best = val;
        best_assignment = a;
      }
    }
    // Odometer increment, last variable least significant.
    for (int j = inst.n - 1; j >= 0; --j) {
      auto& p = pos[static_cast<std::size_t>(j)];
      if (++p < static_cast<int>(inst.domains[static_cast<std::size_t>(j)].size())) break;
      p = 0;
    }
  }
  result.stats.forward_seconds = seconds_since(t0);
  if (best.is_neg_inf()) {
    result.status = SolveStatus::kInfeasible;
    return result;
  }
  result.status = SolveStatus::kOptimal;
  result.optimum = best;
  result.assignment = std::move(best_assignment);
  return result;
}

}  // namespace nsdp
