#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "nsdp/orderings.hpp"
#include "nsdp/solver.hpp"
#include "test_support.hpp"

using namespace nsdp;

namespace {

DopInstance knapsack_pair() {
  DopInstance inst;
  inst.n = 2;
  inst.domains = {{0, 1}, {0, 1}};
  inst.components.push_back(ObjectiveComponent::linear({0}, {5}));
  inst.components.push_back(ObjectiveComponent::linear({1}, {3}));
  inst.constraints.push_back({{0, 1}, {1, 1}, Relation::kLe, 1});
  return inst;
}

// Enumerates total assignments over `vars` (odometer, first listed variable
// most significant) and calls fn on each partially-filled assignment.
template <typename Fn>
void for_each_assignment(const DopInstance& inst, const std::vector<int>& vars, Assignment& a,
                         Fn&& fn) {
  std::vector<std::size_t> pos(vars.size(), 0);
  while (true) {
    for (std::size_t i = 0; i < vars.size(); ++i)
      a.set(vars[i], inst.domains[static_cast<std::size_t>(vars[i])][pos[i]]);
    fn(a);
    std::size_t i = vars.size();
    while (i-- > 0) {
      if (++pos[i] < inst.domains[static_cast<std::size_t>(vars[i])].size()) break;
      pos[i] = 0;
      if (i == 0) return;
    }
    if (vars.empty()) return;
  }
}

}  // namespace

TEST_CASE("eliminating an unconstrained variable folds its best value into the constant") {
  DopInstance inst;
  inst.n = 1;
  inst.domains = {{0, 1}};
  inst.components.push_back(ObjectiveComponent::linear({0}, {5}));

  SolverState state(inst);
  auto outcome = state.eliminate_variable(0);
  REQUIRE(outcome.ok);
  CHECK(outcome.cells_required == 2);
  CHECK(state.running_constant() == Value::of(5));
  REQUIRE(state.tables().size() == 1);
  CHECK(state.tables()[0].scope().empty());
  CHECK(state.tables()[0].argmax[0] == 1);
  CHECK(state.live_components().empty());
}

TEST_CASE("elimination builds the local table over the neighborhood") {
  // max x0  s.t.  x0 + x1 <= 1: eliminating x0 leaves h(x1=0)=1, h(x1=1)=0.
  DopInstance inst;
  inst.n = 2;
  inst.domains = {{0, 1}, {0, 1}};
  inst.components.push_back(ObjectiveComponent::linear({0}, {1}));
  inst.constraints.push_back({{0, 1}, {1, 1}, Relation::kLe, 1});

  SolverState state(inst);
  REQUIRE(state.eliminate_variable(0).ok);
  REQUIRE(state.tables().size() == 1);
  const LocalTable& t = state.tables()[0];
  CHECK(t.scope() == Scope{1});
  REQUIRE(t.values.size() == 2);
  CHECK(t.values[0] == Value::of(1));
  CHECK(t.values[1] == Value::of(0));
  CHECK(t.argmax[0] == 1);
  CHECK(t.argmax[1] == 0);
  CHECK(state.live_constraints().empty());  // consumed at first scope elimination
  CHECK(state.live_components().size() == 1);  // the generated table over {1}
}

TEST_CASE("an unsatisfiable constraint yields an all neg_inf table") {
  DopInstance inst;
  inst.n = 1;
  inst.domains = {{0, 1}};
  inst.components.push_back(ObjectiveComponent::linear({0}, {1}));
  inst.constraints.push_back({{0}, {1}, Relation::kEq, 2});

  SolverState state(inst);
  REQUIRE(state.eliminate_variable(0).ok);
  CHECK(state.running_constant().is_neg_inf());
}

TEST_CASE("solve recovers the optimum and a maximizing assignment") {
  DopInstance inst = knapsack_pair();
  SolveResult res = solve(inst, {{0, 1}});
  REQUIRE(res.status == SolveStatus::kOptimal);
  CHECK(res.optimum == Value::of(5));
  REQUIRE(res.assignment.has_value());
  CHECK(res.assignment->to_vector() == std::vector<std::int64_t>{1, 0});
  CHECK(res.stats.induced_width == 1);
  CHECK(res.stats.peak_cells >= 2);

  // reverse ordering reaches the same optimum
  SolveResult rev = solve(inst, {{1, 0}});
  CHECK(rev.status == SolveStatus::kOptimal);
  CHECK(rev.optimum == Value::of(5));
  CHECK(rev.assignment->to_vector() == std::vector<std::int64_t>{1, 0});
}

TEST_CASE("contradictory constraints are reported infeasible") {
  DopInstance inst;
  inst.n = 1;
  inst.domains = {{0, 1}};
  inst.components.push_back(ObjectiveComponent::linear({0}, {1}));
  inst.constraints.push_back({{0}, {1}, Relation::kGe, 1});
  inst.constraints.push_back({{0}, {1}, Relation::kLe, 0});

  SolveResult res = solve(inst, {{0}});
  CHECK(res.status == SolveStatus::kInfeasible);
  CHECK(res.optimum.is_neg_inf());
  CHECK_FALSE(res.assignment.has_value());

  SolveResult oracle = brute_force_solve(inst);
  CHECK(oracle.status == SolveStatus::kInfeasible);
}

TEST_CASE("inner max ties resolve to the smallest domain position") {
  DopInstance inst;
  inst.n = 1;
  inst.domains = {{5, 2}};  // deliberately unsorted
  inst.components.push_back(ObjectiveComponent::linear({0}, {0}));

  SolveResult res = solve(inst, {{0}});
  REQUIRE(res.status == SolveStatus::kOptimal);
  CHECK(res.optimum == Value::of(0));
  CHECK(res.assignment->to_vector() == std::vector<std::int64_t>{5});
}

TEST_CASE("variables outside every scope get their first domain value") {
  DopInstance inst;
  inst.n = 2;
  inst.domains = {{3, 8}, {0, 1}};
  inst.components.push_back(ObjectiveComponent::linear({1}, {2}));

  SolveResult res = solve(inst, {{0, 1}});
  REQUIRE(res.status == SolveStatus::kOptimal);
  CHECK(res.optimum == Value::of(2));
  CHECK(res.assignment->to_vector() == std::vector<std::int64_t>{3, 1});
}

TEST_CASE("an empty instance solves to zero") {
  DopInstance inst;
  SolveResult res = solve(inst, {{}});
  CHECK(res.status == SolveStatus::kOptimal);
  CHECK(res.optimum == Value::of(0));
  CHECK(res.assignment->size() == 0);
}

TEST_CASE("solve validates its inputs") {
  DopInstance inst = knapsack_pair();
  CHECK_THROWS_AS(solve(inst, {{0}}), std::invalid_argument);
  CHECK_THROWS_AS(solve(inst, {{0, 0}}), std::invalid_argument);
  inst.domains[0].clear();
  CHECK_THROWS_AS(solve(inst, {{0, 1}}), std::invalid_argument);
}

TEST_CASE("the cell budget turns oversized steps into WidthExceeded") {
  // A 5-clique: eliminating the first vertex needs 2^5 = 32 cells.
  DopInstance inst;
  inst.n = 5;
  inst.domains.assign(5, DopInstance::default_domain());
  Scope all{0, 1, 2, 3, 4};
  inst.constraints.push_back({all, {1, 1, 1, 1, 1}, Relation::kLe, 3});
  for (int j = 0; j < 5; ++j)
    inst.components.push_back(ObjectiveComponent::linear({j}, {1}));

  SUBCASE("state level: failure has no side effects") {
    SolverState state(inst, 16);
    auto outcome = state.eliminate_variable(0);
    CHECK_FALSE(outcome.ok);
    CHECK(outcome.cells_required == 32);
    CHECK(state.tables().empty());
    CHECK(state.eliminated_count() == 0);
    CHECK_FALSE(state.is_eliminated(0));
    CHECK(state.live_constraints().size() == 1);
    CHECK(state.live_components().size() == 5);
  }
  SUBCASE("solve level: offending step is recorded") {
    SolveResult res = solve(inst, {{0, 1, 2, 3, 4}}, 16);
    REQUIRE(res.status == SolveStatus::kWidthExceeded);
    REQUIRE(res.failed_step.has_value());
    CHECK(res.failed_step->position == 0);
    CHECK(res.failed_step->vertex == 0);
    CHECK(res.failed_step->cells_required == 32);
    CHECK_FALSE(res.assignment.has_value());
  }
  SUBCASE("a sufficient budget solves the same instance") {
    SolveResult res = solve(inst, {{0, 1, 2, 3, 4}}, 32);
    REQUIRE(res.status == SolveStatus::kOptimal);
    CHECK(res.optimum == Value::of(3));
  }
}

TEST_CASE("solver trace matches the elimination game") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    DopInstance inst = testing::random_rich_instance(7, 3000 + seed);
    REQUIRE(validate_instance(inst).ok());
    InteractionGraph g = build_interaction_graph(inst);
    EliminationOrdering ord = order_min_fill(g);
    EliminationTrace trace = run_elimination_game(g, ord);

    SolverState state(inst);
    std::uint64_t biggest_table = 0;
    for (std::size_t i = 0; i < ord.order.size(); ++i) {
      int v = ord.order[i];
      std::vector<int> nb_before = state.graph().neighbors(v);
      REQUIRE(state.eliminate_variable(v).ok);
      // the table scope is exactly the neighborhood at elimination time
      CHECK(state.tables().back().scope() == nb_before);
      CHECK(static_cast<int>(nb_before.size()) == trace.steps[i].neighborhood_size);
      biggest_table = std::max<std::uint64_t>(biggest_table,
                                              state.tables().back().values.size());
    }
    CHECK(state.induced_width() == trace.induced_width);
    CHECK(state.total_fill() == trace.total_fill);
    CHECK(state.peak_cells() >= biggest_table);

    SolveResult res = solve(inst, ord);
    CHECK(res.stats.induced_width == trace.induced_width);
    CHECK(res.stats.total_fill == trace.total_fill);
    CHECK(res.stats.peak_cells == state.peak_cells());
  }
}

TEST_CASE("partial elimination preserves the objective exactly") {
  // After eliminating E, the running constant plus the live components
  // evaluated at any assignment of the remaining variables must equal the
  // best original objective over extensions to E that satisfy the consumed
  // constraints.
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    DopInstance inst = testing::random_rich_instance(6, 4000 + seed);
    REQUIRE(validate_instance(inst).ok());
    EliminationOrdering ord = order_min_degree(build_interaction_graph(inst));

    SolverState state(inst);
    std::vector<int> eliminated(ord.order.begin(), ord.order.begin() + 3);
    std::vector<int> remaining(ord.order.begin() + 3, ord.order.end());
    for (int v : eliminated) REQUIRE(state.eliminate_variable(v).ok);

    std::vector<const LinearConstraint*> live_list = state.live_constraints();
    std::set<const LinearConstraint*> live(live_list.begin(), live_list.end());
    std::vector<const LinearConstraint*> consumed;
    for (const auto& c : inst.constraints)
      if (!live.count(&c)) consumed.push_back(&c);

    Assignment a(inst.n);
    for_each_assignment(inst, remaining, a, [&](Assignment& partial) {
      Value folded = state.running_constant();
      for (const ObjectiveComponent* c : state.live_components())
        folded += eval_component(inst, *c, partial);

      Value best = Value::neg_inf();
      for_each_assignment(inst, eliminated, partial, [&](Assignment& full) {
        for (const LinearConstraint* c : consumed)
          if (!constraint_holds(inst, *c, full)) return;
        Value obj = evaluate_objective(inst, full);
        if (obj > best) best = obj;
      });
      CHECK(folded == best);
    });
  }
}

TEST_CASE("solver agrees with brute force on rich random instances") {
  int optimal_seen = 0, infeasible_seen = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    DopInstance inst = testing::random_rich_instance(4 + static_cast<int>(seed % 5),
                                                     5000 + seed);
    REQUIRE(validate_instance(inst).ok());
    SolveResult oracle = brute_force_solve(inst);
    InteractionGraph g = build_interaction_graph(inst);

    for (HeuristicId id : kAllHeuristics) {
      SolveResult res = solve(inst, compute_ordering(id, g));
      REQUIRE(res.status == oracle.status);
      if (oracle.status == SolveStatus::kOptimal) {
        CHECK(res.optimum == oracle.optimum);
        REQUIRE(res.assignment.has_value());
        CHECK(check_feasible(inst, *res.assignment));
        CHECK(evaluate_objective(inst, *res.assignment) == oracle.optimum);
      }
    }
    optimal_seen += oracle.status == SolveStatus::kOptimal;
    infeasible_seen += oracle.status == SolveStatus::kInfeasible;
  }
  // the mix must actually exercise both outcomes
  CHECK(optimal_seen >= 10);
  CHECK(infeasible_seen >= 3);
}

TEST_CASE("brute force returns the first maximizer in enumeration order") {
  // Both (0,1) and (1,0) reach the optimum; variable 0 is the most
  // significant digit, so (0,1) is found first.
  DopInstance inst;
  inst.n = 2;
  inst.domains = {{0, 1}, {0, 1}};
  inst.components.push_back(ObjectiveComponent::linear({0, 1}, {1, 1}));
  inst.constraints.push_back({{0, 1}, {1, 1}, Relation::kLe, 1});

  SolveResult res = brute_force_solve(inst);
  REQUIRE(res.status == SolveStatus::kOptimal);
  CHECK(res.optimum == Value::of(1));
  CHECK(res.assignment->to_vector() == std::vector<std::int64_t>{0, 1});
}

TEST_CASE("brute force refuses oversized assignment spaces") {
  DopInstance inst;
  inst.n = 11;
  inst.domains.assign(11, DopInstance::default_domain());
  CHECK_THROWS_AS(brute_force_solve(inst, 1024), std::runtime_error);
}

TEST_CASE("objective overflow surfaces as an error") {
  DopInstance inst;
  inst.n = 2;
  inst.domains = {{0, 1}, {0, 1}};
  inst.components.push_back(ObjectiveComponent::linear({0}, {INT64_MAX}));
  inst.components.push_back(ObjectiveComponent::linear({1}, {INT64_MAX}));
  CHECK_THROWS_AS(solve(inst, {{0, 1}}), std::overflow_error);
}
