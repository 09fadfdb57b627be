#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nsdp/value.hpp"

namespace nsdp {

/// Ordered list of variable indices.
using Scope = std::vector<int>;

enum class Relation { kLe, kEq, kGe };

std::string_view relation_token(Relation r);
std::optional<Relation> parse_relation(std::string_view token);

enum class ComponentKind { kLinear, kTabular };

/// One additive term of the objective. Linear components hold one
/// coefficient per scope variable; tabular components hold a dense
/// row-major table over the scope's domain positions, first scope
/// variable most significant. Table entries may be Value::neg_inf()
/// to mark infeasible combinations.
struct ObjectiveComponent {
  Scope scope;
  ComponentKind kind = ComponentKind::kLinear;
  std::vector<std::int64_t> coeffs;
  std::vector<Value> table;

  static ObjectiveComponent linear(Scope scope, std::vector<std::int64_t> coeffs);
  static ObjectiveComponent tabular(Scope scope, std::vector<Value> table);
};

/// coeffs . x_scope  relation  rhs, all arithmetic exact 64-bit.
struct LinearConstraint {
  Scope scope;
  std::vector<std::int64_t> coeffs;
  Relation relation = Relation::kLe;
  std::int64_t rhs = 0;
};

/// A discrete optimization problem: maximize the sum of objective
/// components over finite integer domains subject to relational linear
/// constraints.
struct DopInstance {
  std::string name;
  int n = 0;
  std::vector<std::vector<std::int64_t>> domains;
  std::vector<ObjectiveComponent> components;
  std::vector<LinearConstraint> constraints;

  static std::vector<std::int64_t> default_domain() { return {0, 1}; }
};

/// Partial or total map variable -> chosen value.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(int n) : values_(static_cast<std::size_t>(n)) {}
  static Assignment total(std::vector<std::int64_t> values);

  int size() const { return static_cast<int>(values_.size()); }
  void set(int var, std::int64_t value) { values_.at(static_cast<std::size_t>(var)) = value; }
  void unset(int var) { values_.at(static_cast<std::size_t>(var)).reset(); }
  std::optional<std::int64_t> get(int var) const { return values_.at(static_cast<std::size_t>(var)); }
  bool is_total() const;
  /// All values in variable order; throws if any variable is unassigned.
  std::vector<std::int64_t> to_vector() const;

  friend bool operator==(const Assignment& a, const Assignment& b) = default;

 private:
  std::vector<std::optional<std::int64_t>> values_;
};

struct ValidationReport {
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
};

/// Checks every structural invariant of the instance; the report lists one
/// message per violation, naming the offending variable/component/constraint.
ValidationReport validate_instance(const DopInstance& inst);

/// Sum of all components at a total assignment; -inf if any tabular
/// component is -inf there. Throws if a scoped variable is unassigned or
/// carries a value outside its domain.
Value evaluate_objective(const DopInstance& inst, const Assignment& a);

/// True iff every constraint holds at the assignment. Same preconditions
/// as evaluate_objective, over constraint scopes.
bool check_feasible(const DopInstance& inst, const Assignment& a);

/// Value of one component at an assignment covering its scope.
Value eval_component(const DopInstance& inst, const ObjectiveComponent& c, const Assignment& a);

/// Exact left-hand side of a constraint at an assignment covering its scope.
std::int64_t constraint_lhs(const DopInstance& inst, const LinearConstraint& c, const Assignment& a);
bool constraint_holds(const DopInstance& inst, const LinearConstraint& c, const Assignment& a);

/// Position of `value` in var's domain list, -1 if absent.
int domain_position(const DopInstance& inst, int var, std::int64_t value);

/// Mixed-radix addressing for dense tables over a scope: row index is the
/// odometer value of the per-variable domain positions, first scope
/// variable most significant.
class ScopeIndexer {
 public:
  ScopeIndexer() = default;
  ScopeIndexer(const DopInstance& inst, Scope scope);

  const Scope& scope() const { return scope_; }
  std::uint64_t size() const { return size_; }
  int radix(std::size_t i) const { return radices_[i]; }

  std::uint64_t index_of(std::span<const int> positions) const;
  void positions_of(std::uint64_t row, std::span<int> out) const;

 private:
  Scope scope_;
  std::vector<int> radices_;
  std::uint64_t size_ = 1;
};

// Line-oriented instance text format (UTF-8, '#' starts a comment line):
//   vars <n>
//   dom <j> <v1> <v2> ...            (optional; default domain is 0 1)
//   obj <j1> <c1> <j2> <c2> ...      (each term becomes a singleton component)
//   con <le|eq|ge> <rhs> : <j1> <a1> <j2> <a2> ...
// Indices are 0-based. Unknown keywords are rejected with their line number.
DopInstance parse_instance(std::istream& in, std::string name = "");
DopInstance parse_instance_file(const std::string& path);

/// Serializes in the text format above. Linear components are written as
/// per-variable terms of a single obj line; tabular components are not
/// representable and raise an error.
std::string write_instance(const DopInstance& inst);

}  // namespace nsdp
