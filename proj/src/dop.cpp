#include "nsdp/dop.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace nsdp {

namespace {

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

}  // namespace

std::string_view relation_token(Relation r) {
  switch (r) {
    case Relation::kLe: return "le";
    case Relation::kEq: return "eq";
    case Relation::kGe: return "ge";
  }
  return "?";
}

std::optional<Relation> parse_relation(std::string_view token) {
  if (token == "le") return Relation::kLe;
  if (token == "eq") return Relation::kEq;
  if (token == "ge") return Relation::kGe;
  return std::nullopt;
}

ObjectiveComponent ObjectiveComponent::linear(Scope scope, std::vector<std::int64_t> coeffs) {
  ObjectiveComponent c;
  c.scope = std::move(scope);
  c.kind = ComponentKind::kLinear;
  c.coeffs = std::move(coeffs);
  return c;
}

ObjectiveComponent ObjectiveComponent::tabular(Scope scope, std::vector<Value> table) {
  ObjectiveComponent c;
  c.scope = std::move(scope);
  c.kind = ComponentKind::kTabular;
  c.table = std::move(table);
  return c;
}

Assignment Assignment::total(std::vector<std::int64_t> values) {
  Assignment a(static_cast<int>(values.size()));
  for (std::size_t j = 0; j < values.size(); ++j) a.values_[j] = values[j];
  return a;
}

bool Assignment::is_total() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const auto& v) { return v.has_value(); });
}

std::vector<std::int64_t> Assignment::to_vector() const {
  std::vector<std::int64_t> out;
  out.reserve(values_.size());
  for (std::size_t j = 0; j < values_.size(); ++j) {
    if (!values_[j])
      throw std::invalid_argument("variable " + std::to_string(j) + " is unassigned");
    out.push_back(*values_[j]);
  }
  return out;
}

int domain_position(const DopInstance& inst, int var, std::int64_t value) {
  const auto& dom = inst.domains.at(static_cast<std::size_t>(var));
  for (std::size_t i = 0; i < dom.size(); ++i)
    if (dom[i] == value) return static_cast<int>(i);
  return -1;
}

namespace {

void check_scope(const std::string& who, const Scope& scope, int n,
                 std::vector<std::string>& issues) {
  std::set<int> seen;
  for (int v : scope) {
    if (v < 0 || v >= n)
      issues.push_back(who + ": scope index " + std::to_string(v) +
                       " out of range [0, " + std::to_string(n) + ")");
    else if (!seen.insert(v).second)
      issues.push_back(who + ": duplicate variable " + std::to_string(v) + " in scope");
  }
}

// Product of domain sizes over a scope; 0 on overflow (table size checks
// against it will then fail with a message).
std::uint64_t scope_table_size(const DopInstance& inst, const Scope& scope) {
  std::uint64_t size = 1;
  for (int v : scope) {
    std::uint64_t d = inst.domains[static_cast<std::size_t>(v)].size();
    if (d != 0 && size > UINT64_MAX / d) return 0;
    size *= d;
  }
  return size;
}

}  // namespace

ValidationReport validate_instance(const DopInstance& inst) {
  ValidationReport rep;
  if (inst.n < 0) {
    rep.issues.push_back("negative variable count");
    return rep;
  }
  if (static_cast<int>(inst.domains.size()) != inst.n) {
    rep.issues.push_back("expected " + std::to_string(inst.n) + " domains, got " +
                         std::to_string(inst.domains.size()));
    return rep;
  }
  for (int j = 0; j < inst.n; ++j) {
    const auto& dom = inst.domains[static_cast<std::size_t>(j)];
    if (dom.empty())
      rep.issues.push_back("variable " + std::to_string(j) + ": empty domain");
    std::set<std::int64_t> seen;
    for (std::int64_t v : dom)
      if (!seen.insert(v).second)
        rep.issues.push_back("variable " + std::to_string(j) + ": duplicate domain value " +
                             std::to_string(v));
  }
  for (std::size_t k = 0; k < inst.components.size(); ++k) {
    const auto& c = inst.components[k];
    const std::string who = "component " + std::to_string(k);
    check_scope(who, c.scope, inst.n, rep.issues);
    bool scope_ok = std::all_of(c.scope.begin(), c.scope.end(),
                                [&](int v) { return v >= 0 && v < inst.n; });
    if (c.kind == ComponentKind::kLinear) {
      if (c.coeffs.size() != c.scope.size())
        rep.issues.push_back(who + ": " + std::to_string(c.coeffs.size()) +
                             " coefficients for " + std::to_string(c.scope.size()) +
                             " scope variables");
    } else if (scope_ok) {
      std::uint64_t want = scope_table_size(inst, c.scope);
      if (c.table.size() != want)
        rep.issues.push_back(who + ": expected " + std::to_string(want) +
                             " table entries, got " + std::to_string(c.table.size()));
    }
  }
  for (std::size_t i = 0; i < inst.constraints.size(); ++i) {
    const auto& c = inst.constraints[i];
    const std::string who = "constraint " + std::to_string(i);
    check_scope(who, c.scope, inst.n, rep.issues);
    if (c.coeffs.size() != c.scope.size())
      rep.issues.push_back(who + ": " + std::to_string(c.coeffs.size()) +
                           " coefficients for " + std::to_string(c.scope.size()) +
                           " scope variables");
  }
  return rep;
}

namespace {

std::int64_t assigned_value(const DopInstance& inst, const Assignment& a, int var) {
  auto v = a.get(var);
  if (!v) throw std::invalid_argument("variable " + std::to_string(var) + " is unassigned");
  if (domain_position(inst, var, *v) < 0)
    throw std::invalid_argument("value " + std::to_string(*v) +
                                " is not in the domain of variable " + std::to_string(var));
  return *v;
}

}  // namespace

Value eval_component(const DopInstance& inst, const ObjectiveComponent& c, const Assignment& a) {
  if (c.kind == ComponentKind::kLinear) {
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < c.scope.size(); ++i)
      acc = checked_add(acc, checked_mul(c.coeffs[i], assigned_value(inst, a, c.scope[i])));
    return Value::of(acc);
  }
  std::uint64_t idx = 0;
  for (int var : c.scope) {
    int pos = domain_position(inst, var, assigned_value(inst, a, var));
    idx = idx * inst.domains[static_cast<std::size_t>(var)].size() + static_cast<std::uint64_t>(pos);
  }
  return c.table.at(idx);
}

Value evaluate_objective(const DopInstance& inst, const Assignment& a) {
  Value total = Value::of(0);
  for (const auto& c : inst.components) total += eval_component(inst, c, a);
  return total;
}

std::int64_t constraint_lhs(const DopInstance& inst, const LinearConstraint& c, const Assignment& a) {
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < c.scope.size(); ++i)
    acc = checked_add(acc, checked_mul(c.coeffs[i], assigned_value(inst, a, c.scope[i])));
  return acc;
}

bool constraint_holds(const DopInstance& inst, const LinearConstraint& c, const Assignment& a) {
  std::int64_t lhs = constraint_lhs(inst, c, a);
  switch (c.relation) {
    case Relation::kLe: return lhs <= c.rhs;
    case Relation::kEq: return lhs == c.rhs;
    case Relation::kGe: return lhs >= c.rhs;
  }
  return false;
}

bool check_feasible(const DopInstance& inst, const Assignment& a) {
  for (const auto& c : inst.constraints)
    if (!constraint_holds(inst, c, a)) return false;
  return true;
}

ScopeIndexer::ScopeIndexer(const DopInstance& inst, Scope scope) : scope_(std::move(scope)) {
  radices_.reserve(scope_.size());
  for (int v : scope_) {
    std::uint64_t d = inst.domains.at(static_cast<std::size_t>(v)).size();
    radices_.push_back(static_cast<int>(d));
    if (d == 0 || size_ > UINT64_MAX / d)
      throw std::overflow_error("table over scope is too large to index");
    size_ *= d;
  }
}

std::uint64_t ScopeIndexer::index_of(std::span<const int> positions) const {
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < scope_.size(); ++i)
    idx = idx * static_cast<std::uint64_t>(radices_[i]) + static_cast<std::uint64_t>(positions[i]);
  return idx;
}

void ScopeIndexer::positions_of(std::uint64_t row, std::span<int> out) const {
  for (std::size_t i = scope_.size(); i-- > 0;) {
    out[i] = static_cast<int>(row % static_cast<std::uint64_t>(radices_[i]));
    row /= static_cast<std::uint64_t>(radices_[i]);
  }
}

namespace {

class LineParser {
 public:
  explicit LineParser(std::istream& in) : in_(in) {}

  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++lineno_;
      tokens.clear();
      std::istringstream ss(line);
      std::string tok;
      while (ss >> tok) tokens.push_back(tok);
      if (tokens.empty() || tokens.front().front() == '#') continue;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::runtime_error("line " + std::to_string(lineno_) + ": " + msg);
  }

  std::int64_t parse_int(const std::string& tok) const {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      fail("expected an integer, got '" + tok + "'");
    return v;
  }

 private:
  std::istream& in_;
  int lineno_ = 0;
};

}  // namespace

DopInstance parse_instance(std::istream& in, std::string name) {
  DopInstance inst;
  inst.name = std::move(name);
  LineParser lines(in);
  bool have_vars = false;
  std::vector<bool> dom_given;

  std::vector<std::string> t;
  while (lines.next(t)) {
    const std::string& kw = t.front();
    if (kw == "vars") {
      if (have_vars) lines.fail("duplicate 'vars' line");
      if (t.size() != 2) lines.fail("'vars' takes exactly one argument");
      std::int64_t n = lines.parse_int(t[1]);
      if (n < 0) lines.fail("negative variable count");
      inst.n = static_cast<int>(n);
      inst.domains.assign(static_cast<std::size_t>(inst.n), DopInstance::default_domain());
      dom_given.assign(static_cast<std::size_t>(inst.n), false);
      have_vars = true;
    } else if (kw == "dom") {
      if (!have_vars) lines.fail("'dom' before 'vars'");
      if (t.size() < 3) lines.fail("'dom' needs a variable index and at least one value");
      std::int64_t j = lines.parse_int(t[1]);
      if (j < 0 || j >= inst.n) lines.fail("variable index " + t[1] + " out of range");
      if (dom_given[static_cast<std::size_t>(j)]) lines.fail("duplicate 'dom' for variable " + t[1]);
      dom_given[static_cast<std::size_t>(j)] = true;
      std::vector<std::int64_t> dom;
      for (std::size_t i = 2; i < t.size(); ++i) dom.push_back(lines.parse_int(t[i]));
      inst.domains[static_cast<std::size_t>(j)] = std::move(dom);
    } else if (kw == "obj") {
      if (!have_vars) lines.fail("'obj' before 'vars'");
      if (t.size() < 3 || t.size() % 2 == 0) lines.fail("'obj' needs index/coefficient pairs");
      for (std::size_t i = 1; i < t.size(); i += 2) {
        int var = static_cast<int>(lines.parse_int(t[i]));
        std::int64_t coeff = lines.parse_int(t[i + 1]);
        inst.components.push_back(ObjectiveComponent::linear({var}, {coeff}));
      }
    } else if (kw == "con") {
      if (!have_vars) lines.fail("'con' before 'vars'");
      if (t.size() < 4) lines.fail("'con' needs a relation, a rhs and a scope");
      auto rel = parse_relation(t[1]);
      if (!rel) lines.fail("unknown relation '" + t[1] + "' (expected le, eq or ge)");
      LinearConstraint con;
      con.relation = *rel;
      con.rhs = lines.parse_int(t[2]);
      if (t[3] != ":") lines.fail("expected ':' after the rhs");
      if (t.size() < 6 || (t.size() - 4) % 2 != 0)
        lines.fail("'con' needs index/coefficient pairs after ':'");
      for (std::size_t i = 4; i < t.size(); i += 2) {
        con.scope.push_back(static_cast<int>(lines.parse_int(t[i])));
        con.coeffs.push_back(lines.parse_int(t[i + 1]));
      }
      inst.constraints.push_back(std::move(con));
    } else {
      lines.fail("unknown keyword '" + kw + "'");
    }
  }
  if (!have_vars) throw std::runtime_error("missing 'vars' line");
  return inst;
}

DopInstance parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::string stem = path;
  if (auto slash = stem.find_last_of('/'); slash != std::string::npos) stem = stem.substr(slash + 1);
  if (auto dot = stem.find_last_of('.'); dot != std::string::npos && dot > 0) stem = stem.substr(0, dot);
  return parse_instance(in, stem);
}

std::string write_instance(const DopInstance& inst) {
  std::string out = "vars " + std::to_string(inst.n) + "\n";
  const auto dflt = DopInstance::default_domain();
  for (int j = 0; j < inst.n; ++j) {
    const auto& dom = inst.domains[static_cast<std::size_t>(j)];
    if (dom == dflt) continue;
    out += "dom " + std::to_string(j);
    for (std::int64_t v : dom) out += " " + std::to_string(v);
    out += "\n";
  }
  std::string obj;
  for (const auto& c : inst.components) {
    if (c.kind != ComponentKind::kLinear)
      throw std::runtime_error("tabular components are not representable in the instance text format");
    for (std::size_t i = 0; i < c.scope.size(); ++i)
      obj += " " + std::to_string(c.scope[i]) + " " + std::to_string(c.coeffs[i]);
  }
  if (!obj.empty()) out += "obj" + obj + "\n";
  for (const auto& c : inst.constraints) {
    out += "con " + std::string(relation_token(c.relation)) + " " + std::to_string(c.rhs) + " :";
    for (std::size_t i = 0; i < c.scope.size(); ++i)
      out += " " + std::to_string(c.scope[i]) + " " + std::to_string(c.coeffs[i]);
    out += "\n";
  }
  return out;
}

}  // namespace nsdp
