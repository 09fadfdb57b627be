#include "nsdp/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace nsdp {

InteractionGraph::InteractionGraph(int n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  adj_.resize(static_cast<std::size_t>(n));
  live_.assign(static_cast<std::size_t>(n), 1);
  live_count_ = n;
}

void InteractionGraph::check_vertex(int v) const {
  if (v < 0 || v >= vertex_count())
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0, " +
                                std::to_string(vertex_count()) + ")");
}

void InteractionGraph::check_live(int v) const {
  check_vertex(v);
  if (!live_[static_cast<std::size_t>(v)])
    throw std::invalid_argument("vertex " + std::to_string(v) + " is already eliminated");
}

bool InteractionGraph::is_live(int v) const {
  check_vertex(v);
  return live_[static_cast<std::size_t>(v)] != 0;
}

std::vector<int> InteractionGraph::live_vertices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(live_count_));
  for (int v = 0; v < vertex_count(); ++v)
    if (live_[static_cast<std::size_t>(v)]) out.push_back(v);
  return out;
}

long long InteractionGraph::edge_count() const {
  long long m = 0;
  for (const auto& nb : adj_) m += static_cast<long long>(nb.size());
  return m / 2;
}

bool InteractionGraph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& a = adj_[static_cast<std::size_t>(u)];
  const auto& b = adj_[static_cast<std::size_t>(v)];
  const auto& smaller = a.size() <= b.size() ? a : b;
  int target = a.size() <= b.size() ? v : u;
  return std::binary_search(smaller.begin(), smaller.end(), target);
}

void InteractionGraph::add_edge(int u, int v) {
  check_live(u);
  check_live(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  auto& a = adj_[static_cast<std::size_t>(u)];
  auto it = std::lower_bound(a.begin(), a.end(), v);
  if (it != a.end() && *it == v) return;
  a.insert(it, v);
  auto& b = adj_[static_cast<std::size_t>(v)];
  b.insert(std::lower_bound(b.begin(), b.end(), u), u);
}

int InteractionGraph::degree(int v) const {
  check_live(v);
  return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

const std::vector<int>& InteractionGraph::neighbors(int v) const {
  check_live(v);
  return adj_[static_cast<std::size_t>(v)];
}

std::vector<Edge> InteractionGraph::eliminate(int v) {
  check_live(v);
  const std::vector<int> nb = adj_[static_cast<std::size_t>(v)];
  std::vector<Edge> fill;
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      if (!has_edge(nb[i], nb[j])) {
        add_edge(nb[i], nb[j]);
        fill.emplace_back(nb[i], nb[j]);
      }
  for (int u : nb) {
    auto& a = adj_[static_cast<std::size_t>(u)];
    a.erase(std::lower_bound(a.begin(), a.end(), v));
  }
  adj_[static_cast<std::size_t>(v)].clear();
  live_[static_cast<std::size_t>(v)] = 0;
  --live_count_;
  return fill;
}

int InteractionGraph::fill_if_eliminated(int v) const {
  check_live(v);
  const auto& nb = adj_[static_cast<std::size_t>(v)];
  int fill = 0;
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      if (!has_edge(nb[i], nb[j])) ++fill;
  return fill;
}

bool is_permutation(const EliminationOrdering& ord, int n) {
  if (static_cast<int>(ord.order.size()) != n) return false;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : ord.order) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

InteractionGraph build_interaction_graph(const DopInstance& inst) {
  auto rep = validate_instance(inst);
  if (!rep.ok()) throw std::invalid_argument("invalid instance: " + rep.issues.front());
  InteractionGraph g(inst.n);
  auto connect = [&g](const Scope& scope) {
    for (std::size_t i = 0; i < scope.size(); ++i)
      for (std::size_t j = i + 1; j < scope.size(); ++j)
        g.add_edge(scope[i], scope[j]);
  };
  for (const auto& c : inst.components) connect(c.scope);
  for (const auto& c : inst.constraints) connect(c.scope);
  return g;
}

std::vector<int> neighborhood(const InteractionGraph& g, int v) { return g.neighbors(v); }

std::pair<InteractionGraph, std::vector<Edge>> eliminate_vertex(const InteractionGraph& g, int v) {
  InteractionGraph out = g;
  auto fill = out.eliminate(v);
  return {std::move(out), std::move(fill)};
}

EliminationTrace run_elimination_game(const InteractionGraph& g, const EliminationOrdering& ord) {
  {
    std::vector<int> live = g.live_vertices();
    std::vector<int> sorted = ord.order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != live)
      throw std::invalid_argument("ordering is not a permutation of the graph's live vertices");
  }
  InteractionGraph work = g;
  EliminationTrace trace;
  trace.steps.reserve(ord.order.size());
  for (int v : ord.order) {
    int nb = work.degree(v);
    auto fill = work.eliminate(v);
    trace.steps.push_back({v, nb, static_cast<int>(fill.size())});
    trace.induced_width = std::max(trace.induced_width, nb);
    trace.total_fill += static_cast<long long>(fill.size());
  }
  return trace;
}

int induced_width(const InteractionGraph& g, const EliminationOrdering& ord) {
  return run_elimination_game(g, ord).induced_width;
}

std::string dump_edge_list(const InteractionGraph& g) {
  std::vector<Edge> edges;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!g.is_live(v)) continue;
    for (int u : g.neighbors(v))
      if (v < u) edges.emplace_back(v, u);
  }
  std::sort(edges.begin(), edges.end());
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(edges.size()) + "\n";
  for (const auto& [u, v] : edges)
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace nsdp
