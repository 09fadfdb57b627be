#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nsdp/dop.hpp"

namespace nsdp {

/// Undirected edge, endpoints in ascending order.
using Edge = std::pair<int, int>;

/// Undirected graph over dense vertex indices 0..n-1 with sorted
/// duplicate-free adjacency lists. Eliminated vertices are tombstoned,
/// never renumbered, so identities stay stable across elimination steps.
class InteractionGraph {
 public:
  InteractionGraph() = default;
  explicit InteractionGraph(int n);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int live_count() const { return live_count_; }
  bool is_live(int v) const;
  std::vector<int> live_vertices() const;
  long long edge_count() const;

  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);
  int degree(int v) const;
  /// Open neighborhood, sorted ascending. Live vertices only appear.
  const std::vector<int>& neighbors(int v) const;

  /// Turns Nb(v) into a clique, removes v and its incident edges.
  /// Returns the fill edges actually added, in lexicographic order.
  std::vector<Edge> eliminate(int v);

  /// Fill edges v's elimination would add, without mutating the graph.
  int fill_if_eliminated(int v) const;

 private:
  void check_vertex(int v) const;
  void check_live(int v) const;

  std::vector<std::vector<int>> adj_;
  std::vector<char> live_;
  int live_count_ = 0;
};

struct EliminationOrdering {
  std::vector<int> order;
  friend bool operator==(const EliminationOrdering&, const EliminationOrdering&) = default;
};

bool is_permutation(const EliminationOrdering& ord, int n);

struct EliminationStep {
  int vertex = -1;
  int neighborhood_size = 0;
  int fill_edges = 0;
};

struct EliminationTrace {
  std::vector<EliminationStep> steps;
  int induced_width = 0;
  long long total_fill = 0;
};

/// Vertices are the instance's variables; u,v are adjacent iff they co-occur
/// in some objective component scope or some constraint scope.
InteractionGraph build_interaction_graph(const DopInstance& inst);

/// Open neighborhood of v as a sorted copy.
std::vector<int> neighborhood(const InteractionGraph& g, int v);

/// Functional elimination: the input graph is untouched.
std::pair<InteractionGraph, std::vector<Edge>> eliminate_vertex(const InteractionGraph& g, int v);

/// Eliminates along ord on successive working graphs, recording each step.
/// Throws if ord is not a permutation of g's live vertices.
EliminationTrace run_elimination_game(const InteractionGraph& g, const EliminationOrdering& ord);

int induced_width(const InteractionGraph& g, const EliminationOrdering& ord);

/// Edge-list dump: "n m" header, then one "u v" line per edge, lexicographic.
std::string dump_edge_list(const InteractionGraph& g);

}  // namespace nsdp
