#pragma once

// Shared helpers for the test executables: seeded random structures and
// naive reference computations. The reference code here is deliberately
// written against adjacency matrices and exhaustive scans, independent of
// the library's incremental data structures, so the two sides can check
// each other.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "nsdp/dop.hpp"
#include "nsdp/generator.hpp"
#include "nsdp/graph.hpp"

namespace nsdp::testing {

inline InteractionGraph random_graph(int n, double edge_prob, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  InteractionGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (unit() < edge_prob) g.add_edge(u, v);
  return g;
}

inline std::vector<int> random_ordering(int n, std::mt19937_64& rng) {
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i) {
    auto j = static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(order[static_cast<std::size_t>(i)], order[j]);
  }
  return order;
}

// Each vertex past the first attaches to one random earlier vertex.
inline InteractionGraph random_tree(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  InteractionGraph g(n);
  for (int v = 1; v < n; ++v)
    g.add_edge(v, static_cast<int>(rng() % static_cast<std::uint64_t>(v)));
  return g;
}

// Start from a (k+1)-clique; every further vertex is joined to all members
// of one randomly chosen existing k-clique. The result is chordal with
// treewidth exactly k (for n > k).
inline InteractionGraph random_ktree(int n, int k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  InteractionGraph g(n);
  if (n <= k + 1) {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
  }
  std::vector<std::vector<int>> cliques;  // k-sized attachment faces
  std::vector<int> base;
  for (int v = 0; v <= k; ++v) base.push_back(v);
  for (int u : base)
    for (int v : base)
      if (u < v) g.add_edge(u, v);
  for (int drop = 0; drop <= k; ++drop) {
    std::vector<int> face;
    for (int v : base)
      if (v != base[static_cast<std::size_t>(drop)]) face.push_back(v);
    cliques.push_back(face);
  }
  for (int v = k + 1; v < n; ++v) {
    const auto face = cliques[static_cast<std::size_t>(rng() % cliques.size())];
    for (int u : face) g.add_edge(u, v);
    for (std::size_t drop = 0; drop < face.size(); ++drop) {
      std::vector<int> next;
      for (std::size_t i = 0; i < face.size(); ++i)
        if (i != drop) next.push_back(face[i]);
      next.push_back(v);
      cliques.push_back(std::move(next));
    }
  }
  return g;
}

// Induced width computed the slow way: for every step j the elimination
// graph G^j is rebuilt from the original adjacency matrix by replaying the
// ordering prefix, then the pivot's remaining degree is measured.
inline int naive_induced_width(const InteractionGraph& g, const std::vector<int>& order) {
  const int n = g.vertex_count();
  std::vector<std::vector<char>> original(static_cast<std::size_t>(n),
                                          std::vector<char>(static_cast<std::size_t>(n), 0));
  for (int u = 0; u < n; ++u)
    for (int v : g.neighbors(u))
      original[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;

  int width = 0;
  for (std::size_t j = 0; j < order.size(); ++j) {
    auto m = original;
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    for (std::size_t t = 0; t < j; ++t) {
      int v = order[t];
      std::vector<int> nb;
      for (int u = 0; u < n; ++u)
        if (!removed[static_cast<std::size_t>(u)] && m[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)])
          nb.push_back(u);
      for (std::size_t a = 0; a < nb.size(); ++a)
        for (std::size_t b = a + 1; b < nb.size(); ++b) {
          m[static_cast<std::size_t>(nb[a])][static_cast<std::size_t>(nb[b])] = 1;
          m[static_cast<std::size_t>(nb[b])][static_cast<std::size_t>(nb[a])] = 1;
        }
      for (int u = 0; u < n; ++u) {
        m[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 0;
        m[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 0;
      }
      removed[static_cast<std::size_t>(v)] = 1;
    }
    int pivot = order[j];
    int deg = 0;
    for (int u = 0; u < n; ++u)
      if (!removed[static_cast<std::size_t>(u)] &&
          m[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(u)])
        ++deg;
    width = std::max(width, deg);
  }
  return width;
}

// Instance with mixed domain sizes (including negative values and
// non-sorted domains), tabular and linear components, and constraints of
// every relation. Small enough to brute-force.
inline DopInstance random_rich_instance(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };

  DopInstance inst;
  inst.n = n;
  for (int j = 0; j < n; ++j) {
    std::size_t size = 2 + rng() % 2;
    std::vector<std::int64_t> dom;
    while (dom.size() < size) {
      std::int64_t v = pick(-3, 3);
      if (std::find(dom.begin(), dom.end(), v) == dom.end()) dom.push_back(v);
    }
    inst.domains.push_back(std::move(dom));
  }

  auto random_scope = [&](std::size_t max_arity) {
    std::size_t arity = 1 + rng() % std::min<std::size_t>(max_arity, static_cast<std::size_t>(n));
    Scope scope;
    while (scope.size() < arity) {
      int v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
      if (std::find(scope.begin(), scope.end(), v) == scope.end()) scope.push_back(v);
    }
    std::sort(scope.begin(), scope.end());
    return scope;
  };

  std::size_t component_count = 1 + rng() % static_cast<std::uint64_t>(n);
  for (std::size_t k = 0; k < component_count; ++k) {
    Scope scope = random_scope(3);
    if (rng() % 2) {
      std::vector<std::int64_t> coeffs;
      for (std::size_t i = 0; i < scope.size(); ++i) coeffs.push_back(pick(-5, 5));
      inst.components.push_back(ObjectiveComponent::linear(std::move(scope), std::move(coeffs)));
    } else {
      std::uint64_t cells = 1;
      for (int v : scope) cells *= inst.domains[static_cast<std::size_t>(v)].size();
      std::vector<Value> table;
      for (std::uint64_t i = 0; i < cells; ++i)
        table.push_back(rng() % 10 == 0 ? Value::neg_inf() : Value::of(pick(-20, 20)));
      inst.components.push_back(ObjectiveComponent::tabular(std::move(scope), std::move(table)));
    }
  }

  std::size_t constraint_count = rng() % static_cast<std::uint64_t>(n);
  for (std::size_t i = 0; i < constraint_count; ++i) {
    LinearConstraint con;
    con.scope = random_scope(3);
    for (std::size_t k = 0; k < con.scope.size(); ++k) con.coeffs.push_back(pick(-4, 4));
    std::uint64_t r = rng() % 3;
    con.relation = r == 0 ? Relation::kLe : r == 1 ? Relation::kEq : Relation::kGe;
    con.rhs = pick(-6, 6);
    inst.constraints.push_back(std::move(con));
  }
  return inst;
}

}  // namespace nsdp::testing
