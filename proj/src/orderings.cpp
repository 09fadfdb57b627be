#include "nsdp/orderings.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace nsdp {

std::string_view heuristic_token(HeuristicId id) {
  switch (id) {
    case HeuristicId::kMinDegree: return "md";
    case HeuristicId::kNestedDissection: return "nd";
    case HeuristicId::kMaxCardinality: return "mcs";
    case HeuristicId::kMinFill: return "minfill";
    case HeuristicId::kLexBfs: return "lexbfs";
  }
  return "?";
}

std::string_view heuristic_label(HeuristicId id) {
  switch (id) {
    case HeuristicId::kMinDegree: return "MD";
    case HeuristicId::kNestedDissection: return "ND";
    case HeuristicId::kMaxCardinality: return "MCS";
    case HeuristicId::kMinFill: return "MIN-FILL";
    case HeuristicId::kLexBfs: return "LEX-BFS";
  }
  return "?";
}

std::optional<HeuristicId> parse_heuristic(std::string_view token) {
  for (HeuristicId id : kAllHeuristics)
    if (token == heuristic_token(id)) return id;
  return std::nullopt;
}

std::optional<std::vector<HeuristicId>> parse_heuristic_list(std::string_view tokens) {
  if (tokens == "all")
    return std::vector<HeuristicId>(kAllHeuristics.begin(), kAllHeuristics.end());
  std::vector<HeuristicId> out;
  std::size_t start = 0;
  while (start <= tokens.size()) {
    std::size_t comma = tokens.find(',', start);
    std::string_view tok = tokens.substr(start, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - start);
    auto id = parse_heuristic(tok);
    if (!id) return std::nullopt;
    out.push_back(*id);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.empty()) return std::nullopt;
  return out;
}

EliminationOrdering order_min_degree(const InteractionGraph& g) {
  InteractionGraph work = g;
  EliminationOrdering out;
  out.order.reserve(static_cast<std::size_t>(work.live_count()));
  while (work.live_count() > 0) {
    int best = -1, best_degree = INT_MAX;
    for (int v = 0; v < work.vertex_count(); ++v) {
      if (!work.is_live(v)) continue;
      int d = work.degree(v);
      if (d < best_degree) {
        best = v;
        best_degree = d;
      }
    }
    work.eliminate(best);
    out.order.push_back(best);
  }
  return out;
}

EliminationOrdering order_min_fill(const InteractionGraph& g) {
  InteractionGraph work = g;
  EliminationOrdering out;
  out.order.reserve(static_cast<std::size_t>(work.live_count()));
  while (work.live_count() > 0) {
    int best = -1, best_fill = INT_MAX;
    for (int v = 0; v < work.vertex_count(); ++v) {
      if (!work.is_live(v)) continue;
      int f = work.fill_if_eliminated(v);
      if (f < best_fill) {
        best = v;
        best_fill = f;
      }
    }
    work.eliminate(best);
    out.order.push_back(best);
  }
  return out;
}

EliminationOrdering order_mcs(const InteractionGraph& g, int start) {
  const int n = g.vertex_count();
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<int> visit_order;
  visit_order.reserve(static_cast<std::size_t>(g.live_count()));
  for (int step = 0; step < g.live_count(); ++step) {
    int pick = -1;
    if (step == 0 && start >= 0 && start < n && g.is_live(start)) {
      pick = start;
    } else {
      int best_weight = -1;
      for (int v = 0; v < n; ++v) {
        if (!g.is_live(v) || visited[static_cast<std::size_t>(v)]) continue;
        if (weight[static_cast<std::size_t>(v)] > best_weight) {
          pick = v;
          best_weight = weight[static_cast<std::size_t>(v)];
        }
      }
    }
    visited[static_cast<std::size_t>(pick)] = 1;
    visit_order.push_back(pick);
    for (int u : g.neighbors(pick))
      if (!visited[static_cast<std::size_t>(u)]) ++weight[static_cast<std::size_t>(u)];
  }
  EliminationOrdering out;
  out.order.assign(visit_order.rbegin(), visit_order.rend());
  return out;
}

EliminationOrdering order_lex_bfs(const InteractionGraph& g) {
  const int n = g.vertex_count();
  // Labels collect the numbers of already numbered neighbors; numbers are
  // assigned n down to 1, so appending keeps each label in decreasing order.
  std::vector<std::vector<int>> label(static_cast<std::size_t>(n));
  std::vector<char> numbered(static_cast<std::size_t>(n), 0);
  std::vector<int> selection;
  selection.reserve(static_cast<std::size_t>(g.live_count()));
  int next_number = g.live_count();
  while (next_number >= 1) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (!g.is_live(v) || numbered[static_cast<std::size_t>(v)]) continue;
      if (pick < 0 ||
          std::lexicographical_compare(label[static_cast<std::size_t>(pick)].begin(),
                                       label[static_cast<std::size_t>(pick)].end(),
                                       label[static_cast<std::size_t>(v)].begin(),
                                       label[static_cast<std::size_t>(v)].end()))
        pick = v;
    }
    numbered[static_cast<std::size_t>(pick)] = 1;
    selection.push_back(pick);
    for (int u : g.neighbors(pick))
      if (!numbered[static_cast<std::size_t>(u)])
        label[static_cast<std::size_t>(u)].push_back(next_number);
    --next_number;
  }
  EliminationOrdering out;
  out.order.assign(selection.rbegin(), selection.rend());
  return out;
}

namespace {

std::vector<std::vector<int>> components_of(const InteractionGraph& g,
                                            const std::vector<int>& subset) {
  std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v : subset) in[static_cast<std::size_t>(v)] = 1;
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<std::vector<int>> comps;
  for (int s : subset) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<int> comp{s};
    seen[static_cast<std::size_t>(s)] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (int u : g.neighbors(comp[head]))
        if (in[static_cast<std::size_t>(u)] && !seen[static_cast<std::size_t>(u)]) {
          seen[static_cast<std::size_t>(u)] = 1;
          comp.push_back(u);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::vector<std::vector<int>> bfs_levels(const InteractionGraph& g, const std::vector<char>& in,
                                         int start) {
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  seen[static_cast<std::size_t>(start)] = 1;
  std::vector<std::vector<int>> levels{{start}};
  while (true) {
    std::vector<int> next;
    for (int v : levels.back())
      for (int u : g.neighbors(v))
        if (in[static_cast<std::size_t>(u)] && !seen[static_cast<std::size_t>(u)]) {
          seen[static_cast<std::size_t>(u)] = 1;
          next.push_back(u);
        }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    levels.push_back(std::move(next));
  }
  return levels;
}

// Minimum degree restricted to the induced subgraph; used for the small
// base cases of the dissection.
void min_degree_within(const InteractionGraph& g, const std::vector<int>& subset,
                       std::vector<int>& out) {
  std::vector<int> remaining = subset;
  while (!remaining.empty()) {
    int best = -1, best_degree = INT_MAX;
    for (int v : remaining) {
      int d = 0;
      for (int u : g.neighbors(v))
        if (std::binary_search(remaining.begin(), remaining.end(), u)) ++d;
      if (d < best_degree) {
        best = v;
        best_degree = d;
      }
    }
    out.push_back(best);
    remaining.erase(std::lower_bound(remaining.begin(), remaining.end(), best));
  }
}

void nd_recurse(const InteractionGraph& g, const std::vector<int>& subset, std::vector<int>& out,
                DissectionInfo* info) {
  if (subset.empty()) return;
  auto comps = components_of(g, subset);
  if (comps.size() > 1) {
    if (info) info->parts = comps;
    for (const auto& comp : comps) nd_recurse(g, comp, out, nullptr);
    return;
  }
  if (subset.size() <= 3) {
    min_degree_within(g, subset, out);
    return;
  }

  std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v : subset) in[static_cast<std::size_t>(v)] = 1;

  // Pseudo-peripheral start: hop twice to a deepest BFS vertex.
  int start = subset.front();
  for (int rep = 0; rep < 2; ++rep)
    start = bfs_levels(g, in, start).back().front();
  auto levels = bfs_levels(g, in, start);

  const std::size_t mid = (levels.size() - 1) / 2;
  std::vector<int> separator = levels[mid];
  if (mid > 0) {
    // Refine: a separator vertex touching only one side joins that side.
    // Sides are updated as vertices move so the remaining set still separates.
    std::vector<char> side_a(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<char> side_b(static_cast<std::size_t>(g.vertex_count()), 0);
    for (std::size_t l = 0; l < mid; ++l)
      for (int v : levels[l]) side_a[static_cast<std::size_t>(v)] = 1;
    for (std::size_t l = mid + 1; l < levels.size(); ++l)
      for (int v : levels[l]) side_b[static_cast<std::size_t>(v)] = 1;
    std::vector<int> kept;
    for (int v : separator) {
      bool touches_a = false, touches_b = false;
      for (int u : g.neighbors(v)) {
        touches_a = touches_a || side_a[static_cast<std::size_t>(u)];
        touches_b = touches_b || side_b[static_cast<std::size_t>(u)];
      }
      if (!touches_a)
        side_b[static_cast<std::size_t>(v)] = 1;
      else if (!touches_b)
        side_a[static_cast<std::size_t>(v)] = 1;
      else
        kept.push_back(v);
    }
    if (!kept.empty()) separator = std::move(kept);
  }

  std::vector<int> rest;
  rest.reserve(subset.size() - separator.size());
  std::set_difference(subset.begin(), subset.end(), separator.begin(), separator.end(),
                      std::back_inserter(rest));
  auto parts = components_of(g, rest);
  if (info) {
    info->separator = separator;
    info->parts = parts;
  }
  for (const auto& part : parts) nd_recurse(g, part, out, nullptr);
  out.insert(out.end(), separator.begin(), separator.end());
}

}  // namespace

EliminationOrdering order_nested_dissection(const InteractionGraph& g, DissectionInfo* top_split) {
  if (top_split) *top_split = {};
  EliminationOrdering out;
  out.order.reserve(static_cast<std::size_t>(g.live_count()));
  nd_recurse(g, g.live_vertices(), out.order, top_split);
  return out;
}

EliminationOrdering compute_ordering(HeuristicId id, const InteractionGraph& g) {
  switch (id) {
    case HeuristicId::kMinDegree: return order_min_degree(g);
    case HeuristicId::kNestedDissection: return order_nested_dissection(g);
    case HeuristicId::kMaxCardinality: return order_mcs(g);
    case HeuristicId::kMinFill: return order_min_fill(g);
    case HeuristicId::kLexBfs: return order_lex_bfs(g);
  }
  throw std::invalid_argument("unknown heuristic");
}

bool is_perfect_elimination_ordering(const InteractionGraph& g, const EliminationOrdering& ord) {
  return run_elimination_game(g, ord).total_fill == 0;
}

}  // namespace nsdp
