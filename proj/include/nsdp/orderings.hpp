#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "nsdp/graph.hpp"

namespace nsdp {

enum class HeuristicId { kMinDegree, kNestedDissection, kMaxCardinality, kMinFill, kLexBfs };

inline constexpr std::array<HeuristicId, 5> kAllHeuristics = {
    HeuristicId::kMinDegree, HeuristicId::kNestedDissection, HeuristicId::kMaxCardinality,
    HeuristicId::kMinFill, HeuristicId::kLexBfs};

/// CLI token: md | nd | mcs | minfill | lexbfs.
std::string_view heuristic_token(HeuristicId id);
/// Display label: MD | ND | MCS | MIN-FILL | LEX-BFS.
std::string_view heuristic_label(HeuristicId id);
std::optional<HeuristicId> parse_heuristic(std::string_view token);
/// Accepts a single token, a comma-separated list, or "all".
std::optional<std::vector<HeuristicId>> parse_heuristic_list(std::string_view tokens);

/// Fill/width bookkeeping of the top split, for verification.
struct DissectionInfo {
  std::vector<int> separator;
  std::vector<std::vector<int>> parts;
};

// All heuristics are deterministic: every tie is broken toward the smallest
// vertex index. Each returns a permutation of the live vertices, for any
// input graph including disconnected and edgeless ones.

/// Repeatedly eliminates a vertex of minimum degree in the current
/// elimination graph.
EliminationOrdering order_min_degree(const InteractionGraph& g);

/// Recursively splits on a BFS level-structure separator grown from a
/// pseudo-peripheral vertex; separator vertices are numbered last, parts
/// recurse, components of size <= 3 fall back to minimum degree.
EliminationOrdering order_nested_dissection(const InteractionGraph& g,
                                            DissectionInfo* top_split = nullptr);

/// Maximum cardinality search: visits vertices maximizing the count of
/// already-visited neighbors, starting at `start`; the elimination order is
/// the reverse of the visit order, so chordal graphs yield a perfect
/// elimination ordering.
EliminationOrdering order_mcs(const InteractionGraph& g, int start = 0);

/// Repeatedly eliminates the vertex whose elimination adds the fewest fill
/// edges in the current elimination graph.
EliminationOrdering order_min_fill(const InteractionGraph& g);

/// Lexicographic BFS: numbers vertices n down to 1 picking the
/// lexicographically largest label (labels collect the numbers of numbered
/// neighbors in decreasing order); the elimination order runs number 1
/// first, so chordal graphs yield a perfect elimination ordering.
EliminationOrdering order_lex_bfs(const InteractionGraph& g);

EliminationOrdering compute_ordering(HeuristicId id, const InteractionGraph& g);

/// True iff the elimination game along ord adds zero fill edges.
bool is_perfect_elimination_ordering(const InteractionGraph& g, const EliminationOrdering& ord);

}  // namespace nsdp
