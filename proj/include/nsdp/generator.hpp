#pragma once

// Random instance generation and hypergraph structure files.
//
// A hypergraph file is line oriented; '#' starts a comment and blank lines
// are skipped. An optional first line `verts <n>` fixes the vertex count.
// Every other line describes one hyperedge, either named:
//
//     e1(a, b, c)
//
// or bare (whitespace separated):
//
//     a b c
//
// Vertex tokens are opaque names, numbered densely in first-appearance
// order; numeric tokens get no special treatment. Without a header the
// vertex count is the number of distinct names.
//
// Instance generation is a pure function of (hypergraph, config). The PRNG
// is pinned to std::mt19937_64 seeded with cfg.seed; integer draws use
// modulo reduction and sigma is built from the top 53 bits of one draw.
// These choices are deliberate implementation constants: the same inputs
// produce byte-identical instances on every platform.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "nsdp/dop.hpp"

namespace nsdp {

struct Hypergraph {
  int n = 0;                        // vertices are 0..n-1
  std::vector<Scope> edges;         // each sorted, duplicate free, nonempty

  bool operator==(const Hypergraph&) const = default;
};

// Throws std::invalid_argument when an edge is empty, contains duplicates,
// or references a vertex outside [0, n).
void validate_hypergraph(const Hypergraph& h);

Hypergraph parse_hypergraph(std::istream& in);
Hypergraph parse_hypergraph_file(const std::string& path);

// Emits a `verts` header plus one bare edge line per edge. Because the
// parser numbers vertices by first appearance, reading the output back
// yields an isomorphic hypergraph with the same vertex count; it is equal
// to the input exactly when vertex ids first appear in increasing order.
void write_hypergraph(std::ostream& out, const Hypergraph& h);

struct GeneratorConfig {
  std::uint64_t seed = 0;
  std::int64_t coeff_lo = 1;        // inclusive; must satisfy 1 <= lo <= hi
  std::int64_t coeff_hi = 100;
  Relation relation = Relation::kLe;
};

// Builds a binary instance on h: one variable per vertex, an objective made
// of one singleton linear component per variable with a coefficient drawn
// uniformly from [coeff_lo, coeff_hi], and one linear constraint per
// hyperedge with coefficients from the same range and right-hand side
// floor(sigma * sum(coeffs)) where sigma is uniform in [0, 1), redrawn
// until the result is at least 1 and capped at sum(coeffs) - 1.
DopInstance generate_instance(const Hypergraph& h, const GeneratorConfig& cfg);

// Structured families.
//
// make_chain lays `length` vertices in a row and covers them with windows
// of `width` consecutive vertices, each window sharing `overlap` vertices
// with its predecessor. make_grid yields the 2-vertex lattice adjacencies
// of a rows x cols grid. make_random_k_uniform draws m distinct k-subsets
// of [0, n) from a seeded PRNG.
Hypergraph make_chain(int length, int width, int overlap);
Hypergraph make_grid(int rows, int cols);
Hypergraph make_random_k_uniform(int n, int k, int m, std::uint64_t seed);

}  // namespace nsdp
