#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nbrprof {

using VertexId = std::uint32_t;
using Seed = std::uint64_t;

// Simple undirected unweighted graph over vertex ids 0..n-1. Each adjacency
// list is kept sorted and duplicate-free; self-loops are rejected.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);

    std::size_t num_vertices() const { return adjacency_.size(); }
    std::size_t num_edges() const { return num_edges_; }

    // Adds the undirected edge {u, v}. Adding an existing edge is a no-op.
    // Throws DataError on out-of-range ids or u == v.
    void add_edge(VertexId u, VertexId v);

    bool has_edge(VertexId u, VertexId v) const;

    // Sorted neighbor ids of v. Throws DataError if v is out of range.
    std::span<const VertexId> neighbors(VertexId v) const;

    std::size_t degree(VertexId v) const { return neighbors(v).size(); }

    // Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<VertexId, VertexId>> edges() const;

    // Checks symmetry, sortedness, no duplicates, no self-loops and range.
    // Returns an empty string when valid, otherwise a description.
    std::string validate() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<VertexId>> adjacency_;
    std::size_t num_edges_ = 0;
};

// Complete graph K_n, path 0-1-...-(n-1), cycle of length n.
Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);

// Returns the graph with vertex v renamed to perm[v].
// perm must be a permutation of 0..n-1 (UsageError otherwise).
Graph relabel(const Graph& g, std::span<const VertexId> perm);

// G(n, p): every unordered pair (u, v), u < v, visited u-major then v
// ascending, becomes an edge independently with probability p. One draw per
// pair from a mt19937_64 seeded with `seed`. UsageError if p is outside [0, 1].
Graph generate_er_gnp(std::size_t n, double p, Seed seed);

// SplitMix64 finalizer; used to derive independent per-graph seeds.
std::uint64_t splitmix64(std::uint64_t x);

// Edge-list text format:
//   # optional comment lines
//   <n>
//   <u> <v>
//   ...
// Errors are reported as DataError with the 1-based line number.
Graph read_edge_list(std::string_view text);
Graph read_edge_list_file(const std::string& path);

// Canonical form: "n\n" then one "u v\n" per edge with u < v, sorted.
std::string write_edge_list(const Graph& g);

}  // namespace nbrprof
