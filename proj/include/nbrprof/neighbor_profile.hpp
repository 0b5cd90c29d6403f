#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "nbrprof/graph.hpp"

namespace nbrprof {

inline constexpr std::size_t kDefaultDepth = 4;

// N_k(alpha): the vertices one step away from N_{k-1}(alpha), with alpha
// removed from every level before it is counted or expanded further.
// N_1(alpha) is the neighbor set of alpha.
struct KNeighborSet {
    std::size_t k = 0;
    std::vector<VertexId> members;  // sorted ascending
};

// counts[k-1] = |N_k(alpha)| for k = 1..K.
struct NeighborProfile {
    std::vector<std::uint64_t> counts;

    std::size_t depth() const { return counts.size(); }
    friend bool operator==(const NeighborProfile&, const NeighborProfile&) = default;
};

// Vertex-average of all vertex profiles of one graph. The exact integer
// totals are kept next to the averages so that n * avg == sum holds exactly.
struct GraphProfile {
    std::size_t n = 0;
    std::vector<std::uint64_t> totals;  // pointwise sum of vertex profiles
    std::vector<double> avg_counts;     // totals / n

    std::size_t depth() const { return avg_counts.size(); }
};

KNeighborSet k_neighborhood(const Graph& g, VertexId alpha, std::size_t k);

// Computed incrementally: each level is expanded from the previous frontier,
// costing O(sum of degrees in the frontier) per level.
NeighborProfile vertex_profile(const Graph& g, VertexId alpha, std::size_t K = kDefaultDepth);

NeighborProfile profile_sum(const NeighborProfile& a, const NeighborProfile& b);

// DataError on an empty graph. A single isolated vertex yields all zeros.
GraphProfile graph_profile(const Graph& g, std::size_t K = kDefaultDepth);

// Test oracle. Dense boolean matrix powers: row alpha of A * M^(k-1), where
// M is the adjacency matrix with column alpha cleared, i.e. the endpoints of
// length-k walks from alpha that never return to alpha. Meant for small n.
std::vector<VertexId> walk_reachability_oracle(const Graph& g, VertexId alpha, std::size_t k);

}  // namespace nbrprof
