#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nbrprof/graph.hpp"
#include "nbrprof/neighbor_profile.hpp"

namespace nbrprof {

enum class DistanceMode { Scalar, Vector };
enum class Norm { L1, L2, Linf };

struct DistanceOptions {
    DistanceMode mode = DistanceMode::Scalar;
    Norm norm = Norm::L1;  // vector mode only
    bool normalize = false;  // divide each avg_count by n-1
    std::size_t K = kDefaultDepth;
};

std::string_view to_string(DistanceMode mode);
std::string_view to_string(Norm norm);
// UsageError on unknown names. Accepts "scalar"/"vector", "l1"/"l2"/"linf".
DistanceMode parse_mode(std::string_view name);
Norm parse_norm(std::string_view name);

// Mean of avg_counts over k = 1..K.
double scalar_summary(const GraphProfile& p);

// Profile entries as compared under opts: raw averages, or divided by n-1
// when normalize is set (DataError if n < 2).
std::vector<double> comparable_profile(const GraphProfile& p, const DistanceOptions& opts);

// Distance between two already-computed profiles of equal depth.
double profile_distance(const GraphProfile& a, const GraphProfile& b, const DistanceOptions& opts);

double diag_distance(const Graph& g1, const Graph& g2, const DistanceOptions& opts = {});

struct DistanceMatrix {
    std::vector<std::string> labels;
    std::vector<std::vector<double>> values;
};

// Labels default to "0", "1", ... when none are given.
DistanceMatrix distance_matrix(const std::vector<Graph>& graphs,
                               const DistanceOptions& opts = {},
                               std::vector<std::string> labels = {});

// One side of a bipartition of V: in_s[v] is true for v in S, false for S^C.
struct CutPartition {
    std::vector<bool> in_s;

    static CutPartition from_subset(std::size_t n, const std::vector<VertexId>& s);
};

// Number of edges with exactly one endpoint in S (unit edge weights).
// UsageError when the partition does not cover exactly V(g).
double cut_weight(const Graph& g, const CutPartition& part);

inline constexpr std::size_t kCutDistanceMaxVertices = 20;

// max over S of (1/n)|e1(S, S^C) - e2(S, S^C)| by exhaustive enumeration.
// Graphs must have the same vertex count n >= 1; n above
// kCutDistanceMaxVertices needs allow_large (and n <= 64 regardless).
double cut_distance_bruteforce(const Graph& g1, const Graph& g2, bool allow_large = false);

}  // namespace nbrprof
