#include "nbrprof/distance.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>

#include <fmt/format.h>

#include "nbrprof/error.hpp"

namespace nbrprof {

std::string_view to_string(DistanceMode mode) {
    return mode == DistanceMode::Scalar ? "scalar" : "vector";
}

std::string_view to_string(Norm norm) {
    switch (norm) {
        case Norm::L1: return "l1";
        case Norm::L2: return "l2";
        case Norm::Linf: return "linf";
    }
    return "l1";
}

DistanceMode parse_mode(std::string_view name) {
    if (name == "scalar") return DistanceMode::Scalar;
    if (name == "vector") return DistanceMode::Vector;
    throw UsageError(fmt::format("unknown distance mode '{}'", name));
}

Norm parse_norm(std::string_view name) {
    if (name == "l1") return Norm::L1;
    if (name == "l2") return Norm::L2;
    if (name == "linf") return Norm::Linf;
    throw UsageError(fmt::format("unknown norm '{}'", name));
}

double scalar_summary(const GraphProfile& p) {
    if (p.avg_counts.empty()) {
        return 0.0;
    }
    double sum = 0.0;
    for (double x : p.avg_counts) {
        sum += x;
    }
    return sum / static_cast<double>(p.avg_counts.size());
}

std::vector<double> comparable_profile(const GraphProfile& p, const DistanceOptions& opts) {
    std::vector<double> out = p.avg_counts;
    if (opts.normalize) {
        if (p.n < 2) {
            throw DataError("normalized comparison needs graphs with at least 2 vertices");
        }
        const double scale = static_cast<double>(p.n - 1);
        for (double& x : out) {
            x /= scale;
        }
    }
    return out;
}

double profile_distance(const GraphProfile& a, const GraphProfile& b, const DistanceOptions& opts) {
    if (a.depth() != b.depth()) {
        throw UsageError(fmt::format("profile depth mismatch: {} vs {}", a.depth(), b.depth()));
    }
    const auto xa = comparable_profile(a, opts);
    const auto xb = comparable_profile(b, opts);
    if (opts.mode == DistanceMode::Scalar) {
        GraphProfile sa{a.n, {}, xa};
        GraphProfile sb{b.n, {}, xb};
        return std::abs(scalar_summary(sa) - scalar_summary(sb));
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < xa.size(); ++i) {
        const double d = std::abs(xa[i] - xb[i]);
        switch (opts.norm) {
            case Norm::L1: acc += d; break;
            case Norm::L2: acc += d * d; break;
            case Norm::Linf: acc = std::max(acc, d); break;
        }
    }
    return opts.norm == Norm::L2 ? std::sqrt(acc) : acc;
}

double diag_distance(const Graph& g1, const Graph& g2, const DistanceOptions& opts) {
    return profile_distance(graph_profile(g1, opts.K), graph_profile(g2, opts.K), opts);
}

DistanceMatrix distance_matrix(const std::vector<Graph>& graphs,
                               const DistanceOptions& opts,
                               std::vector<std::string> labels) {
    const auto m = graphs.size();
    if (labels.empty()) {
        for (std::size_t i = 0; i < m; ++i) {
            labels.push_back(std::to_string(i));
        }
    } else if (labels.size() != m) {
        throw UsageError("label count does not match graph count");
    }
    std::vector<GraphProfile> profiles;
    profiles.reserve(m);
    for (const auto& g : graphs) {
        profiles.push_back(graph_profile(g, opts.K));
    }
    DistanceMatrix out{std::move(labels), std::vector<std::vector<double>>(m, std::vector<double>(m, 0.0))};
    for (std::size_t i = 0; i < m; ++i) {
        // validates normalize preconditions on the diagonal too
        comparable_profile(profiles[i], opts);
        for (std::size_t j = i + 1; j < m; ++j) {
            const double d = profile_distance(profiles[i], profiles[j], opts);
            out.values[i][j] = d;
            out.values[j][i] = d;
        }
    }
    return out;
}

CutPartition CutPartition::from_subset(std::size_t n, const std::vector<VertexId>& s) {
    CutPartition part{std::vector<bool>(n, false)};
    for (VertexId v : s) {
        if (v >= n) {
            throw UsageError(fmt::format("subset vertex {} out of range for {} vertices", v, n));
        }
        part.in_s[v] = true;
    }
    return part;
}

double cut_weight(const Graph& g, const CutPartition& part) {
    if (part.in_s.size() != g.num_vertices()) {
        throw UsageError("partition does not cover the vertex set");
    }
    std::size_t crossing = 0;
    for (auto [u, v] : g.edges()) {
        if (part.in_s[u] != part.in_s[v]) {
            ++crossing;
        }
    }
    return static_cast<double>(crossing);
}

double cut_distance_bruteforce(const Graph& g1, const Graph& g2, bool allow_large) {
    const auto n = g1.num_vertices();
    if (g2.num_vertices() != n) {
        throw UsageError(fmt::format("cut distance needs equal vertex sets: {} vs {} vertices",
                                     n, g2.num_vertices()));
    }
    if (n == 0) {
        throw UsageError("cut distance is undefined on an empty vertex set");
    }
    if (n > kCutDistanceMaxVertices && !allow_large) {
        throw UsageError(fmt::format("cut distance enumeration limited to n <= {} (got {})",
                                     kCutDistanceMaxVertices, n));
    }
    if (n > 64) {
        throw UsageError(fmt::format("cut distance enumeration supports at most 64 vertices (got {})", n));
    }

    auto masks = [n](const Graph& g) {
        std::vector<std::uint64_t> out(n, 0);
        for (VertexId v = 0; v < n; ++v) {
            for (VertexId w : g.neighbors(v)) {
                out[v] |= std::uint64_t{1} << w;
            }
        }
        return out;
    };
    const auto adj1 = masks(g1);
    const auto adj2 = masks(g2);

    // S and S^C give the same value, so vertex n-1 stays in S^C and the
    // remaining n-1 vertices are walked in Gray-code order; each step moves
    // one vertex across and updates both cut weights in O(1).
    std::uint64_t s = 0;
    std::int64_t cut1 = 0;
    std::int64_t cut2 = 0;
    std::int64_t best = 0;
    const std::uint64_t steps = std::uint64_t{1} << (n - 1);
    for (std::uint64_t i = 1; i < steps; ++i) {
        const auto v = static_cast<unsigned>(std::countr_zero(i));
        const std::uint64_t bit = std::uint64_t{1} << v;
        const std::uint64_t others = s & ~bit;
        auto delta = [&](std::uint64_t adj) {
            const auto to_s = std::popcount(adj & others);
            const auto to_t = std::popcount(adj) - to_s;
            // joining S: edges to S^C start crossing, edges to S stop
            return (s & bit) ? to_s - to_t : to_t - to_s;
        };
        cut1 += delta(adj1[v]);
        cut2 += delta(adj2[v]);
        s ^= bit;
        best = std::max(best, std::abs(cut1 - cut2));
    }
    return static_cast<double>(best) / static_cast<double>(n);
}

}  // namespace nbrprof
