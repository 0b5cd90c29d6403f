#include "nbrprof/neighbor_profile.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "nbrprof/error.hpp"

namespace nbrprof {

namespace {

void check_vertex(const Graph& g, VertexId alpha) {
    if (alpha >= g.num_vertices()) {
        throw DataError(
            fmt::format("vertex {} out of range for {} vertices", alpha, g.num_vertices()));
    }
}

void check_depth(std::size_t k) {
    if (k < 1) {
        throw UsageError("depth must be at least 1");
    }
}

// Walks the level recursion from alpha, calling visit(level, frontier) for
// k = 1..K. `frontier` holds N_k(alpha) unsorted.
template <class Visit>
void expand_levels(const Graph& g, VertexId alpha, std::size_t K, Visit&& visit) {
    const auto n = g.num_vertices();
    std::vector<VertexId> frontier(g.neighbors(alpha).begin(), g.neighbors(alpha).end());
    std::vector<VertexId> next;
    // mark[v] == level means v is already in the level being built
    std::vector<std::size_t> mark(n, 0);
    for (std::size_t level = 1; level <= K; ++level) {
        visit(level, frontier);
        if (level == K) {
            break;
        }
        if (frontier.empty()) {
            // absorbed: every deeper level is empty too
            for (std::size_t rest = level + 1; rest <= K; ++rest) {
                visit(rest, frontier);
            }
            break;
        }
        next.clear();
        for (VertexId u : frontier) {
            for (VertexId w : g.neighbors(u)) {
                if (w != alpha && mark[w] != level + 1) {
                    mark[w] = level + 1;
                    next.push_back(w);
                }
            }
        }
        frontier.swap(next);
    }
}

}  // namespace

KNeighborSet k_neighborhood(const Graph& g, VertexId alpha, std::size_t k) {
    check_vertex(g, alpha);
    check_depth(k);
    KNeighborSet out{k, {}};
    expand_levels(g, alpha, k, [&](std::size_t level, const std::vector<VertexId>& frontier) {
        if (level == k) {
            out.members = frontier;
        }
    });
    std::sort(out.members.begin(), out.members.end());
    return out;
}

NeighborProfile vertex_profile(const Graph& g, VertexId alpha, std::size_t K) {
    check_vertex(g, alpha);
    check_depth(K);
    NeighborProfile p;
    p.counts.resize(K, 0);
    expand_levels(g, alpha, K, [&](std::size_t level, const std::vector<VertexId>& frontier) {
        p.counts[level - 1] = frontier.size();
    });
    return p;
}

NeighborProfile profile_sum(const NeighborProfile& a, const NeighborProfile& b) {
    if (a.depth() != b.depth()) {
        throw UsageError(
            fmt::format("profile length mismatch: {} vs {}", a.depth(), b.depth()));
    }
    NeighborProfile out = a;
    for (std::size_t i = 0; i < out.counts.size(); ++i) {
        out.counts[i] += b.counts[i];
    }
    return out;
}

GraphProfile graph_profile(const Graph& g, std::size_t K) {
    check_depth(K);
    const auto n = g.num_vertices();
    if (n == 0) {
        throw DataError("graph profile of an empty graph is undefined");
    }
    GraphProfile out;
    out.n = n;
    out.totals.assign(K, 0);
    for (VertexId v = 0; v < n; ++v) {
        const auto p = vertex_profile(g, v, K);
        for (std::size_t i = 0; i < K; ++i) {
            out.totals[i] += p.counts[i];
        }
    }
    out.avg_counts.resize(K);
    for (std::size_t i = 0; i < K; ++i) {
        out.avg_counts[i] = static_cast<double>(out.totals[i]) / static_cast<double>(n);
    }
    return out;
}

std::vector<VertexId> walk_reachability_oracle(const Graph& g, VertexId alpha, std::size_t k) {
    check_vertex(g, alpha);
    check_depth(k);
    const auto n = g.num_vertices();
    using Matrix = std::vector<std::vector<bool>>;
    Matrix adj(n, std::vector<bool>(n, false));
    for (auto [u, v] : g.edges()) {
        adj[u][v] = adj[v][u] = true;
    }
    Matrix blocked = adj;
    for (std::size_t i = 0; i < n; ++i) {
        blocked[i][alpha] = false;
    }
    auto multiply = [n](const Matrix& a, const Matrix& b) {
        Matrix c(n, std::vector<bool>(n, false));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                bool any = false;
                for (std::size_t m = 0; m < n && !any; ++m) {
                    any = a[i][m] && b[m][j];
                }
                c[i][j] = any;
            }
        }
        return c;
    };
    Matrix power = adj;
    for (std::size_t step = 1; step < k; ++step) {
        power = multiply(power, blocked);
    }
    std::vector<VertexId> out;
    for (VertexId b = 0; b < n; ++b) {
        if (b != alpha && power[alpha][b]) {
            out.push_back(b);
        }
    }
    return out;
}

}  // namespace nbrprof
