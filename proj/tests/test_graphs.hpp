#pragma once

// Small graph builders and generators shared by the unit tests.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "nbrprof/graph.hpp"

namespace nbrprof::testing {

inline Graph make_graph(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        g.add_edge(u, v);
    }
    return g;
}

inline Graph star_graph(std::size_t leaves) {
    Graph g(leaves + 1);
    for (VertexId v = 1; v <= leaves; ++v) {
        g.add_edge(0, v);
    }
    return g;
}

inline std::vector<VertexId> random_permutation(std::size_t n, std::mt19937_64& rng) {
    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

// Random G(n, p) with n and p drawn from the given ranges.
inline Graph random_graph(std::mt19937_64& rng, std::size_t min_n, std::size_t max_n) {
    std::uniform_int_distribution<std::size_t> size(min_n, max_n);
    std::uniform_real_distribution<double> prob(0.0, 1.0);
    return generate_er_gnp(size(rng), prob(rng), rng());
}

}  // namespace nbrprof::testing
