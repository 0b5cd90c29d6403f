#include "nbrprof/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <random>
#include <sstream>

#include <fmt/format.h>

#include "nbrprof/error.hpp"

namespace nbrprof {

Graph::Graph(std::size_t n) : adjacency_(n) {}

void Graph::add_edge(VertexId u, VertexId v) {
    const auto n = num_vertices();
    if (u >= n || v >= n) {
        throw DataError(fmt::format("edge ({}, {}) out of range for {} vertices", u, v, n));
    }
    if (u == v) {
        throw DataError(fmt::format("self-loop on vertex {}", u));
    }
    auto& lu = adjacency_[u];
    auto it = std::lower_bound(lu.begin(), lu.end(), v);
    if (it != lu.end() && *it == v) {
        return;
    }
    lu.insert(it, v);
    auto& lv = adjacency_[v];
    lv.insert(std::lower_bound(lv.begin(), lv.end(), u), u);
    ++num_edges_;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    auto nu = neighbors(u);
    return std::binary_search(nu.begin(), nu.end(), v);
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
    if (v >= num_vertices()) {
        throw DataError(fmt::format("vertex {} out of range for {} vertices", v, num_vertices()));
    }
    return adjacency_[v];
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(num_edges_);
    for (VertexId u = 0; u < num_vertices(); ++u) {
        for (VertexId v : adjacency_[u]) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

std::string Graph::validate() const {
    const auto n = num_vertices();
    std::size_t endpoint_count = 0;
    for (VertexId u = 0; u < n; ++u) {
        const auto& lu = adjacency_[u];
        endpoint_count += lu.size();
        for (std::size_t i = 0; i < lu.size(); ++i) {
            VertexId v = lu[i];
            if (v >= n) {
                return fmt::format("vertex {} lists out-of-range neighbor {}", u, v);
            }
            if (v == u) {
                return fmt::format("self-loop on vertex {}", u);
            }
            if (i > 0 && lu[i - 1] >= v) {
                return fmt::format("adjacency of vertex {} not strictly sorted", u);
            }
            const auto& lv = adjacency_[v];
            if (!std::binary_search(lv.begin(), lv.end(), u)) {
                return fmt::format("edge ({}, {}) not symmetric", u, v);
            }
        }
    }
    if (endpoint_count != 2 * num_edges_) {
        return "edge count inconsistent with adjacency";
    }
    return {};
}

Graph complete_graph(std::size_t n) {
    Graph g(n);
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            g.add_edge(u, v);
        }
    }
    return g;
}

Graph path_graph(std::size_t n) {
    Graph g(n);
    for (VertexId u = 0; u + 1 < n; ++u) {
        g.add_edge(u, u + 1);
    }
    return g;
}

Graph cycle_graph(std::size_t n) {
    Graph g = path_graph(n);
    if (n >= 3) {
        g.add_edge(static_cast<VertexId>(n - 1), 0);
    }
    return g;
}

Graph relabel(const Graph& g, std::span<const VertexId> perm) {
    const auto n = g.num_vertices();
    if (perm.size() != n) {
        throw UsageError("permutation length does not match vertex count");
    }
    std::vector<bool> seen(n, false);
    for (VertexId v : perm) {
        if (v >= n || seen[v]) {
            throw UsageError("not a permutation of the vertex set");
        }
        seen[v] = true;
    }
    Graph out(n);
    for (auto [u, v] : g.edges()) {
        out.add_edge(perm[u], perm[v]);
    }
    return out;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

Graph generate_er_gnp(std::size_t n, double p, Seed seed) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw UsageError(fmt::format("edge probability {} outside [0, 1]", p));
    }
    std::mt19937_64 rng(seed);
    Graph g(n);
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            // 53 high bits -> uniform double in [0, 1)
            const double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (draw < p) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

namespace {

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) {
        return {};
    }
    return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

// Parses whitespace-separated unsigned integers; false on any junk.
bool parse_fields(std::string_view line, std::vector<std::uint64_t>& out) {
    out.clear();
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t') {
            ++i;
            continue;
        }
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
        if (ec != std::errc{}) {
            return false;
        }
        const auto consumed = static_cast<std::size_t>(ptr - (line.data() + i));
        i += consumed;
        if (i < line.size() && line[i] != ' ' && line[i] != '\t') {
            return false;
        }
        out.push_back(value);
    }
    return true;
}

}  // namespace

Graph read_edge_list(std::string_view text) {
    Graph g;
    bool have_header = false;
    std::size_t line_no = 0;
    std::vector<std::uint64_t> fields;
    while (!text.empty()) {
        ++line_no;
        const auto eol = text.find('\n');
        std::string_view raw = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

        std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        if (!parse_fields(line, fields)) {
            throw DataError(fmt::format("line {}: malformed line '{}'", line_no, line));
        }
        if (!have_header) {
            if (fields.size() != 1 || fields[0] > UINT32_MAX) {
                throw DataError(fmt::format("line {}: expected vertex count header", line_no));
            }
            g = Graph(fields[0]);
            have_header = true;
            continue;
        }
        if (fields.size() != 2) {
            throw DataError(fmt::format("line {}: expected 'u v'", line_no));
        }
        const auto n = g.num_vertices();
        if (fields[0] >= n || fields[1] >= n) {
            throw DataError(
                fmt::format("line {}: vertex id out of range for {} vertices", line_no, n));
        }
        if (fields[0] == fields[1]) {
            throw DataError(fmt::format("line {}: self-loop on vertex {}", line_no, fields[0]));
        }
        g.add_edge(static_cast<VertexId>(fields[0]), static_cast<VertexId>(fields[1]));
    }
    if (!have_header) {
        throw DataError(fmt::format("line {}: missing vertex count header", line_no));
    }
    return g;
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DataError(fmt::format("cannot open graph file '{}'", path));
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return read_edge_list(buf.str());
    } catch (const DataError& e) {
        throw DataError(fmt::format("{}: {}", path, e.what()));
    }
}

std::string write_edge_list(const Graph& g) {
    std::string out = fmt::format("{}\n", g.num_vertices());
    for (auto [u, v] : g.edges()) {
        out += fmt::format("{} {}\n", u, v);
    }
    return out;
}

}  // namespace nbrprof
