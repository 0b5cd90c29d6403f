#include "nbrprof/experiment.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <numeric>

#include <fmt/format.h>

#include "nbrprof/error.hpp"

namespace nbrprof {

ExperimentConfig ExperimentConfig::paper_default(Seed seed) {
    ExperimentConfig config;
    for (double p : {0.08, 0.22, 0.36, 0.5}) {
        config.clusters.push_back({p, 25, 100});
    }
    config.master_seed = seed;
    return config;
}

void ExperimentConfig::validate() const {
    if (clusters.empty()) {
        throw UsageError("experiment needs at least one cluster");
    }
    if (clusters.size() > kMaxClusters) {
        throw UsageError(fmt::format("at most {} clusters supported (got {})", kMaxClusters,
                                     clusters.size()));
    }
    if (options.K < 1) {
        throw UsageError("depth K must be at least 1");
    }
    for (std::size_t c = 0; c < clusters.size(); ++c) {
        const auto& spec = clusters[c];
        if (!(spec.edge_probability >= 0.0 && spec.edge_probability <= 1.0)) {
            throw UsageError(fmt::format("cluster {}: probability {} outside [0, 1]", c,
                                         spec.edge_probability));
        }
        if (spec.graph_count < 1) {
            throw UsageError(fmt::format("cluster {}: graph count must be positive", c));
        }
        if (spec.nodes_per_graph < 1) {
            throw UsageError(fmt::format("cluster {}: node count must be positive", c));
        }
        if (options.normalize && spec.nodes_per_graph < 2) {
            throw UsageError(fmt::format("cluster {}: normalize needs at least 2 nodes", c));
        }
    }
}

namespace {

std::uint64_t unsigned_field(const nlohmann::json& j, const char* key, std::uint64_t fallback) {
    if (!j.contains(key)) {
        return fallback;
    }
    const auto& v = j.at(key);
    if (!v.is_number_unsigned()) {
        throw UsageError(fmt::format("config field '{}' must be a non-negative integer", key));
    }
    return v.get<std::uint64_t>();
}

std::uint64_t required_unsigned(const nlohmann::json& j, const char* key) {
    if (!j.contains(key)) {
        throw UsageError(fmt::format("config field '{}' is required", key));
    }
    return unsigned_field(j, key, 0);
}

}  // namespace

ExperimentConfig config_from_json(const nlohmann::json& j) {
    static const std::vector<std::string> known{"clusters", "K", "seed", "mode", "norm", "normalize"};
    ExperimentConfig config;
    try {
        if (!j.is_object()) {
            throw UsageError("experiment config must be a JSON object");
        }
        for (const auto& [key, _] : j.items()) {
            if (std::find(known.begin(), known.end(), key) == known.end()) {
                throw UsageError(fmt::format("unknown config field '{}'", key));
            }
        }
        for (const auto& c : j.at("clusters")) {
            if (!c.is_object() || !c.contains("p") || !c.at("p").is_number()) {
                throw UsageError("each cluster needs a numeric 'p'");
            }
            ClusterSpec spec;
            spec.edge_probability = c.at("p").get<double>();
            spec.graph_count = required_unsigned(c, "count");
            spec.nodes_per_graph = required_unsigned(c, "n");
            config.clusters.push_back(spec);
        }
        config.options.K = unsigned_field(j, "K", kDefaultDepth);
        config.master_seed = unsigned_field(j, "seed", 0);
        config.options.mode = parse_mode(j.value("mode", std::string("scalar")));
        config.options.norm = parse_norm(j.value("norm", std::string("l1")));
        config.options.normalize = j.value("normalize", false);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(fmt::format("invalid experiment config: {}", e.what()));
    }
    config.validate();
    return config;
}

nlohmann::json config_to_json(const ExperimentConfig& config) {
    nlohmann::json clusters = nlohmann::json::array();
    for (const auto& c : config.clusters) {
        clusters.push_back({{"p", c.edge_probability}, {"count", c.graph_count}, {"n", c.nodes_per_graph}});
    }
    return {
        {"clusters", clusters},
        {"K", config.options.K},
        {"seed", config.master_seed},
        {"mode", to_string(config.options.mode)},
        {"norm", to_string(config.options.norm)},
        {"normalize", config.options.normalize},
    };
}

nlohmann::json result_to_json(const ExperimentResult& result, const ExperimentConfig& config) {
    nlohmann::json graphs = nlohmann::json::array();
    for (const auto& g : result.per_graph) {
        graphs.push_back({{"index", g.index},
                          {"true_label", g.true_label},
                          {"diag_scalar", g.diag_scalar},
                          {"predicted_label", g.predicted_label}});
    }
    return {
        {"config", config_to_json(config)},
        {"per_graph", graphs},
        {"per_cluster_accuracy", result.per_cluster_accuracy},
        {"overall_accuracy", result.overall_accuracy},
        {"centroids", result.centroids},
    };
}

Seed derive_graph_seed(Seed master_seed, std::size_t index) {
    return splitmix64(master_seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(index) + 1));
}

std::vector<LabeledGraph> generate_population(const ExperimentConfig& config) {
    config.validate();
    std::vector<LabeledGraph> population;
    std::size_t index = 0;
    for (std::size_t c = 0; c < config.clusters.size(); ++c) {
        const auto& spec = config.clusters[c];
        for (std::size_t i = 0; i < spec.graph_count; ++i, ++index) {
            population.push_back({generate_er_gnp(spec.nodes_per_graph, spec.edge_probability,
                                                  derive_graph_seed(config.master_seed, index)),
                                  c});
        }
    }
    return population;
}

std::vector<std::size_t> kmeans_1d(const std::vector<double>& values, std::size_t k) {
    const auto n = values.size();
    if (k < 1) {
        throw UsageError("k-means needs k >= 1");
    }
    if (k > n) {
        throw UsageError(fmt::format("k-means with k = {} on only {} values", k, n));
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    std::vector<double> prefix(n + 1, 0.0), prefix_sq(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = values[order[i]];
        prefix[i + 1] = prefix[i] + x;
        prefix_sq[i + 1] = prefix_sq[i] + x * x;
    }
    // within-cluster sum of squares of sorted[lo, hi)
    auto cost = [&](std::size_t lo, std::size_t hi) {
        const double m = static_cast<double>(hi - lo);
        const double s = prefix[hi] - prefix[lo];
        return std::max(0.0, (prefix_sq[hi] - prefix_sq[lo]) - s * s / m);
    };

    constexpr double inf = std::numeric_limits<double>::infinity();
    // best[c][i]: optimal cost of the first i sorted values in c clusters
    std::vector<std::vector<double>> best(k + 1, std::vector<double>(n + 1, inf));
    std::vector<std::vector<std::size_t>> split(k + 1, std::vector<std::size_t>(n + 1, 0));
    best[0][0] = 0.0;
    for (std::size_t c = 1; c <= k; ++c) {
        for (std::size_t i = c; i <= n; ++i) {
            for (std::size_t m = c - 1; m < i; ++m) {
                if (best[c - 1][m] == inf) {
                    continue;
                }
                const double candidate = best[c - 1][m] + cost(m, i);
                if (candidate < best[c][i]) {
                    best[c][i] = candidate;
                    split[c][i] = m;
                }
            }
        }
    }

    std::vector<std::size_t> labels(n, 0);
    std::size_t hi = n;
    for (std::size_t c = k; c >= 1; --c) {
        const std::size_t lo = split[c][hi];
        for (std::size_t i = lo; i < hi; ++i) {
            labels[order[i]] = c - 1;
        }
        hi = lo;
    }
    return labels;
}

AccuracyReport cluster_accuracy(const std::vector<std::size_t>& true_labels,
                                const std::vector<std::size_t>& predicted_labels,
                                std::size_t k) {
    if (true_labels.size() != predicted_labels.size()) {
        throw UsageError("label vectors differ in length");
    }
    if (k < 1 || k > kMaxClusters) {
        throw UsageError(fmt::format("cluster count must be in [1, {}]", kMaxClusters));
    }
    for (std::size_t i = 0; i < true_labels.size(); ++i) {
        if (true_labels[i] >= k || predicted_labels[i] >= k) {
            throw UsageError(fmt::format("label out of range at position {}", i));
        }
    }
    // confusion[pred][truth]
    std::vector<std::vector<std::size_t>> confusion(k, std::vector<std::size_t>(k, 0));
    std::vector<std::size_t> cluster_size(k, 0);
    for (std::size_t i = 0; i < true_labels.size(); ++i) {
        ++confusion[predicted_labels[i]][true_labels[i]];
        ++cluster_size[true_labels[i]];
    }

    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::size_t> best_perm = perm;
    std::size_t best_correct = 0;
    bool first = true;
    do {
        std::size_t correct = 0;
        for (std::size_t p = 0; p < k; ++p) {
            correct += confusion[p][perm[p]];
        }
        if (first || correct > best_correct) {
            best_correct = correct;
            best_perm = perm;
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    AccuracyReport report;
    report.mapping = best_perm;
    report.per_cluster.assign(k, 1.0);
    for (std::size_t p = 0; p < k; ++p) {
        const std::size_t truth = best_perm[p];
        if (cluster_size[truth] > 0) {
            report.per_cluster[truth] = static_cast<double>(confusion[p][truth]) /
                                        static_cast<double>(cluster_size[truth]);
        }
    }
    report.overall = true_labels.empty()
                         ? 1.0
                         : static_cast<double>(best_correct) / static_cast<double>(true_labels.size());
    return report;
}

namespace {

double graph_scalar(const Graph& g, const DistanceOptions& opts) {
    const auto profile = graph_profile(g, opts.K);
    return scalar_summary({profile.n, {}, comparable_profile(profile, opts)});
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config,
                                const std::vector<LabeledGraph>& population) {
    config.validate();
    const std::size_t k = config.clusters.size();
    ExperimentResult result;
    std::vector<double> scalars;
    std::vector<std::size_t> truth;
    for (std::size_t i = 0; i < population.size(); ++i) {
        if (population[i].label >= k) {
            throw UsageError(fmt::format("graph {} has label outside the configured clusters", i));
        }
        scalars.push_back(graph_scalar(population[i].graph, config.options));
        truth.push_back(population[i].label);
    }

    std::vector<std::size_t> predicted(population.size(), 0);
    if (!population.empty()) {
        predicted = kmeans_1d(scalars, std::min(k, population.size()));
    }
    const auto accuracy = cluster_accuracy(truth, predicted, k);

    std::vector<double> sums(k, 0.0);
    std::vector<std::size_t> counts(k, 0);
    for (std::size_t i = 0; i < population.size(); ++i) {
        result.per_graph.push_back({i, truth[i], scalars[i], accuracy.mapping[predicted[i]]});
        sums[truth[i]] += scalars[i];
        ++counts[truth[i]];
    }
    for (std::size_t c = 0; c < k; ++c) {
        result.centroids.push_back(counts[c] ? sums[c] / static_cast<double>(counts[c]) : 0.0);
    }
    result.per_cluster_accuracy = accuracy.per_cluster;
    result.overall_accuracy = accuracy.overall;
    return result;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
    return run_experiment(config, generate_population(config));
}

std::string vertex_profile_csv(const NeighborProfile& p) {
    std::string out = "k,count\n";
    for (std::size_t i = 0; i < p.counts.size(); ++i) {
        out += fmt::format("{},{}\n", i + 1, p.counts[i]);
    }
    return out;
}

std::string graph_profile_csv(const GraphProfile& p) {
    std::string out = "k,avg_count\n";
    for (std::size_t i = 0; i < p.avg_counts.size(); ++i) {
        out += fmt::format("{},{}\n", i + 1, p.avg_counts[i]);
    }
    return out;
}

std::string scalars_csv(const ExperimentResult& result) {
    std::string out = "graph_index,true_label,predicted_label,diag_scalar\n";
    for (const auto& g : result.per_graph) {
        out += fmt::format("{},{},{},{}\n", g.index, g.true_label, g.predicted_label, g.diag_scalar);
    }
    return out;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw DataError(fmt::format("cannot write '{}'", tmp.string()));
        }
        out << contents;
        out.flush();
        if (!out) {
            throw DataError(fmt::format("write to '{}' failed", tmp.string()));
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw DataError(fmt::format("cannot move output into '{}'", path.string()));
    }
}

void emit_plot_data(const std::filesystem::path& out_dir,
                    const ExperimentConfig& config,
                    const ExperimentResult& result,
                    const std::vector<LabeledGraph>& population,
                    const PlotRequest& request) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec || !std::filesystem::is_directory(out_dir)) {
        throw DataError(fmt::format("cannot create output directory '{}'", out_dir.string()));
    }
    const std::size_t K = config.options.K;

    write_file_atomic(out_dir / "result.json", result_to_json(result, config).dump(2) + "\n");
    write_file_atomic(out_dir / "scalars.csv", scalars_csv(result));

    for (auto [graph, vertex] : request.vertex_series) {
        const auto name = fmt::format("profile_g{}_v{}.csv", graph, vertex);
        if (population.empty()) {
            write_file_atomic(out_dir / name, "k,count\n");
            continue;
        }
        if (graph >= population.size()) {
            throw DataError(fmt::format("plot request for graph {} but population has {}", graph,
                                        population.size()));
        }
        write_file_atomic(out_dir / name,
                          vertex_profile_csv(vertex_profile(population[graph].graph, vertex, K)));
    }

    std::string grouped = "vertex,k,count\n";
    if (!population.empty()) {
        if (request.grouped_graph >= population.size()) {
            throw DataError(fmt::format("plot request for graph {} but population has {}",
                                        request.grouped_graph, population.size()));
        }
        const auto& g = population[request.grouped_graph].graph;
        const auto m = std::min<std::size_t>(request.grouped_vertices, g.num_vertices());
        for (VertexId v = 0; v < m; ++v) {
            const auto p = vertex_profile(g, v, K);
            for (std::size_t i = 0; i < K; ++i) {
                grouped += fmt::format("{},{},{}\n", v, i + 1, p.counts[i]);
            }
        }
    }
    write_file_atomic(out_dir / "first_vertices.csv", grouped);
}

}  // namespace nbrprof
