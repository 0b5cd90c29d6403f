#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "nbrprof/distance.hpp"
#include "nbrprof/graph.hpp"
#include "nbrprof/neighbor_profile.hpp"

namespace nbrprof {

struct ClusterSpec {
    double edge_probability = 0.0;
    std::size_t graph_count = 1;
    std::size_t nodes_per_graph = 1;
};

inline constexpr std::size_t kMaxClusters = 8;

struct ExperimentConfig {
    std::vector<ClusterSpec> clusters;
    DistanceOptions options;  // options.K is the profile depth
    Seed master_seed = 0;

    // 4 clusters x 25 graphs, n = 100, p = 0.08 / 0.22 / 0.36 / 0.5, K = 4.
    static ExperimentConfig paper_default(Seed seed = 0);

    // UsageError describing the first problem found.
    void validate() const;
};

ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const ExperimentConfig& config);

struct LabeledGraph {
    Graph graph;
    std::size_t label = 0;
};

struct GraphOutcome {
    std::size_t index = 0;
    std::size_t true_label = 0;
    double diag_scalar = 0.0;
    std::size_t predicted_label = 0;
};

struct ExperimentResult {
    std::vector<GraphOutcome> per_graph;
    std::vector<double> per_cluster_accuracy;
    double overall_accuracy = 0.0;
    std::vector<double> centroids;  // mean diag_scalar per true cluster
};

nlohmann::json result_to_json(const ExperimentResult& result, const ExperimentConfig& config);

// Seed of the graph at global position `index` in the population.
Seed derive_graph_seed(Seed master_seed, std::size_t index);

// Cluster-major: all graphs of cluster 0 first, then cluster 1, ...
std::vector<LabeledGraph> generate_population(const ExperimentConfig& config);

// Optimal 1-D k-means (minimum within-cluster sum of squares) by dynamic
// programming over the sorted values. Labels are ordered by value: label 0
// holds the smallest values. Ties prefer the shorter left cluster.
std::vector<std::size_t> kmeans_1d(const std::vector<double>& values, std::size_t k);

struct AccuracyReport {
    std::vector<double> per_cluster;
    double overall = 0.0;
    std::vector<std::size_t> mapping;  // predicted label -> true label
};

// Best accuracy over all k! relabelings of the predicted labels (k <= 8).
AccuracyReport cluster_accuracy(const std::vector<std::size_t>& true_labels,
                                const std::vector<std::size_t>& predicted_labels,
                                std::size_t k);

ExperimentResult run_experiment(const ExperimentConfig& config,
                                const std::vector<LabeledGraph>& population);
ExperimentResult run_experiment(const ExperimentConfig& config);

struct PlotRequest {
    // (graph index, vertex) pairs, one "k,count" CSV each.
    std::vector<std::pair<std::size_t, VertexId>> vertex_series{{0, 0}};
    // Grouped "vertex,k,count" CSV for the first m vertices of this graph.
    std::size_t grouped_graph = 0;
    std::size_t grouped_vertices = 3;
};

// Writes into out_dir (created if needed):
//   result.json
//   scalars.csv                       graph_index,true_label,predicted_label,diag_scalar
//   profile_g<graph>_v<vertex>.csv    k,count
//   first_vertices.csv                vertex,k,count
// Each file is written to a temporary name and renamed into place.
// DataError on I/O failure or out-of-range requests.
void emit_plot_data(const std::filesystem::path& out_dir,
                    const ExperimentConfig& config,
                    const ExperimentResult& result,
                    const std::vector<LabeledGraph>& population,
                    const PlotRequest& request = {});

// CSV bodies used by emit_plot_data; exposed for the CLI and tests.
std::string vertex_profile_csv(const NeighborProfile& p);
std::string graph_profile_csv(const GraphProfile& p);
std::string scalars_csv(const ExperimentResult& result);

// Atomic write: temp file in the same directory, then rename.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace nbrprof
