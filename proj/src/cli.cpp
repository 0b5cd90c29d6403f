#include "nbrprof/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "nbrprof/distance.hpp"
#include "nbrprof/error.hpp"
#include "nbrprof/experiment.hpp"
#include "nbrprof/graph.hpp"
#include "nbrprof/neighbor_profile.hpp"

namespace nbrprof::cli {

namespace {

// Plain decimal with 13 significant digits.
std::string format_value(double x) {
    return fmt::format("{:.13g}", x);
}

struct DistanceFlags {
    std::size_t k = kDefaultDepth;
    std::string mode = "scalar";
    std::string norm = "l1";
    bool normalize = false;

    void attach(CLI::App* app) {
        app->add_option("--k", k, "Neighborhood depth K")->check(CLI::PositiveNumber);
        app->add_option("--mode", mode, "scalar or vector")->check(CLI::IsMember({"scalar", "vector"}));
        app->add_option("--norm", norm, "l1, l2 or linf (vector mode)")
            ->check(CLI::IsMember({"l1", "l2", "linf"}));
        app->add_flag("--normalize", normalize, "Scale profiles by 1/(n-1)");
    }

    DistanceOptions options() const {
        return {parse_mode(mode), parse_norm(norm), normalize, k};
    }
};

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DataError(fmt::format("cannot open '{}'", path));
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(std::ostream& out, const std::string& path, const std::string& contents) {
    if (path.empty() || path == "-") {
        out << contents;
    } else {
        write_file_atomic(path, contents);
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Neighbor-profile graph comparison", "nbrprof"};
    app.require_subcommand(1);

    // generate
    std::size_t gen_nodes = 0;
    double gen_prob = 0.0;
    Seed gen_seed = 0;
    std::string gen_out;
    auto* generate = app.add_subcommand("generate", "Sample a G(n, p) graph as an edge list");
    generate->add_option("--nodes", gen_nodes, "Vertex count")->required();
    generate->add_option("--prob", gen_prob, "Edge probability")->required();
    generate->add_option("--seed", gen_seed, "RNG seed");
    generate->add_option("--out", gen_out, "Output file (default: stdout)");

    // profile
    std::string prof_graph;
    std::size_t prof_k = kDefaultDepth;
    std::optional<VertexId> prof_vertex;
    std::string prof_format = "json";
    auto* profile = app.add_subcommand("profile", "Vertex or graph neighbor profile");
    profile->add_option("graph", prof_graph, "Edge-list file")->required();
    profile->add_option("--k", prof_k, "Neighborhood depth K")->check(CLI::PositiveNumber);
    profile->add_option("--vertex", prof_vertex, "Vertex id (omit for the graph average)");
    profile->add_option("--format", prof_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    // distance
    std::string dist_a, dist_b;
    DistanceFlags dist_flags;
    auto* distance = app.add_subcommand("distance", "Neighbor-profile distance of two graphs");
    distance->add_option("graph_a", dist_a)->required();
    distance->add_option("graph_b", dist_b)->required();
    dist_flags.attach(distance);

    // matrix
    std::vector<std::string> mat_graphs;
    DistanceFlags mat_flags;
    std::string mat_format = "json";
    auto* matrix = app.add_subcommand("matrix", "Pairwise distance matrix");
    matrix->add_option("graphs", mat_graphs, "Edge-list files")->required();
    matrix->add_option("--format", mat_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    mat_flags.attach(matrix);

    // cut-distance
    std::string cut_a, cut_b;
    bool cut_force = false;
    auto* cut = app.add_subcommand("cut-distance", "Exact cut distance by subset enumeration");
    cut->add_option("graph_a", cut_a)->required();
    cut->add_option("graph_b", cut_b)->required();
    cut->add_flag("--force", cut_force,
                  fmt::format("Allow more than {} vertices", kCutDistanceMaxVertices));

    // experiment
    std::string exp_config, exp_out;
    std::vector<double> exp_probs;
    std::size_t exp_count = 25, exp_nodes = 100;
    Seed exp_seed = 0;
    DistanceFlags exp_flags;
    auto* experiment = app.add_subcommand("experiment", "Clustered random-graph experiment");
    experiment->add_option("--config", exp_config, "Experiment config JSON");
    experiment->add_option("--out", exp_out, "Output directory")->required();
    auto* probs_opt = experiment->add_option("--probs", exp_probs, "Edge probability per cluster")
                          ->delimiter(',');
    auto* count_opt = experiment->add_option("--count", exp_count, "Graphs per cluster");
    auto* nodes_opt = experiment->add_option("--nodes", exp_nodes, "Vertices per graph");
    auto* seed_opt = experiment->add_option("--seed", exp_seed, "Master seed");
    exp_flags.attach(experiment);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        if (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) {
            err << sub->help();
        } else {
            err << app.help();
        }
        return kExitUsage;
    }

    try {
        if (*generate) {
            emit(out, gen_out, write_edge_list(generate_er_gnp(gen_nodes, gen_prob, gen_seed)));
        } else if (*profile) {
            const Graph g = read_edge_list_file(prof_graph);
            nlohmann::json ks = nlohmann::json::array();
            for (std::size_t k = 1; k <= prof_k; ++k) {
                ks.push_back(k);
            }
            if (prof_vertex) {
                const auto p = vertex_profile(g, *prof_vertex, prof_k);
                if (prof_format == "csv") {
                    out << vertex_profile_csv(p);
                } else {
                    out << nlohmann::ordered_json{{"n", g.num_vertices()}, {"K", prof_k}, {"k", ks}, {"counts", p.counts}}
                               .dump()
                        << "\n";
                }
            } else {
                const auto p = graph_profile(g, prof_k);
                if (prof_format == "csv") {
                    out << graph_profile_csv(p);
                } else {
                    out << nlohmann::ordered_json{{"n", g.num_vertices()}, {"K", prof_k}, {"k", ks}, {"avg_counts", p.avg_counts}}
                               .dump()
                        << "\n";
                }
            }
        } else if (*distance) {
            const Graph a = read_edge_list_file(dist_a);
            const Graph b = read_edge_list_file(dist_b);
            out << format_value(diag_distance(a, b, dist_flags.options())) << "\n";
        } else if (*matrix) {
            std::vector<Graph> graphs;
            for (const auto& path : mat_graphs) {
                graphs.push_back(read_edge_list_file(path));
            }
            const auto opts = mat_flags.options();
            const auto m = distance_matrix(graphs, opts, mat_graphs);
            if (mat_format == "csv") {
                out << "label_i,label_j,distance\n";
                for (std::size_t i = 0; i < m.labels.size(); ++i) {
                    for (std::size_t j = i + 1; j < m.labels.size(); ++j) {
                        out << fmt::format("{},{},{}\n", m.labels[i], m.labels[j],
                                           format_value(m.values[i][j]));
                    }
                }
            } else {
                out << nlohmann::ordered_json{{"labels", m.labels},
                                      {"mode", to_string(opts.mode)},
                                      {"norm", to_string(opts.norm)},
                                      {"K", opts.K},
                                      {"values", m.values}}
                           .dump()
                    << "\n";
            }
        } else if (*cut) {
            const Graph a = read_edge_list_file(cut_a);
            const Graph b = read_edge_list_file(cut_b);
            out << format_value(cut_distance_bruteforce(a, b, cut_force)) << "\n";
        } else if (*experiment) {
            ExperimentConfig config;
            if (!exp_config.empty()) {
                for (auto* opt : {probs_opt, count_opt, nodes_opt, seed_opt}) {
                    if (opt->count() > 0) {
                        throw UsageError(fmt::format("{} cannot be combined with --config", opt->get_name()));
                    }
                }
                for (const char* name : {"--k", "--mode", "--norm", "--normalize"}) {
                    if (experiment->count(name) > 0) {
                        throw UsageError(fmt::format("{} cannot be combined with --config", name));
                    }
                }
                const auto text = read_text_file(exp_config);
                nlohmann::json j;
                try {
                    j = nlohmann::json::parse(text);
                } catch (const nlohmann::json::parse_error& e) {
                    throw UsageError(fmt::format("{}: malformed JSON: {}", exp_config, e.what()));
                }
                config = config_from_json(j);
            } else {
                config = ExperimentConfig::paper_default(exp_seed);
                if (!exp_probs.empty()) {
                    config.clusters.clear();
                    for (double p : exp_probs) {
                        config.clusters.push_back({p, exp_count, exp_nodes});
                    }
                } else {
                    for (auto& c : config.clusters) {
                        c.graph_count = exp_count;
                        c.nodes_per_graph = exp_nodes;
                    }
                }
                config.options = exp_flags.options();
                config.validate();
            }
            const auto population = generate_population(config);
            const auto result = run_experiment(config, population);
            emit_plot_data(exp_out, config, result, population);
            out << fmt::format("overall_accuracy {}\n", format_value(result.overall_accuracy));
            for (std::size_t c = 0; c < result.per_cluster_accuracy.size(); ++c) {
                out << fmt::format("cluster {} p={} accuracy {}\n", c + 1,
                                   config.clusters[c].edge_probability,
                                   format_value(result.per_cluster_accuracy[c]));
            }
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DataError& e) {
        err << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::bad_alloc&) {
        err << "error: out of memory\n";
        return kExitData;
    }
    return kExitOk;
}

}  // namespace nbrprof::cli
