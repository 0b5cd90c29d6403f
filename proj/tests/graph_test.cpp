#include <doctest.h>

#include <cmath>
#include <random>

#include "nbrprof/error.hpp"
#include "nbrprof/graph.hpp"
#include "test_graphs.hpp"

using namespace nbrprof;
using nbrprof::testing::make_graph;

TEST_CASE("new graph has isolated vertices") {
    CHECK(Graph(0).num_vertices() == 0);
    CHECK(Graph(0).num_edges() == 0);
    Graph five(5);
    CHECK(five.num_vertices() == 5);
    CHECK(five.num_edges() == 0);
    for (VertexId v = 0; v < 5; ++v) {
        CHECK(five.neighbors(v).empty());
    }
    Graph hundred(100);
    CHECK(hundred.num_vertices() == 100);
    CHECK(hundred.num_edges() == 0);
}

TEST_CASE("add_edge") {
    Graph g(2);
    g.add_edge(0, 1);
    CHECK(g.num_edges() == 1);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));

    SUBCASE("idempotent") {
        g.add_edge(0, 1);
        g.add_edge(1, 0);
        CHECK(g.num_edges() == 1);
        CHECK(g.validate().empty());
    }
    SUBCASE("rejects self-loops and bad ids") {
        CHECK_THROWS_AS(g.add_edge(0, 0), DataError);
        CHECK_THROWS_AS(g.add_edge(0, 2), DataError);
        CHECK_THROWS_AS(g.add_edge(7, 1), DataError);
        CHECK(g.num_edges() == 1);
    }
}

TEST_CASE("neighbors are sorted and exact") {
    const Graph path = path_graph(3);
    CHECK(std::vector<VertexId>(path.neighbors(1).begin(), path.neighbors(1).end()) ==
          std::vector<VertexId>{0, 2});

    const Graph isolated = make_graph(3, {{0, 1}});
    CHECK(isolated.neighbors(2).empty());

    const Graph k4 = complete_graph(4);
    CHECK(std::vector<VertexId>(k4.neighbors(0).begin(), k4.neighbors(0).end()) ==
          std::vector<VertexId>{1, 2, 3});

    const Graph scrambled = make_graph(5, {{0, 4}, {0, 2}, {0, 3}, {0, 1}});
    CHECK(std::vector<VertexId>(scrambled.neighbors(0).begin(), scrambled.neighbors(0).end()) ==
          std::vector<VertexId>{1, 2, 3, 4});

    CHECK_THROWS_AS(path.neighbors(3), DataError);
}

TEST_CASE("relabel preserves structure") {
    const Graph g = make_graph(4, {{0, 1}, {1, 2}});
    const std::vector<VertexId> perm{3, 2, 1, 0};
    const Graph h = relabel(g, perm);
    CHECK(h.num_edges() == 2);
    CHECK(h.has_edge(3, 2));
    CHECK(h.has_edge(2, 1));
    CHECK_THROWS_AS(relabel(g, std::vector<VertexId>{0, 0, 1, 2}), UsageError);
    CHECK_THROWS_AS(relabel(g, std::vector<VertexId>{0, 1}), UsageError);
}

TEST_CASE("G(n,p) boundary probabilities") {
    for (Seed seed : {0ULL, 1ULL, 42ULL, 0xFFFFFFFFFFFFFFFFULL}) {
        CHECK(generate_er_gnp(5, 0.0, seed).num_edges() == 0);
        CHECK(generate_er_gnp(5, 1.0, seed).num_edges() == 10);
        CHECK(generate_er_gnp(5, 1.0, seed) == complete_graph(5));
    }
    CHECK(generate_er_gnp(0, 0.5, 1).num_vertices() == 0);
    CHECK(generate_er_gnp(1, 1.0, 1).num_edges() == 0);
    CHECK_THROWS_AS(generate_er_gnp(5, 1.5, 1), UsageError);
    CHECK_THROWS_AS(generate_er_gnp(5, -0.1, 1), UsageError);
    CHECK_THROWS_AS(generate_er_gnp(5, std::nan(""), 1), UsageError);
}

TEST_CASE("G(n,p) is a pure function of its arguments") {
    for (Seed seed = 0; seed < 20; ++seed) {
        const Graph a = generate_er_gnp(60, 0.3, seed);
        const Graph b = generate_er_gnp(60, 0.3, seed);
        CHECK(a == b);
        CHECK(a.validate().empty());
    }
    CHECK(generate_er_gnp(60, 0.3, 1) != generate_er_gnp(60, 0.3, 2));
}

TEST_CASE("G(100, 0.08) edge counts follow Binomial(4950, 0.08)") {
    // mean 396, sigma = sqrt(4950 * 0.08 * 0.92) ~ 19.09
    const double mean = 4950 * 0.08;
    const double sigma = std::sqrt(4950 * 0.08 * 0.92);
    CHECK(sigma == doctest::Approx(19.09).epsilon(1e-3));
    double total = 0.0;
    const int seeds = 1000;
    for (int s = 0; s < seeds; ++s) {
        const auto m = static_cast<double>(generate_er_gnp(100, 0.08, s).num_edges());
        CHECK(std::abs(m - mean) <= 5 * sigma);
        total += m;
    }
    CHECK(std::abs(total / seeds - mean) <= 4 * sigma / std::sqrt(seeds));
}

TEST_CASE("G(100, 0.22) mean edge count over 500 seeds") {
    const double mean = 0.22 * 4950;
    const double sigma = std::sqrt(4950 * 0.22 * 0.78);
    double total = 0.0;
    for (int s = 0; s < 500; ++s) {
        total += static_cast<double>(generate_er_gnp(100, 0.22, 1000 + s).num_edges());
    }
    CHECK(std::abs(total / 500 - mean) <= 3 * sigma / std::sqrt(500.0));
}

TEST_CASE("edge list parsing") {
    const Graph g = read_edge_list("3\n0 1\n1 2\n");
    CHECK(g == path_graph(3));

    SUBCASE("comments, blank lines and CRLF") {
        const Graph h = read_edge_list("# a path\n\n3\r\n# edges\n1\t0\r\n 2 1 \n");
        CHECK(h == path_graph(3));
    }
    SUBCASE("isolated vertices survive") {
        const Graph h = read_edge_list("4\n");
        CHECK(h.num_vertices() == 4);
        CHECK(h.num_edges() == 0);
    }
    SUBCASE("no trailing newline") {
        CHECK(read_edge_list("2\n0 1") == path_graph(2));
    }
}

TEST_CASE("edge list errors name the line") {
    auto message = [](std::string_view text) {
        try {
            read_edge_list(text);
        } catch (const DataError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(message("2\n0 2\n").find("line 2") != std::string::npos);
    CHECK(message("2\n0 2\n").find("out of range") != std::string::npos);
    CHECK(message("3\n0 1\n1 1\n").find("line 3") != std::string::npos);
    CHECK(message("3\n0 1\n1 1\n").find("self-loop") != std::string::npos);
    CHECK(message("3\n0 x\n").find("line 2") != std::string::npos);
    CHECK(message("3\n0 1 2\n").find("line 2") != std::string::npos);
    CHECK(message("3\n-1 2\n").find("line 2") != std::string::npos);
    CHECK(message("0 1\n").find("line 1") != std::string::npos);
    CHECK(message("# only comments\n").find("missing vertex count") != std::string::npos);
    CHECK(message("").find("missing vertex count") != std::string::npos);
    CHECK_THROWS_AS(read_edge_list_file("/nonexistent/graph.txt"), DataError);
}

TEST_CASE("edge list writer emits canonical form") {
    const Graph g = read_edge_list("# x\n4\n3 1\n0 2\n1 3\n2 0\n1 0\n");
    CHECK(write_edge_list(g) == "4\n0 1\n0 2\n1 3\n");
    CHECK(write_edge_list(Graph(5)) == "5\n");
    CHECK(write_edge_list(Graph(0)) == "0\n");
}

TEST_CASE("edge list round trip is the identity on random graphs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = nbrprof::testing::random_graph(rng, 0, 40);
        const auto text = write_edge_list(g);
        const Graph back = read_edge_list(text);
        CHECK(back == g);
        CHECK(write_edge_list(back) == text);
    }
}
