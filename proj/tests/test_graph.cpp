#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <sstream>

#include "doctest.h"
#include "ramsey/graph.hpp"
#include "ramsey/solvers.hpp"

using namespace ramsey;

namespace {

Graph cycle_graph(int n) {
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
    return std::move(b).build();
}

Graph complete_graph(int n) {
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) b.add_edge(i, j);
    return std::move(b).build();
}

Graph random_graph(int n, std::mt19937_64& rng, double p = 0.5) {
    GraphBuilder b(n);
    std::bernoulli_distribution coin(p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) b.add_edge(i, j);
    return std::move(b).build();
}

}  // namespace

TEST_CASE("from_edges basics") {
    Graph empty = Graph::from_edges(0, {});
    CHECK(empty.vertex_count() == 0);
    CHECK(empty.edge_count() == 0);

    Graph tri = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(tri.degree_stats().first == std::vector<int>{2, 2, 2});

    Graph dup = Graph::from_edges(4, {{0, 1}, {0, 1}});
    CHECK(dup.edge_count() == 1);
    CHECK(dup.degree(2) == 0);

    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), graph_error);
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), graph_error);
    CHECK_THROWS_WITH(Graph::from_edges(3, {{2, 2}}), doctest::Contains("2"));
}

TEST_CASE("complement") {
    CHECK(complete_graph(5).complement().edge_count() == 0);
    Graph e3 = Graph::from_edges(3, {});
    CHECK(e3.complement() == complete_graph(3));
    for (int n : {0, 1, 4, 9}) {
        std::mt19937_64 rng(n);
        Graph g = random_graph(n, rng);
        CHECK(g.complement().complement() == g);
        CHECK(g.edge_count() + g.complement().edge_count() == 1LL * n * (n - 1) / 2);
    }
    // C5 is self-complementary
    Graph c5 = cycle_graph(5);
    CHECK(are_isomorphic(c5, c5.complement()).has_value());
}

TEST_CASE("induced subgraph") {
    std::vector<int> s{0, 1, 2};
    CHECK(complete_graph(5).induced(s) == complete_graph(3));
    Graph c5 = cycle_graph(5);
    Graph path = c5.induced(s);
    CHECK(path.edge_count() == 2);
    CHECK(c5.induced(std::vector<int>{}).vertex_count() == 0);
    CHECK_THROWS_AS(c5.induced(std::vector<int>{7}), graph_error);
    // relabeling keeps ascending original order: vertices {1,3} of C5 are nonadjacent
    Graph sub = c5.induced(std::vector<int>{1, 3});
    CHECK(sub.edge_count() == 0);
}

TEST_CASE("graph6 round trip") {
    CHECK(to_graph6(Graph::from_edges(0, {})) == "?");
    Graph k2 = complete_graph(2);
    Graph back = parse_graph6(to_graph6(k2));
    CHECK(back.vertex_count() == 2);
    CHECK(back.edge_count() == 1);

    std::mt19937_64 rng(12345);
    for (int n : {1, 5, 62, 63, 70, 150, 512}) {
        Graph g = random_graph(n, rng, 0.3);
        Graph h = parse_graph6(to_graph6(g));
        CHECK(h == g);
        CHECK(h.check_invariants());
    }
}

TEST_CASE("graph6 parse errors carry a byte offset") {
    CHECK_THROWS_AS(parse_graph6(""), parse_error);
    try {
        parse_graph6(std::string_view("D\x01zzz", 5));  // non-printable byte
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.offset == 1);
    }
    CHECK_THROWS_AS(parse_graph6("D"), parse_error);  // truncated bit section
}

TEST_CASE("degree stats") {
    auto [seq_k4, min_k4] = complete_graph(4).degree_stats();
    CHECK(seq_k4 == std::vector<int>{3, 3, 3, 3});
    CHECK(min_k4 == 3);

    Graph k2k1 = Graph::from_edges(3, {{0, 1}});
    auto [seq, mind] = k2k1.degree_stats();
    CHECK(seq == std::vector<int>{1, 1, 0});
    CHECK(mind == 0);

    // 5 disjoint K14: every degree 13
    GraphBuilder b(70);
    for (int blk = 0; blk < 5; ++blk)
        for (int i = 0; i < 14; ++i)
            for (int j = i + 1; j < 14; ++j) b.add_edge(blk * 14 + i, blk * 14 + j);
    auto [seq5, min5] = std::move(b).build().degree_stats();
    CHECK(min5 == 13);
    CHECK(seq5.front() == 13);
}

TEST_CASE("edge list format") {
    Graph g = Graph::from_edges(4, {{0, 1}, {2, 3}});
    std::string text = to_edge_list(g);
    CHECK(text == "p 4 2\ne 0 1\ne 2 3\n");
    CHECK(parse_edge_list(text) == g);
    CHECK_THROWS_AS(parse_edge_list("q 3 0"), parse_error);
    CHECK_THROWS_AS(parse_edge_list("p 3 2\ne 0 1\n"), parse_error);  // count mismatch
}

TEST_CASE("multi-graph g6 stream") {
    std::ostringstream text;
    text << to_graph6(complete_graph(3)) << '\n' << to_graph6(cycle_graph(5)) << '\n';
    std::istringstream in(text.str());
    auto graphs = read_graph6_stream(in);
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[0] == complete_graph(3));
    CHECK(graphs[1] == cycle_graph(5));
}
