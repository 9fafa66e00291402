#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "ramsey/blowup.hpp"
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

Graph petersen() {
    // outer C5, inner 5-star polygon, spokes
    GraphBuilder b(10);
    for (int i = 0; i < 5; ++i) {
        b.add_edge(i, (i + 1) % 5);
        b.add_edge(5 + i, 5 + (i + 2) % 5);
        b.add_edge(i, 5 + i);
    }
    return std::move(b).build();
}

// independent-set oracle: exhaustive subset check (n <= 20)
int alpha_brute(const Graph& g) {
    int n = g.vertex_count();
    int best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool ind = true;
        for (int i = 0; i < n && ind; ++i)
            if ((mask >> i) & 1)
                for (int j = i + 1; j < n && ind; ++j)
                    if (((mask >> j) & 1) && g.has_edge(i, j)) ind = false;
        if (ind) best = std::max(best, std::popcount(mask));
    }
    return best;
}

// cycle oracle: all vertex subsets of size L, all circular orderings (n <= 9)
bool has_cycle_brute(const Graph& g, int L) {
    int n = g.vertex_count();
    if (L > n) return false;
    std::vector<int> sel(L);
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<bool> choose(n, false);
    std::fill(choose.end() - L, choose.end(), true);
    std::sort(choose.begin(), choose.end());
    // iterate combinations via permutation of the chooser mask
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + L, true);
    std::sort(mask.begin(), mask.end());
    do {
        std::vector<int> verts;
        for (int i = 0; i < n; ++i)
            if (mask[i]) verts.push_back(i);
        std::vector<int> perm(verts.begin() + 1, verts.end());
        std::sort(perm.begin(), perm.end());
        do {
            bool ok = g.has_edge(verts[0], perm.front()) && g.has_edge(verts[0], perm.back());
            for (std::size_t i = 0; ok && i + 1 < perm.size(); ++i)
                ok = g.has_edge(perm[i], perm[i + 1]);
            if (ok) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
    } while (std::next_permutation(mask.begin(), mask.end()));
    return false;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    GraphBuilder b(g.vertex_count());
    for (auto [u, v] : g.edges()) b.add_edge(perm[u], perm[v]);
    return std::move(b).build();
}

}  // namespace

TEST_CASE("independence number") {
    CHECK(independence_number(cycle_graph(5)).alpha == 2);

    GraphBuilder b(70);  // 5 disjoint K14
    for (int blk = 0; blk < 5; ++blk)
        for (int i = 0; i < 14; ++i)
            for (int j = i + 1; j < 14; ++j) b.add_edge(blk * 14 + i, blk * 14 + j);
    Graph five_k14 = std::move(b).build();
    auto res = independence_number(five_k14);
    CHECK(res.alpha == 5);
    CHECK(res.witness.size() == 5);

    // Petersen: frozen oracle value 4 (exhaustive over 2^10 subsets)
    CHECK(alpha_brute(petersen()) == 4);
    CHECK(independence_number(petersen()).alpha == 4);
}

TEST_CASE("independence number agrees with the subset oracle on random graphs") {
    std::mt19937_64 rng(777);
    std::bernoulli_distribution coin(0.4);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 1 + static_cast<int>(rng() % 14);
        GraphBuilder b(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (coin(rng)) b.add_edge(i, j);
        Graph g = std::move(b).build();
        auto res = independence_number(g);
        CHECK(res.alpha == alpha_brute(g));
        for (std::size_t i = 0; i < res.witness.size(); ++i)
            for (std::size_t j = i + 1; j < res.witness.size(); ++j)
                CHECK(!g.has_edge(res.witness[i], res.witness[j]));
    }
}

TEST_CASE("fixed-length cycle search") {
    CHECK(has_cycle_of_length(complete_graph(4), 4).has_value());
    CHECK(!has_cycle_of_length(complete_graph(4), 5).has_value());
    CHECK(has_cycle_of_length(cycle_graph(7), 7).has_value());
    CHECK(!has_cycle_of_length(cycle_graph(7), 6).has_value());
    CHECK_THROWS_AS(has_cycle_of_length(complete_graph(4), 2), graph_error);

    // witness comes back verified
    auto w = has_cycle_of_length(petersen(), 9);
    REQUIRE(w.has_value());
    CHECK(verify_cycle_witness(petersen(), *w, 9));
    CHECK(!has_cycle_of_length(petersen(), 3).has_value());  // girth 5
    CHECK(!has_cycle_of_length(petersen(), 4).has_value());
    CHECK(has_cycle_of_length(petersen(), 5).has_value());
}

TEST_CASE("cycle search agrees with exhaustive enumeration on small graphs") {
    std::mt19937_64 rng(4242);
    std::bernoulli_distribution coin(0.45);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 4 + static_cast<int>(rng() % 6);  // 4..9
        GraphBuilder b(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (coin(rng)) b.add_edge(i, j);
        Graph g = std::move(b).build();
        for (int L = 3; L <= n; ++L) {
            bool fast = has_cycle_of_length(g, L).has_value();
            CHECK(fast == has_cycle_brute(g, L));
        }
    }
}

TEST_CASE("triangle quotient with split middle block contains C6 at n=6") {
    // blocks 0-1-2 in a triangle; block 1 split into one gateway per edge
    DecoratedQuotient dq;
    dq.gateway_counts = {1, 2, 1, 0, 0};
    dq.external_edges = {{{0, 0}, {1, 0}}, {{1, 1}, {2, 0}}, {{0, 0}, {2, 0}}};
    dq.validate();
    Graph g = build_blowup(dq, 6);
    CHECK(has_cycle_of_length(g, 6).has_value());
    CHECK(!is_cn_free_structural(dq, 6));
}

TEST_CASE("isomorphism") {
    Graph c5 = cycle_graph(5);
    auto map = are_isomorphic(c5, c5.complement());
    REQUIRE(map.has_value());
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v)
            CHECK(c5.has_edge(u, v) == c5.complement().has_edge((*map)[u], (*map)[v]));

    CHECK(!are_isomorphic(complete_graph(4), cycle_graph(4)).has_value());
    CHECK(are_isomorphic(Graph::from_edges(0, {}), Graph::from_edges(0, {})).has_value());

    // blow-up vs random relabeling of itself
    DecoratedQuotient p3;
    p3.gateway_counts = {1, 1, 1, 0, 0};
    p3.external_edges = {{{0, 0}, {1, 0}}, {{1, 0}, {2, 0}}};
    Graph g = build_blowup(p3, 15);
    std::mt19937_64 rng(99);
    std::vector<int> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(are_isomorphic(g, relabel(g, perm)).has_value());

    // different quotients at n=6 are distinguished
    DecoratedQuotient two_k2;
    two_k2.gateway_counts = {1, 1, 1, 1, 0};
    two_k2.external_edges = {{{0, 0}, {1, 0}}, {{2, 0}, {3, 0}}};
    CHECK(!are_isomorphic(build_blowup(p3, 6), build_blowup(two_k2, 6)).has_value());
}

TEST_CASE("canonical_small") {
    Graph p3a = Graph::from_edges(3, {{0, 1}, {1, 2}});
    Graph p3b = Graph::from_edges(3, {{2, 0}, {0, 1}});
    CHECK(canonical_small(p3a) == canonical_small(p3b));
    CHECK(canonical_small(complete_graph(3)) != canonical_small(p3a));
    CHECK_THROWS_AS(canonical_small(complete_graph(11)), graph_error);

    // invariance under random relabelings
    std::mt19937_64 rng(31337);
    std::bernoulli_distribution coin(0.5);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng() % 6);
        GraphBuilder b(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (coin(rng)) b.add_edge(i, j);
        Graph g = std::move(b).build();
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_small(g) == canonical_small(relabel(g, perm)));
    }

    // 34 distinct classes among the 2^10 labeled graphs on 5 vertices
    std::set<std::string> classes;
    constexpr std::pair<int, int> pairs[10] = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2},
                                               {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
    for (int mask = 0; mask < 1024; ++mask) {
        GraphBuilder b(5);
        for (int e = 0; e < 10; ++e)
            if ((mask >> e) & 1) b.add_edge(pairs[e].first, pairs[e].second);
        classes.insert(canonical_small(std::move(b).build()));
    }
    CHECK(classes.size() == 34);
}
