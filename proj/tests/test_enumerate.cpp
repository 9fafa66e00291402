#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include "doctest.h"
#include "json.hpp"
#include "ramsey/enumerate.hpp"
#include "ramsey/lemma_lab.hpp"
#include "ramsey/solvers.hpp"

using namespace ramsey;

TEST_CASE("k5 subgraph classes") {
    auto classes = enumerate_k5_subgraphs();
    CHECK(classes.size() == 34);
    std::map<long long, int> by_edges;
    for (const auto& g : classes) ++by_edges[g.edge_count()];
    // 5-vertex graphs per edge count
    std::map<long long, int> expected{{0, 1}, {1, 1}, {2, 2}, {3, 4}, {4, 6}, {5, 6},
                                      {6, 6}, {7, 4}, {8, 2}, {9, 1}, {10, 1}};
    CHECK(by_edges == expected);

    // independent classification via the isomorphism solver
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i + 1; j < classes.size(); ++j)
            CHECK(!are_isomorphic(classes[i], classes[j]).has_value());
}

TEST_CASE("candidate space size") {
    CHECK(candidate_count() == 2334200);
    long long seen = 0;
    for_each_candidate_of_mask(1023, [&](const DecoratedQuotient&) { ++seen; });
    CHECK(seen == 759375);  // Bell(4)^5 for the full K5 subset
}

TEST_CASE("structure enumeration") {
    auto classes = enumerate_structures();
    int t1 = 0, t2 = 0;
    for (const auto& c : classes) (c.kind == StructureKind::Type1 ? t1 : t2) += 1;
    CHECK(t1 == 34);
    CHECK(t2 == 36);
    CHECK(classes.size() == 70);

    // encodings pairwise distinct; every Type2 has a split block
    std::set<std::vector<std::uint8_t>> encs;
    for (const auto& c : classes) {
        CHECK(encs.insert(c.encoding).second);
        if (c.kind == StructureKind::Type2) {
            bool split = false;
            for (int b = 0; b < 5; ++b) split |= c.structure.gateway_counts[b] >= 2;
            CHECK(split);
        } else {
            for (int b = 0; b < 5; ++b) CHECK(c.structure.gateway_counts[b] <= 1);
        }
    }

    // ids are stable and canonical: R1 is the empty quotient, R4 the path P3,
    // S1 the split-middle path (2 external edges, least of the Type2 order)
    const StructureClass* r1 = nullptr;
    const StructureClass* r4 = nullptr;
    const StructureClass* s1 = nullptr;
    for (const auto& c : classes) {
        if (c.id == "R1") r1 = &c;
        if (c.id == "R4") r4 = &c;
        if (c.id == "S1") s1 = &c;
    }
    REQUIRE(r1);
    REQUIRE(r4);
    REQUIRE(s1);
    CHECK(r1->structure.external_edges.empty());
    DecoratedQuotient p3;
    p3.gateway_counts = {1, 1, 1, 0, 0};
    p3.external_edges = {{{0, 0}, {1, 0}}, {{1, 0}, {2, 0}}};
    CHECK(r4->encoding == canonical_decorated(p3));
    DecoratedQuotient p3split;
    p3split.gateway_counts = {1, 2, 1, 0, 0};
    p3split.external_edges = {{{0, 0}, {1, 0}}, {{1, 1}, {2, 0}}};
    CHECK(s1->encoding == canonical_decorated(p3split));

    // Type1 classes correspond exactly to the 34 subgraphs of K5
    std::set<std::string> t1_canon;
    for (const auto& c : classes)
        if (c.kind == StructureKind::Type1) {
            GraphBuilder b(5);
            for (auto [x, y] : c.structure.external_edges) b.add_edge(x.block, y.block);
            t1_canon.insert(canonical_small(std::move(b).build()));
        }
    std::set<std::string> k5_canon;
    for (const auto& g : enumerate_k5_subgraphs()) k5_canon.insert(canonical_small(g));
    CHECK(t1_canon == k5_canon);

    // Type2 classes per external edge count
    std::map<std::size_t, int> t2_by_edges;
    for (const auto& c : classes)
        if (c.kind == StructureKind::Type2) ++t2_by_edges[c.structure.external_edges.size()];
    std::map<std::size_t, int> expected{{2, 1}, {3, 5}, {4, 17}, {5, 9}, {6, 3}, {7, 1}};
    CHECK(t2_by_edges == expected);
}

TEST_CASE("generators report") {
    auto classes = enumerate_structures();
    auto report = generators_report(classes);
    CHECK(report.generating == 16);
    CHECK(report.non_generating == 18);
    CHECK(report.derived.size() == 34);

    // attribution partitions the Type2 classes
    std::set<std::string> seen;
    int total = 0;
    for (const auto& [id, derived] : report.derived) {
        for (const auto& s : derived) {
            CHECK(seen.insert(s).second);
            ++total;
        }
    }
    CHECK(total == 36);
    // the empty quotient generates nothing
    CHECK(report.derived.at("R1").empty());
    // the split-middle path S1 is derived from the path R4
    auto& from_r4 = report.derived.at("R4");
    CHECK(std::find(from_r4.begin(), from_r4.end(), "S1") != from_r4.end());
}

TEST_CASE("catalog entries verify at n=15 and n=6") {
    auto entries15 = enumerate_catalog(15);
    CHECK(entries15.size() == 70);
    for (const auto& e : entries15) {
        CHECK(e.checks.all_passed());
        CHECK(!e.below_theorem_range);
        Graph g = parse_graph6(e.graph6);
        CHECK(g.vertex_count() == 70);
        CHECK(g.degree_stats().second == 13);
    }
    auto entries6 = enumerate_catalog(6);
    CHECK(entries6.size() == 70);
    for (const auto& e : entries6) {
        CHECK(e.below_theorem_range);
        CHECK(e.checks.oracle_ran);
        CHECK(e.checks.cn_free_oracle);
    }
}

TEST_CASE("catalog persistence schema") {
    namespace fs = std::filesystem;
    auto classes = enumerate_structures();
    auto entries = enumerate_catalog(15);
    auto report = generators_report(classes);
    fs::path dir = fs::temp_directory_path() / "ramsey_catalog_test";
    fs::remove_all(dir);
    write_catalog(entries, report, dir.string());

    std::ifstream in(dir / "catalog.json");
    REQUIRE(in.good());
    nlohmann::json j;
    in >> j;
    CHECK(j["n"] == 15);
    CHECK(j["count"] == 70);
    CHECK(j["type1"] == 34);
    CHECK(j["type2"] == 36);
    CHECK(j["entries"].size() == 70);
    CHECK(j["generators"].size() == 34);
    for (const auto& je : j["entries"]) {
        CHECK(je.contains("id"));
        CHECK(je.contains("kind"));
        CHECK(je.contains("structure"));
        CHECK(je.contains("checks"));
        // structure text parses back; graph6 file exists and parses
        DecoratedQuotient dq = decorated_from_text(je["structure"].get<std::string>());
        fs::path gp = dir / je["graph6_file"].get<std::string>();
        REQUIRE(fs::exists(gp));
        std::ifstream gin(gp);
        std::string line;
        std::getline(gin, line);
        Graph g = parse_graph6(line);
        CHECK(g.vertex_count() == 70);
        CHECK(canonical_decorated(recover_structure(g, 15)) == canonical_decorated(dq));
    }
    fs::remove_all(dir);
}
