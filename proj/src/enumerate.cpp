#include "ramsey/enumerate.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <mutex>

#include "json.hpp"
#include "ramsey/lemma_lab.hpp"
#include "ramsey/parallel.hpp"
#include "ramsey/solvers.hpp"

namespace ramsey {

namespace {

constexpr std::pair<int, int> kBlockPairs[10] = {
    {0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};

// Set partitions of {0..k-1} as restricted growth strings: part[i] = group of
// item i, groups numbered by first appearance.
std::vector<std::vector<int>> set_partitions(int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(k, 0);
    auto rec = [&](auto&& self, int i, int max_used) -> void {
        if (i == k) {
            out.push_back(cur);
            return;
        }
        for (int gidx = 0; gidx <= max_used + 1 && gidx < 4; ++gidx) {
            cur[i] = gidx;
            self(self, i + 1, std::max(max_used, gidx));
        }
    };
    if (k == 0)
        out.push_back({});
    else
        rec(rec, 0, -1);
    return out;
}

struct CandidateSpace {
    // per mask: incident edge indices per block, and the partition tables
    std::array<std::vector<std::vector<int>>, 5> partitions_by_size;

    CandidateSpace() {
        for (int k = 0; k <= 4; ++k) partitions_by_size[k] = set_partitions(k);
    }

    template <typename F>
    void for_mask(int mask, F&& fn) const {
        std::array<std::vector<int>, 5> incident;  // edge indices per block
        std::vector<std::pair<int, int>> edges;
        for (int b = 0; b < 10; ++b)
            if ((mask >> b) & 1) {
                int e = static_cast<int>(edges.size());
                edges.push_back(kBlockPairs[b]);
                incident[kBlockPairs[b].first].push_back(e);
                incident[kBlockPairs[b].second].push_back(e);
            }
        std::array<std::size_t, 5> idx{};
        std::array<const std::vector<std::vector<int>>*, 5> tables;
        for (int b = 0; b < 5; ++b)
            tables[b] = &partitions_by_size[incident[b].size()];
        DecoratedQuotient dq;
        dq.external_edges.resize(edges.size());
        for (;;) {
            // materialize the quotient for the current partition combination
            std::array<std::array<int, 10>, 5> gw_of_edge{};  // block -> edge idx -> gateway
            for (int b = 0; b < 5; ++b) {
                const auto& part = (*tables[b])[idx[b]];
                int groups = part.empty() ? 0 : *std::max_element(part.begin(), part.end()) + 1;
                dq.gateway_counts[b] = groups;
                for (std::size_t i = 0; i < part.size(); ++i)
                    gw_of_edge[b][incident[b][i]] = part[i];
            }
            for (std::size_t e = 0; e < edges.size(); ++e) {
                auto [i, j] = edges[e];
                dq.external_edges[e] = {GatewayRef{i, gw_of_edge[i][e]},
                                        GatewayRef{j, gw_of_edge[j][e]}};
            }
            fn(dq);
            int b = 0;
            while (b < 5 && ++idx[b] == tables[b]->size()) idx[b++] = 0;
            if (b == 5) break;
        }
    }
};

const CandidateSpace& candidate_space() {
    static CandidateSpace space;
    return space;
}

// Verdict of the structural filter over n in [15,30], as a 16-bit hit mask.
// 0 = survivor for the whole range; 0xFFFF = rejected for the whole range.
unsigned range_hits(const DecoratedQuotient& dq) {
    unsigned acc = 0;
    for_each_gateway_cycle(dq, [&](const GwCycleSummary& c) {
        for (int n = 15; n <= 30; ++n)
            if (c.contains(n)) acc |= 1u << (n - 15);
        return acc != 0xFFFFu;
    });
    return acc;
}

std::vector<int> quotient_degree_sequence(const DecoratedQuotient& dq) {
    std::vector<int> deg(5, 0);
    for (auto [a, b] : dq.external_edges) {
        ++deg[a.block];
        ++deg[b.block];
    }
    std::sort(deg.rbegin(), deg.rend());
    return deg;
}

}  // namespace

long long candidate_count() {
    static constexpr long long bell[5] = {1, 1, 2, 5, 15};
    long long total = 0;
    for (int mask = 0; mask < 1024; ++mask) {
        int deg[5] = {0, 0, 0, 0, 0};
        for (int b = 0; b < 10; ++b)
            if ((mask >> b) & 1) {
                ++deg[kBlockPairs[b].first];
                ++deg[kBlockPairs[b].second];
            }
        long long p = 1;
        for (int d : deg) p *= bell[d];
        total += p;
    }
    return total;
}

void for_each_candidate(const std::function<void(const DecoratedQuotient&)>& fn) {
    for (int mask = 0; mask < 1024; ++mask) candidate_space().for_mask(mask, fn);
}

void for_each_candidate_of_mask(int mask,
                                const std::function<void(const DecoratedQuotient&)>& fn) {
    if (mask < 0 || mask >= 1024) throw structure_error("mask out of range");
    candidate_space().for_mask(mask, fn);
}

std::vector<Graph> enumerate_k5_subgraphs() {
    std::map<std::string, Graph> classes;
    for (int mask = 0; mask < 1024; ++mask) {
        GraphBuilder b(5);
        for (int e = 0; e < 10; ++e)
            if ((mask >> e) & 1) b.add_edge(kBlockPairs[e].first, kBlockPairs[e].second);
        Graph g = std::move(b).build();
        classes.emplace(canonical_small(g), std::move(g));
    }
    std::vector<std::pair<std::pair<long long, std::string>, Graph>> sorted;
    for (auto& [enc, g] : classes)
        sorted.push_back({{g.edge_count(), enc}, g});
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> out;
    for (auto& [key, g] : sorted) out.push_back(std::move(g));
    return out;
}

std::vector<StructureClass> enumerate_structures(int jobs) {
    // the result is deterministic and jobs only affects speed; cache it
    static std::mutex cache_mu;
    static std::vector<StructureClass> cache;
    {
        std::lock_guard<std::mutex> lk(cache_mu);
        if (!cache.empty()) return cache;
    }
    std::map<std::vector<std::uint8_t>, DecoratedQuotient> survivors;
    std::mutex mu;
    parallel_for(1024, jobs, [&](long long mask) {
        std::map<std::vector<std::uint8_t>, DecoratedQuotient> local;
        candidate_space().for_mask(static_cast<int>(mask), [&](const DecoratedQuotient& dq) {
            unsigned hits = range_hits(dq);
            if (hits == 0xFFFFu) return;
            if (hits != 0)
                throw structure_error(
                    "structural verdict varies over n in [15,30] for " +
                    decorated_to_text(dq));
            auto enc = canonical_decorated(dq);
            local.try_emplace(std::move(enc), dq);
        });
        std::lock_guard<std::mutex> lk(mu);
        for (auto& [enc, dq] : local) survivors.try_emplace(enc, dq);
    });

    // id assignment: edge count, then quotient degree sequence, then encoding
    struct Keyed {
        std::tuple<std::size_t, std::vector<int>, std::vector<std::uint8_t>> key;
        StructureClass cls;
    };
    std::vector<Keyed> t1, t2;
    for (auto& [enc, dq] : survivors) {
        DecoratedQuotient canon = canonical_form(dq);
        StructureClass cls{"", canon.is_type1() ? StructureKind::Type1 : StructureKind::Type2,
                           canon, enc};
        Keyed k{{canon.external_edges.size(), quotient_degree_sequence(canon), enc},
                std::move(cls)};
        (k.cls.kind == StructureKind::Type1 ? t1 : t2).push_back(std::move(k));
    }
    auto finish = [](std::vector<Keyed>& v, const char* prefix) {
        std::sort(v.begin(), v.end(), [](const Keyed& a, const Keyed& b) { return a.key < b.key; });
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i].cls.id = prefix + std::to_string(i + 1);
    };
    finish(t1, "R");
    finish(t2, "S");
    std::vector<StructureClass> out;
    out.reserve(t1.size() + t2.size());
    for (auto& k : t1) out.push_back(std::move(k.cls));
    for (auto& k : t2) out.push_back(std::move(k.cls));
    std::lock_guard<std::mutex> lk(cache_mu);
    if (cache.empty()) cache = out;
    return out;
}

GeneratorsReport generators_report(const std::vector<StructureClass>& classes) {
    // collapse gateway partitions: canonical block-pair mask under S5
    auto canonical_mask = [](int mask) {
        std::array<int, 5> perm{0, 1, 2, 3, 4};
        int best = mask;
        do {
            int m = 0;
            for (int b = 0; b < 10; ++b)
                if ((mask >> b) & 1) {
                    auto [i, j] = kBlockPairs[b];
                    int pi = perm[i], pj = perm[j];
                    if (pi > pj) std::swap(pi, pj);
                    for (int r = 0; r < 10; ++r)
                        if (kBlockPairs[r] == std::make_pair(pi, pj)) {
                            m |= 1 << r;
                            break;
                        }
                }
            best = std::min(best, m);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return best;
    };

    GeneratorsReport report;
    std::map<int, std::string> type1_of_mask;
    for (const auto& c : classes)
        if (c.kind == StructureKind::Type1) {
            type1_of_mask[canonical_mask(c.structure.block_pair_mask())] = c.id;
            report.derived[c.id];
        }
    for (const auto& c : classes)
        if (c.kind == StructureKind::Type2) {
            auto it = type1_of_mask.find(canonical_mask(c.structure.block_pair_mask()));
            if (it == type1_of_mask.end())
                throw structure_error("Type2 class " + c.id + " has no Type1 parent");
            report.derived[it->second].push_back(c.id);
        }
    for (auto& [id, list] : report.derived)
        (list.empty() ? report.non_generating : report.generating) += 1;
    return report;
}

std::vector<CatalogEntry> enumerate_catalog(int n, int jobs) {
    if (n < 6) throw structure_error("enumerate_catalog needs n >= 6");
    auto classes = enumerate_structures(jobs);
    std::vector<CatalogEntry> entries(classes.size());
    parallel_for(static_cast<long long>(classes.size()), jobs, [&](long long i) {
        const auto& cls = classes[static_cast<std::size_t>(i)];
        CatalogEntry e;
        e.id = cls.id;
        e.kind = cls.kind;
        e.structure = cls.structure;
        e.n = n;
        e.below_theorem_range = n < 15;
        Graph g = build_blowup(cls.structure, n);
        e.graph6 = to_graph6(g);
        e.checks.order_ok = g.vertex_count() == 5 * (n - 1);
        e.checks.cn_free_structural = is_cn_free_structural(cls.structure, n);
        if (n <= 8) {
            e.checks.oracle_ran = true;
            e.checks.cn_free_oracle = !has_cycle_of_length(g, n).has_value();
        }
        e.checks.alpha_eq_5 = independence_number(g).alpha == 5;
        e.checks.min_degree_ok = min_degree_check(g, n, 5);
        try {
            DecoratedQuotient rec = recover_structure(g, n);
            e.checks.contains_5_cliques = canonical_decorated(rec) == cls.encoding;
        } catch (const structure_error&) {
            e.checks.contains_5_cliques = false;
        }
        if (!e.checks.all_passed())
            throw structure_error("catalog verification failed for " + cls.id + " (" +
                                  decorated_to_text(cls.structure) + ") at n=" +
                                  std::to_string(n));
        entries[static_cast<std::size_t>(i)] = std::move(e);
    });
    return entries;
}

void write_catalog(const std::vector<CatalogEntry>& entries,
                   const GeneratorsReport& report, const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    nlohmann::json j;
    int type1 = 0, type2 = 0;
    for (const auto& e : entries) (e.kind == StructureKind::Type1 ? type1 : type2) += 1;
    j["n"] = entries.empty() ? 0 : entries.front().n;
    j["count"] = entries.size();
    j["type1"] = type1;
    j["type2"] = type2;
    j["labeling"] =
        "ids assigned by canonical sort order (edge count, quotient degree "
        "sequence, canonical encoding)";
    auto& arr = j["entries"];
    arr = nlohmann::json::array();
    for (const auto& e : entries) {
        std::string fname = e.id + ".g6";
        nlohmann::json je;
        je["id"] = e.id;
        je["kind"] = e.kind == StructureKind::Type1 ? "Type1" : "Type2";
        je["structure"] = decorated_to_text(e.structure);
        je["graph6_file"] = fname;
        nlohmann::json checks;
        checks["order_ok"] = e.checks.order_ok;
        checks["cn_free_structural"] = e.checks.cn_free_structural;
        if (e.checks.oracle_ran) checks["cn_free_oracle"] = e.checks.cn_free_oracle;
        checks["alpha_eq_5"] = e.checks.alpha_eq_5;
        checks["min_degree_ok"] = e.checks.min_degree_ok;
        checks["contains_5_cliques"] = e.checks.contains_5_cliques;
        je["checks"] = std::move(checks);
        if (e.below_theorem_range) je["below_theorem_range"] = true;
        arr.push_back(std::move(je));
        std::ofstream out(fs::path(dir) / fname);
        out << e.graph6 << '\n';
    }
    auto& gens = j["generators"];
    gens = nlohmann::json::object();
    for (const auto& [id, list] : report.derived) gens[id] = list;
    std::ofstream out(fs::path(dir) / "catalog.json");
    out << j.dump(1) << '\n';
}

}  // namespace ramsey
