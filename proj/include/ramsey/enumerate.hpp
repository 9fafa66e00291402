#ifndef RAMSEY_ENUMERATE_HPP
#define RAMSEY_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ramsey/blowup.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

enum class StructureKind { Type1, Type2 };

/// One isomorphism class of the catalog, before blowing up at a given n.
struct StructureClass {
    std::string id;  // R1..R34 / S1.. in canonical sort order
    StructureKind kind;
    DecoratedQuotient structure;  // canonical form
    std::vector<std::uint8_t> encoding;
};

struct CatalogChecks {
    bool order_ok = false;
    bool cn_free_structural = false;
    bool cn_free_oracle = false;  // only run for n <= 8
    bool oracle_ran = false;
    bool alpha_eq_5 = false;
    bool min_degree_ok = false;
    bool contains_5_cliques = false;

    bool all_passed() const {
        return order_ok && cn_free_structural && (!oracle_ran || cn_free_oracle) &&
               alpha_eq_5 && min_degree_ok && contains_5_cliques;
    }
};

struct CatalogEntry {
    std::string id;
    StructureKind kind;
    DecoratedQuotient structure;
    int n = 0;
    std::string graph6;
    CatalogChecks checks;
    bool below_theorem_range = false;  // n < 15
};

/// The 34 distinct 5-vertex graphs, deduped by canonical_small, sorted by
/// (edge count, canonical encoding).
std::vector<Graph> enumerate_k5_subgraphs();

/// Every subset of the 10 block-pair edges x every per-block set partition of
/// incident edges into gateways, filtered by structural C_n-freeness (evaluated
/// at n=15, with a guard asserting the verdict is constant over n in [15,30]),
/// deduped by canonical encoding. jobs <= 0 means hardware concurrency.
std::vector<StructureClass> enumerate_structures(int jobs = 0);

/// Total number of labeled candidates the enumerator visits (all subsets x all
/// gateway partitions), for reporting.
long long candidate_count();

/// Streams every labeled candidate to `fn` (candidates are NOT deduped and NOT
/// filtered). Used by the structural-vs-oracle crosscheck.
void for_each_candidate(const std::function<void(const DecoratedQuotient&)>& fn);

/// Same, restricted to one of the 1024 block-pair edge subsets; lets callers
/// parallelize over masks.
void for_each_candidate_of_mask(int mask,
                                const std::function<void(const DecoratedQuotient&)>& fn);

struct GeneratorsReport {
    // Type1 id -> ids of Type2 classes with the same underlying block-pair
    // edge set (gateway partitions collapsed).
    std::map<std::string, std::vector<std::string>> derived;
    int generating = 0;
    int non_generating = 0;
};

GeneratorsReport generators_report(const std::vector<StructureClass>& classes);

/// Blow up every structure class at n and run the verification checks.
/// Throws structure_error if any check fails (it never should).
std::vector<CatalogEntry> enumerate_catalog(int n, int jobs = 0);

/// catalog.json + one .g6 file per entry, under dir (created if needed).
void write_catalog(const std::vector<CatalogEntry>& entries,
                   const GeneratorsReport& report, const std::string& dir);

}  // namespace ramsey

#endif
