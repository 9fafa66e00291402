#ifndef RAMSEY_BLOWUP_HPP
#define RAMSEY_BLOWUP_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

struct structure_error : graph_error {
    using graph_error::graph_error;
};

/// One endpoint of an external edge: gateway `gateway` of block `block`
/// (both 0-indexed internally; the text form renders blocks 1-5, gateways a,b,...).
struct GatewayRef {
    int block = 0;
    int gateway = 0;
    friend auto operator<=>(const GatewayRef&, const GatewayRef&) = default;
};

/// The 5-block quotient of a blow-up graph: per-block gateway counts plus the
/// external edges between (block, gateway) endpoints. Blocks themselves are
/// complete; only the external structure is recorded.
struct DecoratedQuotient {
    std::array<int, 5> gateway_counts{0, 0, 0, 0, 0};
    std::vector<std::pair<GatewayRef, GatewayRef>> external_edges;

    /// Throws structure_error when a type invariant fails: endpoint ranges,
    /// distinct blocks per edge, duplicate endpoint pairs, unused gateways,
    /// more than 4 gateways in a block. Multi-edges between a block pair at
    /// distinct gateways are legal here; the C_n-freeness checker rejects them.
    void validate() const;

    bool is_type1() const;
    /// Underlying block-pair edge set with gateway assignments collapsed,
    /// as a 10-bit mask (bit index = pair rank of (i,j), i<j).
    int block_pair_mask() const;
};

struct BlowupParams {
    int n;
    int block_size() const { return n - 1; }
    int order() const { return 5 * (n - 1); }
};

/// Five disjoint K_{n-1} blocks plus the external edges. Block k occupies
/// vertices [k(n-1), (k+1)(n-1)), gateways first (gateway g -> k(n-1)+g).
Graph build_blowup(const DecoratedQuotient& dq, int n);

/// Achievable cycle lengths of the blow-up, derived from simple cycles of the
/// gateway multigraph (external edges plus virtual edges inside each block).
struct CycleLengthSet {
    /// Inter-block cycle lengths from cycles mixing virtual and external edges,
    /// as a merged union of closed intervals.
    std::vector<std::pair<int, int>> mixed;
    /// Lengths of pure-external cycles (every edge external).
    std::set<int> pure_external;
    /// Intra-block cycles exist for every length in [3, intra_max] when a block
    /// has >= 3 vertices; intra_max = n-1 (or 0 when n < 4).
    int intra_max = 0;

    bool mixed_contains(int len) const;
};

CycleLengthSet mixed_cycle_length_set(const DecoratedQuotient& dq, int n);

/// True iff the blow-up at n contains no C_n: n must avoid both the mixed
/// intervals and the pure-external lengths (the latter only matter for n <= 10;
/// intra-block cycles stop at n-1).
bool is_cn_free_structural(const DecoratedQuotient& dq, int n);

/// n-independent summary of one gateway-multigraph cycle; lets callers test
/// C_n-freeness for many n without re-enumerating cycles.
struct GwCycleSummary {
    int external = 0;       // k: external edges on the cycle
    int virtual_count = 0;  // v: virtual edges on the cycle
    int virtual_blocks = 0; // m: blocks contributing at least one virtual edge
    int cap_const = 0;      // sum over those blocks of (v_B - gw_B)
    // mixed interval at n: [external+virtual_count, external+cap_const+m*(n-1)]
    bool contains(int n) const {
        if (virtual_count == 0) return external == n;  // pure external, exact length
        if (external == 0) return false;               // pure intra-block, <= n-1
        return external + virtual_count <= n &&
               n <= external + cap_const + virtual_blocks * (n - 1);
    }
};

std::vector<GwCycleSummary> gateway_cycle_summaries(const DecoratedQuotient& dq);

/// Streaming variant: fn returns false to stop the enumeration (e.g. after the
/// first cycle that settles the verdict). Returns true when every cycle was
/// visited, false when stopped.
bool for_each_gateway_cycle(const DecoratedQuotient& dq,
                            const std::function<bool(const GwCycleSummary&)>& fn);

/// Recovers the unique 5 x K_{n-1} partition of a blow-up graph and its
/// decorated quotient (blocks ordered by least vertex, gateways by vertex).
/// Throws structure_error when g is not a blow-up of order 5(n-1).
DecoratedQuotient recover_structure(const Graph& g, int n);

/// Minimum byte encoding over block permutations x per-block gateway
/// relabelings; equal encodings iff the blow-ups are isomorphic.
std::vector<std::uint8_t> canonical_decorated(const DecoratedQuotient& dq);

/// Canonical-form quotient reconstructed from its own encoding.
DecoratedQuotient canonical_form(const DecoratedQuotient& dq);

// Text form: "blocks=5; gw=[1,2,0,0,0]; edges=(1.a-2.a),(1.a-2.b)"
std::string decorated_to_text(const DecoratedQuotient& dq);
DecoratedQuotient decorated_from_text(std::string_view text);

}  // namespace ramsey

#endif
