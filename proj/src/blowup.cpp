#include "ramsey/blowup.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

namespace ramsey {

namespace {

int pair_rank(int i, int j) {  // rank of block pair (i<j) among the 10
    if (i > j) std::swap(i, j);
    static constexpr int base[5] = {0, 4, 7, 9, 10};
    return base[i] + (j - i - 1);
}

}  // namespace

void DecoratedQuotient::validate() const {
    std::array<std::array<bool, 4>, 5> used{};
    std::set<std::pair<GatewayRef, GatewayRef>> seen;
    for (int b = 0; b < 5; ++b)
        if (gateway_counts[b] < 0 || gateway_counts[b] > 4)
            throw structure_error("block " + std::to_string(b + 1) + " has " +
                                  std::to_string(gateway_counts[b]) +
                                  " gateways (limit 4)");
    for (auto [a, b] : external_edges) {
        for (auto e : {a, b}) {
            if (e.block < 0 || e.block >= 5 || e.gateway < 0 ||
                e.gateway >= gateway_counts[e.block])
                throw structure_error("external edge endpoint out of range");
        }
        if (a.block == b.block)
            throw structure_error("external edge inside block " +
                                  std::to_string(a.block + 1));
        auto key = std::minmax(a, b);
        if (!seen.insert({key.first, key.second}).second)
            throw structure_error("duplicate external edge");
        used[a.block][a.gateway] = true;
        used[b.block][b.gateway] = true;
    }
    for (int b = 0; b < 5; ++b)
        for (int g = 0; g < gateway_counts[b]; ++g)
            if (!used[b][g])
                throw structure_error("gateway " + std::to_string(b + 1) + "." +
                                      std::string(1, static_cast<char>('a' + g)) +
                                      " has no external edge");
}

bool DecoratedQuotient::is_type1() const {
    return std::all_of(gateway_counts.begin(), gateway_counts.end(),
                       [](int c) { return c <= 1; });
}

int DecoratedQuotient::block_pair_mask() const {
    int mask = 0;
    for (auto [a, b] : external_edges) mask |= 1 << pair_rank(a.block, b.block);
    return mask;
}

Graph build_blowup(const DecoratedQuotient& dq, int n) {
    if (n < 6) throw structure_error("blow-up needs n >= 6, got " + std::to_string(n));
    dq.validate();
    const int bs = n - 1;
    for (int b = 0; b < 5; ++b)
        if (dq.gateway_counts[b] > bs)
            throw structure_error("block " + std::to_string(b + 1) + " has more gateways than " +
                                  std::to_string(bs) + " vertices");
    GraphBuilder gb(5 * bs);
    for (int b = 0; b < 5; ++b)
        for (int i = 0; i < bs; ++i)
            for (int j = i + 1; j < bs; ++j) gb.add_edge(b * bs + i, b * bs + j);
    for (auto [a, b] : dq.external_edges)
        gb.add_edge(a.block * bs + a.gateway, b.block * bs + b.gateway);
    return std::move(gb).build();
}

// ------------------------------------------------------- gateway multigraph

namespace {

struct GwGraph {
    int node_count = 0;
    std::array<int, 20> block_of{};            // node -> block
    std::array<std::uint32_t, 20> virt{};      // virtual adjacency (same block)
    std::array<std::uint32_t, 20> ext{};       // external adjacency

    explicit GwGraph(const DecoratedQuotient& dq) {
        std::array<std::array<int, 4>, 5> id{};
        for (int b = 0; b < 5; ++b)
            for (int g = 0; g < dq.gateway_counts[b]; ++g) {
                id[b][g] = node_count;
                block_of[node_count] = b;
                ++node_count;
            }
        for (int b = 0; b < 5; ++b)
            for (int g = 0; g < dq.gateway_counts[b]; ++g)
                for (int h = g + 1; h < dq.gateway_counts[b]; ++h) {
                    virt[id[b][g]] |= 1u << id[b][h];
                    virt[id[b][h]] |= 1u << id[b][g];
                }
        for (auto [a, c] : dq.external_edges) {
            int u = id[a.block][a.gateway], v = id[c.block][c.gateway];
            ext[u] |= 1u << v;
            ext[v] |= 1u << u;
        }
    }
};

template <typename Fn>
struct CycleEnumerator {
    const GwGraph& gw;
    Fn& fn;
    int anchor = 0;
    std::array<int, 21> path{};
    std::array<bool, 21> edge_virtual{};  // kind of edge entering path[i]
    int depth = 0;                        // path[0..depth] are on the stack
    std::uint32_t used = 0;
    bool stopped = false;

    CycleEnumerator(const GwGraph& g, Fn& f) : gw(g), fn(f) {}

    void emit() {
        GwCycleSummary s;
        std::array<int, 5> vb{}, gwb{};
        int len = depth + 1;
        for (int i = 0; i < len; ++i) {
            ++gwb[gw.block_of[path[i]]];
            bool is_virtual = (i == 0) ? edge_virtual[len]  // closing edge kind stored at [len]
                                       : edge_virtual[i];
            if (is_virtual) {
                ++s.virtual_count;
                ++vb[gw.block_of[path[i == 0 ? len - 1 : i - 1]]];
            } else {
                ++s.external;
            }
        }
        for (int b = 0; b < 5; ++b)
            if (vb[b] > 0) {
                ++s.virtual_blocks;
                s.cap_const += vb[b] - gwb[b];
            }
        if (!fn(s)) stopped = true;
    }

    void dfs(int cur) {
        std::uint32_t nbs[2] = {gw.ext[cur], gw.virt[cur]};
        for (int kind = 0; kind < 2 && !stopped; ++kind) {
            std::uint32_t m = nbs[kind];
            while (m && !stopped) {
                int v = std::countr_zero(m);
                m &= m - 1;
                if (v == anchor) {
                    if (depth >= 2 && path[1] < path[depth]) {
                        edge_virtual[depth + 1] = (kind == 1);
                        emit();
                    }
                    continue;
                }
                if (v < anchor || (used >> v) & 1) continue;
                used |= 1u << v;
                ++depth;
                path[depth] = v;
                edge_virtual[depth] = (kind == 1);
                dfs(v);
                --depth;
                used &= ~(1u << v);
            }
        }
    }

    // true when every cycle was visited, false when fn stopped the walk
    bool run() {
        for (anchor = 0; anchor < gw.node_count && !stopped; ++anchor) {
            used = 1u << anchor;
            depth = 0;
            path[0] = anchor;
            dfs(anchor);
        }
        return !stopped;
    }
};

}  // namespace

std::vector<GwCycleSummary> gateway_cycle_summaries(const DecoratedQuotient& dq) {
    std::vector<GwCycleSummary> out;
    auto collect = [&](const GwCycleSummary& s) {
        out.push_back(s);
        return true;
    };
    GwGraph gw(dq);
    CycleEnumerator<decltype(collect)> en(gw, collect);
    en.run();
    return out;
}

bool for_each_gateway_cycle(const DecoratedQuotient& dq,
                            const std::function<bool(const GwCycleSummary&)>& fn) {
    GwGraph gw(dq);
    CycleEnumerator<const std::function<bool(const GwCycleSummary&)>> en(gw, fn);
    return en.run();
}

bool CycleLengthSet::mixed_contains(int len) const {
    for (auto [lo, hi] : mixed)
        if (lo <= len && len <= hi) return true;
    return false;
}

CycleLengthSet mixed_cycle_length_set(const DecoratedQuotient& dq, int n) {
    CycleLengthSet out;
    out.intra_max = n >= 4 ? n - 1 : 0;
    std::vector<std::pair<int, int>> intervals;
    for (const auto& c : gateway_cycle_summaries(dq)) {
        if (c.virtual_count == 0) {
            out.pure_external.insert(c.external);
        } else if (c.external > 0) {
            intervals.emplace_back(c.external + c.virtual_count,
                                   c.external + c.cap_const + c.virtual_blocks * (n - 1));
        }
    }
    std::sort(intervals.begin(), intervals.end());
    for (auto [lo, hi] : intervals) {
        if (!out.mixed.empty() && lo <= out.mixed.back().second + 1)
            out.mixed.back().second = std::max(out.mixed.back().second, hi);
        else
            out.mixed.emplace_back(lo, hi);
    }
    return out;
}

bool is_cn_free_structural(const DecoratedQuotient& dq, int n) {
    if (n < 6) throw structure_error("structural check needs n >= 6");
    GwGraph gw(dq);
    auto until_hit = [&](const GwCycleSummary& c) { return !c.contains(n); };
    CycleEnumerator<decltype(until_hit)> en(gw, until_hit);
    return en.run();
}

// ------------------------------------------------------- structure recovery

namespace {

struct PartitionSearch {
    const Graph& g;
    int bs;  // block size n-1
    std::vector<std::vector<int>> blocks;
    std::vector<char> assigned;

    PartitionSearch(const Graph& graph, int block_size)
        : g(graph), bs(block_size), assigned(graph.vertex_count(), 0) {}

    bool grow(std::vector<int>& clique, std::vector<int>& cand, std::size_t from) {
        if (static_cast<int>(clique.size()) == bs) {
            blocks.push_back(clique);
            for (int v : clique) assigned[v] = 1;
            if (static_cast<int>(blocks.size()) == 5 || cover())
                return true;
            for (int v : clique) assigned[v] = 0;
            blocks.pop_back();
            return false;
        }
        for (std::size_t i = from; i < cand.size(); ++i) {
            int u = cand[i];
            if (static_cast<int>(clique.size() + cand.size() - i) < bs) return false;
            bool ok = true;
            for (int w : clique)
                if (!g.has_edge(u, w)) { ok = false; break; }
            if (!ok) continue;
            clique.push_back(u);
            if (grow(clique, cand, i + 1)) return true;
            clique.pop_back();
        }
        return false;
    }

    bool cover() {
        if (static_cast<int>(blocks.size()) == 5) return true;
        int v = -1;
        for (int u = 0; u < g.vertex_count(); ++u)
            if (!assigned[u]) { v = u; break; }
        std::vector<int> cand;
        for (int u = v + 1; u < g.vertex_count(); ++u)
            if (!assigned[u] && g.has_edge(v, u)) cand.push_back(u);
        if (static_cast<int>(cand.size()) < bs - 1) return false;
        std::vector<int> clique{v};
        return grow(clique, cand, 0);
    }
};

}  // namespace

DecoratedQuotient recover_structure(const Graph& g, int n) {
    if (n < 6) throw structure_error("recover_structure needs n >= 6");
    const int bs = n - 1;
    if (g.vertex_count() != 5 * bs)
        throw structure_error("not a blow-up graph: order " +
                              std::to_string(g.vertex_count()) + " != 5(n-1) = " +
                              std::to_string(5 * bs));
    PartitionSearch ps(g, bs);
    if (!ps.cover())
        throw structure_error("not a blow-up graph: no partition into 5 K_" +
                              std::to_string(bs));
    auto blocks = ps.blocks;  // each sorted ascending by construction
    std::sort(blocks.begin(), blocks.end());
    std::vector<int> block_of(g.vertex_count()), pos_in_block(g.vertex_count());
    for (int b = 0; b < 5; ++b)
        for (std::size_t i = 0; i < blocks[b].size(); ++i) {
            block_of[blocks[b][i]] = b;
            pos_in_block[blocks[b][i]] = static_cast<int>(i);
        }
    // gateways: block vertices with external adjacency, in vertex order
    std::map<int, int> gateway_id;  // vertex -> per-block gateway index
    DecoratedQuotient dq;
    std::vector<std::pair<int, int>> ext;
    for (auto [u, v] : g.edges())
        if (block_of[u] != block_of[v]) ext.emplace_back(u, v);
    std::vector<std::vector<int>> gws(5);
    for (auto [u, v] : ext) {
        gws[block_of[u]].push_back(u);
        gws[block_of[v]].push_back(v);
    }
    for (int b = 0; b < 5; ++b) {
        auto& vs = gws[b];
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        if (static_cast<int>(vs.size()) > 4)
            throw structure_error("not a blow-up graph: block " + std::to_string(b + 1) +
                                  " has " + std::to_string(vs.size()) + " gateways");
        dq.gateway_counts[b] = static_cast<int>(vs.size());
        for (std::size_t i = 0; i < vs.size(); ++i) gateway_id[vs[i]] = static_cast<int>(i);
    }
    for (auto [u, v] : ext) {
        GatewayRef a{block_of[u], gateway_id[u]};
        GatewayRef b{block_of[v], gateway_id[v]};
        if (b < a) std::swap(a, b);
        dq.external_edges.emplace_back(a, b);
    }
    std::sort(dq.external_edges.begin(), dq.external_edges.end());
    dq.validate();
    return dq;
}

// ------------------------------------------------------- canonical encoding

namespace {

using Encoding = std::vector<std::uint8_t>;

Encoding encode(const std::array<int, 5>& gwc,
                std::vector<std::array<std::uint8_t, 4>> edges) {
    std::sort(edges.begin(), edges.end());
    Encoding out;
    out.reserve(5 + edges.size() * 4);
    for (int b = 0; b < 5; ++b) out.push_back(static_cast<std::uint8_t>(gwc[b]));
    for (const auto& e : edges) out.insert(out.end(), e.begin(), e.end());
    return out;
}

// For a fixed block permutation, order each block's gateways by iteratively
// refined profiles; enumerate only permutations within residual tie groups.
struct GatewayOrders {
    const DecoratedQuotient& dq;
    const std::array<int, 5>& perm;  // old block -> new block
    std::array<std::vector<int>, 5> rank;        // per old block: gateway -> rank
    std::array<std::vector<std::vector<int>>, 5> ties;  // groups of gateways sharing a rank

    GatewayOrders(const DecoratedQuotient& q, const std::array<int, 5>& p) : dq(q), perm(p) {
        for (int b = 0; b < 5; ++b) rank[b].assign(dq.gateway_counts[b], 0);
        for (int round = 0; round < 4; ++round) {
            bool changed = false;
            for (int b = 0; b < 5; ++b) {
                int cnt = dq.gateway_counts[b];
                if (cnt == 0) continue;
                std::vector<std::pair<std::vector<int>, int>> keys(cnt);
                for (int gidx = 0; gidx < cnt; ++gidx) keys[gidx] = {{rank[b][gidx]}, gidx};
                for (auto [a, c] : dq.external_edges) {
                    auto touch = [&](GatewayRef mine, GatewayRef other) {
                        if (mine.block != b) return;
                        keys[mine.gateway].first.push_back(
                            perm[other.block] * 64 + rank[other.block][other.gateway]);
                    };
                    touch(a, c);
                    touch(c, a);
                }
                for (auto& k : keys) std::sort(k.first.begin() + 1, k.first.end());
                auto sorted = keys;
                std::sort(sorted.begin(), sorted.end());
                int next_rank = 0;
                for (int i = 0; i < cnt; ++i) {
                    if (i > 0 && sorted[i].first != sorted[i - 1].first) ++next_rank;
                    if (rank[b][sorted[i].second] != next_rank) changed = true;
                    rank[b][sorted[i].second] = next_rank;
                }
            }
            if (!changed) break;
        }
        for (int b = 0; b < 5; ++b) {
            std::map<int, std::vector<int>> by_rank;
            for (int gidx = 0; gidx < dq.gateway_counts[b]; ++gidx)
                by_rank[rank[b][gidx]].push_back(gidx);
            for (auto& [r, group] : by_rank) ties[b].push_back(group);
        }
    }

    // Visit every gateway numbering compatible with the refined ranks.
    template <typename F>
    void for_each_numbering(F&& f) {
        std::array<std::vector<int>, 5> numbering;
        for (int b = 0; b < 5; ++b) numbering[b].assign(dq.gateway_counts[b], 0);
        rec(0, 0, numbering, f);
    }

    template <typename F>
    void rec(int b, std::size_t gi, std::array<std::vector<int>, 5>& numbering, F&& f) {
        if (b == 5) {
            f(numbering);
            return;
        }
        if (gi == ties[b].size()) {
            rec(b + 1, 0, numbering, f);
            return;
        }
        auto group = ties[b][gi];  // by-value copy; permuted in place
        int base = 0;
        for (std::size_t k = 0; k < gi; ++k) base += static_cast<int>(ties[b][k].size());
        std::sort(group.begin(), group.end());
        do {
            for (std::size_t i = 0; i < group.size(); ++i)
                numbering[b][group[i]] = base + static_cast<int>(i);
            rec(b, gi + 1, numbering, f);
        } while (std::next_permutation(group.begin(), group.end()));
    }
};

}  // namespace

std::vector<std::uint8_t> canonical_decorated(const DecoratedQuotient& dq) {
    dq.validate();
    std::array<int, 5> ident{0, 1, 2, 3, 4};
    Encoding best;
    std::array<int, 5> order = ident;
    std::sort(order.begin(), order.end());
    do {
        std::array<int, 5> perm{};  // old block -> new block
        for (int b = 0; b < 5; ++b) perm[order[b]] = b;
        std::array<int, 5> gwc{};
        for (int b = 0; b < 5; ++b) gwc[perm[b]] = dq.gateway_counts[b];
        GatewayOrders orders(dq, perm);
        orders.for_each_numbering([&](const std::array<std::vector<int>, 5>& num) {
            std::vector<std::array<std::uint8_t, 4>> edges;
            edges.reserve(dq.external_edges.size());
            for (auto [a, c] : dq.external_edges) {
                std::array<std::uint8_t, 4> e1{
                    static_cast<std::uint8_t>(perm[a.block]),
                    static_cast<std::uint8_t>(num[a.block][a.gateway]),
                    static_cast<std::uint8_t>(perm[c.block]),
                    static_cast<std::uint8_t>(num[c.block][c.gateway])};
                if (e1[0] > e1[2] || (e1[0] == e1[2] && e1[1] > e1[3]))
                    e1 = {e1[2], e1[3], e1[0], e1[1]};
                edges.push_back(e1);
            }
            Encoding enc = encode(gwc, std::move(edges));
            if (best.empty() || enc < best) best = std::move(enc);
        });
    } while (std::next_permutation(order.begin(), order.end()));
    if (best.empty()) best = encode({0, 0, 0, 0, 0}, {});
    return best;
}

DecoratedQuotient canonical_form(const DecoratedQuotient& dq) {
    auto enc = canonical_decorated(dq);
    DecoratedQuotient out;
    for (int b = 0; b < 5; ++b) out.gateway_counts[b] = enc[b];
    for (std::size_t i = 5; i + 3 < enc.size(); i += 4)
        out.external_edges.push_back({GatewayRef{enc[i], enc[i + 1]},
                                      GatewayRef{enc[i + 2], enc[i + 3]}});
    out.validate();
    return out;
}

// ------------------------------------------------------- text form

std::string decorated_to_text(const DecoratedQuotient& dq) {
    std::ostringstream out;
    out << "blocks=5; gw=[";
    for (int b = 0; b < 5; ++b) out << (b ? "," : "") << dq.gateway_counts[b];
    out << "]; edges=";
    auto edges = dq.external_edges;
    std::sort(edges.begin(), edges.end());
    bool first = true;
    for (auto [a, b] : edges) {
        if (!first) out << ',';
        first = false;
        out << '(' << a.block + 1 << '.' << static_cast<char>('a' + a.gateway) << '-'
            << b.block + 1 << '.' << static_cast<char>('a' + b.gateway) << ')';
    }
    return out.str();
}

DecoratedQuotient decorated_from_text(std::string_view text) {
    DecoratedQuotient dq;
    auto bad = [&](const char* why) {
        throw structure_error(std::string("decorated quotient text: ") + why);
    };
    auto gw_pos = text.find("gw=[");
    auto edges_pos = text.find("edges=");
    if (text.find("blocks=5") == std::string_view::npos || gw_pos == std::string_view::npos ||
        edges_pos == std::string_view::npos)
        bad("expected \"blocks=5; gw=[...]; edges=...\"");
    std::string_view gws = text.substr(gw_pos + 4);
    for (int b = 0; b < 5; ++b) {
        int val = -1;
        auto res = std::from_chars(gws.data(), gws.data() + gws.size(), val);
        if (res.ec != std::errc{}) bad("bad gateway count");
        dq.gateway_counts[b] = val;
        gws.remove_prefix(static_cast<std::size_t>(res.ptr - gws.data()));
        if (!gws.empty()) gws.remove_prefix(1);  // ',' or ']'
    }
    std::string_view es = text.substr(edges_pos + 6);
    while (!es.empty()) {
        if (es.front() == ',' || es.front() == ' ') {
            es.remove_prefix(1);
            continue;
        }
        if (es.front() != '(') break;
        es.remove_prefix(1);
        auto close = es.find(')');
        if (close == std::string_view::npos) bad("unterminated edge");
        std::string_view e = es.substr(0, close);
        es.remove_prefix(close + 1);
        auto dash = e.find('-');
        if (dash == std::string_view::npos) bad("edge missing '-'");
        auto parse_ref = [&](std::string_view s) {
            auto dot = s.find('.');
            if (dot == std::string_view::npos || dot + 1 >= s.size()) bad("edge endpoint");
            int blk = 0;
            auto res = std::from_chars(s.data(), s.data() + dot, blk);
            if (res.ec != std::errc{} || blk < 1 || blk > 5) bad("block number");
            char c = s[dot + 1];
            if (c < 'a' || c > 'z') bad("gateway letter");
            return GatewayRef{blk - 1, c - 'a'};
        };
        dq.external_edges.emplace_back(parse_ref(e.substr(0, dash)),
                                       parse_ref(e.substr(dash + 1)));
    }
    dq.validate();
    return dq;
}

}  // namespace ramsey
