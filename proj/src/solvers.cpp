#include "ramsey/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <numeric>

namespace ramsey {

namespace {

// Flat bitset over words; all solver kernels work on these rows.
struct BitRows {
    int n = 0;
    int words = 0;
    std::vector<std::uint64_t> bits;

    explicit BitRows(const Graph& g) : n(g.vertex_count()), words(g.row_words()) {
        if (words == 0) words = 1;
        bits.assign(static_cast<std::size_t>(n) * words, 0);
        for (int v = 0; v < n; ++v) {
            auto r = g.row(v);
            std::copy(r.begin(), r.end(), bits.begin() + static_cast<std::size_t>(v) * words);
        }
    }
    const std::uint64_t* row(int v) const { return bits.data() + static_cast<std::size_t>(v) * words; }
};

struct Mask {
    std::vector<std::uint64_t> w;
    explicit Mask(int words) : w(words, 0) {}
    void set(int v) { w[v >> 6] |= 1ull << (v & 63); }
    void clear(int v) { w[v >> 6] &= ~(1ull << (v & 63)); }
    bool test(int v) const { return (w[v >> 6] >> (v & 63)) & 1u; }
    bool empty() const {
        for (auto x : w)
            if (x) return false;
        return true;
    }
    int count() const {
        int c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }
    int first() const {  // -1 when empty
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i]) return static_cast<int>(i * 64 + std::countr_zero(w[i]));
        return -1;
    }
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < w.size(); ++i) {
            std::uint64_t x = w[i];
            while (x) {
                f(static_cast<int>(i * 64 + std::countr_zero(x)));
                x &= x - 1;
            }
        }
    }
    void and_row(const std::uint64_t* r) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] &= r[i];
    }
    void andnot_row(const std::uint64_t* r) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] &= ~r[i];
    }
};

// ------------------------------------------------------------ max clique

// Tomita-style branch and bound: candidates greedily colored each node,
// color number bounds the residual clique size.
struct MaxClique {
    const BitRows& g;
    std::vector<int> best;
    std::vector<int> cur;

    explicit MaxClique(const BitRows& rows) : g(rows) {}

    void expand(Mask cand) {
        // greedy coloring of cand; process vertices in descending color
        std::vector<int> order, colors;
        Mask uncolored = cand;
        int color = 0;
        while (!uncolored.empty()) {
            ++color;
            Mask cls = uncolored;
            while (!cls.empty()) {
                int v = cls.first();
                order.push_back(v);
                colors.push_back(color);
                uncolored.clear(v);
                cls.clear(v);
                cls.andnot_row(g.row(v));
            }
        }
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (cur.size() + colors[i] <= best.size()) return;
            int v = order[i];
            cur.push_back(v);
            Mask next = cand;
            next.and_row(g.row(v));
            // restrict to vertices not yet processed at this level
            for (int j = i; j < static_cast<int>(order.size()); ++j) next.clear(order[j]);
            if (next.empty()) {
                if (cur.size() > best.size()) best = cur;
            } else {
                expand(next);
            }
            cur.pop_back();
            cand.clear(v);
        }
    }

    std::vector<int> run() {
        if (g.n == 0) return {};
        Mask all(g.words);
        for (int v = 0; v < g.n; ++v) all.set(v);
        expand(all);
        return best;
    }
};

}  // namespace

IndependenceResult independence_number(const Graph& g) {
    Graph comp = g.complement();
    BitRows rows(comp);
    MaxClique mc(rows);
    std::vector<int> clique = mc.run();
    std::sort(clique.begin(), clique.end());
    // witness is independent in g by construction; assert via direct bit tests
    for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j)
            if (g.has_edge(clique[i], clique[j]))
                throw graph_error("independence witness verification failed");
    return {static_cast<int>(clique.size()), std::move(clique)};
}

// ------------------------------------------------------------ fixed-length cycle

namespace {

struct CycleSearch {
    const BitRows& g;
    int L;
    int anchor = 0;
    std::vector<int> path;
    Mask used;
    std::vector<std::vector<int>> adj;
    std::vector<int> dist;      // scratch for the reachability prune
    std::vector<int> frontier;  // scratch
    std::vector<int> next_frontier;

    CycleSearch(const BitRows& rows, int len)
        : g(rows), L(len), used(rows.words), adj(rows.n), dist(rows.n) {
        for (int v = 0; v < g.n; ++v) {
            Mask nb(g.words);
            std::memcpy(nb.w.data(), g.row(v), static_cast<std::size_t>(g.words) * 8);
            nb.for_each([&](int u) { adj[v].push_back(u); });
        }
    }

    // From the path endpoint we still need (L - |path|) fresh vertices and then
    // the edge back to the anchor, i.e. a walk of L - |path| + 1 edges. Prune
    // when the anchor is farther than that through unused vertices, or when
    // too few fresh vertices are reachable at all.
    bool prune_ok(int from) {
        const int rem_edges = L - static_cast<int>(path.size()) + 1;
        std::fill(dist.begin(), dist.end(), -1);
        frontier.assign(1, from);
        dist[from] = 0;
        int fresh = 0;
        for (int d = 0; d < rem_edges && !frontier.empty(); ++d) {
            next_frontier.clear();
            for (int v : frontier) {
                for (int u : adj[v]) {
                    if (dist[u] >= 0) continue;
                    if (u != anchor && (u < anchor || used.test(u))) continue;
                    dist[u] = d + 1;
                    next_frontier.push_back(u);
                    if (u != anchor) ++fresh;
                }
            }
            std::swap(frontier, next_frontier);
        }
        if (dist[anchor] < 0 || dist[anchor] > rem_edges) return false;
        return fresh >= rem_edges - 1;
    }

    bool extend() {
        int cur = path.back();
        if (static_cast<int>(path.size()) == L) {
            // close: need edge back to anchor, direction canonical
            return ((g.row(cur)[anchor >> 6] >> (anchor & 63)) & 1u) && path[1] < path.back();
        }
        if (!prune_ok(cur)) return false;
        for (int v : adj[cur]) {
            if (v <= anchor || used.test(v)) continue;
            used.set(v);
            path.push_back(v);
            if (extend()) return true;
            path.pop_back();
            used.clear(v);
        }
        return false;
    }

    std::optional<std::vector<int>> run() {
        for (anchor = 0; anchor <= g.n - L; ++anchor) {
            std::fill(used.w.begin(), used.w.end(), 0);
            used.set(anchor);
            path.assign(1, anchor);
            if (extend()) return path;
        }
        return std::nullopt;
    }
};

}  // namespace

std::optional<CycleWitness> has_cycle_of_length(const Graph& g, int L) {
    if (L < 3) throw graph_error("cycle length " + std::to_string(L) + " out of range (>= 3)");
    if (L > g.vertex_count()) return std::nullopt;
    BitRows rows(g);
    CycleSearch search(rows, L);
    auto found = search.run();
    if (!found) return std::nullopt;
    CycleWitness w{std::move(*found)};
    if (!verify_cycle_witness(g, w, L)) throw graph_error("cycle witness failed re-check");
    return w;
}

bool verify_cycle_witness(const Graph& g, const CycleWitness& w, int L) {
    if (static_cast<int>(w.vertices.size()) != L) return false;
    std::vector<int> sorted = w.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (int i = 0; i < L; ++i) {
        int u = w.vertices[i], v = w.vertices[(i + 1) % L];
        if (u < 0 || u >= g.vertex_count() || !g.has_edge(u, v)) return false;
    }
    return true;
}

// ------------------------------------------------------------ isomorphism

namespace {

// Iterated neighborhood-degree-multiset invariants; stable partition labels.
std::vector<int> refine_invariants(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> inv(n);
    for (int v = 0; v < n; ++v) inv[v] = g.degree(v);
    for (int round = 0; round < 8; ++round) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s;
            s.push_back(inv[v]);
            std::vector<int> nb;
            for (int u = 0; u < n; ++u)
                if (g.has_edge(v, u)) nb.push_back(inv[u]);
            std::sort(nb.begin(), nb.end());
            s.insert(s.end(), nb.begin(), nb.end());
            sig[v] = {std::move(s), v};
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> next(n);
        int label = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sorted[i].first != sorted[i - 1].first) ++label;
            next[sorted[i].second] = label;
        }
        if (next == inv) break;
        inv = std::move(next);
    }
    return inv;
}

struct IsoSearch {
    const Graph& g;
    const Graph& h;
    std::vector<int> inv_g, inv_h;
    std::vector<int> map_gh;   // g vertex -> h vertex or -1
    std::vector<char> used_h;
    std::vector<int> order;    // g vertices, most-constrained first

    IsoSearch(const Graph& a, const Graph& b) : g(a), h(b) {}

    bool feasible(int gv, int hv) {
        if (inv_g[gv] != inv_h[hv]) return false;
        for (int u = 0; u < g.vertex_count(); ++u) {
            if (map_gh[u] < 0) continue;
            if (g.has_edge(gv, u) != h.has_edge(hv, map_gh[u])) return false;
        }
        return true;
    }

    bool rec(std::size_t idx) {
        if (idx == order.size()) return true;
        int gv = order[idx];
        for (int hv = 0; hv < h.vertex_count(); ++hv) {
            if (used_h[hv] || !feasible(gv, hv)) continue;
            map_gh[gv] = hv;
            used_h[hv] = 1;
            if (rec(idx + 1)) return true;
            map_gh[gv] = -1;
            used_h[hv] = 0;
        }
        return false;
    }

    std::optional<std::vector<int>> run() {
        const int n = g.vertex_count();
        if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return std::nullopt;
        inv_g = refine_invariants(g);
        inv_h = refine_invariants(h);
        auto hist = [](const std::vector<int>& v) {
            auto s = v;
            std::sort(s.begin(), s.end());
            return s;
        };
        if (hist(inv_g) != hist(inv_h)) return std::nullopt;
        // most-constrained first: rare invariant classes, then connectedness order
        std::vector<int> freq(n + 1, 0);
        for (int v = 0; v < n; ++v) ++freq[inv_g[v]];
        order.resize(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (freq[inv_g[a]] != freq[inv_g[b]]) return freq[inv_g[a]] < freq[inv_g[b]];
            return a < b;
        });
        // prefer vertices adjacent to already-placed ones (keeps pruning sharp)
        std::vector<int> reordered;
        std::vector<char> taken(n, 0);
        while (reordered.size() < order.size()) {
            int pick = -1;
            for (int v : order) {
                if (taken[v]) continue;
                bool touches = false;
                for (int u : reordered)
                    if (g.has_edge(u, v)) { touches = true; break; }
                if (touches) { pick = v; break; }
            }
            if (pick < 0)
                for (int v : order)
                    if (!taken[v]) { pick = v; break; }
            taken[pick] = 1;
            reordered.push_back(pick);
        }
        order = std::move(reordered);
        map_gh.assign(n, -1);
        used_h.assign(n, 0);
        if (!rec(0)) return std::nullopt;
        // re-verify edge by edge
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (g.has_edge(u, v) != h.has_edge(map_gh[u], map_gh[v]))
                    throw graph_error("isomorphism mapping failed re-check");
        return map_gh;
    }
};

}  // namespace

std::optional<std::vector<int>> are_isomorphic(const Graph& g, const Graph& h) {
    IsoSearch s(g, h);
    return s.run();
}

std::string canonical_small(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 10)
        throw graph_error("canonical_small limited to 10 vertices, got " + std::to_string(n));
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    std::vector<std::pair<int, int>> edges;
    do {
        GraphBuilder b(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (g.has_edge(u, v)) b.add_edge(perm[u], perm[v]);
        std::string enc = to_graph6(std::move(b).build());
        if (best.empty() || enc < best) best = std::move(enc);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (best.empty()) best = to_graph6(g);  // n == 0
    return best;
}

}  // namespace ramsey
