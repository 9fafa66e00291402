#include "ramsey/lemma_lab.hpp"

#include <algorithm>
#include <sstream>

namespace ramsey {

void SeparationSpec::validate() const {
    if (L < 3) throw graph_error("separation spec: cycle length must be >= 3");
    if (path_lengths.empty()) throw graph_error("separation spec: empty path length set");
    for (int p : path_lengths)
        if (p < 1) throw graph_error("separation spec: path length < 1");
}

std::set<int> forbidden_arcs(const SeparationSpec& spec) {
    spec.validate();
    std::set<int> arcs;
    for (int p : spec.path_lengths) {
        int a = spec.n - p - 2;
        if (a >= 1 && a <= spec.L - 1) arcs.insert(a);
    }
    return arcs;
}

std::vector<AnchorTriple> enumerate_anchor_triples(int L, int min_gap) {
    if (L < 3 * min_gap)
        throw graph_error("anchor triples: need L >= 3*min_gap");
    std::vector<AnchorTriple> out;
    for (int a = min_gap; 3 * a <= L; ++a)
        for (int b = a; a + 2 * b <= L; ++b) {
            int c = L - a - b;
            if (c < b) break;
            out.push_back({{a, b, c}, {1, 1 + a, 1 + a + b}});
        }
    return out;
}

std::set<int> allowed_positions(const SeparationSpec& spec,
                                const std::array<int, 3>& anchors) {
    auto forbidden = forbidden_arcs(spec);
    std::set<int> out;
    for (int v = 1; v <= spec.L; ++v) {
        if (std::find(anchors.begin(), anchors.end(), v) != anchors.end()) continue;
        bool ok = true;
        for (int w : anchors) {
            int arc1 = ((v - w) % spec.L + spec.L) % spec.L;
            int arc2 = spec.L - arc1;
            if (forbidden.count(arc1) || forbidden.count(arc2)) {
                ok = false;
                break;
            }
        }
        if (ok) out.insert(v);
    }
    return out;
}

std::vector<ExclusionWitness> exclusion_witnesses(const SeparationSpec& spec,
                                                  const std::array<int, 3>& anchors) {
    auto allowed = allowed_positions(spec, anchors);
    std::vector<ExclusionWitness> out;
    for (int v = 1; v <= spec.L; ++v) {
        if (allowed.count(v)) continue;
        if (std::find(anchors.begin(), anchors.end(), v) != anchors.end()) continue;
        bool found = false;
        for (int w : anchors) {
            for (int arc : {((v - w) % spec.L + spec.L) % spec.L,
                            ((w - v) % spec.L + spec.L) % spec.L}) {
                for (int p : spec.path_lengths)
                    if (arc + p + 2 == spec.n) {
                        out.push_back({v, w, arc, p});
                        found = true;
                        break;
                    }
                if (found) break;
            }
            if (found) break;
        }
        if (!found)
            throw graph_error("excluded position " + std::to_string(v) +
                              " has no exclusion witness");
    }
    return out;
}

namespace {

SeparationSpec spec_for(TableId id) {
    switch (id) {
        case TableId::Table1: return {14, 15, {3, 4, 5}};
        case TableId::Table2: return {14, 15, {2, 3, 4}};
        case TableId::Case16: return {15, 16, {2, 3, 4}};
    }
    throw graph_error("unknown table id");
}

}  // namespace

std::vector<TableRow> reproduce_table(TableId id) {
    SeparationSpec spec = spec_for(id);
    std::vector<TableRow> rows;
    for (const auto& t : enumerate_anchor_triples(spec.L, 2))
        rows.push_back({t.positions, allowed_positions(spec, t.positions)});
    return rows;
}

std::string render_table(TableId id) {
    const char* title = id == TableId::Table1   ? "Table 1 (L=14, n=15, P={3,4,5})"
                        : id == TableId::Table2 ? "Table 2 (L=14, n=15, P={2,3,4})"
                                                : "Case n=16 (L=15, P={2,3,4})";
    std::ostringstream out;
    out << title << '\n';
    auto set_str = [](const auto& xs, auto&& fmt) {
        std::ostringstream s;
        bool first = true;
        for (auto x : xs) {
            s << (first ? "" : ",") << fmt(x);
            first = false;
        }
        return s.str();
    };
    for (const auto& row : reproduce_table(id)) {
        std::string anchors =
            "{" + set_str(row.anchors, [](int v) { return "u" + std::to_string(v); }) + "}";
        std::string allowed =
            row.allowed.empty()
                ? "φ"
                : "{" + set_str(row.allowed, [](int v) { return "u" + std::to_string(v); }) + "}";
        std::string card = row.allowed.empty() ? "= 0"
                                               : "<= " + std::to_string(row.allowed.size());
        out << anchors << " | " << allowed << " | " << card << '\n';
    }
    return out.str();
}

// ------------------------------------------------------------------ lemma 2

Lemma2Report lemma2_predicates(const Graph& g, const CycleWitness& cycle, bool check_d) {
    const int len = static_cast<int>(cycle.vertices.size());
    if (!verify_cycle_witness(g, cycle, len))
        throw graph_error("lemma2_predicates: cycle witness invalid in g");
    Lemma2Report rep;
    std::vector<char> on_cycle(g.vertex_count(), 0);
    for (int v : cycle.vertices) on_cycle[v] = 1;
    std::vector<int> outside;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!on_cycle[v]) outside.push_back(v);
    auto u = [&](int i) {  // cyclic indexing, 0-based
        return cycle.vertices[((i % len) + len) % len];
    };

    // neighbor index sets on the cycle per outside vertex
    std::vector<std::vector<int>> hits(outside.size());
    for (std::size_t xi = 0; xi < outside.size(); ++xi)
        for (int i = 0; i < len; ++i)
            if (g.has_edge(outside[xi], u(i))) hits[xi].push_back(i);

    for (std::size_t xi = 0; xi < outside.size(); ++xi) {
        int x = outside[xi];
        const auto& h = hits[xi];
        for (std::size_t a = 0; a < h.size(); ++a) {
            int i = h[a];
            if (g.has_edge(x, u(i + 1))) {
                rep.a = false;
                rep.violations.push_back({"a", {x, u(i), u(i + 1)},
                                          "outside vertex adjacent to consecutive cycle vertices"});
            }
            for (std::size_t b2 = 0; b2 < h.size(); ++b2) {
                if (a == b2) continue;
                int j = h[b2];
                if (g.has_edge(u(i + 1), u(j + 1)) && i < j) {
                    rep.b = false;
                    rep.violations.push_back({"b", {x, u(i), u(j), u(i + 1), u(j + 1)},
                                              "successors of two neighbors are adjacent"});
                }
                // (c): ordered pair (i, j); x' adjacent to u_{i+1} and u_{j+2}
                for (std::size_t yi = 0; yi < outside.size(); ++yi) {
                    if (g.has_edge(outside[yi], u(i + 1)) && g.has_edge(outside[yi], u(j + 2))) {
                        rep.c = false;
                        rep.violations.push_back(
                            {"c", {x, u(i), u(j), outside[yi], u(i + 1), u(j + 2)},
                             "second outside vertex adjacent to u_{i+1} and u_{j+2}"});
                    }
                }
            }
        }
    }

    // (d): m = alpha(g)+1 must satisfy m <= (n+2)/2 where n = len+1
    if (!check_d) return rep;
    const int n = len + 1;
    const int m = independence_number(g).alpha + 1;
    if (2 * m <= n + 2) {
        rep.d_applicable = true;
        // enumerate independent (m-1)-subsets of the outside set
        std::vector<int> cur;
        auto rec = [&](auto&& self, std::size_t from) -> void {
            if (static_cast<int>(cur.size()) == m - 1) {
                for (int x : cur) {
                    int cnt = 0;
                    for (int i = 0; i < len; ++i)
                        if (g.has_edge(x, u(i))) ++cnt;
                    if (cnt >= m - 2) {
                        rep.d = false;
                        rep.violations.push_back(
                            {"d", {x, cnt},
                             "independent-set member adjacent to m-2 or more cycle vertices"});
                    }
                }
                return;
            }
            for (std::size_t i = from; i < outside.size(); ++i) {
                bool ind = true;
                for (int y : cur)
                    if (g.has_edge(outside[i], y)) { ind = false; break; }
                if (!ind) continue;
                cur.push_back(outside[i]);
                self(self, i + 1);
                cur.pop_back();
                if (!rep.d) return;  // first counterexample is enough
            }
        };
        rec(rec, 0);
    }
    return rep;
}

// ------------------------------------------------------------------ misc

int ramsey_cycle_value(int n, int m) {
    bool ok = (m == 6 && n >= 6) || (m >= 3 && m <= 5 && n >= m && !(n == 3 && m == 3));
    if (!ok)
        throw graph_error("unsupported Ramsey value r(C_" + std::to_string(n) + ",K_" +
                          std::to_string(m) + ")");
    return (n - 1) * (m - 1) + 1;
}

bool min_degree_check(const Graph& g, int n, int m) {
    auto [seq, min_deg] = g.degree_stats();
    return min_deg >= g.vertex_count() - ramsey_cycle_value(n, m);
}

namespace {

Graph matching_graph(int vertices, int matching_size) {
    GraphBuilder b(vertices);
    for (int k = 0; k < matching_size; ++k) b.add_edge(2 * k, 2 * k + 1);
    return std::move(b).build();
}

}  // namespace

P3K6Report p3_k6_facts() {
    P3K6Report rep;
    rep.eleven_all_alpha_ge_6 = true;
    for (int k = 0; k <= 5; ++k) {
        int alpha = independence_number(matching_graph(11, k)).alpha;
        rep.alphas_on_11.emplace_back(k, alpha);
        if (alpha < 6) rep.eleven_all_alpha_ge_6 = false;
    }
    int qualifying = 0;
    for (int k = 0; k <= 5; ++k) {
        int alpha = independence_number(matching_graph(10, k)).alpha;
        rep.alphas_on_10.emplace_back(k, alpha);
        if (alpha <= 5) {
            ++qualifying;
            rep.ten_unique_is_5k2 = (k == 5);
        }
    }
    if (qualifying != 1) rep.ten_unique_is_5k2 = false;
    rep.alpha_5k2 = independence_number(matching_graph(10, 5)).alpha;
    return rep;
}

// ------------------------------------------------------------------ fixtures

Graph scenario_graph(ScenarioGraph which) {
    switch (which) {
        case ScenarioGraph::K4:
            // y1 = 0 inside a K4
            return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
        case ScenarioGraph::K: {
            // y1=0, y2=1; path x(2)-y(3)-z(4)-w(5); y1~{x,y}, y2~{z,w}
            return Graph::from_edges(
                6, {{2, 3}, {3, 4}, {4, 5}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
        }
        case ScenarioGraph::KPrime: {
            // y1=0, y2=1; path x(2)-y(3)-z(4); y1~{x,y}, y2~{y,z}
            return Graph::from_edges(5, {{2, 3}, {3, 4}, {0, 2}, {0, 3}, {1, 3}, {1, 4}});
        }
        case ScenarioGraph::L: {
            // y1=0, y2=1, y3=2 independent, each joined to all of a 5K2 (3..12)
            GraphBuilder b(13);
            for (int k = 0; k < 5; ++k) b.add_edge(3 + 2 * k, 4 + 2 * k);
            for (int y = 0; y < 3; ++y)
                for (int v = 3; v < 13; ++v) b.add_edge(y, v);
            return std::move(b).build();
        }
    }
    throw graph_error("unknown scenario graph");
}

std::set<int> path_length_set(const Graph& g, int y1, int y2) {
    std::set<int> lengths;
    std::vector<char> used(g.vertex_count(), 0);
    used[y1] = 1;
    auto rec = [&](auto&& self, int cur, int len) -> void {
        if (cur == y2) {
            lengths.insert(len);
            return;
        }
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (used[v] || !g.has_edge(cur, v)) continue;
            used[v] = 1;
            self(self, v, len + 1);
            used[v] = 0;
        }
    };
    rec(rec, y1, 0);
    return lengths;
}

}  // namespace ramsey
