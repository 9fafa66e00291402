#ifndef RAMSEY_LEMMA_LAB_HPP
#define RAMSEY_LEMMA_LAB_HPP

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/solvers.hpp"

namespace ramsey {

/// Cyclic-separation problem: a cycle C of length L inside a C_n-free graph,
/// two outside vertices joined by paths of the lengths in path_lengths.
/// An arc of length a between a neighbor of y1 and a neighbor of y2 closes a
/// cycle of length a + p + 2 (arc + outside path + two spokes).
struct SeparationSpec {
    int L;
    int n;
    std::set<int> path_lengths;

    void validate() const;
};

/// Arc lengths a in [1, L-1] with a + p + 2 = n for some p. Both arcs between
/// two positions are checked against this set by allowed_positions.
std::set<int> forbidden_arcs(const SeparationSpec& spec);

/// 3-subsets of the L-cycle with pairwise cyclic distance >= min_gap, up to
/// rotation and reflection; canonical form is the sorted gap triple (a,b,c),
/// a+b+c = L. Rendered as positions {u_1, u_{1+a}, u_{1+a+b}} (1-indexed).
struct AnchorTriple {
    std::array<int, 3> gaps;       // sorted ascending
    std::array<int, 3> positions;  // {1, 1+a, 1+a+b}
};
std::vector<AnchorTriple> enumerate_anchor_triples(int L, int min_gap);

/// Positions v (1-indexed, v not an anchor) such that no arc between v and any
/// anchor, in either direction, lies in forbidden_arcs(spec).
std::set<int> allowed_positions(const SeparationSpec& spec,
                                const std::array<int, 3>& anchors);

enum class TableId { Table1, Table2, Case16 };

struct TableRow {
    std::array<int, 3> anchors;
    std::set<int> allowed;
};

std::vector<TableRow> reproduce_table(TableId id);
/// Plain text, one row per anchor triple; empty sets render as φ.
std::string render_table(TableId id);

// Soundness/completeness witnesses for allowed_positions, used by tests:
// every excluded position carries (anchor, arc, path length) with a+p+2 = n.
struct ExclusionWitness {
    int position;
    int anchor;
    int arc;
    int path_length;
};
std::vector<ExclusionWitness> exclusion_witnesses(const SeparationSpec& spec,
                                                  const std::array<int, 3>& anchors);

// ------------------------------------------------------------------ lemma 2

struct PredicateViolation {
    std::string which;          // "a", "b", "c" or "d"
    std::vector<int> vertices;  // offending coordinates, see description
    std::string description;
};

/// Checks the four cycle-attachment predicates for a verified (n-1)-cycle:
/// Y = V(g) minus the cycle;
/// (a) no x in Y adjacent to consecutive cycle vertices;
/// (b) x adjacent to u_i,u_j  =>  u_{i+1}u_{j+1} not an edge;
/// (c) x adjacent to u_i,u_j  =>  no x' in Y adjacent to both u_{i+1}, u_{j+2};
/// (d) with alpha(g) = m-1 and m <= (n+2)/2: no member of an (m-1)-element
///     independent subset of Y is adjacent to >= m-2 cycle vertices.
struct Lemma2Report {
    bool a = true, b = true, c = true, d = true;
    bool d_applicable = false;
    std::vector<PredicateViolation> violations;
    bool all_pass() const { return a && b && c && d; }
};

Lemma2Report lemma2_predicates(const Graph& g, const CycleWitness& cycle,
                               bool check_d = true);

// ------------------------------------------------------------------ misc

/// (n-1)(m-1)+1, restricted to the cited validity ranges: m = 6 with n >= 6,
/// or m in {3,4,5} with n >= m (and not (3,3)). Anything else throws.
int ramsey_cycle_value(int n, int m);

/// delta(g) >= |V(g)| - ramsey_cycle_value(n, m). The caller certifies the
/// C_n-freeness / independence preconditions; this is the arithmetic bound.
bool min_degree_check(const Graph& g, int n, int m);

/// Exhaustive verification over P3-free graphs (disjoint unions of edges and
/// isolated vertices, enumerated by matching size):
/// (i) every P3-free graph on 11 vertices has an independent 6-set;
/// (ii) the unique P3-free graph on 10 vertices with alpha <= 5 is 5K2;
/// (iii) alpha(5K2) = 5, witnessing a critical coloring on 10 vertices.
struct P3K6Report {
    bool eleven_all_alpha_ge_6 = false;
    bool ten_unique_is_5k2 = false;
    int alpha_5k2 = 0;
    std::vector<std::pair<int, int>> alphas_on_11;  // (matching size, alpha)
    std::vector<std::pair<int, int>> alphas_on_10;
    bool all_pass() const {
        return eleven_all_alpha_ge_6 && ten_unique_is_5k2 && alpha_5k2 == 5;
    }
};

P3K6Report p3_k6_facts();

// ------------------------------------------------------------------ fixtures

/// The four outside-the-cycle scenario subgraphs. y1 is vertex 0; y2 (when
/// present) is vertex 1. K: x-y-z-w path with y1 on {x,y}, y2 on {z,w}.
/// KPrime: x-y-z path with y1 on {x,y}, y2 on {y,z}. L: 5K2 plus three
/// independent vertices y1,y2,y3 joined to all ten.
enum class ScenarioGraph { K4, K, KPrime, L };

Graph scenario_graph(ScenarioGraph which);

/// Lengths of simple y1-y2 paths (exhaustive enumeration).
std::set<int> path_length_set(const Graph& g, int y1, int y2);

}  // namespace ramsey

#endif
