#ifndef RAMSEY_GRAPH_HPP
#define RAMSEY_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ramsey {

struct graph_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown by the graph6 / edge-list parsers; offset is the byte where parsing failed.
struct parse_error : graph_error {
    parse_error(const std::string& what, std::size_t offset_)
        : graph_error(what + " (byte " + std::to_string(offset_) + ")"), offset(offset_) {}
    std::size_t offset;
};

constexpr int kMaxVertices = 512;

/// Undirected simple graph over dense 0-indexed vertices, adjacency as fixed-width
/// bit rows. Immutable after construction; cheap to copy, safe to share across threads.
class Graph {
public:
    Graph() = default;

    /// Duplicate edges collapse silently. Throws graph_error on out-of-range
    /// endpoints or self-loops, naming the offending pair.
    static Graph from_edges(int vertex_count, std::span<const std::pair<int, int>> edges);
    static Graph from_edges(int vertex_count,
                            std::initializer_list<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int row_words() const { return words_; }

    bool has_edge(int u, int v) const {
        return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }
    std::span<const std::uint64_t> row(int v) const {
        return {bits_.data() + static_cast<std::size_t>(v) * words_,
                static_cast<std::size_t>(words_)};
    }

    int degree(int v) const;
    long long edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    Graph complement() const;
    /// Vertices of s are relabeled 0..|s|-1 in ascending original order.
    Graph induced(std::span<const int> s) const;

    /// (degree sequence sorted descending, minimum degree). Min degree of the
    /// empty graph is reported as 0.
    std::pair<std::vector<int>, int> degree_stats() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }

    /// Internal consistency: symmetry and irreflexivity. Cheap; used in tests
    /// and after deserialization.
    bool check_invariants() const;

private:
    friend Graph parse_graph6(std::string_view, std::size_t*);
    friend class GraphBuilder;
    explicit Graph(int n);
    void set_edge(int u, int v);

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Builder used by generators that add edges incrementally before freezing.
class GraphBuilder {
public:
    explicit GraphBuilder(int n) : g_(n) {}
    void add_edge(int u, int v) { g_.set_edge(u, v); }
    bool has_edge(int u, int v) const { return g_.has_edge(u, v); }
    Graph build() && { return std::move(g_); }

private:
    Graph g_;
};

// graph6 text format, bit-exact per the standard specification.
std::string to_graph6(const Graph& g);
Graph parse_graph6(std::string_view text, std::size_t* consumed = nullptr);

// Newline-separated multi-graph files.
std::vector<Graph> read_graph6_stream(std::istream& in);

// Edge-list interchange format: "p <n> <m>" header, then m lines "e <u> <v>"
// with 0-indexed endpoints.
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);

/// Reads a graph from a file, auto-detecting graph6 vs edge-list by the header.
Graph read_graph_file(const std::string& path);

}  // namespace ramsey

#endif
