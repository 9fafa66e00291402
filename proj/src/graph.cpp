#include "ramsey/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>

namespace ramsey {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
    if (n < 0 || n > kMaxVertices)
        throw graph_error("vertex count " + std::to_string(n) + " outside [0, " +
                          std::to_string(kMaxVertices) + "]");
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void Graph::set_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw graph_error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                          ") out of range for " + std::to_string(n_) + " vertices");
    if (u == v)
        throw graph_error("self-loop at vertex " + std::to_string(u));
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= 1ull << (v & 63);
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= 1ull << (u & 63);
}

Graph Graph::from_edges(int vertex_count, std::span<const std::pair<int, int>> edges) {
    Graph g(vertex_count);
    for (auto [u, v] : edges) g.set_edge(u, v);
    return g;
}

Graph Graph::from_edges(int vertex_count,
                        std::initializer_list<std::pair<int, int>> edges) {
    return from_edges(vertex_count, std::span<const std::pair<int, int>>(
                                        edges.begin(), edges.size()));
}

int Graph::degree(int v) const {
    int d = 0;
    for (auto w : row(v)) d += std::popcount(w);
    return d;
}

long long Graph::edge_count() const {
    long long total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

Graph Graph::complement() const {
    Graph g(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!has_edge(u, v)) g.set_edge(u, v);
    return g;
}

Graph Graph::induced(std::span<const int> s) const {
    std::vector<int> verts(s.begin(), s.end());
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (int v : verts)
        if (v < 0 || v >= n_)
            throw graph_error("induced: vertex " + std::to_string(v) + " out of range");
    Graph g(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (has_edge(verts[i], verts[j])) g.set_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

std::pair<std::vector<int>, int> Graph::degree_stats() const {
    std::vector<int> seq(n_);
    for (int v = 0; v < n_; ++v) seq[v] = degree(v);
    std::sort(seq.rbegin(), seq.rend());
    int min_deg = seq.empty() ? 0 : seq.back();
    return {std::move(seq), min_deg};
}

bool Graph::check_invariants() const {
    for (int v = 0; v < n_; ++v) {
        if (has_edge(v, v)) return false;
        auto r = row(v);
        // no stray bits past vertex_count
        for (int b = n_; b < words_ * 64; ++b)
            if ((r[b >> 6] >> (b & 63)) & 1u) return false;
        for (int u = v + 1; u < n_; ++u)
            if (has_edge(v, u) != has_edge(u, v)) return false;
    }
    return true;
}

// ---------------------------------------------------------------- graph6

namespace {

void append_size(std::string& out, int n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        // 63 <= n <= 258047: '~' followed by 18 bits in three 6-bit chunks
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
}

}  // namespace

std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    append_size(out, n);
    int acc = 0, nbits = 0;
    // upper triangle, column-major: column v, rows u < v
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph parse_graph6(std::string_view text, std::size_t* consumed) {
    std::size_t pos = 0;
    auto need = [&](std::size_t k) {
        if (pos + k > text.size())
            throw parse_error("graph6: truncated input", text.size());
    };
    auto sixbits = [&]() {
        need(1);
        unsigned char c = static_cast<unsigned char>(text[pos]);
        if (c < 63 || c > 126)
            throw parse_error("graph6: byte outside printable range 63..126", pos);
        ++pos;
        return static_cast<int>(c) - 63;
    };

    need(1);
    int n;
    if (text[pos] == '~') {
        ++pos;
        need(1);
        if (text[pos] == '~')
            throw parse_error("graph6: 8-byte size header not supported", pos);
        int a = sixbits(), b = sixbits(), c = sixbits();
        n = (a << 12) | (b << 6) | c;
    } else {
        n = sixbits();
    }
    if (n > kMaxVertices)
        throw parse_error("graph6: " + std::to_string(n) + " vertices exceeds cap " +
                          std::to_string(kMaxVertices), 0);

    Graph g(n);
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (nbits == 0) {
                acc = sixbits();
                nbits = 6;
            }
            --nbits;
            if ((acc >> nbits) & 1) g.set_edge(u, v);
        }
    }
    if (consumed) *consumed = pos;
    return g;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
            line.pop_back();
        if (line.empty()) continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

// ---------------------------------------------------------------- edge list

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    auto es = g.edges();
    out << "p " << g.vertex_count() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << "e " << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string tag;
    int n = -1;
    long long m = -1;
    if (!(in >> tag >> n >> m) || tag != "p")
        throw parse_error("edge list: expected header \"p <n> <m>\"", 0);
    std::vector<std::pair<int, int>> edges;
    int u, v;
    while (in >> tag) {
        if (tag != "e")
            throw parse_error("edge list: expected \"e <u> <v>\" line",
                              static_cast<std::size_t>(in.tellg()));
        if (!(in >> u >> v))
            throw parse_error("edge list: malformed edge line",
                              static_cast<std::size_t>(text.size()));
        edges.emplace_back(u, v);
    }
    if (m >= 0 && static_cast<long long>(edges.size()) != m)
        throw parse_error("edge list: header promised " + std::to_string(m) +
                          " edges, found " + std::to_string(edges.size()), text.size());
    return Graph::from_edges(n, edges);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw graph_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw graph_error(path + ": empty file");
    if (text[first] == 'p') return parse_edge_list(text);
    // graph6: first nonempty line
    std::size_t eol = text.find('\n', first);
    std::string_view line(text.data() + first,
                          (eol == std::string::npos ? text.size() : eol) - first);
    while (!line.empty() && (line.back() == '\r')) line.remove_suffix(1);
    return parse_graph6(line);
}

}  // namespace ramsey
