#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace circc {

/// Thrown by the text parsers. `line` is 1-based; 0 means the position
/// is not line-addressable (e.g. JSON input).
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + what_ : what_),
          line(line_) {}
};

using Edge = std::pair<int, int>;

/// Finite simple undirected graph over dense 0-based vertex indices.
///
/// Immutable after construction. Edges are stored canonically (u < v,
/// sorted, duplicates collapsed) and per-vertex neighbor lists are
/// precomputed, so equality is plain member comparison and neighbor
/// scans are O(deg).
class Graph {
public:
    Graph() = default;

    /// Validates endpoints, rejects self-loops, collapses duplicates.
    Graph(int vertex_count, std::vector<Edge> edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    bool has_edge(int u, int v) const;

    bool operator==(const Graph& other) const = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Digraph over the same dense vertex universe. Arcs are ordered pairs,
/// kept sorted and deduplicated; self-arcs are rejected.
class Digraph {
public:
    Digraph() = default;
    Digraph(int vertex_count, std::vector<Edge> arc_list);

    int vertex_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const std::vector<Edge>& arcs() const { return arcs_; }
    const std::vector<int>& successors(int v) const { return out_.at(v); }

    bool operator==(const Digraph& other) const = default;

private:
    int n_ = 0;
    std::vector<Edge> arcs_;
    std::vector<std::vector<int>> out_;
};

/// A graph together with an ordered pair of distinct terminal vertices,
/// used for edge replacement.
struct Gadget {
    Graph graph;
    int terminal_a = 0;
    int terminal_b = 1;

    Gadget(Graph g, int a, int b);
};

/// Where each source vertex landed in a constructed graph.
struct VertexMap {
    std::vector<int> to;

    int operator[](int v) const { return to.at(v); }
    int size() const { return static_cast<int>(to.size()); }
};

struct DisjointUnionResult {
    Graph graph;
    VertexMap first;
    VertexMap second;
};

/// Disjoint union; g1 keeps its indices, g2 is shifted past them.
DisjointUnionResult disjoint_union(const Graph& g1, const Graph& g2);

/// One glued gadget copy: the host edge it replaced and where each
/// gadget vertex landed in the result.
struct GadgetCopy {
    Edge host_edge;
    VertexMap map;
};

struct EdgeReplacementResult {
    Graph graph;
    VertexMap originals;             // host vertex -> result vertex (identity)
    std::vector<GadgetCopy> copies;  // one per host edge, in canonical edge order
};

/// Replace every edge xy of g by a fresh copy of the gadget: the edge is
/// removed, terminal_a is identified with the lower-indexed endpoint,
/// terminal_b with the other, and the gadget's remaining vertices are
/// appended. Result has |V| + |E|*(|V_gadget|-2) vertices and
/// |E|*|E_gadget| edges.
EdgeReplacementResult replace_edges(const Graph& g, const Gadget& gadget);

Graph complete_graph(int n);
Graph cycle_graph(int n);

/// DIMACS .col: "c" comments, one "p edge <n> <m>" header, "e <u> <v>"
/// lines with 1-based endpoints. Duplicate edge lines collapse.
Graph parse_dimacs(const std::string& text);

/// Canonical DIMACS output: sorted edges, ascending endpoints, 1-based,
/// newline-terminated.
std::string emit_dimacs(const Graph& g);

/// JSON edge list {"n": int, "edges": [[u,v], ...]} with 0-based indices.
Graph parse_edge_list_json(const std::string& text);
std::string emit_edge_list_json(const Graph& g);

/// JSON if the first significant character is '{', DIMACS otherwise.
Graph parse_graph_auto(const std::string& text);

}  // namespace circc
