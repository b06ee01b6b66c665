#include "core/graph.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace circc {

Graph::Graph(int vertex_count, std::vector<Edge> edge_list) : n_(vertex_count) {
    if (vertex_count < 0) throw std::invalid_argument("vertex count must be non-negative");
    for (auto& [u, v] : edge_list) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
    edges_ = std::move(edge_list);
    adj_.resize(n_);
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

Digraph::Digraph(int vertex_count, std::vector<Edge> arc_list) : n_(vertex_count) {
    if (vertex_count < 0) throw std::invalid_argument("vertex count must be non-negative");
    for (const auto& [u, v] : arc_list) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("arc endpoint out of range");
        if (u == v) throw std::invalid_argument("self-arcs are not allowed");
    }
    std::sort(arc_list.begin(), arc_list.end());
    arc_list.erase(std::unique(arc_list.begin(), arc_list.end()), arc_list.end());
    arcs_ = std::move(arc_list);
    out_.resize(n_);
    for (const auto& [u, v] : arcs_) out_[u].push_back(v);
}

Gadget::Gadget(Graph g, int a, int b) : graph(std::move(g)), terminal_a(a), terminal_b(b) {
    if (a < 0 || a >= graph.vertex_count() || b < 0 || b >= graph.vertex_count())
        throw std::invalid_argument("gadget terminal out of range");
    if (a == b) throw std::invalid_argument("gadget terminals must be distinct");
}

DisjointUnionResult disjoint_union(const Graph& g1, const Graph& g2) {
    const int n1 = g1.vertex_count();
    const int n2 = g2.vertex_count();
    std::vector<Edge> edges = g1.edges();
    edges.reserve(g1.edge_count() + g2.edge_count());
    for (const auto& [u, v] : g2.edges()) edges.push_back({u + n1, v + n1});

    DisjointUnionResult res{Graph(n1 + n2, std::move(edges)), {}, {}};
    res.first.to.resize(n1);
    for (int i = 0; i < n1; ++i) res.first.to[i] = i;
    res.second.to.resize(n2);
    for (int i = 0; i < n2; ++i) res.second.to[i] = n1 + i;
    return res;
}

EdgeReplacementResult replace_edges(const Graph& g, const Gadget& gadget) {
    const int n = g.vertex_count();
    const int gn = gadget.graph.vertex_count();
    const int internals = gn - 2;

    EdgeReplacementResult res;
    res.originals.to.resize(n);
    for (int i = 0; i < n; ++i) res.originals.to[i] = i;

    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(g.edge_count()) * gadget.graph.edge_count());
    int next = n;
    for (const auto& [x, y] : g.edges()) {
        GadgetCopy copy;
        copy.host_edge = {x, y};
        copy.map.to.assign(gn, -1);
        copy.map.to[gadget.terminal_a] = x;  // lower-indexed endpoint
        copy.map.to[gadget.terminal_b] = y;
        for (int gv = 0; gv < gn; ++gv)
            if (copy.map.to[gv] < 0) copy.map.to[gv] = next++;
        for (const auto& [gu, gv] : gadget.graph.edges())
            edges.push_back({copy.map.to[gu], copy.map.to[gv]});
        res.copies.push_back(std::move(copy));
    }
    res.graph = Graph(n + g.edge_count() * internals, std::move(edges));
    return res;
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete_graph requires n >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph requires n >= 3");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) edges.push_back({u, (u + 1) % n});
    return Graph(n, std::move(edges));
}

Graph parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    long long n = -1;
    std::vector<Edge> edges;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            if (n >= 0) throw ParseError(lineno, "duplicate problem line");
            std::string fmt;
            long long nn = -1, mm = -1;
            if (!(ls >> fmt >> nn >> mm) || fmt != "edge" || nn < 0 || mm < 0)
                throw ParseError(lineno, "malformed problem line, expected 'p edge <n> <m>'");
            std::string extra;
            if (ls >> extra) throw ParseError(lineno, "trailing tokens after problem line");
            if (nn > std::numeric_limits<int>::max())
                throw ParseError(lineno, "vertex count too large");
            n = nn;
        } else if (tag == "e") {
            if (n < 0) throw ParseError(lineno, "edge line before problem line");
            long long u = 0, v = 0;
            if (!(ls >> u >> v)) throw ParseError(lineno, "malformed edge line, expected 'e <u> <v>'");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(lineno, "vertex index out of range");
            if (u == v) throw ParseError(lineno, "self-loop");
            edges.push_back({static_cast<int>(u) - 1, static_cast<int>(v) - 1});
        } else {
            throw ParseError(lineno, "unrecognized line type '" + tag + "'");
        }
    }
    if (n < 0) throw ParseError(lineno == 0 ? 1 : lineno, "missing problem line");
    return Graph(static_cast<int>(n), std::move(edges));
}

std::string emit_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

Graph parse_edge_list_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError(0, "expected an object with \"n\" and \"edges\"");
    if (!j["n"].is_number_integer()) throw ParseError(0, "\"n\" must be an integer");
    if (!j["edges"].is_array()) throw ParseError(0, "\"edges\" must be an array");
    const long long n = j["n"].get<long long>();
    if (n < 0) throw ParseError(0, "\"n\" must be non-negative");
    if (n > std::numeric_limits<int>::max()) throw ParseError(0, "\"n\" too large");
    std::vector<Edge> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw ParseError(0, "each edge must be a pair of integers");
        const long long u = e[0].get<long long>();
        const long long v = e[1].get<long long>();
        if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError(0, "edge endpoint out of range");
        if (u == v) throw ParseError(0, "self-loop");
        edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

std::string emit_edge_list_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.vertex_count();
    j["edges"] = nlohmann::json::array();
    for (const auto& [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j.dump(2) + "\n";
}

Graph parse_graph_auto(const std::string& text) {
    for (char ch : text) {
        if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') continue;
        return ch == '{' ? parse_edge_list_json(text) : parse_dimacs(text);
    }
    throw ParseError(1, "empty input");
}

}  // namespace circc
