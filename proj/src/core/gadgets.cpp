#include "core/gadgets.hpp"

#include <algorithm>

namespace circc {

namespace {

nlohmann::json coloring_json(const CircularColoring& c) {
    return {{"p", c.p}, {"q", c.q}, {"colors", c.colors}};
}

}  // namespace

nlohmann::json LemmaReport::to_json() const {
    nlohmann::json j;
    j["lemma"] = lemma;
    j["parameters"] = {{"p", p}, {"q", q}};
    if (lemma == "k") {
        j["parameters"]["n"] = n;
        j["parameters"]["k"] = k;
    }
    j["cases_examined"] = cases_examined;
    j["counterexamples"] = nlohmann::json::array();
    for (const auto& ce : counterexamples)
        j["counterexamples"].push_back({{"clause", ce.clause}, {"coloring", coloring_json(ce.coloring)}});
    j["witnesses"] = nlohmann::json::array();
    for (const auto& w : witnesses)
        j["witnesses"].push_back({{"key", w.key}, {"coloring", coloring_json(w.coloring)}});
    j["missing_witnesses"] = missing_witnesses;
    j["verified"] = verified();
    return j;
}

Gadget build_k_minus() {
    Graph g(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    return Gadget(std::move(g), 0, 1);
}

Gadget build_h() {
    // a=0 b=1 c=2 d=3; direct edges a-d, b-c
    std::vector<Edge> edges = {{0, 3}, {1, 2}};
    int next = 4;
    auto glue_k_minus = [&](int s, int t) {
        const int u = next++;
        const int v = next++;
        for (Edge e : {Edge{s, u}, Edge{s, v}, Edge{t, u}, Edge{t, v}, Edge{u, v}})
            edges.push_back(e);
    };
    glue_k_minus(2, 0);  // (c, a)
    glue_k_minus(3, 1);  // (d, b)
    glue_k_minus(2, 3);  // (c, d)
    return Gadget(Graph(10, std::move(edges)), 0, 1);
}

Gadget build_k_family(int n) {
    if (n < 3) throw std::invalid_argument("build_k_family requires n >= 3");
    // a=0, b=1, v_i at index i+1 for i = 1..n-1
    std::vector<Edge> edges;
    for (int i = 2; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) edges.push_back({i, j});
    for (int i = 2; i <= n - 1; ++i) edges.push_back({0, i});  // a - v1..v_{n-2}
    edges.push_back({1, n});                                   // b - v_{n-1}
    return Gadget(Graph(n + 1, std::move(edges)), 0, 1);
}

LemmaReport verify_lemma_k_minus() {
    LemmaReport report;
    report.lemma = "kminus";
    report.p = 4;
    report.q = 1;

    const Gadget km = build_k_minus();
    const int v1 = km.terminal_a, v2 = km.terminal_b;
    for_each_pq_coloring(km.graph, 4, 1, {}, [&](const CircularColoring& c) {
        ++report.cases_examined;
        const Digraph d = orientation_digraph(km.graph, c);
        const int diff = ((c.colors[v1] - c.colors[v2]) % 4 + 4) % 4;
        bool ok = false;
        switch (diff) {
            case 0:
                ok = is_acyclic(d) && !has_directed_path(d, v1, v2) && !has_directed_path(d, v2, v1);
                break;
            case 1:
                ok = is_acyclic(d) && has_directed_path(d, v1, v2);
                break;
            case 3:
                ok = is_acyclic(d) && has_directed_path(d, v2, v1);
                break;
            case 2:
                ok = !is_acyclic(d);
                break;
        }
        if (!ok)
            report.counterexamples.push_back({"difference " + std::to_string(diff), c});
        return true;
    });
    return report;
}

std::optional<CircularColoring> lemma_h_witness(int x, int y) {
    if (x == y || x < 0 || x > 2 || y < 0 || y > 2)
        throw std::invalid_argument("witness pair must be distinct colors in 0..2");
    const Gadget h = build_h();
    const int a = h.terminal_a, b = h.terminal_b;
    const int lo = x < y ? a : b;  // lower-colored terminal
    const int hi = x < y ? b : a;
    std::optional<CircularColoring> found;
    for_each_pq_coloring(h.graph, 4, 1, {{a, x}, {b, y}}, [&](const CircularColoring& c) {
        const Digraph d = orientation_digraph(h.graph, c);
        if (is_acyclic(d) && !has_directed_path(d, hi, lo)) {
            found = c;
            return false;
        }
        return true;
    });
    return found;
}

LemmaReport verify_lemma_h() {
    LemmaReport report;
    report.lemma = "h";
    report.p = 4;
    report.q = 1;

    const Gadget h = build_h();
    const int a = h.terminal_a, b = h.terminal_b;

    // (a) equal terminal colors force a cycle
    for (int t = 0; t < 4; ++t) {
        for_each_pq_coloring(h.graph, 4, 1, {{a, t}, {b, t}}, [&](const CircularColoring& c) {
            ++report.cases_examined;
            if (is_acyclic(orientation_digraph(h.graph, c)))
                report.counterexamples.push_back(
                    {"a=b=" + std::to_string(t) + " must be cyclic", c});
            return true;
        });
    }

    // (b) witnesses for the six ordered pairs of distinct colors in 0..2;
    // the swapped pairs (x > y) carry the no-path property in the other
    // direction and are what terminal-swapped gluings consume.
    for (int x = 0; x <= 2; ++x) {
        for (int y = 0; y <= 2; ++y) {
            if (x == y) continue;
            ++report.cases_examined;
            const std::string key = "a=" + std::to_string(x) + ",b=" + std::to_string(y);
            if (auto w = lemma_h_witness(x, y))
                report.witnesses.push_back({key, *w});
            else
                report.missing_witnesses.push_back(key);
        }
    }
    return report;
}

std::vector<int> lemma_k_closed_form(int n, int k, int x, int y) {
    if (n < 3 || k < 1) throw std::invalid_argument("closed form requires n >= 3 and k >= 1");
    const int p = k * n - 1;
    if (x < 0 || x >= p || y < 0 || y >= p) throw std::invalid_argument("color out of range");
    if (x == y) throw std::invalid_argument("terminal colors must differ");

    // Base construction for c(a) = 0, c(b) = d with 0 < d <= p/2:
    // c(v_i) = i*k for i = 1..n-2 and c(v_{n-1}) = 0 when d >= k,
    // d - k (mod p) when d < k.
    auto base = [&](int d) {
        std::vector<int> c(n + 1, 0);
        c[1] = d;
        for (int i = 1; i <= n - 2; ++i) c[i + 1] = i * k;
        c[n] = d >= k ? 0 : d - k + p;
        return c;
    };

    const int d = ((y - x) % p + p) % p;
    std::vector<int> c;
    if (2 * d <= p) {
        c = base(d);
    } else {
        c = base(p - d);  // reflect the color circle to land on (0, d)
        for (int& v : c) v = (p - v) % p;
    }
    for (int& v : c) v = (v + x) % p;
    return c;
}

LemmaReport verify_lemma_k(int n, int k) {
    if (n < 3 || k < 1) throw std::invalid_argument("verify_lemma_k requires n >= 3 and k >= 1");
    LemmaReport report;
    report.lemma = "k";
    report.n = n;
    report.k = k;
    report.p = k * n - 1;
    report.q = k;

    const Gadget gadget = build_k_family(n);
    const int p = report.p;
    for (int x = 0; x < p; ++x) {
        for (int y = 0; y < p; ++y) {
            ++report.cases_examined;
            const auto found =
                find_pq_coloring(gadget.graph, p, k, {{gadget.terminal_a, x}, {gadget.terminal_b, y}});
            const std::string key = "a=" + std::to_string(x) + ",b=" + std::to_string(y);
            if (x == y) {
                if (found)
                    report.counterexamples.push_back({key + " must be infeasible", *found});
            } else {
                if (found)
                    report.witnesses.push_back({key, *found});
                else
                    report.missing_witnesses.push_back(key);
            }
        }
    }
    return report;
}

}  // namespace circc
