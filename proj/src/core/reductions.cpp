#include "core/reductions.hpp"

#include <algorithm>
#include <limits>

#include "core/gadgets.hpp"

namespace circc {

namespace {

nlohmann::json instance_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.vertex_count();
    j["edges"] = nlohmann::json::array();
    for (const auto& [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j;
}

// The acyclicity check is defined as "valid and the orientation digraph
// is acyclic" so it is recomputable even for invalid witnesses.
std::vector<std::pair<std::string, bool>> derive_checks(const Graph& g, const CircularColoring& c,
                                                        bool want_acyclic) {
    std::vector<std::pair<std::string, bool>> checks;
    const bool valid = is_valid_coloring(g, c);
    checks.emplace_back("valid", valid);
    if (want_acyclic)
        checks.emplace_back("acyclic", valid && is_acyclic(orientation_digraph(g, c)));
    return checks;
}

}  // namespace

bool ReductionCertificate::all_checks_true() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

nlohmann::json ReductionCertificate::to_json() const {
    nlohmann::json j;
    j["theorem"] = theorem;
    j["instance"] = instance_json(instance);
    j["claimed_chi"] = claimed_chi;
    j["claimed_bound"] = {{"ratio", claimed_bound.str()}, {"strict", bound_is_strict}};
    j["p"] = p;
    j["q"] = q;
    j["witness"] = witness;
    j["checks"] = nlohmann::json::object();
    for (const auto& [name, value] : checks) j["checks"][name] = value;
    return j;
}

EdgeReplacementResult reduce_theorem1(const Graph& g_prime) {
    if (g_prime.edge_count() == 0)
        throw std::invalid_argument("theorem 1 reduction requires at least one edge");
    return replace_edges(g_prime, build_h());
}

ReductionCertificate certify_theorem1_forward(const Graph& g_prime,
                                              const std::vector<int>& three_coloring) {
    if (static_cast<int>(three_coloring.size()) != g_prime.vertex_count())
        throw std::invalid_argument("coloring length does not match vertex count");
    for (int c : three_coloring)
        if (c < 0 || c > 2) throw std::invalid_argument("three-coloring colors must lie in 0..2");
    for (const auto& [u, v] : g_prime.edges())
        if (three_coloring[u] == three_coloring[v])
            throw std::invalid_argument("input coloring is not proper");

    const EdgeReplacementResult red = reduce_theorem1(g_prime);
    const Gadget h = build_h();

    std::vector<int> colors(red.graph.vertex_count(), -1);
    for (int v = 0; v < g_prime.vertex_count(); ++v)
        colors[red.originals[v]] = three_coloring[v];
    for (const GadgetCopy& copy : red.copies) {
        const auto [u, v] = copy.host_edge;  // terminal_a sits on u (the lower index)
        const auto w = lemma_h_witness(three_coloring[u], three_coloring[v]);
        if (!w) throw std::logic_error("missing H witness; verify_lemma_h must pass first");
        for (int gv = 0; gv < h.graph.vertex_count(); ++gv)
            colors[copy.map[gv]] = w->colors[gv];
    }

    ReductionCertificate cert;
    cert.theorem = 1;
    cert.instance = red.graph;
    cert.claimed_chi = 4;
    cert.claimed_bound = Ratio::of(4, 1);
    cert.bound_is_strict = true;
    cert.p = 4;
    cert.q = 1;
    cert.witness = std::move(colors);
    cert.checks = derive_checks(cert.instance, CircularColoring{4, 1, cert.witness},
                                /*want_acyclic=*/true);
    return cert;
}

EdgeReplacementResult reduce_theorem2(const Graph& g_prime, int n, int k) {
    if (n < 3 || k < 2) throw std::invalid_argument("theorem 2 requires n >= 3 and k >= 2");
    const DisjointUnionResult host = disjoint_union(g_prime, complete_graph(n));
    return replace_edges(host.graph, build_k_family(n));
}

ReductionCertificate certify_theorem2_forward(const Graph& g_prime, int n, int k,
                                              const std::vector<int>& coloring) {
    if (n < 3 || k < 2) throw std::invalid_argument("theorem 2 requires n >= 3 and k >= 2");
    const int p = k * n - 1;
    const int np = g_prime.vertex_count();

    std::vector<int> host_colors = coloring;
    if (static_cast<int>(host_colors.size()) == np) {
        for (int i = 0; i < n; ++i) host_colors.push_back(i * k);  // default K_n block
    } else if (static_cast<int>(host_colors.size()) != np + n) {
        throw std::invalid_argument("coloring must cover g_prime or g_prime plus the K_n block");
    }
    for (int c : host_colors)
        if (c < 0 || c >= p) throw std::invalid_argument("color out of range for kn-1 colors");

    const DisjointUnionResult host = disjoint_union(g_prime, complete_graph(n));
    for (const auto& [u, v] : host.graph.edges())
        if (host_colors[u] == host_colors[v])
            throw std::invalid_argument(
                "input coloring gives adjacent vertices equal colors; the gadget cannot extend "
                "an equal terminal pair");

    const EdgeReplacementResult red = replace_edges(host.graph, build_k_family(n));
    const Gadget gadget = build_k_family(n);

    std::vector<int> colors(red.graph.vertex_count(), -1);
    for (int v = 0; v < host.graph.vertex_count(); ++v)
        colors[red.originals[v]] = host_colors[v];
    for (const GadgetCopy& copy : red.copies) {
        const auto [u, v] = copy.host_edge;
        const std::vector<int> w = lemma_k_closed_form(n, k, host_colors[u], host_colors[v]);
        for (int gv = 0; gv < gadget.graph.vertex_count(); ++gv)
            colors[copy.map[gv]] = w[gv];
    }

    ReductionCertificate cert;
    cert.theorem = 2;
    cert.instance = red.graph;
    cert.claimed_chi = n;
    cert.claimed_bound = Ratio::of(p, k);
    cert.bound_is_strict = false;
    cert.p = p;
    cert.q = k;
    cert.witness = std::move(colors);
    cert.checks = derive_checks(cert.instance, CircularColoring{p, k, cert.witness},
                                /*want_acyclic=*/false);
    return cert;
}

NegativeSearchResult search_negative_theorem2(const Graph& g_prime, int n, int k,
                                              uint64_t node_budget) {
    const EdgeReplacementResult red = reduce_theorem2(g_prime, n, k);
    const BudgetedSearchResult search =
        find_pq_coloring_budgeted(red.graph, k * n - 1, k, {}, node_budget);

    NegativeSearchResult res;
    res.nodes_visited = search.nodes_visited;
    res.coloring = search.coloring;
    switch (search.verdict) {
        case SearchVerdict::found: res.verdict = NegativeVerdict::coloring_found; break;
        case SearchVerdict::exhausted: res.verdict = NegativeVerdict::no_coloring_found; break;
        case SearchVerdict::budget_exhausted: res.verdict = NegativeVerdict::budget_exhausted; break;
    }
    return res;
}

nlohmann::json RecheckResult::to_json() const {
    nlohmann::json j;
    j["recomputed_checks"] = nlohmann::json::object();
    for (const auto& [name, value] : recomputed) j["recomputed_checks"][name] = value;
    j["match"] = match;
    j["all_true"] = all_true;
    return j;
}

RecheckResult recheck_certificate(const std::string& cert_json) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(cert_json);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
    for (const char* key : {"instance", "p", "q", "witness", "checks"})
        if (!j.contains(key)) throw ParseError(0, std::string("certificate missing \"") + key + "\"");

    Graph instance;
    try {
        instance = parse_edge_list_json(j["instance"].dump());
    } catch (const std::exception& e) {
        throw ParseError(0, std::string("bad instance: ") + e.what());
    }
    if (!j["p"].is_number_integer() || !j["q"].is_number_integer())
        throw ParseError(0, "p and q must be integers");
    const long long p_wide = j["p"].get<long long>();
    const long long q_wide = j["q"].get<long long>();
    if (p_wide < 1 || q_wide < 1) throw ParseError(0, "p and q must be positive");
    constexpr long long int_max = std::numeric_limits<int>::max();
    if (p_wide > int_max || q_wide > int_max) throw ParseError(0, "p or q out of range");
    const int p = static_cast<int>(p_wide);
    const int q = static_cast<int>(q_wide);
    if (!j["witness"].is_array()) throw ParseError(0, "witness must be an array");
    std::vector<int> witness;
    for (const auto& c : j["witness"]) {
        if (!c.is_number_integer()) throw ParseError(0, "witness entries must be integers");
        const long long value = c.get<long long>();
        // out of [0, p) is simply an invalid coloring, but it must not
        // truncate on the way in
        witness.push_back(value < -1 || value > int_max ? -1 : static_cast<int>(value));
    }
    if (static_cast<int>(witness.size()) != instance.vertex_count())
        throw ParseError(0, "witness length does not match the instance");
    if (!j["checks"].is_object()) throw ParseError(0, "checks must be an object");

    const bool want_acyclic = j["checks"].contains("acyclic");
    RecheckResult res;
    res.recomputed = derive_checks(instance, CircularColoring{p, q, witness}, want_acyclic);

    res.match = j["checks"].size() == res.recomputed.size();
    for (const auto& [name, value] : res.recomputed) {
        if (!j["checks"].contains(name) || !j["checks"][name].is_boolean() ||
            j["checks"][name].get<bool>() != value)
            res.match = false;
    }
    res.all_true = std::all_of(res.recomputed.begin(), res.recomputed.end(),
                               [](const auto& c) { return c.second; });
    return res;
}

}  // namespace circc
