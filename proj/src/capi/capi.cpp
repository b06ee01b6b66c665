// extern "C" wrapper over the C++ core: opaque handles, status codes,
// thread-local error text.

#include "circc/circc.h"

#include <cstring>
#include <string>

#include "core/circular.hpp"
#include "core/gadgets.hpp"
#include "core/graph.hpp"
#include "core/reductions.hpp"
#include "core/solver.hpp"

struct circc_graph {
    circc::Graph g;
};

namespace {

thread_local std::string t_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
circc_status guarded(Fn&& fn) {
    try {
        t_last_error.clear();
        fn();
        return CIRCC_OK;
    } catch (const circc::ParseError& e) {
        t_last_error = e.what();
        return CIRCC_ERROR_PARSE;
    } catch (const std::domain_error& e) {
        t_last_error = e.what();
        return CIRCC_ERROR_UNSUPPORTED;
    } catch (const std::invalid_argument& e) {
        t_last_error = e.what();
        return CIRCC_ERROR_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return CIRCC_ERROR_INTERNAL;
    }
}

circc_status invalid(const char* msg) {
    t_last_error = msg;
    return CIRCC_ERROR_INVALID_ARGUMENT;
}

circc::PartialAssignment make_pins(const int32_t* vertices, const int32_t* colors, size_t count) {
    circc::PartialAssignment pins;
    pins.reserve(count);
    for (size_t i = 0; i < count; ++i) pins.emplace_back(vertices[i], colors[i]);
    return pins;
}

void copy_map(const circc::VertexMap& map, int32_t* out) {
    if (!out) return;
    for (int i = 0; i < map.size(); ++i) out[i] = map[i];
}

}  // namespace

extern "C" {

const char* circc_version(void) { return "1.0.0"; }

const char* circc_last_error(void) { return t_last_error.c_str(); }

void circc_graph_free(circc_graph* g) { delete g; }

void circc_string_free(char* s) { delete[] s; }

circc_status circc_graph_create(int32_t vertex_count, const int32_t* edges, size_t edge_count,
                                circc_graph** out) {
    if (!out || (edge_count > 0 && !edges)) return invalid("null argument");
    return guarded([&] {
        std::vector<circc::Edge> e;
        e.reserve(edge_count);
        for (size_t i = 0; i < edge_count; ++i) e.push_back({edges[2 * i], edges[2 * i + 1]});
        *out = new circc_graph{circc::Graph(vertex_count, std::move(e))};
    });
}

circc_status circc_graph_complete(int32_t n, circc_graph** out) {
    if (!out) return invalid("null argument");
    return guarded([&] { *out = new circc_graph{circc::complete_graph(n)}; });
}

circc_status circc_graph_cycle(int32_t n, circc_graph** out) {
    if (!out) return invalid("null argument");
    return guarded([&] { *out = new circc_graph{circc::cycle_graph(n)}; });
}

int32_t circc_graph_vertex_count(const circc_graph* g) { return g ? g->g.vertex_count() : -1; }

int32_t circc_graph_edge_count(const circc_graph* g) { return g ? g->g.edge_count() : -1; }

circc_status circc_graph_edges(const circc_graph* g, int32_t* out_uv) {
    if (!g || !out_uv) return invalid("null argument");
    size_t i = 0;
    for (const auto& [u, v] : g->g.edges()) {
        out_uv[i++] = u;
        out_uv[i++] = v;
    }
    return CIRCC_OK;
}

circc_status circc_graph_parse(const char* text, circc_graph** out) {
    if (!text || !out) return invalid("null argument");
    return guarded([&] { *out = new circc_graph{circc::parse_graph_auto(text)}; });
}

circc_status circc_graph_parse_dimacs(const char* text, circc_graph** out) {
    if (!text || !out) return invalid("null argument");
    return guarded([&] { *out = new circc_graph{circc::parse_dimacs(text)}; });
}

circc_status circc_graph_parse_json(const char* text, circc_graph** out) {
    if (!text || !out) return invalid("null argument");
    return guarded([&] { *out = new circc_graph{circc::parse_edge_list_json(text)}; });
}

circc_status circc_graph_emit_dimacs(const circc_graph* g, char** out_text) {
    if (!g || !out_text) return invalid("null argument");
    return guarded([&] { *out_text = dup_string(circc::emit_dimacs(g->g)); });
}

circc_status circc_graph_emit_json(const circc_graph* g, char** out_text) {
    if (!g || !out_text) return invalid("null argument");
    return guarded([&] { *out_text = dup_string(circc::emit_edge_list_json(g->g)); });
}

circc_status circc_disjoint_union(const circc_graph* a, const circc_graph* b, circc_graph** out,
                                  int32_t* map_a, int32_t* map_b) {
    if (!a || !b || !out) return invalid("null argument");
    return guarded([&] {
        auto res = circc::disjoint_union(a->g, b->g);
        copy_map(res.first, map_a);
        copy_map(res.second, map_b);
        *out = new circc_graph{std::move(res.graph)};
    });
}

circc_status circc_replace_edges(const circc_graph* host, const circc_graph* gadget_graph,
                                 int32_t terminal_a, int32_t terminal_b, circc_graph** out,
                                 int32_t* original_map) {
    if (!host || !gadget_graph || !out) return invalid("null argument");
    return guarded([&] {
        circc::Gadget gadget(gadget_graph->g, terminal_a, terminal_b);
        auto res = circc::replace_edges(host->g, gadget);
        copy_map(res.originals, original_map);
        *out = new circc_graph{std::move(res.graph)};
    });
}

circc_status circc_build_gadget(circc_gadget_kind kind, int32_t n, circc_graph** out_graph,
                                int32_t* out_terminal_a, int32_t* out_terminal_b) {
    if (!out_graph) return invalid("null argument");
    return guarded([&] {
        circc::Gadget g = kind == CIRCC_GADGET_K_MINUS ? circc::build_k_minus()
                          : kind == CIRCC_GADGET_H     ? circc::build_h()
                                                       : circc::build_k_family(n);
        if (out_terminal_a) *out_terminal_a = g.terminal_a;
        if (out_terminal_b) *out_terminal_b = g.terminal_b;
        *out_graph = new circc_graph{std::move(g.graph)};
    });
}

circc_status circc_is_valid_coloring(const circc_graph* g, int32_t p, int32_t q,
                                     const int32_t* colors, int* out_valid) {
    if (!g || !colors || !out_valid) return invalid("null argument");
    return guarded([&] {
        circc::CircularColoring c{p, q,
                                  std::vector<int>(colors, colors + g->g.vertex_count())};
        *out_valid = circc::is_valid_coloring(g->g, c) ? 1 : 0;
    });
}

circc_status circc_chromatic_number(const circc_graph* g, int32_t* out_chi) {
    if (!g || !out_chi) return invalid("null argument");
    return guarded([&] { *out_chi = circc::chromatic_number(g->g); });
}

circc_status circc_find_pq_coloring(const circc_graph* g, int32_t p, int32_t q,
                                    const int32_t* pin_vertices, const int32_t* pin_colors,
                                    size_t pin_count, int strict, uint64_t node_budget,
                                    circc_verdict* out_verdict, int32_t* out_colors) {
    if (!g || !out_verdict || (pin_count > 0 && (!pin_vertices || !pin_colors)))
        return invalid("null argument");
    return guarded([&] {
        const auto pins = make_pins(pin_vertices, pin_colors, pin_count);
        std::optional<circc::CircularColoring> found;
        if (strict) {
            if (!pins.empty())
                throw std::invalid_argument("strict search does not take pins");
            found = circc::find_strict_coloring(g->g, p, q);
            *out_verdict = found ? CIRCC_SAT : CIRCC_UNSAT;
        } else {
            const auto res = circc::find_pq_coloring_budgeted(g->g, p, q, pins, node_budget);
            found = res.coloring;
            *out_verdict = res.verdict == circc::SearchVerdict::found   ? CIRCC_SAT
                           : res.verdict == circc::SearchVerdict::exhausted ? CIRCC_UNSAT
                                                                            : CIRCC_BUDGET_EXHAUSTED;
        }
        if (found && out_colors)
            for (int v = 0; v < g->g.vertex_count(); ++v) out_colors[v] = found->colors[v];
    });
}

circc_status circc_count_pq_colorings(const circc_graph* g, int32_t p, int32_t q,
                                      const int32_t* pin_vertices, const int32_t* pin_colors,
                                      size_t pin_count, uint64_t* out_count) {
    if (!g || !out_count || (pin_count > 0 && (!pin_vertices || !pin_colors)))
        return invalid("null argument");
    return guarded([&] {
        *out_count = circc::count_pq_colorings(g->g, p, q,
                                               make_pins(pin_vertices, pin_colors, pin_count));
    });
}

circc_status circc_circular_chromatic_number(const circc_graph* g, int64_t* out_p, int64_t* out_q,
                                             int32_t* out_witness) {
    if (!g || !out_p || !out_q) return invalid("null argument");
    return guarded([&] {
        const auto res = circc::circular_chromatic_number_with_witness(g->g);
        *out_p = res.value.num;
        *out_q = res.value.den;
        if (out_witness)
            for (int v = 0; v < g->g.vertex_count(); ++v) out_witness[v] = res.witness.colors[v];
    });
}

circc_status circc_chi_c_strictly_less(const circc_graph* g, int64_t p, int64_t q, int* out_less) {
    if (!g || !out_less) return invalid("null argument");
    return guarded([&] {
        *out_less = circc::chi_c_strictly_less(g->g, circc::Ratio::of(p, q)) ? 1 : 0;
    });
}

circc_status circc_verify_lemma(circc_lemma lemma, int32_t n, int32_t k, int* out_verified,
                                char** out_report_json) {
    if (!out_verified) return invalid("null argument");
    return guarded([&] {
        circc::LemmaReport report = lemma == CIRCC_LEMMA_K_MINUS ? circc::verify_lemma_k_minus()
                                    : lemma == CIRCC_LEMMA_H     ? circc::verify_lemma_h()
                                                                 : circc::verify_lemma_k(n, k);
        *out_verified = report.verified() ? 1 : 0;
        if (out_report_json) *out_report_json = dup_string(report.to_json().dump(2) + "\n");
    });
}

circc_status circc_reduce_theorem1(const circc_graph* g_prime, circc_graph** out,
                                   int32_t* original_map) {
    if (!g_prime || !out) return invalid("null argument");
    return guarded([&] {
        auto res = circc::reduce_theorem1(g_prime->g);
        copy_map(res.originals, original_map);
        *out = new circc_graph{std::move(res.graph)};
    });
}

circc_status circc_reduce_theorem2(const circc_graph* g_prime, int32_t n, int32_t k,
                                   circc_graph** out, int32_t* original_map) {
    if (!g_prime || !out) return invalid("null argument");
    return guarded([&] {
        auto res = circc::reduce_theorem2(g_prime->g, n, k);
        copy_map(res.originals, original_map);
        *out = new circc_graph{std::move(res.graph)};
    });
}

circc_status circc_certify_theorem1(const circc_graph* g_prime, const int32_t* three_coloring,
                                    int* out_all_checks_true, char** out_cert_json) {
    if (!g_prime || !three_coloring || !out_all_checks_true) return invalid("null argument");
    return guarded([&] {
        const std::vector<int> coloring(three_coloring,
                                        three_coloring + g_prime->g.vertex_count());
        const auto cert = circc::certify_theorem1_forward(g_prime->g, coloring);
        *out_all_checks_true = cert.all_checks_true() ? 1 : 0;
        if (out_cert_json) *out_cert_json = dup_string(cert.to_json().dump(2) + "\n");
    });
}

circc_status circc_certify_theorem2(const circc_graph* g_prime, int32_t n, int32_t k,
                                    const int32_t* coloring, size_t coloring_len,
                                    int* out_all_checks_true, char** out_cert_json) {
    if (!g_prime || !coloring || !out_all_checks_true) return invalid("null argument");
    return guarded([&] {
        const std::vector<int> colors(coloring, coloring + coloring_len);
        const auto cert = circc::certify_theorem2_forward(g_prime->g, n, k, colors);
        *out_all_checks_true = cert.all_checks_true() ? 1 : 0;
        if (out_cert_json) *out_cert_json = dup_string(cert.to_json().dump(2) + "\n");
    });
}

circc_status circc_search_negative_theorem2(const circc_graph* g_prime, int32_t n, int32_t k,
                                            uint64_t node_budget, circc_verdict* out_verdict,
                                            uint64_t* out_nodes) {
    if (!g_prime || !out_verdict) return invalid("null argument");
    return guarded([&] {
        const auto res = circc::search_negative_theorem2(
            g_prime->g, n, k, node_budget == 0 ? circc::kDefaultNodeBudget : node_budget);
        *out_verdict = res.verdict == circc::NegativeVerdict::coloring_found ? CIRCC_SAT
                       : res.verdict == circc::NegativeVerdict::no_coloring_found
                           ? CIRCC_UNSAT
                           : CIRCC_BUDGET_EXHAUSTED;
        if (out_nodes) *out_nodes = res.nodes_visited;
    });
}

circc_status circc_recheck_certificate(const char* cert_json, int* out_match, int* out_all_true,
                                       char** out_report_json) {
    if (!cert_json || !out_match || !out_all_true) return invalid("null argument");
    return guarded([&] {
        const auto res = circc::recheck_certificate(cert_json);
        *out_match = res.match ? 1 : 0;
        *out_all_true = res.all_true ? 1 : 0;
        if (out_report_json) *out_report_json = dup_string(res.to_json().dump(2) + "\n");
    });
}

}  // extern "C"
