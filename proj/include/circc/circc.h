/* circc - exact circular graph coloring toolkit, C API.
 *
 * All functions return a circc_status; results come back through out
 * parameters. Objects are opaque handles released with their _free
 * function; strings returned through char** are released with
 * circc_string_free. On failure circc_last_error() describes the most
 * recent error on the calling thread.
 */
#ifndef CIRCC_H
#define CIRCC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum circc_status {
    CIRCC_OK = 0,
    CIRCC_ERROR_INVALID_ARGUMENT = 1, /* bad parameter or contract violation */
    CIRCC_ERROR_PARSE = 2,            /* malformed DIMACS/JSON input */
    CIRCC_ERROR_UNSUPPORTED = 3,      /* beyond solver limits (p > 128) */
    CIRCC_ERROR_INTERNAL = 4
} circc_status;

typedef enum circc_verdict {
    CIRCC_SAT = 0,              /* coloring found */
    CIRCC_UNSAT = 1,            /* complete search proved absence */
    CIRCC_BUDGET_EXHAUSTED = 2  /* search stopped at the node budget */
} circc_verdict;

typedef enum circc_gadget_kind {
    CIRCC_GADGET_K_MINUS = 0, /* K4 minus one edge */
    CIRCC_GADGET_H = 1,       /* the 10-vertex, 17-edge gadget */
    CIRCC_GADGET_K_FAMILY = 2 /* clique gadget, parameterized by n */
} circc_gadget_kind;

typedef enum circc_lemma {
    CIRCC_LEMMA_K_MINUS = 0,
    CIRCC_LEMMA_H = 1,
    CIRCC_LEMMA_K = 2
} circc_lemma;

typedef struct circc_graph circc_graph;

const char* circc_version(void);

/* Message for the most recent failure on this thread; empty if none. */
const char* circc_last_error(void);

void circc_graph_free(circc_graph* g);
void circc_string_free(char* s);

/* edges is a flat array u0,v0,u1,v1,... of 0-based endpoints. */
circc_status circc_graph_create(int32_t vertex_count, const int32_t* edges, size_t edge_count,
                                circc_graph** out);
circc_status circc_graph_complete(int32_t n, circc_graph** out);
circc_status circc_graph_cycle(int32_t n, circc_graph** out);

int32_t circc_graph_vertex_count(const circc_graph* g);
int32_t circc_graph_edge_count(const circc_graph* g);
/* out_uv must hold 2 * edge_count entries. */
circc_status circc_graph_edges(const circc_graph* g, int32_t* out_uv);

/* DIMACS .col or the JSON edge list {"n":..., "edges":[[u,v],...]};
 * circc_graph_parse sniffs the format. */
circc_status circc_graph_parse(const char* text, circc_graph** out);
circc_status circc_graph_parse_dimacs(const char* text, circc_graph** out);
circc_status circc_graph_parse_json(const char* text, circc_graph** out);
circc_status circc_graph_emit_dimacs(const circc_graph* g, char** out_text);
circc_status circc_graph_emit_json(const circc_graph* g, char** out_text);

/* map_a (length |V(a)|) and map_b (length |V(b)|) may be NULL. */
circc_status circc_disjoint_union(const circc_graph* a, const circc_graph* b, circc_graph** out,
                                  int32_t* map_a, int32_t* map_b);

/* Replaces every edge of host by the gadget (terminal_a glued to the
 * lower-indexed endpoint). original_map (length |V(host)|) may be NULL. */
circc_status circc_replace_edges(const circc_graph* host, const circc_graph* gadget_graph,
                                 int32_t terminal_a, int32_t terminal_b, circc_graph** out,
                                 int32_t* original_map);

/* n is only read for CIRCC_GADGET_K_FAMILY. */
circc_status circc_build_gadget(circc_gadget_kind kind, int32_t n, circc_graph** out_graph,
                                int32_t* out_terminal_a, int32_t* out_terminal_b);

/* colors has one entry per vertex. */
circc_status circc_is_valid_coloring(const circc_graph* g, int32_t p, int32_t q,
                                     const int32_t* colors, int* out_valid);

circc_status circc_chromatic_number(const circc_graph* g, int32_t* out_chi);

/* Complete search for a (p,q)-coloring extending the pins; with strict
 * nonzero, for one whose orientation digraph is acyclic (the chi_c < p/q
 * test). node_budget 0 means unlimited; strict searches ignore it.
 * out_colors (length |V|) may be NULL and is filled only on CIRCC_SAT. */
circc_status circc_find_pq_coloring(const circc_graph* g, int32_t p, int32_t q,
                                    const int32_t* pin_vertices, const int32_t* pin_colors,
                                    size_t pin_count, int strict, uint64_t node_budget,
                                    circc_verdict* out_verdict, int32_t* out_colors);

circc_status circc_count_pq_colorings(const circc_graph* g, int32_t p, int32_t q,
                                      const int32_t* pin_vertices, const int32_t* pin_colors,
                                      size_t pin_count, uint64_t* out_count);

/* Exact chi_c as a reduced fraction. out_witness (length |V|) may be
 * NULL; it receives a valid (p,q)-coloring attaining the value. */
circc_status circc_circular_chromatic_number(const circc_graph* g, int64_t* out_p, int64_t* out_q,
                                             int32_t* out_witness);

circc_status circc_chi_c_strictly_less(const circc_graph* g, int64_t p, int64_t q, int* out_less);

/* n and k are only read for CIRCC_LEMMA_K. out_report_json may be NULL. */
circc_status circc_verify_lemma(circc_lemma lemma, int32_t n, int32_t k, int* out_verified,
                                char** out_report_json);

/* original_map (length |V(g_prime)|, resp. |V(g_prime)| + n) may be NULL. */
circc_status circc_reduce_theorem1(const circc_graph* g_prime, circc_graph** out,
                                   int32_t* original_map);
circc_status circc_reduce_theorem2(const circc_graph* g_prime, int32_t n, int32_t k,
                                   circc_graph** out, int32_t* original_map);

/* three_coloring has |V(g_prime)| entries in 0..2 and must be proper. */
circc_status circc_certify_theorem1(const circc_graph* g_prime, const int32_t* three_coloring,
                                    int* out_all_checks_true, char** out_cert_json);

/* coloring covers g_prime (coloring_len = |V|; the K_n block defaults to
 * 0, k, 2k, ...) or g_prime plus the block (coloring_len = |V| + n). */
circc_status circc_certify_theorem2(const circc_graph* g_prime, int32_t n, int32_t k,
                                    const int32_t* coloring, size_t coloring_len,
                                    int* out_all_checks_true, char** out_cert_json);

/* CIRCC_UNSAT here is a complete proof that no (kn-1,k)-coloring of the
 * theorem-2 instance exists. node_budget 0 selects the default 1e8. */
circc_status circc_search_negative_theorem2(const circc_graph* g_prime, int32_t n, int32_t k,
                                            uint64_t node_budget, circc_verdict* out_verdict,
                                            uint64_t* out_nodes);

/* Recomputes every check named in the certificate from its JSON alone.
 * out_match: recomputed booleans equal the stored ones. out_all_true:
 * every recomputed check holds. out_report_json may be NULL. */
circc_status circc_recheck_certificate(const char* cert_json, int* out_match, int* out_all_true,
                                       char** out_report_json);

#ifdef __cplusplus
}
#endif

#endif /* CIRCC_H */
