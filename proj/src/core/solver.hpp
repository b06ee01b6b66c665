#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "core/graph.hpp"

namespace circc {

/// A (p,q)-coloring candidate: one color in [0, p) per vertex. An edge xy
/// is satisfied when q <= |colors[x] - colors[y]| <= p - q.
struct CircularColoring {
    int p = 1;
    int q = 1;
    std::vector<int> colors;

    bool operator==(const CircularColoring& other) const = default;
};

/// Vertices pinned to fixed colors before search. At most one entry per
/// vertex; colors must lie in [0, p).
using PartialAssignment = std::vector<std::pair<int, int>>;

/// Colors supported by the search engine (domains are fixed-width bitsets).
inline constexpr int kMaxColors = 128;

/// True iff every edge satisfies the band condition. Out-of-range colors
/// make the coloring invalid; a length mismatch is an error.
bool is_valid_coloring(const Graph& g, const CircularColoring& c);

/// Complete backtracking search for a valid coloring extending the pins.
/// Branch order is descending degree (ties by index); when no pins are
/// given the first branched vertex is fixed to color 0, which is sound
/// for the decision question by rotation of the color circle.
std::optional<CircularColoring> find_pq_coloring(const Graph& g, int p, int q,
                                                 const PartialAssignment& pins = {});

enum class SearchVerdict { found, exhausted, budget_exhausted };

struct BudgetedSearchResult {
    SearchVerdict verdict = SearchVerdict::exhausted;
    std::optional<CircularColoring> coloring;
    uint64_t nodes_visited = 0;
};

/// find_pq_coloring with a node budget; a budget of 0 means unlimited.
/// `exhausted` is a complete proof of absence, `budget_exhausted` is not.
BudgetedSearchResult find_pq_coloring_budgeted(const Graph& g, int p, int q,
                                               const PartialAssignment& pins,
                                               uint64_t node_budget);

/// Visits every valid coloring extending the pins exactly once, in
/// lexicographic order of the color vector. Return false to stop early.
void for_each_pq_coloring(const Graph& g, int p, int q, const PartialAssignment& pins,
                          const std::function<bool(const CircularColoring&)>& fn);

std::vector<CircularColoring> enumerate_pq_colorings(const Graph& g, int p, int q,
                                                     const PartialAssignment& pins = {});

uint64_t count_pq_colorings(const Graph& g, int p, int q, const PartialAssignment& pins = {});

/// Smallest k with a (k,1)-coloring; 0 for the empty graph, 1 for
/// edgeless nonempty graphs.
int chromatic_number(const Graph& g);

/// The digraph D_c: each edge xy contributes arc (x,y) when
/// (c(y) - c(x)) mod p = q and arc (y,x) when (c(x) - c(y)) mod p = q.
/// Both can hold (p = 2q), yielding a 2-cycle. Requires a valid coloring.
Digraph orientation_digraph(const Graph& g, const CircularColoring& c);

/// True iff d has no directed cycle.
bool is_acyclic(const Digraph& d);

/// True iff a directed u -> v path exists; u = v counts via the empty path.
bool has_directed_path(const Digraph& d, int u, int v);

/// First valid coloring, in lexicographic order, whose orientation digraph
/// is acyclic; absent iff no valid coloring has an acyclic digraph.
std::optional<CircularColoring> find_strict_coloring(const Graph& g, int p, int q);

}  // namespace circc
