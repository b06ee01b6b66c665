#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "core/circular.hpp"
#include "core/graph.hpp"
#include "core/solver.hpp"

namespace circc {

/// Self-contained claim about a reduction instance: the instance, the
/// coloring parameters, a witness coloring, and named boolean checks
/// that are re-derivable from the instance and witness alone.
struct ReductionCertificate {
    int theorem = 0;  // 1 or 2
    Graph instance;
    int claimed_chi = 0;
    Ratio claimed_bound;
    bool bound_is_strict = false;  // true: chi_c < bound, false: chi_c <= bound
    int p = 0, q = 0;
    std::vector<int> witness;
    std::vector<std::pair<std::string, bool>> checks;  // fixed order: valid[, acyclic]

    bool all_checks_true() const;
    nlohmann::json to_json() const;
};

/// Replace every edge of g_prime by a copy of H. For nontrivial inputs
/// the result has chromatic number 4.
EdgeReplacementResult reduce_theorem1(const Graph& g_prime);

/// Extends a proper 3-coloring of g_prime to a (4,1)-coloring of the
/// replaced graph using the stored H witnesses, then checks validity and
/// global acyclicity of the orientation digraph. Both checks passing
/// certifies chi_c < 4.
ReductionCertificate certify_theorem1_forward(const Graph& g_prime,
                                              const std::vector<int>& three_coloring);

/// Replace every edge of (g_prime disjoint-union K_n) by a copy of the
/// clique gadget. The result has chromatic number n.
EdgeReplacementResult reduce_theorem2(const Graph& g_prime, int n, int k);

/// Extends a proper (kn-1)-coloring through every gadget copy via the
/// closed-form witnesses, yielding a valid (kn-1, k)-coloring, which
/// certifies chi_c <= n - 1/k. The coloring may cover just g_prime (the
/// K_n block then defaults to 0, k, 2k, ...) or all of g_prime + K_n.
ReductionCertificate certify_theorem2_forward(const Graph& g_prime, int n, int k,
                                              const std::vector<int>& coloring);

enum class NegativeVerdict { no_coloring_found, coloring_found, budget_exhausted };

struct NegativeSearchResult {
    NegativeVerdict verdict = NegativeVerdict::budget_exhausted;
    uint64_t nodes_visited = 0;
    std::optional<CircularColoring> coloring;
};

inline constexpr uint64_t kDefaultNodeBudget = 100'000'000;

/// Complete budgeted search for a (kn-1, k)-coloring of the theorem-2
/// instance. `no_coloring_found` with the search space exhausted proves
/// chi_c > n - 1/k.
NegativeSearchResult search_negative_theorem2(const Graph& g_prime, int n, int k,
                                              uint64_t node_budget = kDefaultNodeBudget);

/// Outcome of re-deriving a certificate's checks from its JSON alone.
struct RecheckResult {
    std::vector<std::pair<std::string, bool>> recomputed;
    bool match = false;     // recomputed booleans equal the stored ones
    bool all_true = false;  // every recomputed check holds

    nlohmann::json to_json() const;
};

/// Independent re-checker: reads only the certificate JSON (instance,
/// p, q, witness, stored checks) and recomputes every named check.
RecheckResult recheck_certificate(const std::string& cert_json);

}  // namespace circc
