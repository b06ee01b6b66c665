#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "core/graph.hpp"
#include "core/solver.hpp"

namespace circc {

/// K4 minus one edge. Vertices v1..v4 are indices 0..3; the missing edge
/// is v1v2 and the terminals are (v1, v2).
Gadget build_k_minus();

/// The 10-vertex, 17-edge gadget H with terminals (a, b): vertices
/// a=0, b=1, c=2, d=3, direct edges a-d and b-c, and three K4-minus-edge
/// blocks glued on the terminal pairs (c,a), (d,b) and (c,d) (internals
/// 4..9). chi(H) = 4, and in every (4,1)-coloring equal terminal colors
/// force a cycle in the orientation digraph.
Gadget build_h();

/// The clique gadget for n >= 3: vertices a=0, b=1 and a clique
/// v1..v_{n-1} at indices 2..n; a is adjacent to v1..v_{n-2}, b only to
/// v_{n-1}. Terminals (a, b). Extends (kn-1, k)-colorings iff the
/// terminal colors differ.
Gadget build_k_family(int n);

/// Machine-checked verdict for one gadget lemma.
struct LemmaReport {
    std::string lemma;  // "kminus" | "h" | "k"
    int p = 0, q = 0;   // coloring parameters the clauses quantify over
    int n = 0, k = 0;   // only for lemma "k"
    long long cases_examined = 0;

    struct Counterexample {
        std::string clause;
        CircularColoring coloring;
    };
    std::vector<Counterexample> counterexamples;

    struct Witness {
        std::string key;  // e.g. "a=0,b=1"
        CircularColoring coloring;
    };
    std::vector<Witness> witnesses;
    std::vector<std::string> missing_witnesses;

    bool verified() const { return counterexamples.empty() && missing_witnesses.empty(); }
    nlohmann::json to_json() const;
};

/// Enumerates every valid (4,1)-coloring of K- and checks, by the
/// terminal color difference mod 4: 0 -> acyclic with no directed path
/// between the terminals; 1 -> acyclic with a path v1 -> v2; 3 -> acyclic
/// with a path v2 -> v1; 2 -> cyclic.
LemmaReport verify_lemma_k_minus();

/// Clause (a): every valid (4,1)-coloring of H with c(a) = c(b) = t has a
/// cyclic orientation digraph, for all t in 0..3. Clause (b): for every
/// ordered pair of distinct colors x, y in {0,1,2} there is a coloring
/// with c(a) = x, c(b) = y whose digraph is acyclic and has no directed
/// path from the higher-colored terminal to the lower-colored one. The
/// six stored witnesses back the reduction pipelines.
LemmaReport verify_lemma_h();

/// For every pair (x, y) in [0, kn-1)^2: a (kn-1, k)-coloring of the
/// clique gadget with c(a) = x, c(b) = y exists iff x != y. Stores one
/// witness per satisfiable pair.
LemmaReport verify_lemma_k(int n, int k);

/// First coloring, in lexicographic order, of H with c(a) = x, c(b) = y
/// (x != y, both in 0..2) whose digraph is acyclic and has no directed
/// path from the higher-colored terminal to the lower-colored one.
std::optional<CircularColoring> lemma_h_witness(int x, int y);

/// The closed-form (kn-1, k)-coloring of the clique gadget with
/// c(a) = x, c(b) = y, for arbitrary distinct colors: the two-case
/// construction for (0, d) composed with rotation and, when d > p/2,
/// reflection of the color circle. Colors are ordered a, b, v1..v_{n-1}.
std::vector<int> lemma_k_closed_form(int n, int k, int x, int y);

}  // namespace circc
