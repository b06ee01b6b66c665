#pragma once

#include <string>
#include <vector>

#include "core/graph.hpp"
#include "core/solver.hpp"

namespace circc {

/// Exact fraction p/q in lowest terms, den >= 1. Comparisons
/// cross-multiply in 128-bit arithmetic; no floating point anywhere.
struct Ratio {
    long long num = 0;
    long long den = 1;

    /// Reduces num/den; requires num >= 0 and den >= 1.
    static Ratio of(long long num, long long den);

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

    friend bool operator==(const Ratio& a, const Ratio& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Ratio& a, const Ratio& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Ratio& a, const Ratio& b) { return !(b < a); }
    friend bool operator>(const Ratio& a, const Ratio& b) { return b < a; }
    friend bool operator>=(const Ratio& a, const Ratio& b) { return !(a < b); }
};

/// All reduced fractions p/q with q <= max_den and chi-1 < p/q <= chi,
/// strictly ascending. These are the only possible values of the circular
/// chromatic number of a graph with chromatic number chi and at most
/// max_den vertices.
std::vector<Ratio> candidate_fractions(int max_den, int chi);

struct ChiCResult {
    Ratio value;
    CircularColoring witness;  // a valid (value.num, value.den)-coloring
};

/// Exact circular chromatic number: the smallest feasible candidate
/// fraction. 1/1 for edgeless nonempty graphs; the 0-vertex graph is an
/// error.
ChiCResult circular_chromatic_number_with_witness(const Graph& g);
Ratio circular_chromatic_number(const Graph& g);

/// Strict-inequality test: chi_c(g) < r iff some (r.num, r.den)-coloring
/// has an acyclic orientation digraph. Independent of the candidate scan.
bool chi_c_strictly_less(const Graph& g, const Ratio& r);

}  // namespace circc
