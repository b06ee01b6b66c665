#include "core/solver.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>

namespace circc {

namespace {

// Fixed-width color set, two 64-bit words (kMaxColors = 128).
struct ColorSet {
    uint64_t w0 = 0, w1 = 0;

    static ColorSet full(int p) {
        ColorSet s;
        if (p >= 64) {
            s.w0 = ~0ull;
            s.w1 = p == 64 ? 0 : (p == 128 ? ~0ull : (1ull << (p - 64)) - 1);
        } else {
            s.w0 = (1ull << p) - 1;
        }
        return s;
    }
    static ColorSet single(int c) {
        ColorSet s;
        (c < 64 ? s.w0 : s.w1) |= 1ull << (c & 63);
        return s;
    }
    void set(int c) { (c < 64 ? w0 : w1) |= 1ull << (c & 63); }
    bool test(int c) const { return ((c < 64 ? w0 : w1) >> (c & 63)) & 1; }
    bool empty() const { return w0 == 0 && w1 == 0; }
    bool intersects(const ColorSet& o) const { return (w0 & o.w0) || (w1 & o.w1); }
    ColorSet operator&(const ColorSet& o) const { return {w0 & o.w0, w1 & o.w1}; }
    bool operator==(const ColorSet& o) const = default;

    template <typename Fn>
    void for_each(Fn fn) const {  // ascending color order
        for (uint64_t w = w0; w; w &= w - 1) fn(std::countr_zero(w));
        for (uint64_t w = w1; w; w &= w - 1) fn(64 + std::countr_zero(w));
    }
};

enum class BranchOrder { by_degree, by_index };

void check_parameters(int p, int q) {
    if (p < 1 || q < 1) throw std::invalid_argument("p and q must be positive");
    if (p > kMaxColors)
        throw std::domain_error("p exceeds the solver limit of " + std::to_string(kMaxColors) +
                                " colors");
}

// Backtracking CSP over per-vertex color domains. All edges share one
// binary constraint (the band condition), so compatibility is a single
// table indexed by color. Forward checking plus AC-3 propagation after
// each assignment; both only remove colors that extend to no valid
// completion, so decision answers, enumerated sets, and visit order are
// those of the plain search.
class Search {
public:
    Search(const Graph& g, int p, int q, const PartialAssignment& pins, BranchOrder order,
           bool rotation_break, uint64_t budget)
        : g_(g), p_(p), q_(q), budget_(budget == 0 ? UINT64_MAX : budget) {
        const int n = g.vertex_count();
        compat_.resize(p_);
        for (int c1 = 0; c1 < p_; ++c1)
            for (int c2 = 0; c2 < p_; ++c2) {
                const int d = c1 < c2 ? c2 - c1 : c1 - c2;
                if (d >= q_ && d <= p_ - q_) compat_[c1].set(c2);
            }

        dom_.assign(n, ColorSet::full(p_));
        std::vector<char> pinned(n, 0);
        for (const auto& [v, c] : pins) {
            if (v < 0 || v >= n) throw std::invalid_argument("pinned vertex out of range");
            if (c < 0 || c >= p_) throw std::invalid_argument("pinned color out of range");
            if (pinned[v]) throw std::invalid_argument("vertex pinned twice");
            pinned[v] = 1;
            dom_[v] = ColorSet::single(c);
        }

        order_.resize(n);
        std::iota(order_.begin(), order_.end(), 0);
        if (order == BranchOrder::by_degree)
            std::stable_sort(order_.begin(), order_.end(),
                             [&](int a, int b) { return g.degree(a) > g.degree(b); });
        if (rotation_break && pins.empty() && n > 0) dom_[order_[0]] = ColorSet::single(0);

        assignment_.assign(n, -1);
    }

    // Runs the search; fn is called at each leaf and returns false to stop.
    // Returns true when stopped early (by fn or by the budget).
    bool run(const std::function<bool(const std::vector<int>&)>& fn) {
        if (p_ < 2 * q_ && g_.edge_count() > 0) return false;  // empty band
        if (!initial_consistency()) return false;
        return dfs(0, fn);
    }

    uint64_t nodes() const { return nodes_; }
    bool budget_hit() const { return budget_hit_; }

private:
    bool initial_consistency() {
        std::deque<std::pair<int, int>> queue;
        for (const auto& [u, v] : g_.edges()) {
            queue.push_back({u, v});
            queue.push_back({v, u});
        }
        return ac3(queue);
    }

    // Drop colors of x without support in dom[y]; enqueue affected arcs.
    bool ac3(std::deque<std::pair<int, int>>& queue) {
        while (!queue.empty()) {
            auto [x, y] = queue.front();
            queue.pop_front();
            ColorSet nd;
            dom_[x].for_each([&](int c) {
                if (compat_[c].intersects(dom_[y])) nd.set(c);
            });
            if (nd == dom_[x]) continue;
            trail_.push_back({x, dom_[x]});
            dom_[x] = nd;
            if (nd.empty()) return false;
            for (int z : g_.neighbors(x))
                if (z != y) queue.push_back({z, x});
        }
        return true;
    }

    bool propagate_assignment(int v) {
        std::deque<std::pair<int, int>> queue;
        for (int w : g_.neighbors(v)) queue.push_back({w, v});
        return ac3(queue);
    }

    bool dfs(size_t pos, const std::function<bool(const std::vector<int>&)>& fn) {
        if (pos == order_.size()) return !fn(assignment_);
        const int v = order_[pos];
        bool stopped = false;
        dom_[v].for_each([&](int c) {
            if (stopped) return;
            if (++nodes_ > budget_) {
                budget_hit_ = true;
                stopped = true;
                return;
            }
            const size_t mark = trail_.size();
            trail_.push_back({v, dom_[v]});
            dom_[v] = ColorSet::single(c);
            assignment_[v] = c;
            if (propagate_assignment(v) && dfs(pos + 1, fn)) stopped = true;
            assignment_[v] = -1;
            while (trail_.size() > mark) {
                dom_[trail_.back().first] = trail_.back().second;
                trail_.pop_back();
            }
        });
        return stopped;
    }

    const Graph& g_;
    int p_, q_;
    std::vector<ColorSet> compat_;
    std::vector<ColorSet> dom_;
    std::vector<int> order_;
    std::vector<int> assignment_;
    std::vector<std::pair<int, ColorSet>> trail_;
    uint64_t nodes_ = 0;
    uint64_t budget_;
    bool budget_hit_ = false;
};

}  // namespace

bool is_valid_coloring(const Graph& g, const CircularColoring& c) {
    if (c.p < 1 || c.q < 1) throw std::invalid_argument("p and q must be positive");
    if (static_cast<int>(c.colors.size()) != g.vertex_count())
        throw std::invalid_argument("coloring length does not match vertex count");
    for (int color : c.colors)
        if (color < 0 || color >= c.p) return false;
    for (const auto& [u, v] : g.edges()) {
        const int d = std::abs(c.colors[u] - c.colors[v]);
        if (d < c.q || d > c.p - c.q) return false;
    }
    return true;
}

std::optional<CircularColoring> find_pq_coloring(const Graph& g, int p, int q,
                                                 const PartialAssignment& pins) {
    check_parameters(p, q);
    Search search(g, p, q, pins, BranchOrder::by_degree, /*rotation_break=*/true, 0);
    std::optional<CircularColoring> result;
    search.run([&](const std::vector<int>& colors) {
        result = CircularColoring{p, q, colors};
        return false;
    });
    return result;
}

BudgetedSearchResult find_pq_coloring_budgeted(const Graph& g, int p, int q,
                                               const PartialAssignment& pins,
                                               uint64_t node_budget) {
    check_parameters(p, q);
    Search search(g, p, q, pins, BranchOrder::by_degree, /*rotation_break=*/true, node_budget);
    BudgetedSearchResult res;
    search.run([&](const std::vector<int>& colors) {
        res.coloring = CircularColoring{p, q, colors};
        return false;
    });
    res.nodes_visited = search.nodes();
    res.verdict = res.coloring   ? SearchVerdict::found
                  : search.budget_hit() ? SearchVerdict::budget_exhausted
                                        : SearchVerdict::exhausted;
    return res;
}

void for_each_pq_coloring(const Graph& g, int p, int q, const PartialAssignment& pins,
                          const std::function<bool(const CircularColoring&)>& fn) {
    check_parameters(p, q);
    // Index order makes the visit sequence lexicographic in the color vector.
    Search search(g, p, q, pins, BranchOrder::by_index, /*rotation_break=*/false, 0);
    search.run([&](const std::vector<int>& colors) {
        return fn(CircularColoring{p, q, colors});
    });
}

std::vector<CircularColoring> enumerate_pq_colorings(const Graph& g, int p, int q,
                                                     const PartialAssignment& pins) {
    std::vector<CircularColoring> out;
    for_each_pq_coloring(g, p, q, pins, [&](const CircularColoring& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

uint64_t count_pq_colorings(const Graph& g, int p, int q, const PartialAssignment& pins) {
    uint64_t count = 0;
    for_each_pq_coloring(g, p, q, pins, [&](const CircularColoring&) {
        ++count;
        return true;
    });
    return count;
}

int chromatic_number(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    if (g.edge_count() == 0) return 1;
    for (int k = 2;; ++k)
        if (find_pq_coloring(g, k, 1)) return k;
}

Digraph orientation_digraph(const Graph& g, const CircularColoring& c) {
    if (!is_valid_coloring(g, c)) throw std::invalid_argument("coloring is not valid");
    std::vector<Edge> arcs;
    for (const auto& [x, y] : g.edges()) {
        const int fwd = ((c.colors[y] - c.colors[x]) % c.p + c.p) % c.p;
        const int bwd = ((c.colors[x] - c.colors[y]) % c.p + c.p) % c.p;
        if (fwd == c.q) arcs.push_back({x, y});
        if (bwd == c.q) arcs.push_back({y, x});
    }
    return Digraph(g.vertex_count(), std::move(arcs));
}

bool is_acyclic(const Digraph& d) {
    const int n = d.vertex_count();
    std::vector<int> indeg(n, 0);
    for (const auto& [u, v] : d.arcs()) ++indeg[v];
    std::vector<int> stack;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) stack.push_back(v);
    int processed = 0;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        ++processed;
        for (int w : d.successors(v))
            if (--indeg[w] == 0) stack.push_back(w);
    }
    return processed == n;
}

bool has_directed_path(const Digraph& d, int u, int v) {
    if (u < 0 || u >= d.vertex_count() || v < 0 || v >= d.vertex_count())
        throw std::invalid_argument("vertex index out of range");
    if (u == v) return true;
    std::vector<char> seen(d.vertex_count(), 0);
    std::vector<int> stack{u};
    seen[u] = 1;
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (int w : d.successors(x)) {
            if (w == v) return true;
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return false;
}

std::optional<CircularColoring> find_strict_coloring(const Graph& g, int p, int q) {
    check_parameters(p, q);
    std::optional<CircularColoring> result;
    for_each_pq_coloring(g, p, q, {}, [&](const CircularColoring& c) {
        if (is_acyclic(orientation_digraph(g, c))) {
            result = c;
            return false;
        }
        return true;
    });
    return result;
}

}  // namespace circc
