#pragma once

// Closed walks, linear subdigraphs (vertex-disjoint cycle families) and the
// graph form of the Newton-Girard identities relating their weight sums.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "digraph.hpp"
#include "error.hpp"
#include "matrix.hpp"
#include "ring.hpp"

namespace combid {

inline constexpr std::size_t walk_vertex_cap = 8;
inline constexpr std::size_t walk_length_cap = 12;
inline constexpr std::size_t subdigraph_vertex_cap = 10;
// Upper bound on objects produced by any single enumeration.
inline constexpr std::size_t enumeration_budget = 2'000'000;

using VertexMask = std::uint32_t;

// A closed walk is identified by its start vertex and its edge sequence.
struct ClosedWalk {
    std::size_t start = 0;
    std::vector<std::size_t> edges;

    std::size_t length() const { return edges.size(); }
    friend auto operator<=>(const ClosedWalk &, const ClosedWalk &) = default;
};

// Vertex-disjoint directed cycles. Each cycle is an edge sequence beginning
// at its smallest vertex; cycles are sorted by that vertex.
struct LinearSubdigraph {
    std::vector<std::vector<std::size_t>> cycles;

    std::size_t cycle_count() const { return cycles.size(); }

    std::size_t length() const
    {
        std::size_t l = 0;
        for (const auto &c : cycles)
            l += c.size();
        return l;
    }

    bool empty() const { return cycles.empty(); }
    friend auto operator<=>(const LinearSubdigraph &, const LinearSubdigraph &) = default;
};

// Vertices visited by an edge sequence, one per edge (the tails).
template <class T>
std::vector<std::size_t> tail_sequence(const Digraph<T> &g, const std::vector<std::size_t> &edges)
{
    std::vector<std::size_t> vs;
    vs.reserve(edges.size());
    for (auto e : edges)
        vs.push_back(g.edge(e).tail);
    return vs;
}

template <class T>
bool is_closed_walk(const Digraph<T> &g, const ClosedWalk &w)
{
    if (w.edges.empty())
        return false;
    std::size_t at = w.start;
    for (auto e : w.edges) {
        if (e >= g.edge_count() || g.edge(e).tail != at)
            return false;
        at = g.edge(e).head;
    }
    return at == w.start;
}

template <class T>
VertexMask vertex_mask(const Digraph<T> &g, const std::vector<std::size_t> &edges)
{
    VertexMask m = 0;
    for (auto e : edges)
        m |= VertexMask{1} << g.edge(e).tail;
    return m;
}

template <class T>
VertexMask vertex_mask(const Digraph<T> &g, const LinearSubdigraph &s)
{
    VertexMask m = 0;
    for (const auto &c : s.cycles)
        m |= vertex_mask(g, c);
    return m;
}

template <class T>
T weight_of(const Digraph<T> &g, const ClosedWalk &w)
{
    return weight_of(g, w.edges);
}

template <class T>
T weight_of(const Digraph<T> &g, const LinearSubdigraph &s)
{
    T w = ring_one<T>();
    for (const auto &c : s.cycles)
        w *= weight_of(g, c);
    return w;
}

// (-1)^c(s) * w(s)
template <class T>
T signed_weight(const Digraph<T> &g, const LinearSubdigraph &s)
{
    T w = weight_of(g, s);
    return s.cycle_count() % 2 == 0 ? w : T(-w);
}

// Rotate a cycle so it starts at the given vertex, which must lie on it.
template <class T>
std::vector<std::size_t> rotate_cycle_to(const Digraph<T> &g, const std::vector<std::size_t> &cycle, std::size_t v)
{
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (g.edge(cycle[i]).tail == v) {
            std::vector<std::size_t> out(cycle.begin() + static_cast<std::ptrdiff_t>(i), cycle.end());
            out.insert(out.end(), cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(i));
            return out;
        }
    }
    throw input_error("vertex " + std::to_string(v) + " is not on the cycle");
}

template <class T>
std::vector<std::size_t> canonical_cycle(const Digraph<T> &g, const std::vector<std::size_t> &cycle)
{
    const auto vs = tail_sequence(g, cycle);
    return rotate_cycle_to(g, cycle, *std::min_element(vs.begin(), vs.end()));
}

// Sorts cycles into canonical order after rotating each one.
template <class T>
LinearSubdigraph canonical(const Digraph<T> &g, LinearSubdigraph s)
{
    for (auto &c : s.cycles)
        c = canonical_cycle(g, c);
    std::sort(s.cycles.begin(), s.cycles.end(), [&](const auto &a, const auto &b) {
        return g.edge(a.front()).tail < g.edge(b.front()).tail;
    });
    return s;
}

namespace detail {

inline void check_walk_caps(std::size_t n, std::size_t r)
{
    if (r == 0)
        throw input_error("closed walks have length at least 1");
    if (n > walk_vertex_cap || r > walk_length_cap)
        throw cap_exceeded("closed walk enumeration limited to " + std::to_string(walk_vertex_cap) +
                           " vertices and length " + std::to_string(walk_length_cap));
}

template <class T, class Visit>
void for_each_closed_walk(const Digraph<T> &g, std::size_t r, Visit &&visit)
{
    std::size_t produced = 0;
    std::vector<std::size_t> path;
    path.reserve(r);
    for (std::size_t s = 0; s < g.vertex_count(); ++s) {
        auto dfs = [&](auto &&self, std::size_t at) -> void {
            if (path.size() == r) {
                if (at == s) {
                    if (++produced > enumeration_budget)
                        throw cap_exceeded("closed walk enumeration exceeded " + std::to_string(enumeration_budget) +
                                           " walks");
                    visit(s, path);
                }
                return;
            }
            for (auto e : g.out_edges(at)) {
                path.push_back(e);
                self(self, g.edge(e).head);
                path.pop_back();
            }
        };
        dfs(dfs, s);
    }
}

// Every directed cycle once, starting at its smallest vertex; ordered by
// that vertex, then by edge sequence.
template <class T>
std::vector<std::vector<std::size_t>> simple_cycles(const Digraph<T> &g)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> path;
    for (std::size_t s = 0; s < g.vertex_count(); ++s) {
        VertexMask used = VertexMask{1} << s;
        auto dfs = [&](auto &&self, std::size_t at) -> void {
            for (auto e : g.out_edges(at)) {
                const std::size_t h = g.edge(e).head;
                if (h == s) {
                    path.push_back(e);
                    out.push_back(path);
                    path.pop_back();
                    if (out.size() > enumeration_budget)
                        throw cap_exceeded("cycle enumeration exceeded " + std::to_string(enumeration_budget) + " cycles");
                } else if (h > s && !(used & (VertexMask{1} << h))) {
                    used |= VertexMask{1} << h;
                    path.push_back(e);
                    self(self, h);
                    path.pop_back();
                    used &= ~(VertexMask{1} << h);
                }
            }
        };
        dfs(dfs, s);
    }
    return out;
}

// Calls visit(sub) for every linear subdigraph with total length in
// [min_len, max_len], in canonical order.
template <class T, class Visit>
void for_each_linear_subdigraph(const Digraph<T> &g, std::size_t min_len, std::size_t max_len, Visit &&visit)
{
    if (g.vertex_count() > subdigraph_vertex_cap)
        throw cap_exceeded("linear subdigraph enumeration limited to " + std::to_string(subdigraph_vertex_cap) +
                           " vertices");
    const auto cycles = simple_cycles(g);
    std::vector<VertexMask> masks;
    masks.reserve(cycles.size());
    for (const auto &c : cycles)
        masks.push_back(vertex_mask(g, c));

    std::size_t produced = 0;
    LinearSubdigraph current;
    auto rec = [&](auto &&self, std::size_t from, VertexMask used, std::size_t len) -> void {
        if (len >= min_len) {
            if (++produced > enumeration_budget)
                throw cap_exceeded("linear subdigraph enumeration exceeded " + std::to_string(enumeration_budget));
            visit(static_cast<const LinearSubdigraph &>(current));
        }
        for (std::size_t i = from; i < cycles.size(); ++i) {
            if ((masks[i] & used) != 0 || len + cycles[i].size() > max_len)
                continue;
            current.cycles.push_back(cycles[i]);
            self(self, i + 1, used | masks[i], len + cycles[i].size());
            current.cycles.pop_back();
        }
    };
    rec(rec, 0, 0, 0);
}

} // namespace detail

// All closed walks of length exactly r, by start vertex and then by
// lexicographic edge sequence.
template <class T>
std::vector<ClosedWalk> enumerate_closed_walks(const Digraph<T> &g, std::size_t r)
{
    detail::check_walk_caps(g.vertex_count(), r);
    std::vector<ClosedWalk> out;
    detail::for_each_closed_walk(g, r, [&](std::size_t s, const std::vector<std::size_t> &edges) {
        out.push_back({s, edges});
    });
    return out;
}

// Sum of closed-walk weights obtained by walking the graph; the
// combinatorial counterpart of closed_walk_sum.
template <class T>
T closed_walk_sum_enumerated(const Digraph<T> &g, std::size_t r)
{
    detail::check_walk_caps(g.vertex_count(), r);
    T total = ring_zero<T>();
    detail::for_each_closed_walk(g, r, [&](std::size_t, const std::vector<std::size_t> &edges) {
        total += weight_of(g, edges);
    });
    return total;
}

// c_r = trace(A^r), defined for every r.
template <class T>
T closed_walk_sum(const Digraph<T> &g, std::size_t r)
{
    return trace(mat_pow(adjacency_matrix(g), r));
}

// c_1..c_rmax by successive multiplication.
template <class T>
std::vector<T> closed_walk_sums(const Digraph<T> &g, std::size_t rmax)
{
    const Matrix<T> a = adjacency_matrix(g);
    std::vector<T> out;
    out.reserve(rmax);
    Matrix<T> p = a;
    for (std::size_t r = 1; r <= rmax; ++r) {
        if (r > 1)
            p = mat_mul(p, a);
        out.push_back(trace(p));
    }
    return out;
}

template <class T>
std::vector<LinearSubdigraph> enumerate_linear_subdigraphs(const Digraph<T> &g, std::size_t r)
{
    std::vector<LinearSubdigraph> out;
    detail::for_each_linear_subdigraph(g, r, r, [&](const LinearSubdigraph &s) {
        if (s.length() == r)
            out.push_back(s);
    });
    return out;
}

// l_r: sum over linear subdigraphs of length r of (-1)^c * weight.
template <class T>
T linear_sub_signed_sum(const Digraph<T> &g, std::size_t r)
{
    T total = ring_zero<T>();
    detail::for_each_linear_subdigraph(g, r, r, [&](const LinearSubdigraph &s) {
        if (s.length() == r)
            total += signed_weight(g, s);
    });
    return total;
}

// l_1..l_kmax from a single enumeration.
template <class T>
std::vector<T> linear_sub_signed_sums(const Digraph<T> &g, std::size_t kmax)
{
    std::vector<T> out(kmax, ring_zero<T>());
    detail::for_each_linear_subdigraph(g, 1, kmax, [&](const LinearSubdigraph &s) {
        out[s.length() - 1] += signed_weight(g, s);
    });
    return out;
}

// Left-hand side of the graph Newton-Girard identity at r:
//   r >  n:  c_r + c_{r-1} l_1 + ... + c_{r-n} l_n
//   r <= n:  c_r + c_{r-1} l_1 + ... + c_1 l_{r-1} + r l_r
// Zero for every digraph.
template <class T>
T newton_residual(const Digraph<T> &g, std::size_t r)
{
    if (r == 0)
        throw input_error("newton_residual is defined for r >= 1");
    const std::size_t n = g.vertex_count();
    const auto c = closed_walk_sums(g, r);
    const auto l = linear_sub_signed_sums(g, std::min(n, r));
    T res = c[r - 1];
    if (r > n) {
        for (std::size_t k = 1; k <= n; ++k)
            res += c[r - k - 1] * l[k - 1];
    } else {
        for (std::size_t k = 1; k < r; ++k)
            res += c[r - k - 1] * l[k - 1];
        res += T(static_cast<int>(r)) * l[r - 1];
    }
    return res;
}

template <class T>
struct NewtonCorollaryReport {
    std::vector<T> coefficients;  // e_1..e_n
    std::vector<T> power_sums;    // p_1..p_rmax as closed-walk sums
    std::vector<T> residuals;     // newton_residual for r = 1..rmax
    std::vector<T> signed_sums;   // l_1..l_n of the companion digraph

    bool coefficients_match() const { return signed_sums == coefficients; }

    bool residuals_vanish() const
    {
        return std::all_of(residuals.begin(), residuals.end(), [](const T &v) { return is_zero(v); });
    }

    bool ok() const { return coefficients_match() && residuals_vanish(); }
};

// Classical Newton identities for the roots of x^n + e1 x^(n-1) + ... + en,
// checked on the companion digraph where c_r = p_r and l_k = e_k.
template <class T>
NewtonCorollaryReport<T> newton_corollary_check(const std::vector<T> &e, std::size_t rmax)
{
    NewtonCorollaryReport<T> rep;
    rep.coefficients = e;
    const auto g = companion_digraph(e);
    rep.power_sums = closed_walk_sums(g, rmax);
    for (std::size_t r = 1; r <= rmax; ++r)
        rep.residuals.push_back(newton_residual(g, r));
    rep.signed_sums = linear_sub_signed_sums(g, e.size());
    return rep;
}

} // namespace combid
