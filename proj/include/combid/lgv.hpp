#pragma once

// Paths and path systems in acyclic digraphs; the path-matrix lemma for
// determinants and its unsigned analogue for permanents.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "digraph.hpp"
#include "error.hpp"
#include "matrix.hpp"
#include "ring.hpp"

namespace combid {

inline constexpr std::size_t path_system_size_cap = 5;
inline constexpr std::size_t path_system_budget = 1'000'000;

struct Path {
    std::size_t source = 0;
    std::size_t sink = 0;
    std::vector<std::size_t> edges;

    friend auto operator<=>(const Path &, const Path &) = default;
};

// Paths[i] runs from sources[i] to sinks[sigma[i]].
struct PathSystem {
    std::vector<std::size_t> sigma;
    std::vector<Path> paths;
    int sign = 1;

    friend auto operator<=>(const PathSystem &, const PathSystem &) = default;
};

template <class T>
bool is_acyclic(const Digraph<T> &g)
{
    std::vector<std::size_t> indeg(g.vertex_count(), 0);
    for (const auto &e : g.edges())
        ++indeg[e.head];
    std::vector<std::size_t> ready;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (indeg[v] == 0)
            ready.push_back(v);
    std::size_t seen = 0;
    while (!ready.empty()) {
        const std::size_t v = ready.back();
        ready.pop_back();
        ++seen;
        for (auto e : g.out_edges(v))
            if (--indeg[g.edge(e).head] == 0)
                ready.push_back(g.edge(e).head);
    }
    return seen == g.vertex_count();
}

template <class T>
std::vector<std::size_t> topological_order(const Digraph<T> &g)
{
    std::vector<std::size_t> indeg(g.vertex_count(), 0);
    for (const auto &e : g.edges())
        ++indeg[e.head];
    std::vector<std::size_t> order;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (indeg[v] == 0)
            order.push_back(v);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (auto e : g.out_edges(order[i]))
            if (--indeg[g.edge(e).head] == 0)
                order.push_back(g.edge(e).head);
    if (order.size() != g.vertex_count())
        throw input_error("digraph has a directed cycle; an acyclic digraph is required");
    return order;
}

// Vertices on a path, source first.
template <class T>
std::vector<std::size_t> path_vertices(const Digraph<T> &g, const Path &p)
{
    std::vector<std::size_t> vs{p.source};
    for (auto e : p.edges)
        vs.push_back(g.edge(e).head);
    return vs;
}

template <class T>
T weight_of(const Digraph<T> &g, const PathSystem &s)
{
    T w = ring_one<T>();
    for (const auto &p : s.paths)
        w *= weight_of(g, p.edges);
    return w;
}

inline int permutation_sign(const std::vector<std::size_t> &sigma)
{
    int sign = 1;
    for (std::size_t i = 0; i < sigma.size(); ++i)
        for (std::size_t j = i + 1; j < sigma.size(); ++j)
            if (sigma[i] > sigma[j])
                sign = -sign;
    return sign;
}

// All directed paths a -> b, ordered lexicographically by edge ids.
// a == b gives the single empty path.
template <class T>
std::vector<Path> enumerate_paths(const Digraph<T> &g, std::size_t a, std::size_t b)
{
    if (a >= g.vertex_count() || b >= g.vertex_count())
        throw input_error("path endpoint outside the vertex range");
    if (!is_acyclic(g))
        throw input_error("digraph has a directed cycle; an acyclic digraph is required");
    std::vector<Path> out;
    std::vector<std::size_t> edges;
    auto dfs = [&](auto &&self, std::size_t at) -> void {
        if (at == b) {
            out.push_back({a, b, edges});
            if (out.size() > path_system_budget)
                throw cap_exceeded("path enumeration exceeded " + std::to_string(path_system_budget) + " paths");
            return;
        }
        for (auto e : g.out_edges(at)) {
            edges.push_back(e);
            self(self, g.edge(e).head);
            edges.pop_back();
        }
    };
    dfs(dfs, a);
    return out;
}

// m_ij = total weight of paths sources[i] -> sinks[j], accumulated along a
// topological order.
template <class T>
Matrix<T> path_matrix(const Digraph<T> &g, const std::vector<std::size_t> &sources,
                      const std::vector<std::size_t> &sinks)
{
    if (sources.size() != sinks.size())
        throw input_error("source and sink lists differ in length");
    for (auto v : sources)
        if (v >= g.vertex_count())
            throw input_error("source vertex outside the vertex range");
    for (auto v : sinks)
        if (v >= g.vertex_count())
            throw input_error("sink vertex outside the vertex range");
    const auto order = topological_order(g);
    Matrix<T> m(sources.size(), sinks.size());
    for (std::size_t i = 0; i < sources.size(); ++i) {
        std::vector<T> reach(g.vertex_count(), ring_zero<T>());
        reach[sources[i]] = ring_one<T>();
        for (auto v : order) {
            if (is_zero(reach[v]))
                continue;
            for (auto e : g.out_edges(v))
                reach[g.edge(e).head] += reach[v] * g.edge(e).weight;
        }
        for (std::size_t j = 0; j < sinks.size(); ++j)
            m(i, j) = reach[sinks[j]];
    }
    return m;
}

// Visits every path system (or only the vertex-disjoint ones), permutations
// in lexicographic order and paths in enumerate_paths order within each.
template <class T, class Visit>
void for_each_path_system(const Digraph<T> &g, const std::vector<std::size_t> &sources,
                          const std::vector<std::size_t> &sinks, bool vertex_disjoint_only, Visit &&visit)
{
    const std::size_t n = sources.size();
    if (sinks.size() != n)
        throw input_error("source and sink lists differ in length");
    if (n > path_system_size_cap)
        throw cap_exceeded("path systems limited to " + std::to_string(path_system_size_cap) + " paths");

    std::vector<std::vector<std::vector<Path>>> paths(n);
    std::vector<std::vector<std::vector<std::vector<std::size_t>>>> verts(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            paths[i].push_back(enumerate_paths(g, sources[i], sinks[j]));
            auto &vs = verts[i].emplace_back();
            for (const auto &p : paths[i].back())
                vs.push_back(path_vertices(g, p));
        }
    }

    std::size_t produced = 0;
    std::size_t steps = 0;
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});
    std::vector<unsigned> used(g.vertex_count(), 0);
    PathSystem sys;
    sys.paths.resize(n);
    do {
        sys.sigma = sigma;
        sys.sign = permutation_sign(sigma);
        auto rec = [&](auto &&self, std::size_t i) -> void {
            if (++steps > 20 * path_system_budget)
                throw cap_exceeded("path system search exceeded its step budget");
            if (i == n) {
                if (++produced > path_system_budget)
                    throw cap_exceeded("path system enumeration exceeded " + std::to_string(path_system_budget) +
                                       " systems");
                visit(static_cast<const PathSystem &>(sys));
                return;
            }
            const auto &cands = paths[i][sigma[i]];
            for (std::size_t k = 0; k < cands.size(); ++k) {
                const auto &vs = verts[i][sigma[i]][k];
                if (vertex_disjoint_only &&
                    std::any_of(vs.begin(), vs.end(), [&](std::size_t v) { return used[v] != 0; }))
                    continue;
                for (auto v : vs)
                    ++used[v];
                sys.paths[i] = cands[k];
                self(self, i + 1);
                for (auto v : vs)
                    --used[v];
            }
        };
        rec(rec, 0);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
}

template <class T>
std::vector<PathSystem> enumerate_path_systems(const Digraph<T> &g, const std::vector<std::size_t> &sources,
                                               const std::vector<std::size_t> &sinks, bool vertex_disjoint_only)
{
    std::vector<PathSystem> out;
    for_each_path_system(g, sources, sinks, vertex_disjoint_only, [&](const PathSystem &s) { out.push_back(s); });
    return out;
}

template <class T>
bool is_vertex_disjoint(const Digraph<T> &g, const PathSystem &s)
{
    std::vector<std::size_t> all;
    for (const auto &p : s.paths) {
        auto vs = path_vertices(g, p);
        all.insert(all.end(), vs.begin(), vs.end());
    }
    std::sort(all.begin(), all.end());
    return std::adjacent_find(all.begin(), all.end()) == all.end();
}

template <class T>
struct LgvReport {
    Matrix<T> path_matrix;
    T det = ring_zero<T>();
    T vd_signed_sum = ring_zero<T>();
    T all_signed_sum = ring_zero<T>();
    std::size_t vd_systems = 0;
    std::size_t all_systems = 0;

    bool ok() const { return det == vd_signed_sum && det == all_signed_sum; }
};

// det(path matrix) against the signed sums over vertex-disjoint path systems
// and over all path systems.
template <class T>
LgvReport<T> lgv_check(const Digraph<T> &g, const std::vector<std::size_t> &sources,
                       const std::vector<std::size_t> &sinks)
{
    LgvReport<T> rep;
    rep.path_matrix = path_matrix(g, sources, sinks);
    rep.det = det(rep.path_matrix);
    for_each_path_system(g, sources, sinks, false, [&](const PathSystem &s) {
        const T w = weight_of(g, s);
        ++rep.all_systems;
        if (s.sign > 0)
            rep.all_signed_sum += w;
        else
            rep.all_signed_sum -= w;
        if (is_vertex_disjoint(g, s)) {
            ++rep.vd_systems;
            if (s.sign > 0)
                rep.vd_signed_sum += w;
            else
                rep.vd_signed_sum -= w;
        }
    });
    return rep;
}

template <class T>
struct PerReport {
    Matrix<T> path_matrix;
    T per = ring_zero<T>();
    T system_sum = ring_zero<T>();
    std::size_t systems = 0;

    bool ok() const { return per == system_sum; }
};

// per(path matrix) against the unsigned sum over all path systems.
template <class T>
PerReport<T> per_check(const Digraph<T> &g, const std::vector<std::size_t> &sources,
                       const std::vector<std::size_t> &sinks)
{
    PerReport<T> rep;
    rep.path_matrix = path_matrix(g, sources, sinks);
    rep.per = per(rep.path_matrix);
    for_each_path_system(g, sources, sinks, false, [&](const PathSystem &s) {
        ++rep.systems;
        rep.system_sum += weight_of(g, s);
    });
    return rep;
}

} // namespace combid
