#pragma once

// Sign-reversing involution on (closed walk, linear subdigraph) pairs that
// cancels every BAD pair in the graph Newton-Girard identity, together with
// an exhaustive checker for its claimed properties.

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "digraph.hpp"
#include "error.hpp"
#include "ring.hpp"
#include "walks.hpp"

namespace combid {

inline constexpr std::size_t involution_vertex_cap = 4;
inline constexpr std::size_t involution_length_cap = 6;

struct WalkCyclePair {
    ClosedWalk walk;
    LinearSubdigraph sub;

    std::size_t length() const { return walk.length() + sub.length(); }
    friend auto operator<=>(const WalkCyclePair &, const WalkCyclePair &) = default;
};

enum class PairClass { good, shares_vertex, not_simple };

inline bool is_bad(PairClass c) { return c != PairClass::good; }

inline const char *to_string(PairClass c)
{
    switch (c) {
    case PairClass::good:
        return "GOOD";
    case PairClass::shares_vertex:
        return "BAD/SHARES_VERTEX";
    case PairClass::not_simple:
        return "BAD/NOT_SIMPLE";
    }
    return "?";
}

// W(c, g) = (-1)^c(g) w(c) w(g)
template <class T>
T pair_weight(const Digraph<T> &g, const WalkCyclePair &p)
{
    return weight_of(g, p.walk) * signed_weight(g, p.sub);
}

// GOOD iff the walk runs once around a directed cycle and avoids every
// vertex of the subdigraph. A pair failing both tests reports SHARES_VERTEX.
template <class T>
PairClass classify(const Digraph<T> &g, const WalkCyclePair &p)
{
    const auto vs = tail_sequence(g, p.walk.edges);
    const VertexMask sub = vertex_mask(g, p.sub);
    VertexMask seen = 0;
    bool simple = true;
    for (auto v : vs) {
        if (seen & (VertexMask{1} << v))
            simple = false;
        seen |= VertexMask{1} << v;
    }
    if (seen & sub)
        return PairClass::shares_vertex;
    return simple ? PairClass::good : PairClass::not_simple;
}

namespace detail {

struct ScanEvent {
    bool meets_sub;      // first event is reaching a vertex of the subdigraph
    std::size_t time;    // position in the walk where it fires
    std::size_t earlier; // first visit of the repeated vertex (cycle case)
};

// Walk from the start vertex, time 0 included. On each arrival test
// membership in the subdigraph first, then an earlier visit on the walk.
template <class T>
ScanEvent first_event(const Digraph<T> &g, const WalkCyclePair &p)
{
    const VertexMask sub = vertex_mask(g, p.sub);
    const std::size_t len = p.walk.length();
    std::vector<std::size_t> first_seen(g.vertex_count(), len + 1);
    for (std::size_t t = 0; t <= len; ++t) {
        const std::size_t v = t < len ? g.edge(p.walk.edges[t]).tail : p.walk.start;
        if (sub & (VertexMask{1} << v))
            return {true, t, 0};
        if (first_seen[v] <= len)
            return {false, t, first_seen[v]};
        first_seen[v] = t;
    }
    throw input_error("malformed closed walk");
}

} // namespace detail

// The cancelling map on BAD pairs.
//  - Meeting a vertex y of the subdigraph first: splice the cycle through y
//    into the walk at y and drop it from the subdigraph.
//  - Closing a cycle first: cut that cycle out of the walk and add it to the
//    subdigraph.
template <class T>
WalkCyclePair involution_step(const Digraph<T> &g, const WalkCyclePair &p)
{
    if (classify(g, p) == PairClass::good)
        throw input_error("involution_step is undefined on GOOD pairs");
    const auto ev = detail::first_event(g, p);
    const auto &edges = p.walk.edges;
    const auto at = [&](std::size_t i) { return edges.begin() + static_cast<std::ptrdiff_t>(i); };
    WalkCyclePair q;
    q.walk.start = p.walk.start;
    if (ev.meets_sub) {
        const std::size_t y = ev.time < edges.size() ? g.edge(edges[ev.time]).tail : p.walk.start;
        std::size_t which = p.sub.cycles.size();
        for (std::size_t i = 0; i < p.sub.cycles.size(); ++i)
            if (vertex_mask(g, p.sub.cycles[i]) & (VertexMask{1} << y))
                which = i;
        const auto spliced = rotate_cycle_to(g, p.sub.cycles.at(which), y);
        q.walk.edges.assign(edges.begin(), at(ev.time));
        q.walk.edges.insert(q.walk.edges.end(), spliced.begin(), spliced.end());
        q.walk.edges.insert(q.walk.edges.end(), at(ev.time), edges.end());
        q.sub = p.sub;
        q.sub.cycles.erase(q.sub.cycles.begin() + static_cast<std::ptrdiff_t>(which));
    } else {
        std::vector<std::size_t> cycle(at(ev.earlier), at(ev.time));
        q.walk.edges.assign(edges.begin(), at(ev.earlier));
        q.walk.edges.insert(q.walk.edges.end(), at(ev.time), edges.end());
        q.sub = p.sub;
        q.sub.cycles.push_back(std::move(cycle));
        q.sub = canonical(g, std::move(q.sub));
    }
    return q;
}

// The GOOD pairs arising from one linear subdigraph: for each of its vertices,
// the cycle through it read as a closed walk from there, plus the other cycles.
template <class T>
std::vector<WalkCyclePair> good_members_of(const Digraph<T> &g, const LinearSubdigraph &s)
{
    std::vector<WalkCyclePair> out;
    const VertexMask mask = vertex_mask(g, s);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (!(mask & (VertexMask{1} << v)))
            continue;
        for (std::size_t i = 0; i < s.cycles.size(); ++i) {
            if (!(vertex_mask(g, s.cycles[i]) & (VertexMask{1} << v)))
                continue;
            WalkCyclePair p;
            p.walk = {v, rotate_cycle_to(g, s.cycles[i], v)};
            p.sub = s;
            p.sub.cycles.erase(p.sub.cycles.begin() + static_cast<std::ptrdiff_t>(i));
            out.push_back(std::move(p));
        }
    }
    return out;
}

// Every pair with L(walk) + L(sub) = r, walks of length >= 1.
template <class T>
std::vector<WalkCyclePair> enumerate_pairs(const Digraph<T> &g, std::size_t r)
{
    std::vector<WalkCyclePair> out;
    for (std::size_t j = 1; j <= r; ++j) {
        const auto walks = enumerate_closed_walks(g, j);
        if (walks.empty())
            continue;
        const auto subs = enumerate_linear_subdigraphs(g, r - j);
        for (const auto &w : walks)
            for (const auto &s : subs)
                out.push_back({w, s});
    }
    return out;
}

template <class T>
struct InvolutionReport {
    std::size_t vertices = 0;
    std::size_t r = 0;
    std::size_t total_pairs = 0;
    std::size_t good_pairs = 0;
    std::size_t bad_pairs = 0;
    T total_weight = ring_zero<T>();
    T good_weight = ring_zero<T>();
    T bad_weight = ring_zero<T>();
    T signed_sum = ring_zero<T>(); // l_r

    // involution_step is a fixed-point-free, weight-negating involution of
    // the BAD pairs onto themselves.
    bool involution_ok = true;
    // r > n: no GOOD pair exists.
    bool all_bad_ok = true;
    // r <= n: GOOD pairs are exactly the good_members_of each length-r
    // subdigraph, and their weight is -r l_r.
    bool good_ok = true;
    // Sum of all pair weights equals the sum of GOOD weights.
    bool cancellation_ok = true;
    std::vector<std::string> failures;

    bool ok() const { return involution_ok && all_bad_ok && good_ok && cancellation_ok; }
};

// Exhaustive certificate of the involution argument on one graph and length.
template <class T>
InvolutionReport<T> verify_theorem_proof(const Digraph<T> &g, std::size_t r)
{
    if (g.vertex_count() > involution_vertex_cap || r > involution_length_cap)
        throw cap_exceeded("involution check limited to " + std::to_string(involution_vertex_cap) +
                           " vertices and r <= " + std::to_string(involution_length_cap));
    if (r == 0)
        throw input_error("involution check needs r >= 1");

    InvolutionReport<T> rep;
    rep.vertices = g.vertex_count();
    rep.r = r;
    const auto pairs = enumerate_pairs(g, r);
    const std::set<WalkCyclePair> domain(pairs.begin(), pairs.end());
    rep.total_pairs = pairs.size();

    auto fail = [&](bool &flag, std::string msg) {
        flag = false;
        if (rep.failures.size() < 16)
            rep.failures.push_back(std::move(msg));
    };

    std::vector<WalkCyclePair> good;
    for (const auto &p : pairs) {
        const T w = pair_weight(g, p);
        rep.total_weight += w;
        if (classify(g, p) == PairClass::good) {
            ++rep.good_pairs;
            rep.good_weight += w;
            good.push_back(p);
            continue;
        }
        ++rep.bad_pairs;
        rep.bad_weight += w;
        const auto q = involution_step(g, p);
        if (q == p)
            fail(rep.involution_ok, "fixed point");
        if (!domain.contains(q))
            fail(rep.involution_ok, "image is not a pair of the same length");
        else if (classify(g, q) == PairClass::good)
            fail(rep.involution_ok, "image of a BAD pair is GOOD");
        else if (involution_step(g, q) != p)
            fail(rep.involution_ok, "step applied twice does not return the pair");
        if (pair_weight(g, q) != T(-w))
            fail(rep.involution_ok, "step does not negate the weight");
    }

    if (!is_zero(rep.bad_weight) || rep.total_weight != rep.good_weight)
        fail(rep.cancellation_ok, "BAD weights do not cancel");

    const std::size_t n = g.vertex_count();
    rep.signed_sum = linear_sub_signed_sum(g, r);
    if (r > n) {
        if (rep.good_pairs != 0)
            fail(rep.all_bad_ok, "GOOD pair found although r > n");
    } else {
        std::vector<WalkCyclePair> expected;
        for (const auto &s : enumerate_linear_subdigraphs(g, r)) {
            auto members = good_members_of(g, s);
            if (members.size() != r)
                fail(rep.good_ok, "subdigraph does not yield exactly r GOOD members");
            expected.insert(expected.end(), members.begin(), members.end());
        }
        std::sort(expected.begin(), expected.end());
        std::sort(good.begin(), good.end());
        if (expected != good)
            fail(rep.good_ok, "GOOD pairs differ from the members generated by L_r");
        if (!is_zero(T(rep.good_weight + T(static_cast<int>(r)) * rep.signed_sum)))
            fail(rep.good_ok, "GOOD weight differs from -r l_r");
    }
    return rep;
}

} // namespace combid
