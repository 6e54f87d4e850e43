#pragma once

// Alternating subset sums of det and per over a tuple of matrices, which
// vanish once the tuple is longer than the matrix order, and the layered
// "boxes" digraph that explains the vanishing by inclusion-exclusion.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "digraph.hpp"
#include "error.hpp"
#include "lgv.hpp"
#include "matrix.hpp"
#include "ring.hpp"

namespace combid {

inline constexpr std::size_t sumident_order_cap = 6;
inline constexpr std::size_t sumident_count_cap = 8;

using SubsetMask = std::uint32_t;

// full_set_positive: sign (-1)^(N-|s|), so N = 3 reads
//   det(A+B+C) - det(A+B) - det(A+C) - det(B+C) + det(A) + det(B) + det(C).
// alternating: sign (-1)^|s|, the same sum times (-1)^N.
enum class SignConvention { full_set_positive, alternating };

template <class T>
void check_tuple(const std::vector<Matrix<T>> &s)
{
    if (s.empty())
        throw input_error("matrix tuple is empty");
    const std::size_t n = s.front().rows();
    if (n == 0)
        throw input_error("matrix tuple entries must have order at least 1");
    for (const auto &m : s)
        if (!m.is_square() || m.rows() != n)
            throw input_error("matrix tuple entries must be square and of equal order");
    if (n > sumident_order_cap || s.size() > sumident_count_cap)
        throw cap_exceeded("matrix tuples limited to order " + std::to_string(sumident_order_cap) + " and length " +
                           std::to_string(sumident_count_cap));
}

// Nonempty subsets of {0..N-1}: by cardinality, then lexicographically.
inline std::vector<SubsetMask> subsets_in_order(std::size_t count)
{
    std::vector<SubsetMask> out;
    for (SubsetMask m = 1; m < (SubsetMask{1} << count); ++m)
        out.push_back(m);
    auto members = [](SubsetMask m) {
        std::vector<int> v;
        for (; m != 0; m &= m - 1)
            v.push_back(std::countr_zero(m));
        return v;
    };
    std::sort(out.begin(), out.end(), [&](SubsetMask a, SubsetMask b) {
        const int pa = std::popcount(a);
        const int pb = std::popcount(b);
        if (pa != pb)
            return pa < pb;
        return members(a) < members(b);
    });
    return out;
}

template <class T>
Matrix<T> subset_sum(const std::vector<Matrix<T>> &s, SubsetMask mask)
{
    Matrix<T> sum(s.front().rows(), s.front().cols());
    for (std::size_t t = 0; t < s.size(); ++t)
        if (mask & (SubsetMask{1} << t))
            sum = sum + s[t];
    return sum;
}

inline bool subset_sign_positive(std::size_t count, SubsetMask mask, SignConvention conv)
{
    const auto k = static_cast<std::size_t>(std::popcount(mask));
    return conv == SignConvention::full_set_positive ? (count - k) % 2 == 0 : k % 2 == 0;
}

namespace detail {

template <class T, class F>
T alternating_sum(const std::vector<Matrix<T>> &s, SignConvention conv, F &&form)
{
    check_tuple(s);
    T total = ring_zero<T>();
    for (auto mask : subsets_in_order(s.size())) {
        T v = form(subset_sum(s, mask));
        if (subset_sign_positive(s.size(), mask, conv))
            total += v;
        else
            total -= v;
    }
    return total;
}

} // namespace detail

// Signed sum over nonempty subsets of det(sum of the chosen matrices).
// Zero whenever the tuple length exceeds the matrix order.
template <class T>
T alternating_sum_det(const std::vector<Matrix<T>> &s, SignConvention conv = SignConvention::full_set_positive)
{
    return detail::alternating_sum(s, conv, [](const Matrix<T> &m) { return det(m); });
}

template <class T>
T alternating_sum_per(const std::vector<Matrix<T>> &s, SignConvention conv = SignConvention::full_set_positive)
{
    return detail::alternating_sum(s, conv, [](const Matrix<T> &m) { return per(m); });
}

// Two rails per index: u(i, t) and v(j, t) for boxes t = 0..N-1. Rail edges
// u(i,t) -> u(i,t+1) and v(j,t) -> v(j,t+1) have weight 1; box t holds the
// crossing edges u(i,t) -> v(j,t) weighted by (A_t)_ij. Every source-to-sink
// path crosses exactly one box, so the path matrix is the sum of the A_t.
template <class T>
struct BoxesDigraph {
    Digraph<T> graph;
    std::vector<std::size_t> sources;
    std::vector<std::size_t> sinks;
    std::vector<int> edge_box; // box of a crossing edge, -1 on rails
    std::size_t n = 0;
    std::size_t count = 0;

    std::size_t u(std::size_t i, std::size_t t) const { return t * 2 * n + i; }
    std::size_t v(std::size_t j, std::size_t t) const { return t * 2 * n + n + j; }

    // Boxes crossed by the paths of a system.
    SubsetMask touched(const PathSystem &s) const
    {
        SubsetMask m = 0;
        for (const auto &p : s.paths)
            for (auto e : p.edges)
                if (edge_box[e] >= 0)
                    m |= SubsetMask{1} << edge_box[e];
        return m;
    }
};

// Crossing edges are laid only in the boxes of `boxes`; by default all.
template <class T>
BoxesDigraph<T> build_boxes_digraph(const std::vector<Matrix<T>> &s, SubsetMask boxes = ~SubsetMask{0})
{
    check_tuple(s);
    BoxesDigraph<T> b;
    b.n = s.front().rows();
    b.count = s.size();
    b.graph = Digraph<T>(2 * b.n * b.count);
    auto add = [&](std::size_t from, std::size_t to, T w, int box) {
        b.graph.add_edge(from, to, std::move(w));
        b.edge_box.push_back(box);
    };
    for (std::size_t t = 0; t < b.count; ++t) {
        if (boxes & (SubsetMask{1} << t))
            for (std::size_t i = 0; i < b.n; ++i)
                for (std::size_t j = 0; j < b.n; ++j)
                    add(b.u(i, t), b.v(j, t), s[t](i, j), static_cast<int>(t));
        if (t + 1 < b.count)
            for (std::size_t i = 0; i < b.n; ++i) {
                add(b.u(i, t), b.u(i, t + 1), ring_one<T>(), -1);
                add(b.v(i, t), b.v(i, t + 1), ring_one<T>(), -1);
            }
    }
    for (std::size_t i = 0; i < b.n; ++i) {
        b.sources.push_back(b.u(i, 0));
        b.sinks.push_back(b.v(i, b.count - 1));
    }
    return b;
}

template <class T>
struct PieReport {
    std::size_t n = 0;
    std::size_t count = 0;
    bool hypothesis_holds = false; // N >= n + 1
    std::size_t systems = 0;
    std::size_t all_boxes_systems = 0;
    T all_boxes_signed = ring_zero<T>();
    T all_boxes_unsigned = ring_zero<T>();
    T alternating_det = ring_zero<T>();
    T alternating_per = ring_zero<T>();
    T alternating_det_theorem_sign = ring_zero<T>();

    // Path matrix of the boxes graph restricted to any subset of boxes is
    // the sum of those matrices.
    bool path_matrix_ok = true;
    // Signed (unsigned) sums over systems confined to a subset of boxes are
    // det (per) of the subset sum.
    bool confined_det_ok = true;
    bool confined_per_ok = true;
    // Inclusion-exclusion over the confined sums recovers the sum over
    // systems touching every box, and equals the alternating sums.
    bool pie_ok = true;

    bool empty_class_ok() const { return !hypothesis_holds || all_boxes_systems == 0; }

    bool ok() const
    {
        const bool vanish = !hypothesis_holds || (is_zero(alternating_det) && is_zero(alternating_per));
        return path_matrix_ok && confined_det_ok && confined_per_ok && pie_ok && empty_class_ok() && vanish;
    }
};

template <class T>
PieReport<T> pie_decomposition_check(const std::vector<Matrix<T>> &s)
{
    check_tuple(s);
    PieReport<T> rep;
    rep.n = s.front().rows();
    rep.count = s.size();
    rep.hypothesis_holds = rep.count >= rep.n + 1;
    const std::size_t slots = std::size_t{1} << rep.count;
    const SubsetMask full = static_cast<SubsetMask>(slots - 1);

    const auto boxes = build_boxes_digraph(s);
    std::vector<T> exact_signed(slots, ring_zero<T>());
    std::vector<T> exact_unsigned(slots, ring_zero<T>());
    for_each_path_system(boxes.graph, boxes.sources, boxes.sinks, false, [&](const PathSystem &sys) {
        ++rep.systems;
        const SubsetMask m = boxes.touched(sys);
        const T w = weight_of(boxes.graph, sys);
        exact_unsigned[m] += w;
        if (sys.sign > 0)
            exact_signed[m] += w;
        else
            exact_signed[m] -= w;
        if (m == full)
            ++rep.all_boxes_systems;
    });
    rep.all_boxes_signed = exact_signed[full];
    rep.all_boxes_unsigned = exact_unsigned[full];

    T pie_signed = ring_zero<T>();
    T pie_unsigned = ring_zero<T>();
    for (auto sigma : subsets_in_order(rep.count)) {
        const Matrix<T> sum = subset_sum(s, sigma);
        const auto restricted = build_boxes_digraph(s, sigma);
        if (path_matrix(restricted.graph, restricted.sources, restricted.sinks) != sum)
            rep.path_matrix_ok = false;

        T confined_signed = ring_zero<T>();
        T confined_unsigned = ring_zero<T>();
        for (SubsetMask m = sigma;; m = (m - 1) & sigma) {
            confined_signed += exact_signed[m];
            confined_unsigned += exact_unsigned[m];
            if (m == 0)
                break;
        }
        if (confined_signed != det(sum))
            rep.confined_det_ok = false;
        if (confined_unsigned != per(sum))
            rep.confined_per_ok = false;

        if (subset_sign_positive(rep.count, sigma, SignConvention::full_set_positive)) {
            pie_signed += confined_signed;
            pie_unsigned += confined_unsigned;
        } else {
            pie_signed -= confined_signed;
            pie_unsigned -= confined_unsigned;
        }
    }

    rep.alternating_det = alternating_sum_det(s);
    rep.alternating_per = alternating_sum_per(s);
    rep.alternating_det_theorem_sign = alternating_sum_det(s, SignConvention::alternating);
    rep.pie_ok = pie_signed == rep.all_boxes_signed && pie_unsigned == rep.all_boxes_unsigned &&
                 pie_signed == rep.alternating_det && pie_unsigned == rep.alternating_per;
    return rep;
}

} // namespace combid
