#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "error.hpp"
#include "matrix.hpp"
#include "ring.hpp"

namespace combid {

template <class T>
struct Edge {
    std::size_t tail;
    std::size_t head;
    T weight;

    friend bool operator==(const Edge &, const Edge &) = default;
};

// Weighted directed multigraph on vertices 0..n-1. Loops and parallel edges
// are allowed; an edge's position in edges() is its stable identifier.
template <class T>
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(std::size_t vertex_count) : out_(vertex_count) {}

    std::size_t add_edge(std::size_t tail, std::size_t head, T weight)
    {
        if (tail >= vertex_count() || head >= vertex_count())
            throw input_error("edge " + std::to_string(tail) + "->" + std::to_string(head) +
                              " references a vertex outside 0.." + std::to_string(vertex_count()) + ")");
        edges_.push_back({tail, head, std::move(weight)});
        out_[tail].push_back(edges_.size() - 1);
        return edges_.size() - 1;
    }

    std::size_t vertex_count() const { return out_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge<T>> &edges() const { return edges_; }
    const Edge<T> &edge(std::size_t e) const { return edges_.at(e); }

    // Outgoing edge ids of v in increasing order.
    const std::vector<std::size_t> &out_edges(std::size_t v) const { return out_.at(v); }

    friend bool operator==(const Digraph &, const Digraph &) = default;

private:
    std::vector<Edge<T>> edges_;
    std::vector<std::vector<std::size_t>> out_;
};

// Entry (u, v) is the total weight of the parallel edges u -> v.
template <class T>
Matrix<T> adjacency_matrix(const Digraph<T> &g)
{
    Matrix<T> a(g.vertex_count(), g.vertex_count());
    for (const auto &e : g.edges())
        a(e.tail, e.head) += e.weight;
    return a;
}

// One edge per nonzero entry of a square matrix.
template <class T>
Digraph<T> digraph_of(const Matrix<T> &a)
{
    if (!a.is_square())
        throw input_error("digraph of a matrix requires a square matrix");
    Digraph<T> g(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!is_zero(a(i, j)))
                g.add_edge(i, j, a(i, j));
    return g;
}

// Product of the weights of a sequence of edge ids.
template <class T>
T weight_of(const Digraph<T> &g, const std::vector<std::size_t> &edge_ids)
{
    T w = ring_one<T>();
    for (auto e : edge_ids)
        w *= g.edge(e).weight;
    return w;
}

// Digraph of the companion matrix of x^n + e1 x^(n-1) + ... + en:
// unit edges i -> i-1 and edges i -> n-1 carrying -e(n-i).
// Its characteristic polynomial is the given one, so closed-walk sums
// are the power sums of the roots.
template <class T>
Digraph<T> companion_digraph(const std::vector<T> &e)
{
    const std::size_t n = e.size();
    if (n == 0)
        throw input_error("companion digraph needs at least one coefficient");
    Digraph<T> g(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0)
            g.add_edge(i, i - 1, ring_one<T>());
        T w = -e[n - 1 - i];
        if (!is_zero(w))
            g.add_edge(i, n - 1, std::move(w));
    }
    return g;
}

} // namespace combid
