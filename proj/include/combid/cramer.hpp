#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "digraph.hpp"
#include "error.hpp"
#include "lgv.hpp"
#include "matrix.hpp"
#include "ring.hpp"

namespace combid {

inline constexpr std::size_t cramer_digraph_cap = 4;

template <class T>
struct LinearSystem {
    Matrix<T> a;
    std::vector<T> b;
};

// a with column k replaced by b.
template <class T>
Matrix<T> replace_column(Matrix<T> a, std::size_t k, const std::vector<T> &b)
{
    if (b.size() != a.rows() || k >= a.cols())
        throw input_error("column replacement: dimension mismatch");
    for (std::size_t i = 0; i < a.rows(); ++i)
        a(i, k) = b[i];
    return a;
}

// x_k = det(A with column k replaced by b) / det(A). Rationals only: the
// polynomial ring has no division.
inline std::vector<Rational> cramer_solve(const LinearSystem<Rational> &sys)
{
    if (!sys.a.is_square())
        throw input_error("cramer_solve: coefficient matrix must be square");
    if (sys.b.size() != sys.a.rows())
        throw input_error("cramer_solve: right-hand side has " + std::to_string(sys.b.size()) + " entries, expected " +
                          std::to_string(sys.a.rows()));
    const Rational d = det(sys.a);
    if (d == 0)
        throw singular_matrix();
    std::vector<Rational> x;
    x.reserve(sys.a.cols());
    for (std::size_t k = 0; k < sys.a.cols(); ++k)
        x.push_back(det(replace_column(sys.a, k, sys.b)) / d);
    if (mat_vec(sys.a, x) != sys.b)
        throw std::logic_error("cramer_solve: solution fails A x = b");
    return x;
}

inline std::string coefficient_name(std::size_t i, std::size_t j)
{
    return "a" + std::to_string(i + 1) + std::to_string(j + 1);
}

inline std::string unknown_name(std::size_t j) { return "x" + std::to_string(j + 1); }

// Symbolic coefficient matrix (a_ij).
inline Matrix<MPoly> symbolic_matrix(std::size_t n)
{
    Matrix<MPoly> a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = MPoly::variable(coefficient_name(i, j));
    return a;
}

// Vertices A_i = i, B_j = n + j, X = 2n. Edges A_i -> B_j carry a_ij and
// B_j -> X carry x_j. Sinks are B_1..B_n with B_k replaced by X, so column k
// of the path matrix is b_i = sum_j a_ij x_j.
struct CramerDigraph {
    Digraph<MPoly> graph;
    std::vector<std::size_t> sources;
    std::vector<std::size_t> sinks;
    std::size_t n = 0;
    std::size_t k = 0; // zero-based replaced column

    std::size_t a_vertex(std::size_t i) const { return i; }
    std::size_t b_vertex(std::size_t j) const { return n + j; }
    std::size_t x_vertex() const { return 2 * n; }
};

// k is zero-based.
inline CramerDigraph build_cramer_digraph(std::size_t n, std::size_t k)
{
    if (n == 0 || k >= n)
        throw input_error("cramer digraph needs 0 <= k < n");
    if (n > cramer_digraph_cap)
        throw cap_exceeded("cramer digraph limited to n <= " + std::to_string(cramer_digraph_cap));
    CramerDigraph c;
    c.n = n;
    c.k = k;
    c.graph = Digraph<MPoly>(2 * n + 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            c.graph.add_edge(c.a_vertex(i), c.b_vertex(j), MPoly::variable(coefficient_name(i, j)));
    for (std::size_t j = 0; j < n; ++j)
        c.graph.add_edge(c.b_vertex(j), c.x_vertex(), MPoly::variable(unknown_name(j)));
    for (std::size_t i = 0; i < n; ++i) {
        c.sources.push_back(c.a_vertex(i));
        c.sinks.push_back(i == k ? c.x_vertex() : c.b_vertex(i));
    }
    return c;
}

struct CramerIdentityReport {
    std::size_t n = 0;
    std::size_t k = 0;
    Matrix<MPoly> path_matrix;
    MPoly det_path_matrix;
    MPoly expected;  // x_k det(A)
    MPoly difference;
    MPoly vd_signed_sum;
    std::size_t vd_systems = 0;
    std::size_t block_vd_systems = 0;
    // Every vertex-disjoint system routes its X-path through B_k, and
    // dropping that last edge gives a vertex-disjoint system of the A-block,
    // bijectively and with the same sign.
    bool factorization_ok = true;

    bool ok() const { return difference.is_zero() && vd_signed_sum == expected && factorization_ok; }
};

// det(path matrix) = x_k det(A) as a polynomial identity in a_ij and x_j.
inline CramerIdentityReport verify_cramer_identity(std::size_t n, std::size_t k)
{
    const CramerDigraph c = build_cramer_digraph(n, k);
    CramerIdentityReport rep;
    rep.n = n;
    rep.k = k;
    rep.path_matrix = path_matrix(c.graph, c.sources, c.sinks);
    rep.det_path_matrix = det(rep.path_matrix);
    rep.expected = MPoly::variable(unknown_name(k)) * det(symbolic_matrix(n));
    rep.difference = rep.det_path_matrix - rep.expected;

    // The graph without X: only the a_ij edges, same vertex ids.
    Digraph<MPoly> block(2 * n + 1);
    for (const auto &e : c.graph.edges())
        if (e.head != c.x_vertex())
            block.add_edge(e.tail, e.head, e.weight);
    std::vector<std::size_t> block_sinks;
    for (std::size_t j = 0; j < n; ++j)
        block_sinks.push_back(c.b_vertex(j));

    std::vector<PathSystem> truncated;
    for_each_path_system(c.graph, c.sources, c.sinks, true, [&](const PathSystem &s) {
        ++rep.vd_systems;
        const MPoly w = weight_of(c.graph, s);
        if (s.sign > 0)
            rep.vd_signed_sum += w;
        else
            rep.vd_signed_sum -= w;
        PathSystem t = s;
        bool through_bk = false;
        for (auto &p : t.paths) {
            if (p.sink != c.x_vertex())
                continue;
            const auto vs = path_vertices(c.graph, p);
            through_bk = vs.size() == 3 && vs[1] == c.b_vertex(k);
            p.edges.pop_back();
            p.sink = c.b_vertex(k);
        }
        if (!through_bk)
            rep.factorization_ok = false;
        truncated.push_back(std::move(t));
    });
    auto block_systems = enumerate_path_systems(block, c.sources, block_sinks, true);
    rep.block_vd_systems = block_systems.size();
    std::sort(truncated.begin(), truncated.end());
    std::sort(block_systems.begin(), block_systems.end());
    if (truncated != block_systems)
        rep.factorization_ok = false;
    return rep;
}

} // namespace combid
