#pragma once

// Random generators and brute-force oracles shared by the test suites.
// The oracles here are deliberately naive and independent of the library
// algorithms they check.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <combid/combid.hpp>

namespace combid::testing {

using Rng = std::mt19937_64;

inline long long uniform_int(Rng &rng, long long lo, long long hi)
{
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

inline Rational random_integer(Rng &rng, long long lo, long long hi) { return Rational(uniform_int(rng, lo, hi)); }

inline Rational random_rational(Rng &rng)
{
    return Rational(uniform_int(rng, -9, 9), uniform_int(rng, 1, 6));
}

inline MPoly random_poly(Rng &rng, const std::vector<std::string> &vars, int terms = 3)
{
    MPoly p;
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        for (const auto &v : vars) {
            const auto e = static_cast<unsigned>(uniform_int(rng, 0, 2));
            if (e > 0)
                m = m * Monomial::variable(v, e);
        }
        p += MPoly::term(BigInt(uniform_int(rng, -5, 5)), m);
    }
    return p;
}

inline Matrix<Rational> random_integer_matrix(Rng &rng, std::size_t rows, std::size_t cols, long long lo, long long hi)
{
    Matrix<Rational> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = random_integer(rng, lo, hi);
    return m;
}

inline Matrix<Rational> random_rational_matrix(Rng &rng, std::size_t n)
{
    Matrix<Rational> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = random_rational(rng);
    return m;
}

// Entries named <prefix><i><j>, one-based.
inline Matrix<MPoly> named_symbolic_matrix(const std::string &prefix, std::size_t n)
{
    Matrix<MPoly> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = MPoly::variable(prefix + std::to_string(i + 1) + std::to_string(j + 1));
    return m;
}

// Each ordered pair (u, v), loops included, gets an edge with probability
// `density`; occasionally a parallel copy. Weights uniform in [lo, hi].
inline Digraph<Rational> random_digraph(Rng &rng, std::size_t n, double density, long long lo, long long hi)
{
    Digraph<Rational> g(n);
    std::bernoulli_distribution edge(density);
    std::bernoulli_distribution parallel(0.1);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
            if (!edge(rng))
                continue;
            g.add_edge(u, v, random_integer(rng, lo, hi));
            if (parallel(rng))
                g.add_edge(u, v, random_integer(rng, lo, hi));
        }
    return g;
}

// Acyclic: edges follow a hidden random vertex ranking.
inline Digraph<Rational> random_dag(Rng &rng, std::size_t n, double density)
{
    std::vector<std::size_t> rank(n);
    std::iota(rank.begin(), rank.end(), std::size_t{0});
    std::shuffle(rank.begin(), rank.end(), rng);
    Digraph<Rational> g(n);
    std::bernoulli_distribution edge(density);
    std::bernoulli_distribution parallel(0.1);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
            if (rank[u] >= rank[v] || !edge(rng))
                continue;
            g.add_edge(u, v, random_rational(rng));
            if (parallel(rng))
                g.add_edge(u, v, random_rational(rng));
        }
    return g;
}

inline std::vector<std::size_t> random_distinct_vertices(Rng &rng, std::size_t n, std::size_t k)
{
    std::vector<std::size_t> vs(n);
    std::iota(vs.begin(), vs.end(), std::size_t{0});
    std::shuffle(vs.begin(), vs.end(), rng);
    vs.resize(k);
    return vs;
}

// Leibniz expansion, one permutation at a time, sign by counting inversions.
template <class T>
T leibniz(const Matrix<T> &m, bool signed_sum)
{
    const std::size_t n = m.rows();
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    T total = T(0);
    do {
        T term = T(1);
        for (std::size_t i = 0; i < n; ++i)
            term *= m(i, p[i]);
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                inversions += p[i] > p[j] ? 1 : 0;
        if (signed_sum && inversions % 2 == 1)
            total -= term;
        else
            total += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

// Brute-force closed walk weight sum: every vertex sequence of length r,
// multiplying adjacency entries.
inline Rational walk_sum_by_vertex_sequences(const Matrix<Rational> &a, std::size_t r)
{
    const std::size_t n = a.rows();
    std::vector<std::size_t> seq(r, 0);
    Rational total = 0;
    if (n == 0)
        return total;
    for (;;) {
        Rational w = 1;
        for (std::size_t i = 0; i < r; ++i)
            w *= a(seq[i], seq[(i + 1) % r]);
        total += w;
        std::size_t k = 0;
        while (k < r && ++seq[k] == n)
            seq[k++] = 0;
        if (k == r)
            break;
    }
    return total;
}

// Fraction-free elimination on the augmented integer matrix [A | b], then
// back substitution. Returns an empty vector when A is singular.
inline std::vector<Rational> bareiss_solve(const Matrix<Rational> &a, const std::vector<Rational> &b)
{
    const std::size_t n = a.rows();
    BigInt scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(a(i, j)));
        scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(b[i]));
    }
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = boost::multiprecision::numerator(a(i, j) * Rational(scale));
        m[i][n] = boost::multiprecision::numerator(b[i] * Rational(scale));
    }
    BigInt prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k] == 0)
            ++piv;
        if (piv == n)
            return {};
        std::swap(m[k], m[piv]);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    std::vector<Rational> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational acc(m[i][n]);
        for (std::size_t j = i + 1; j < n; ++j)
            acc -= Rational(m[i][j]) * x[j];
        x[i] = acc / Rational(m[i][i]);
    }
    return x;
}

} // namespace combid::testing
