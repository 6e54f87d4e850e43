#include <gtest/gtest.h>

#include <vector>

#include <combid/digraph.hpp>
#include <combid/matrix.hpp>
#include <combid/walks.hpp>

#include "support.hpp"

using namespace combid;
using combid::testing::Rng;

namespace {

using Q = Rational;
using QMatrix = Matrix<Rational>;

MPoly var(const char *name) { return MPoly::variable(name); }

Matrix<MPoly> abcd()
{
    return Matrix<MPoly>{{var("a"), var("b")}, {var("c"), var("d")}};
}

} // namespace

TEST(Adjacency, LoopParallelAndEmpty)
{
    Digraph<Q> loop(1);
    loop.add_edge(0, 0, Q(2));
    EXPECT_EQ(adjacency_matrix(loop), (QMatrix{{Q(2)}}));

    Digraph<Q> par(2);
    par.add_edge(0, 1, Q(1));
    par.add_edge(0, 1, Q(3));
    EXPECT_EQ(adjacency_matrix(par)(0, 1), Q(4));
    EXPECT_EQ(par.edge_count(), 2u);

    EXPECT_EQ(adjacency_matrix(Digraph<Q>(2)), QMatrix(2, 2));
}

TEST(Adjacency, RejectsOutOfRangeEdge)
{
    Digraph<Q> g(2);
    EXPECT_THROW(g.add_edge(0, 2, Q(1)), input_error);
}

TEST(MatrixOps, PowersAndTrace)
{
    const QMatrix swap{{Q(0), Q(1)}, {Q(1), Q(0)}};
    EXPECT_EQ(trace(mat_pow(swap, 2)), Q(2));
    EXPECT_EQ(trace(QMatrix::identity(3)), Q(3));
    EXPECT_EQ(mat_pow(swap, 0), QMatrix::identity(2));
    EXPECT_EQ(mat_pow(swap, 3), swap);
    EXPECT_THROW(mat_mul(QMatrix(2, 3), QMatrix(2, 3)), input_error);
    EXPECT_THROW(trace(QMatrix(2, 3)), input_error);
    EXPECT_THROW(mat_pow(QMatrix(1, 2), 2), input_error);
}

TEST(MatrixOps, PowerMatchesRepeatedProduct)
{
    Rng rng(3);
    for (int i = 0; i < 30; ++i) {
        const auto a = combid::testing::random_integer_matrix(rng, 3, 3, -3, 3);
        QMatrix p = QMatrix::identity(3);
        for (std::size_t r = 0; r <= 6; ++r) {
            EXPECT_EQ(mat_pow(a, r), p);
            p = mat_mul(p, a);
        }
    }
}

TEST(Determinant, Examples)
{
    EXPECT_EQ(det(QMatrix{{Q(1), Q(2)}, {Q(3), Q(4)}}), Q(-2));
    EXPECT_EQ(det(QMatrix::identity(4)), Q(1));
    EXPECT_EQ(det(abcd()), var("a") * var("d") - var("b") * var("c"));
    EXPECT_EQ(det(QMatrix(0, 0)), Q(1));
}

TEST(Determinant, Errors)
{
    EXPECT_THROW(det(QMatrix(2, 3)), input_error);
    EXPECT_THROW(det(QMatrix::identity(11)), cap_exceeded);
    EXPECT_NO_THROW(det(QMatrix::identity(10)));
}

TEST(Permanent, Examples)
{
    EXPECT_EQ(per(QMatrix{{Q(1), Q(2)}, {Q(3), Q(4)}}), Q(10));
    EXPECT_EQ(per(QMatrix::identity(3)), Q(1));
    EXPECT_EQ(per(abcd()), var("a") * var("d") + var("b") * var("c"));
    EXPECT_THROW(per(QMatrix::identity(11)), cap_exceeded);
}

TEST(Determinant, AgreesWithLeibnizOracle)
{
    Rng rng(5);
    for (std::size_t n = 1; n <= 6; ++n)
        for (int i = 0; i < 10; ++i) {
            const auto m = combid::testing::random_rational_matrix(rng, n);
            EXPECT_EQ(det(m), combid::testing::leibniz(m, true));
            EXPECT_EQ(per(m), combid::testing::leibniz(m, false));
        }
    const auto s = combid::testing::named_symbolic_matrix("m", 4);
    EXPECT_EQ(det(s), combid::testing::leibniz(s, true));
    EXPECT_EQ(per(s), combid::testing::leibniz(s, false));
}

TEST(Charpoly, Examples)
{
    const QMatrix swap{{Q(0), Q(1)}, {Q(1), Q(0)}};
    EXPECT_EQ(charpoly(swap), (std::vector<Q>{Q(1), Q(0), Q(-1)}));
    EXPECT_EQ(charpoly(QMatrix(2, 2)), (std::vector<Q>{Q(1), Q(0), Q(0)}));
    EXPECT_EQ(charpoly(QMatrix{{Q(2)}}), (std::vector<Q>{Q(1), Q(-2)}));
    // (x - a)(x - d) - bc
    const MPoly a = var("a"), b = var("b"), c = var("c"), d = var("d");
    EXPECT_EQ(charpoly(abcd()), (std::vector<MPoly>{MPoly(1), -(a + d), a * d - b * c}));
    EXPECT_THROW(charpoly(QMatrix::identity(11)), cap_exceeded);
}

TEST(MatrixProperty, TransposeAndCharpolyConstantTerm)
{
    Rng rng(7);
    for (std::size_t n = 1; n <= 5; ++n)
        for (int i = 0; i < 20; ++i) {
            const auto m = combid::testing::random_rational_matrix(rng, n);
            EXPECT_EQ(det(transpose(m)), det(m));
            EXPECT_EQ(per(transpose(m)), per(m));
            const auto cp = charpoly(m);
            ASSERT_EQ(cp.size(), n + 1);
            EXPECT_EQ(cp.front(), Q(1));
            const Q sign = n % 2 == 0 ? Q(1) : Q(-1);
            EXPECT_EQ(det(m), sign * cp.back());
            // coefficient of x^(n-1) is -trace
            EXPECT_EQ(cp[1], Q(-trace(m)));
        }
}

TEST(MatrixProperty, TraceOfPowerCountsClosedWalks)
{
    Rng rng(8);
    for (int i = 0; i < 40; ++i) {
        const std::size_t n = static_cast<std::size_t>(combid::testing::uniform_int(rng, 1, 4));
        const auto g = combid::testing::random_digraph(rng, n, 0.5, -3, 3);
        for (std::size_t r = 1; r <= 5; ++r)
            EXPECT_EQ(trace(mat_pow(adjacency_matrix(g), r)), closed_walk_sum_enumerated(g, r));
    }
}

TEST(Companion, LinearPolynomial)
{
    const auto g = companion_digraph(std::vector<Q>{Q(-5)});
    ASSERT_EQ(g.edge_count(), 1u);
    EXPECT_EQ(g.edge(0).tail, 0u);
    EXPECT_EQ(g.edge(0).head, 0u);
    EXPECT_EQ(g.edge(0).weight, Q(5));
    EXPECT_EQ(trace(mat_pow(adjacency_matrix(g), 3)), Q(125));
}

TEST(Companion, CharpolyReproducesCoefficients)
{
    const auto g = companion_digraph(std::vector<Q>{Q(0), Q(-1)});
    EXPECT_EQ(charpoly(adjacency_matrix(g)), (std::vector<Q>{Q(1), Q(0), Q(-1)}));

    // x^2 - 3x + 2, roots 1 and 2
    const auto h = companion_digraph(std::vector<Q>{Q(-3), Q(2)});
    EXPECT_EQ(trace(mat_pow(adjacency_matrix(h), 2)), Q(5));
    EXPECT_EQ(trace(mat_pow(adjacency_matrix(h), 3)), Q(9));

    Rng rng(9);
    for (int i = 0; i < 20; ++i) {
        std::vector<Q> e;
        const auto n = combid::testing::uniform_int(rng, 1, 6);
        for (long long k = 0; k < n; ++k)
            e.push_back(combid::testing::random_rational(rng));
        const auto cp = charpoly(adjacency_matrix(companion_digraph(e)));
        EXPECT_EQ(std::vector<Q>(cp.begin() + 1, cp.end()), e);
    }

    const std::vector<MPoly> sym{var("e1"), var("e2"), var("e3")};
    const auto scp = charpoly(adjacency_matrix(companion_digraph(sym)));
    EXPECT_EQ(std::vector<MPoly>(scp.begin() + 1, scp.end()), sym);
    EXPECT_THROW(companion_digraph(std::vector<Q>{}), input_error);
}
