// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. All comparisons are exact; the only numeric limits are runtime
// budgets.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <combid/combid.hpp>

#include "support.hpp"

using namespace combid;
using combid::testing::Rng;

namespace {

using Q = Rational;
using QMatrix = Matrix<Rational>;

// Exact arithmetic throughout: agreement means equality, tolerance zero.
constexpr const char *tolerance = "exact";

struct Outcome {
    bool ok = true;
    std::size_t instances = 0;
    std::string note;

    void require(bool cond, const std::string &what)
    {
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    }
};

struct Criterion {
    int id;
    const char *name;
    double budget_seconds;
    std::function<Outcome()> body;
};

Outcome newton_identity()
{
    Outcome o;
    Rng rng(1001);
    for (int i = 0; i < 120; ++i) {
        const auto n = static_cast<std::size_t>(combid::testing::uniform_int(rng, 1, 6));
        const auto g = combid::testing::random_digraph(rng, n, 0.5, -3, 3);
        for (std::size_t r = 1; r <= 2 * n; ++r)
            o.require(newton_residual(g, r) == Q(0), "nonzero residual n=" + std::to_string(n) + " r=" + std::to_string(r));
        ++o.instances;
    }
    return o;
}

Outcome definitional_oracles()
{
    Outcome o;
    Rng rng(1002);
    for (int i = 0; i < 60; ++i) {
        const auto n = static_cast<std::size_t>(combid::testing::uniform_int(rng, 1, 5));
        const auto g = combid::testing::random_digraph(rng, n, 0.5, -3, 3);
        const auto a = adjacency_matrix(g);
        const auto cp = charpoly(a);
        for (std::size_t r = 1; r <= 8; ++r) {
            o.require(closed_walk_sum_enumerated(g, r) == trace(mat_pow(a, r)), "walk sum differs from trace");
            o.require(closed_walk_sum(g, r) == trace(mat_pow(a, r)), "closed_walk_sum differs from trace");
            const Q expected = r <= n ? cp[r] : Q(0);
            o.require(linear_sub_signed_sum(g, r) == expected, "l_r differs from charpoly coefficient");
        }
        ++o.instances;
    }
    return o;
}

Outcome involution_exhaustive()
{
    Outcome o;
    for (std::size_t n = 1; n <= 3; ++n) {
        const std::size_t pairs = n * n;
        for (std::size_t mask = 0; mask < (std::size_t{1} << pairs); ++mask) {
            Digraph<MPoly> g(n);
            for (std::size_t p = 0; p < pairs; ++p)
                if (mask & (std::size_t{1} << p))
                    g.add_edge(p / n, p % n, MPoly::variable("w" + std::to_string(p)));
            for (std::size_t r = 1; r <= 5; ++r) {
                const auto rep = verify_theorem_proof(g, r);
                const std::string where = " n=" + std::to_string(n) + " mask=" + std::to_string(mask) +
                                          " r=" + std::to_string(r);
                o.require(rep.involution_ok, "involution property" + where);
                o.require(rep.all_bad_ok, "GOOD pair with r > n" + where);
                o.require(rep.good_ok, "GOOD weight" + where);
                o.require(rep.cancellation_ok, "BAD weights do not cancel" + where);
                o.require(r <= n || rep.good_pairs == 0, "GOOD pair beyond n" + where);
                o.require(rep.good_weight == MPoly(-static_cast<int>(r)) * rep.signed_sum, "good weight != -r l_r" + where);
                ++o.instances;
            }
        }
    }
    return o;
}

Outcome lgv_random_dags()
{
    Outcome o;
    Rng rng(1004);
    for (int i = 0; i < 120; ++i) {
        const auto n = static_cast<std::size_t>(combid::testing::uniform_int(rng, 2, 8));
        const auto g = combid::testing::random_dag(rng, n, 0.5);
        const auto k = static_cast<std::size_t>(combid::testing::uniform_int(rng, 1, std::min<long long>(3, n)));
        const auto src = combid::testing::random_distinct_vertices(rng, n, k);
        const auto snk = combid::testing::random_distinct_vertices(rng, n, k);
        const auto rep = lgv_check(g, src, snk);
        o.require(rep.det == rep.vd_signed_sum, "det != vertex-disjoint signed sum");
        o.require(rep.det == rep.all_signed_sum, "det != all-systems signed sum");
        o.require(per_check(g, src, snk).ok(), "per != unsigned system sum");
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) {
                Q total = 0;
                for (const auto &p : enumerate_paths(g, src[a], snk[b]))
                    total += weight_of(g, p.edges);
                o.require(rep.path_matrix(a, b) == total, "path matrix entry differs from path enumeration");
            }
        ++o.instances;
    }
    return o;
}

Outcome cramer()
{
    Outcome o;
    for (std::size_t n = 1; n <= 3; ++n)
        for (std::size_t k = 0; k < n; ++k) {
            const auto rep = verify_cramer_identity(n, k);
            o.require(rep.difference.is_zero(), "symbolic identity not the zero polynomial");
            o.require(rep.ok(), "path-system side of the identity");
            ++o.instances;
        }
    Rng rng(1005);
    std::size_t solved = 0;
    while (solved < 120) {
        const auto n = static_cast<std::size_t>(combid::testing::uniform_int(rng, 1, 5));
        const QMatrix a = combid::testing::random_rational_matrix(rng, n);
        std::vector<Q> b(n);
        for (auto &v : b)
            v = combid::testing::random_rational(rng);
        const auto oracle = combid::testing::bareiss_solve(a, b);
        if (oracle.empty())
            continue;
        const auto x = cramer_solve({a, b});
        o.require(x == oracle, "solver differs from fraction-free elimination");
        o.require(mat_vec(a, x) == b, "A x != b");
        ++solved;
        ++o.instances;
    }
    return o;
}

Outcome alternating_sums()
{
    Outcome o;
    Rng rng(1006);
    for (std::size_t n = 1; n <= 3; ++n)
        for (std::size_t count = n + 1; count <= n + 3; ++count)
            for (int i = 0; i < 12; ++i) {
                std::vector<QMatrix> s;
                for (std::size_t t = 0; t < count; ++t)
                    s.push_back(combid::testing::random_integer_matrix(rng, n, n, -5, 5));
                o.require(alternating_sum_det(s) == Q(0), "det sum nonzero");
                o.require(alternating_sum_per(s) == Q(0), "per sum nonzero");
                ++o.instances;
            }
    std::vector<Matrix<MPoly>> sym;
    for (const char *prefix : {"a", "b", "c"})
        sym.push_back(combid::testing::named_symbolic_matrix(prefix, 2));
    o.require(alternating_sum_det(sym).is_zero(), "symbolic det sum nonzero");
    o.require(alternating_sum_per(sym).is_zero(), "symbolic per sum nonzero");
    const auto pie = pie_decomposition_check(sym);
    o.require(pie.ok(), "inclusion-exclusion decomposition");
    o.require(pie.all_boxes_systems == 0, "systems touching every box exist");
    o.instances += 2;
    return o;
}

Outcome hypothesis_sharpness()
{
    Outcome o;
    std::vector<Matrix<MPoly>> sym;
    for (const char *prefix : {"a", "b"})
        sym.push_back(combid::testing::named_symbolic_matrix(prefix, 2));
    const MPoly d = alternating_sum_det(sym);
    o.require(!d.is_zero(), "alternating det sum vanished at N = n");
    o.note = "sum = " + d.str();
    o.instances = 1;
    return o;
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "newton residual vanishes on random digraphs", 60, newton_identity},
        {2, "walk sums and signed sums match trace and charpoly", 60, definitional_oracles},
        {3, "involution certificate on every digraph with n <= 3", 120, involution_exhaustive},
        {4, "path matrix det and per on random DAGs", 120, lgv_random_dags},
        {5, "cramer identity and solver against elimination", 60, cramer},
        {6, "alternating det and per sums vanish for N > n", 120, alternating_sums},
        {7, "alternating det sum nonzero at N = n", 10, hypothesis_sharpness},
    };
    int failures = 0;
    for (const auto &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.body();
        } catch (const std::exception &e) {
            out.ok = false;
            out.note = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.budget_seconds) {
            out.ok = false;
            out.note = "over time budget";
        }
        if (!out.ok)
            ++failures;
        std::printf("[%s] %d %s  instances=%zu tol=%s time=%.2fs/%.0fs%s%s\n", out.ok ? "PASS" : "FAIL", c.id, c.name,
                    out.instances, tolerance, secs, c.budget_seconds, out.note.empty() ? "" : "  ", out.note.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
