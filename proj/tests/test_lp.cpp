#include "doctest.h"

#include "polar/lp.hpp"

using namespace polar;

namespace {

Rational lp_value(PolarKind k, long n, long q, long d)
{
    const LPResult r = lp_bound(SchemeSpec(k, n, q), d);
    REQUIRE(r.status == LPStatus::Optimal);
    REQUIRE(r.certified);
    return r.optimum;
}

}  // namespace

TEST_SUITE("lp") {

TEST_CASE("small problems")
{
    // max x + y s.t. x + 2y <= 4, 3x + y <= 6
    const LPProblem p{{{1, 2}, {3, 1}}, {4, 6}, {1, 1}};
    const LPSolution s = solve(p);
    CHECK(s.status == LPStatus::Optimal);
    CHECK(s.value == Rational(14, 5));
    CHECK(certificate_holds(p, s));

    LPSolution wrong = s;
    wrong.y[0] += 1;
    CHECK_FALSE(certificate_holds(p, wrong));

    const LPProblem unbounded{{{1, -1}}, {1}, {1, 1}};
    CHECK(solve(unbounded).status == LPStatus::Unbounded);
    const LPProblem negative{{{1}}, {-1}, {1}};
    CHECK(solve(negative).status == LPStatus::Infeasible);
}

TEST_CASE("d = 1 gives the whole space")
{
    for (PolarKind k : kBaseKinds)
        for (long n = 1; n <= 6; ++n)
            for (long q : {2L, 3L, 4L, 5L}) CHECK(lp_value(k, n, q, 1) == scheme_size(SchemeSpec(k, n, q)));
}

TEST_CASE("values from the floating-point reference solver")
{
    CHECK(lp_value(PolarKind::Symplectic, 2, 2, 2) == 5);
    CHECK(lp_value(PolarKind::Hyperbolic, 2, 2, 2) == 3);
    CHECK(lp_value(PolarKind::Hyperbolic, 3, 2, 2) == 15);
    CHECK(lp_value(PolarKind::Hyperbolic, 3, 2, 3) == 2);
    CHECK(lp_value(PolarKind::Parabolic, 2, 3, 2) == 10);
    CHECK(lp_value(PolarKind::HermitianOdd, 2, 2, 2) == 9);
    CHECK(lp_value(PolarKind::Elliptic, 2, 2, 2) == 9);
    CHECK(lp_value(PolarKind::Hyperbolic, 4, 2, 2) == 135);
    CHECK(lp_value(PolarKind::Hyperbolic, 4, 2, 3) == Rational(90, 7));
    CHECK(lp_value(PolarKind::Hyperbolic, 4, 2, 4) == 9);
    CHECK(lp_value(PolarKind::Symplectic, 3, 2, 2) == 45);
    CHECK(lp_value(PolarKind::Symplectic, 3, 2, 3) == 9);
}

TEST_CASE("the LP never exceeds the closed form and is nonincreasing in d")
{
    for (PolarKind k : kBaseKinds)
        for (long n = 1; n <= 6; ++n)
            for (long q : {2L, 3L, 4L, 5L}) {
                const SchemeSpec s(k, n, q);
                Rational previous = scheme_size(s);
                for (long d = 1; d <= n; ++d) {
                    const LPComparison c = lp_vs_closed_form(s, d);
                    CHECK(c.lp_at_most_closed_form);
                    CHECK(c.lp <= previous);
                    previous = c.lp;
                }
            }
    const LPComparison a5 = lp_vs_closed_form(SchemeSpec(PolarKind::HermitianOdd, 3, 2), 3);
    CHECK(a5.lp <= alpha(3, 3, 2));
}

TEST_CASE("primal solution is a feasible distribution")
{
    const SchemeSpec s(PolarKind::Hyperbolic, 4, 2);
    const LPResult r = lp_bound(s, 2);
    const EigTable t = eig_table(s);
    CHECK(r.primal[0] == 1);
    CHECK(r.primal[1] == 0);
    Rational total = 0;
    for (const Rational& a : r.primal) {
        CHECK(a >= 0);
        total += a;
    }
    CHECK(total == r.optimum);
    for (long k = 1; k <= 4; ++k) {
        Rational dual = 0;
        for (long i = 0; i <= 4; ++i) dual += t.Q[k][i] * r.primal[i];
        CHECK(dual >= 0);
    }
    CHECK_THROWS_AS(lp_bound(s, 6), BadParameters);
}

}
