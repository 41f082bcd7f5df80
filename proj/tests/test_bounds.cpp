#include "doctest.h"

#include "polar/bounds.hpp"

using namespace polar;

TEST_SUITE("bounds") {

TEST_CASE("alpha at d = 1 is the size of 2A-odd")
{
    for (long n = 1; n <= 8; ++n)
        for (long q : {2L, 3L, 4L}) CHECK(alpha(n, 1, q) == scheme_size(SchemeSpec(PolarKind::HermitianOdd, n, q)));
}

TEST_CASE("beta")
{
    CHECK(beta(4, 1, 2) == 135);
    CHECK(beta(4, 1, 2) == scheme_size(SchemeSpec(PolarKind::HalfHyperbolic, 4, 2)));
    CHECK(beta(5, 2, 2) == Rational(255, 7));
    CHECK(beta(5, 2, 2) == theorem_bound(SchemeSpec(PolarKind::HalfHyperbolic, 5, 2), 2));
    for (long m = 2; m <= 10; ++m)
        for (long q : {2L, 3L, 5L})
            for (long d = 1; d <= m / 2; ++d)
                CHECK(beta(m, d, q) == theorem_bound(SchemeSpec(PolarKind::HalfHyperbolic, m, q), d));
    CHECK_THROWS_AS(beta(4, 5, 2), BadParameters);
}

TEST_CASE("even-d correction")
{
    CHECK(epsilon(3, 2, 2) == 5);
    CHECK(epsilon(5, 3, 7) == 1);
    CHECK(alpha(3, 2, 2) == 297);
    for (long n = 2; n <= 7; ++n)
        for (long q : {2L, 3L, 4L})
            for (long d = 2; d <= n; d += 2)
                CHECK(theorem_bound_even_d(SchemeSpec(PolarKind::HermitianOdd, n, q), d) == alpha(n, d, q));
    // The even-d bound for 2A_3 sits above the largest 2-code found by search (6).
    CHECK(theorem_bound_even_d(SchemeSpec(PolarKind::HermitianOdd, 2, 2), 2) >= 6);
}

TEST_CASE("corollary dispatch")
{
    const long q = 3;
    CHECK(code_bound(SchemeSpec(PolarKind::HermitianOdd, 4, q), 3).value == alpha(4, 3, q));
    CHECK(code_bound(SchemeSpec(PolarKind::HermitianEven, 4, q), 3).value == alpha(5, 3, q));
    CHECK(code_bound(SchemeSpec(PolarKind::Parabolic, 4, q), 3).value == beta(5, 2, q));
    CHECK(code_bound(SchemeSpec(PolarKind::Symplectic, 4, q), 4).value == beta(5, 2, q));
    CHECK(code_bound(SchemeSpec(PolarKind::Hyperbolic, 5, q), 3).value == 2 * beta(5, 2, q));
    CHECK(code_bound(SchemeSpec(PolarKind::Hyperbolic, 5, q), 4).value == beta(5, 2, q));
    CHECK(code_bound(SchemeSpec(PolarKind::Elliptic, 4, q), 3).value == beta(6, 2, q));

    const BoundResult d4 = code_bound(SchemeSpec(PolarKind::Hyperbolic, 4, 2), 2);
    CHECK(d4.value == 135);
    CHECK(d4.formula_used == BoundFormula::CorE);
    CHECK(formula_name(d4.formula_used) == "corollary-e");
    CHECK(code_bound(SchemeSpec(PolarKind::Hyperbolic, 4, 2), 3).value == 18);

    CHECK_THROWS_AS(corollary_bound(SchemeSpec(PolarKind::Symplectic, 3, 2), 2, BoundFormula::CorA), BadParameters);
    CHECK_THROWS_AS(code_bound(SchemeSpec(PolarKind::Symplectic, 3, 2), 4), BadParameters);
    CHECK_THROWS_AS(theorem_bound(SchemeSpec(PolarKind::Symplectic, 3, 2), 2), WrongFamily);
}

TEST_CASE("bounds are at least one and nonincreasing in d")
{
    for (PolarKind k : kBaseKinds)
        for (long n = 1; n <= 8; ++n)
            for (long q : {2L, 3L, 4L, 5L}) {
                const SchemeSpec s(k, n, q);
                Rational previous = code_bound(s, 1).value;
                CHECK(previous >= 1);
                for (long d = 2; d <= n; ++d) {
                    const Rational b = code_bound(s, d).value;
                    CHECK(b >= 1);
                    CHECK(b <= previous);
                    previous = b;
                }
            }
}

TEST_CASE("simplified bounds")
{
    CHECK(simplified_bounds_check(1, 1, 2));
    for (long q : {2L, 3L, 4L, 5L, 7L, 8L, 9L, 16L})
        for (long n = 1; n <= 30; ++n)
            for (long d = 1; d <= n; ++d) CHECK(simplified_bounds_check(n, d, q));
}

TEST_CASE("partial products increase and stay below 7/5")
{
    Rational p = 1;
    for (long i = 1; i <= 64; ++i) {
        const Rational next = p * (1 + pow(Rational(2), -2 * i));
        CHECK(next > p);
        CHECK(next < Rational(7, 5));
        p = next;
    }
    for (long n = 1; n <= 64; ++n) CHECK(product_inequalities_hold(n, 2));
}

}
