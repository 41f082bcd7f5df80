#include "doctest.h"

#include <vector>

#include "polar/qarith.hpp"

using namespace polar;

TEST_SUITE("qarith") {

TEST_CASE("gaussian binomials")
{
    const QBase two(2);
    CHECK(qbinomial(4, 2, two) == 35);
    CHECK(qbinomial(7, 0, QBase(5)) == 1);
    CHECK(qbinomial(3, 5, QBase(3)) == 0);
    CHECK(qbinomial(3, -1, two) == 0);
    for (long b : {2L, 3L, -2L, -3L, 4L}) {
        const QBase q(b);
        for (long n = 0; n <= 8; ++n)
            for (long k = 0; k <= n; ++k) {
                CHECK(qbinomial(n, k, q) == qbinomial(n, n - k, q));
                if (n > 0 && k > 0) CHECK(qbinomial(n, k, q) == qbinomial(n - 1, k - 1, q) + q.pow(k) * qbinomial(n - 1, k, q));
            }
    }
}

TEST_CASE("q-Pochhammer")
{
    CHECK(qpochhammer(Rational(7, 3), QBase(2), 0) == 1);
    CHECK(qpochhammer(Rational(2), QBase(2), 2) == 3);
    CHECK(qpochhammer(Rational(-1), QBase(-2), 3) == -10);
}

TEST_CASE("bases 0 and +-1 are rejected")
{
    CHECK_THROWS(QBase(0));
    CHECK_THROWS(QBase(1));
    CHECK_THROWS(QBase(-1));
}

TEST_CASE("terminating series")
{
    const QBase q(2);
    const std::vector<Rational> one{Rational(1), Rational(3)};
    const std::vector<Rational> lower{Rational(5)};
    CHECK(qhypergeometric(one, lower, q, Rational(11, 7)) == 1);
    CHECK(termination_degree(std::vector<Rational>{Rational(1, 8)}, q) == 3);
    CHECK(termination_degree(std::vector<Rational>{Rational(3)}, q) == -1);
    CHECK_THROWS_AS(qhypergeometric(std::vector<Rational>{Rational(3)}, lower, q, Rational(1)), NonTerminating);
}

TEST_CASE("q-Chu-Vandermonde at (k, x, y, q) = (2, 3, 5, 2)")
{
    const QBase q(2);
    const long k = 2;
    const Rational x = 3, y = 5;
    const std::vector<Rational> upper{q.pow(-k), x};
    const std::vector<Rational> lower{y};
    const Rational lhs = qhypergeometric(upper, lower, q, y * q.pow(k) / x);
    CHECK(lhs == qpochhammer(y / x, q, k) / qpochhammer(y, q, k));
    CHECK(lhs == Rational(7, 162));
}

TEST_CASE("q-Pfaff-Saalschutz at i = 2, q = 2")
{
    const QBase q(2);
    const long i = 2;
    const Rational x = 3, y(5, 2), z = 7;
    const std::vector<Rational> upper{q.pow(-i), x, y};
    const std::vector<Rational> lower{z, q.pow(1 - i) * x * y / z};
    const Rational lhs = qhypergeometric(upper, lower, q, q.value());
    const Rational rhs = qpochhammer(z / x, q, i) * qpochhammer(z / y, q, i) /
                         (qpochhammer(z, q, i) * qpochhammer(z / (x * y), q, i));
    CHECK(lhs == rhs);
    CHECK(lhs == Rational(-1518, 169));
}

TEST_CASE("q-binomial theorem")
{
    CHECK(qbinomial_theorem_check(0, Rational(5), QBase(3)));
    CHECK(qbinomial_theorem_check(3, Rational(1), QBase(2)));
    CHECK(qbinomial_theorem_check(5, Rational(-3, 2), QBase(-2)));
    for (long k = 0; k <= 6; ++k)
        for (long b : {2L, -3L, 4L}) CHECK(qbinomial_theorem_check(k, Rational(2, 7), QBase(b)));
}

TEST_CASE("inversion formula")
{
    CHECK(inversion_check(2, 2, QBase(3)));
    CHECK(inversion_check(0, 3, QBase(2)));
    CHECK(inversion_check(1, 4, QBase(-2)));
    for (long k = 0; k <= 6; ++k)
        for (long i = 0; i <= k; ++i) CHECK(inversion_check(i, k, QBase(5)));
}

}
