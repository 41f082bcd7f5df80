#include "doctest.h"

#include <string>
#include <vector>

#include "polar/schemes.hpp"

using namespace polar;

namespace {

using Table = std::vector<std::vector<long>>;

void check_against(const SchemeSpec& spec, long size, const Table& P, const std::vector<long>& mu)
{
    const EigTable t = eig_table(spec);
    INFO(spec.label());
    CHECK(t.x_size == size);
    for (std::size_t i = 0; i < P.size(); ++i)
        for (std::size_t k = 0; k < P.size(); ++k) CHECK(t.P[i][k] == P[i][k]);
    for (std::size_t k = 0; k < mu.size(); ++k) CHECK(t.multiplicities[k] == mu[k]);
}

}  // namespace

TEST_SUITE("schemes") {

TEST_CASE("family names")
{
    CHECK(parse_kind("2A-odd") == PolarKind::HermitianOdd);
    CHECK(parse_kind("HYPERBOLIC") == PolarKind::Hyperbolic);
    CHECK(parse_kind("symplectic") == PolarKind::Symplectic);
    CHECK(parse_kind("2d") == PolarKind::Elliptic);
    CHECK_FALSE(parse_kind("E8").has_value());
    CHECK(is_prime_power(9));
    CHECK_FALSE(is_prime_power(6));
    CHECK_THROWS(SchemeSpec(PolarKind::Symplectic, 2, 6));
}

TEST_CASE("scheme sizes")
{
    CHECK(scheme_size(SchemeSpec(PolarKind::Symplectic, 2, 2)) == 15);
    CHECK(scheme_size(SchemeSpec(PolarKind::Hyperbolic, 2, 2)) == 6);
    CHECK(scheme_size(SchemeSpec(PolarKind::HermitianOdd, 2, 2)) == 27);
    CHECK(scheme_size(SchemeSpec(PolarKind::Hyperbolic, 4, 2)) == 270);
    CHECK(scheme_size(SchemeSpec(PolarKind::HalfHyperbolic, 4, 2)) == 135);
    for (PolarKind k : kBaseKinds) CHECK(scheme_size(SchemeSpec(k, 0, 3)) == 1);
}

TEST_CASE("valencies")
{
    const SchemeSpec c2(PolarKind::Symplectic, 2, 2);
    CHECK(valency(c2, 0) == 1);
    CHECK(valency(c2, 1) == 6);
    CHECK(valency(SchemeSpec(PolarKind::HermitianOdd, 2, 2), 2) == 16);
    for (PolarKind k : kBaseKinds)
        for (long n = 1; n <= 6; ++n) {
            const SchemeSpec s(k, n, 3);
            Rational total = 0;
            for (long i = 0; i <= n; ++i) total += valency(s, i);
            CHECK(total == scheme_size(s));
        }
}

TEST_CASE("tables against enumerated spaces")
{
    check_against(SchemeSpec(PolarKind::Symplectic, 2, 2), 15, {{1, 1, 1}, {6, 1, -3}, {8, -2, 2}}, {1, 9, 5});
    check_against(SchemeSpec(PolarKind::Hyperbolic, 2, 2), 6, {{1, 1, 1}, {3, 0, -3}, {2, -1, 2}}, {1, 4, 1});
    check_against(SchemeSpec(PolarKind::Hyperbolic, 3, 2), 30,
                  {{1, 1, 1, 1}, {7, 2, -2, -7}, {14, -1, -1, 14}, {8, -2, 2, -8}}, {1, 14, 14, 1});
    check_against(SchemeSpec(PolarKind::Parabolic, 2, 3), 40, {{1, 1, 1}, {12, 2, -4}, {27, -3, 3}}, {1, 24, 15});
    check_against(SchemeSpec(PolarKind::HermitianOdd, 2, 2), 27, {{1, 1, 1}, {10, 1, -5}, {16, -2, 4}}, {1, 20, 6});
    check_against(SchemeSpec(PolarKind::Elliptic, 2, 2), 45, {{1, 1, 1}, {12, 3, -3}, {32, -4, 2}}, {1, 20, 24});
    check_against(SchemeSpec(PolarKind::Symplectic, 3, 2), 135,
                  {{1, 1, 1, 1}, {14, 5, -1, -7}, {56, 2, -4, 14}, {64, -8, 4, -8}}, {1, 35, 84, 15});
    check_against(SchemeSpec(PolarKind::Hyperbolic, 4, 2), 270,
                  {{1, 1, 1, 1, 1}, {15, 6, 0, -6, -15}, {70, 7, -5, 7, 70}, {120, -6, 0, 6, -120}, {64, -8, 4, -8, 64}},
                  {1, 50, 168, 50, 1});
}

TEST_CASE("P-number edge values")
{
    for (PolarKind k : kBaseKinds)
        for (long q : {2L, 3L, 4L}) {
            const SchemeSpec s(k, 4, q);
            for (long kk = 0; kk <= 4; ++kk) CHECK(p_number(s, 0, kk) == 1);
            CHECK(p_number(SchemeSpec(k, 1, q), 1, 1) == -1);
        }
    const SchemeSpec d4(PolarKind::Hyperbolic, 4, 2);
    CHECK(p_number(d4, 2, 3) == p_number_phi(d4, 2, 3));
}

TEST_CASE("every table passes its own checks")
{
    for (PolarKind k : kBaseKinds)
        for (long n = 1; n <= 6; ++n)
            for (long q : {2L, 3L, 4L, 5L}) {
                const EigTable t = eig_table(SchemeSpec(k, n, q));
                CHECK(check_table(t).empty());
                // mu_k P_i(k) = v_i Q_k(i)
                for (long i = 0; i <= n; ++i)
                    for (long kk = 0; kk <= n; ++kk) CHECK(t.multiplicities[kk] * t.P[i][kk] == t.valencies[i] * t.Q[kk][i]);
            }
}

TEST_CASE("a corrupted table is caught")
{
    EigTable t = eig_table(SchemeSpec(PolarKind::Hyperbolic, 3, 2));
    t.P[2][1] += 1;
    CHECK_FALSE(check_table(t).empty());
}

TEST_CASE("rank one is a complete graph")
{
    for (PolarKind k : kBaseKinds) {
        const EigTable t = eig_table(SchemeSpec(k, 1, 3));
        const Rational v = t.x_size - 1;
        CHECK(t.P[1][0] == v);
        CHECK(t.P[1][1] == -1);
        CHECK(t.multiplicities[1] == v);
    }
}

TEST_CASE("alternate ordering of 2A-odd is a permutation of the standard one")
{
    const SchemeSpec s(PolarKind::HermitianOdd, 2, 2);
    const EigTable std_t = eig_table(s);
    const EigTable alt = eig_table(s, Ordering::HermAlternate);
    const std::vector<long> order = hermitian_alternate_order(2);
    CHECK(order == std::vector<long>{0, 2, 1});
    for (long i = 0; i <= 2; ++i)
        for (long k = 0; k <= 2; ++k) CHECK(alt.P[i][k] == std_t.P[i][order[k]]);
    CHECK_THROWS(eig_table(SchemeSpec(PolarKind::Symplectic, 2, 2), Ordering::HermAlternate));
}

TEST_CASE("fused B_3 has the table of half D_4")
{
    for (long q : {2L, 3L}) {
        const EigTable fused = eig_table(SchemeSpec(PolarKind::FusedBC, 3, q));
        const EigTable half = eig_table(SchemeSpec(PolarKind::HalfHyperbolic, 4, q));
        CHECK(fused.P == half.P);
        CHECK(fused.Q == half.Q);
        CHECK(fused.x_size == half.x_size);
    }
}

TEST_CASE("q-Hahn numbers reproduce the half-D table")
{
    for (long m = 2; m <= 8; ++m) {
        const SchemeSpec s(PolarKind::HalfHyperbolic, m, 2);
        const EigTable t = eig_table(s);
        for (long i = 0; i <= s.classes(); ++i)
            for (long k = 0; k <= s.classes(); ++k) {
                CHECK(hahn_p_number(s, i, k) == t.P[i][k]);
                CHECK(hahn_q_number(s, k, i) == t.Q[k][i]);
            }
    }
}

}
