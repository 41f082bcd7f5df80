#pragma once

// q-analog toolkit over exact rationals: Gaussian binomials, q-Pochhammer
// symbols and terminating basic hypergeometric sums at a concrete base.

#include <span>
#include <stdexcept>
#include <vector>

#include "polar/rational.hpp"

namespace polar {

// Base of a q-series. Rejects 0 and +-1, where the series degenerate.
class QBase {
public:
    explicit QBase(Rational value);
    explicit QBase(long value) : QBase(Rational(value)) {}

    const Rational& value() const noexcept { return value_; }
    Rational pow(long exponent) const { return polar::pow(value_, exponent); }

private:
    Rational value_;
};

class NonTerminating : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// [n, k]_q. Zero for k < 0 and for k > n >= 0; the defining product is used
// for every other (n, k), including negative n.
Rational qbinomial(long n, long k, const QBase& q);

// (a; q)_n = prod_{i<n} (1 - a q^i).
Rational qpochhammer(const Rational& a, const QBase& q, long n);

// r phi s (a_1..a_r; b_1..b_s; q, z). The sum must terminate: some upper
// parameter equals q^{-i} for an integer 0 <= i <= max_degree. A lower
// parameter whose Pochhammer symbol vanishes before termination is a domain
// error.
Rational qhypergeometric(std::span<const Rational> upper,
                         std::span<const Rational> lower,
                         const QBase& q,
                         const Rational& z,
                         long max_degree = 256);

// Degree at which the series terminates, or -1 when no upper parameter is
// q^{-i} with 0 <= i <= max_degree.
long termination_degree(std::span<const Rational> upper, const QBase& q, long max_degree = 256);

// sum_i q^{C(i,2)} [k,i]_q z^i == prod_{i<k} (1 + z q^i)
bool qbinomial_theorem_check(long k, const Rational& z, const QBase& q);

// sum_{j=i..k} (-1)^{j-i} q^{C(j-i,2)} [j,i]_q [k,j]_q == delta_{ik}
bool inversion_check(long i, long k, const QBase& q);

inline long binom2(long x) { return x * (x - 1) / 2; }

}  // namespace polar
