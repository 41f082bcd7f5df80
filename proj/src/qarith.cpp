#include "polar/qarith.hpp"

#include <string>

namespace polar {

QBase::QBase(Rational value) : value_(std::move(value))
{
    if (value_ == 0 || value_ == 1 || value_ == -1)
        throw std::invalid_argument("q-base must not be 0 or +-1, got " + to_string(value_));
}

Rational qbinomial(long n, long k, const QBase& q)
{
    if (k < 0) return 0;
    if (n >= 0 && k > n) return 0;
    Rational result = 1;
    for (long j = 1; j <= k; ++j) {
        result *= q.pow(n - j + 1) - 1;
        result /= q.pow(j) - 1;
    }
    return result;
}

Rational qpochhammer(const Rational& a, const QBase& q, long n)
{
    if (n < 0) throw std::invalid_argument("qpochhammer: negative length");
    Rational result = 1;
    Rational aqi = a;
    for (long i = 0; i < n; ++i) {
        result *= 1 - aqi;
        aqi *= q.value();
    }
    return result;
}

long termination_degree(std::span<const Rational> upper, const QBase& q, long max_degree)
{
    long best = -1;
    for (const Rational& a : upper) {
        Rational aqi = a;
        for (long i = 0; i <= max_degree; ++i) {
            if (aqi == 1) {
                if (best < 0 || i < best) best = i;
                break;
            }
            aqi *= q.value();
        }
    }
    return best;
}

Rational qhypergeometric(std::span<const Rational> upper,
                         std::span<const Rational> lower,
                         const QBase& q,
                         const Rational& z,
                         long max_degree)
{
    const long degree = termination_degree(upper, q, max_degree);
    if (degree < 0) throw NonTerminating("q-hypergeometric series does not terminate");

    const long r = static_cast<long>(upper.size());
    const long s = static_cast<long>(lower.size());
    const long excess = 1 + s - r;

    // term_l = prod (a;q)_l / prod (b;q)_l * (-1)^{excess l} q^{excess C(l,2)} z^l / (q;q)_l,
    // built incrementally from term_{l-1}.
    Rational sum = 1;
    Rational term = 1;
    for (long l = 1; l <= degree; ++l) {
        const long i = l - 1;
        Rational ratio = z;
        for (const Rational& a : upper) ratio *= 1 - a * q.pow(i);
        if (ratio == 0) break;
        for (const Rational& b : lower) {
            Rational factor = 1 - b * q.pow(i);
            if (factor == 0)
                throw std::domain_error("q-hypergeometric: lower parameter vanishes before termination");
            ratio /= factor;
        }
        ratio /= 1 - q.pow(l);
        if (excess != 0) {
            // q^{excess (C(l,2) - C(l-1,2))} = q^{excess (l-1)}
            ratio *= q.pow(excess * i);
            if (excess % 2 != 0) ratio = -ratio;
        }
        term *= ratio;
        sum += term;
    }
    return sum;
}

bool qbinomial_theorem_check(long k, const Rational& z, const QBase& q)
{
    Rational lhs = 0;
    for (long i = 0; i <= k; ++i) lhs += q.pow(binom2(i)) * qbinomial(k, i, q) * pow(z, i);
    Rational rhs = 1;
    for (long i = 0; i < k; ++i) rhs *= 1 + z * q.pow(i);
    return lhs == rhs;
}

bool inversion_check(long i, long k, const QBase& q)
{
    Rational sum = 0;
    for (long j = i; j <= k; ++j) {
        Rational term = q.pow(binom2(j - i)) * qbinomial(j, i, q) * qbinomial(k, j, q);
        if ((j - i) % 2 != 0) term = -term;
        sum += term;
    }
    return sum == (i == k ? 1 : 0);
}

}  // namespace polar
