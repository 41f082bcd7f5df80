#include "polar/distributions.hpp"

#include <string>

namespace polar {

Rational Distribution::total() const
{
    Rational s = 0;
    for (const Rational& a : entries) s += a;
    return s;
}

RelationTable::RelationTable(std::size_t size, long classes)
    : size_(size), classes_(classes), rel_(size * size, 0)
{
}

Distribution inner_distribution(std::span<const std::size_t> subset, const RelationTable& relations)
{
    if (subset.empty()) throw EmptySubset("inner distribution of an empty set");
    std::vector<long> counts(static_cast<std::size_t>(relations.classes() + 1), 0);
    for (std::size_t x : subset)
        for (std::size_t y : subset) ++counts[relations(x, y)];
    Distribution d;
    d.flavor = Flavor::Inner;
    for (long c : counts) d.entries.emplace_back(c, static_cast<long>(subset.size()));
    for (Rational& a : d.entries) a.canonicalize();
    return d;
}

Distribution dual_distribution(const Distribution& inner, const EigTable& table)
{
    if (inner.flavor != Flavor::Inner) throw std::invalid_argument("dual_distribution expects an inner distribution");
    if (inner.classes() != table.classes) throw LengthMismatch("distribution length does not match the table");
    Distribution d;
    d.flavor = Flavor::Dual;
    for (long k = 0; k <= table.classes; ++k) {
        Rational s = 0;
        for (long i = 0; i <= table.classes; ++i) s += table.Q[k][i] * inner[i];
        d.entries.push_back(s);
    }
    return d;
}

Distribution inverse_dual_distribution(const Distribution& dual, const EigTable& table)
{
    if (dual.flavor != Flavor::Dual) throw std::invalid_argument("inverse_dual_distribution expects a dual distribution");
    if (dual.classes() != table.classes) throw LengthMismatch("distribution length does not match the table");
    Distribution d;
    d.flavor = Flavor::Inner;
    for (long i = 0; i <= table.classes; ++i) {
        Rational s = 0;
        for (long k = 0; k <= table.classes; ++k) s += table.P[i][k] * dual[k];
        d.entries.push_back(s / table.x_size);
    }
    return d;
}

bool is_d_code(const Distribution& inner, long d)
{
    if (d < 1 || d > inner.classes() + 1) throw BadParameters("d must lie in 1..n+1");
    for (long i = 1; i < d; ++i)
        if (inner[i] != 0) return false;
    return true;
}

Distribution steiner_inner_distribution(const SchemeSpec& spec, long t)
{
    if (!is_base_kind(spec.kind())) throw BadParameters("Steiner systems are defined for the six base families");
    const long n = spec.rank();
    if (t < 1 || t > n) throw BadParameters("t must lie in 1..n, got " + std::to_string(t));
    const QBase p = spec.p_base();

    // tail[j] = prod_{l=j}^{t-1} (1 + p^{n-l+e})
    std::vector<Rational> tail(static_cast<std::size_t>(t + 1), Rational(1));
    for (long j = t - 1; j >= 0; --j) tail[j] = tail[j + 1] * (1 + spec.p_half_pow(2 * (n - j) + spec.two_e()));

    Distribution d;
    d.flavor = Flavor::Inner;
    d.entries.assign(static_cast<std::size_t>(n + 1), Rational(0));
    d.entries[0] = 1;
    for (long i = 0; i <= t - 1; ++i) {
        Rational a = 0;
        for (long j = i; j <= t - 1; ++j) {
            Rational term = p.pow(binom2(j - i)) * qbinomial(j, i, p) * qbinomial(n, j, p) * (tail[j] - 1);
            if ((j - i) % 2 != 0) term = -term;
            a += term;
        }
        d.entries[static_cast<std::size_t>(n - i)] = a;
    }
    return d;
}

Distribution steiner_dual_distribution(const SchemeSpec& spec, long t)
{
    const Distribution inner = steiner_inner_distribution(spec, t);
    const Distribution dual = dual_distribution(inner, eig_table(spec));
    for (long k = 1; k <= t; ++k)
        if (dual[k] != 0)
            throw InvariantViolation("Steiner dual distribution has A'_" + std::to_string(k) + " = " +
                                     to_string(dual[k]) + " != 0 for " + spec.label());
    return dual;
}

}  // namespace polar
