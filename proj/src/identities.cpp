#include "polar/identities.hpp"

#include <string>

namespace polar {

IdentityValue polar_q_identity(const SchemeSpec& spec, long i, long j)
{
    if (!is_base_kind(spec.kind())) throw WrongFamily("identity needs a base family, got " + spec.label());
    const long n = spec.rank();
    if (i < 0 || i > n || j < 0 || j > n) throw IndexOutOfRange("indices must lie in 0..n");
    const EigTable table = eig_table(spec);
    const QBase p = spec.p_base();

    IdentityValue v;
    v.lhs = 0;
    for (long k = 0; k <= n; ++k) {
        Rational term = p.pow(k * (n - j)) * qbinomial(n - k, n - j, p);
        if (term == 0) continue;
        for (long l = 1; l <= n - j; ++l) term *= 1 + spec.p_half_pow(2 * (l - k) + spec.two_e());
        v.lhs += term * table.Q[k][i];
    }
    v.rhs = table.x_size * qbinomial(n - i, j, p);
    return v;
}

IdentityValue hahn_q_identity(const SchemeSpec& spec, long i, long j)
{
    if (!spec.has_hahn_parameters()) throw WrongFamily("identity needs 2A-odd or half-D, got " + spec.label());
    const long n = spec.classes();
    if (i < 0 || i > n || j < 0 || j > n) throw IndexOutOfRange("indices must lie in 0..n");
    const QBase b(spec.hahn_b());
    const Rational c = spec.hahn_c();
    const Rational q(spec.q());

    IdentityValue v;
    v.lhs = 0;
    for (long k = 0; k <= n; ++k) {
        const Rational bin = qbinomial(n - k, n - j, b);
        if (bin == 0) continue;
        const Rational weight =
            b.pow(k * (n - j)) * bin * qpochhammer(q * c * b.pow(n - k), b, n - j) / qpochhammer(q, b, n - j);
        v.lhs += weight * hahn_q_number(spec, k, i);
    }
    v.rhs = scheme_size(spec) * qbinomial(n - i, j, b);
    return v;
}

}  // namespace polar
