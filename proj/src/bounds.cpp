#include "polar/bounds.hpp"

#include <string>

namespace polar {

namespace {

void require_q(long q)
{
    if (!is_prime_power(q)) throw BadParameters("q must be a prime power, got " + std::to_string(q));
}

Rational minus_q_pow(long q, long e) { return pow(Rational(-q), e); }

}  // namespace

std::string_view formula_name(BoundFormula f)
{
    switch (f) {
    case BoundFormula::ThmOddD: return "theorem-odd-d";
    case BoundFormula::ThmEvenD: return "theorem-even-d";
    case BoundFormula::CorA: return "corollary-a";
    case BoundFormula::CorB: return "corollary-b";
    case BoundFormula::CorC: return "corollary-c";
    case BoundFormula::CorD: return "corollary-d";
    case BoundFormula::CorE: return "corollary-e";
    case BoundFormula::CorF: return "corollary-f";
    }
    return "?";
}

Rational epsilon(long n, long d, long q)
{
    require_q(q);
    if (d < 1 || d > n) throw BadParameters("epsilon needs 1 <= d <= n");
    if (d % 2 != 0) return 1;
    const Rational a = minus_q_pow(q, n - d + 2) - 1;
    const Rational top = minus_q_pow(q, n + d - 2) - 1;
    const Rational tail = minus_q_pow(q, n - d + 1) - 1;
    const Rational num = a + q * top / (q * minus_q_pow(q, d - 2) - 1) * tail;
    const Rational den = a + q * top / (minus_q_pow(q, n + d - 1) - 1) * tail;
    if (den == 0) throw std::domain_error("epsilon: vanishing denominator");
    return num / den;
}

Rational alpha(long n, long d, long q)
{
    require_q(q);
    if (n < 1 || d < 1 || d > n) throw BadParameters("alpha needs 1 <= d <= n");
    Rational value = 1;
    for (long i = 1; i <= n; ++i) value *= 1 + pow(Rational(q), 2 * i - 1);
    for (long i = 1; i <= d - 1; ++i) value *= (1 + minus_q_pow(q, i)) / (1 - minus_q_pow(q, n + i));
    return value * epsilon(n, d, q);
}

Rational beta(long m, long d, long q)
{
    require_q(q);
    if (m < 1 || d < 1 || d > m) throw BadParameters("beta needs 1 <= d <= m");
    const long shift = (m % 2 == 0) ? m - 2 : m - 1;
    Rational value = 1;
    for (long i = 1; i <= m - 1; ++i) value *= 1 + pow(Rational(q), i);
    for (long i = 1; i <= d - 1; ++i)
        value *= (1 - pow(Rational(q), 2 * i - 1)) / (1 - pow(Rational(q), shift + 2 * i));
    return value;
}

Rational theorem_bound(const SchemeSpec& spec, long d)
{
    if (!spec.has_hahn_parameters()) throw WrongFamily("the theorem bound applies to 2A-odd and half-D, got " + spec.label());
    const long n = spec.classes();
    if (d < 1 || d > n) throw BadParameters("theorem bound needs 1 <= d <= n");
    if (spec.kind() == PolarKind::HermitianOdd && d % 2 == 0) return theorem_bound_even_d(spec, d);
    const QBase b(spec.hahn_b());
    const Rational q(spec.q());
    return scheme_size(spec) * qpochhammer(q, b, d - 1) / qpochhammer(q * spec.hahn_c() * b.pow(n), b, d - 1);
}

Rational theorem_bound_even_d(const SchemeSpec& spec, long d)
{
    if (spec.kind() != PolarKind::HermitianOdd) throw WrongFamily("even-d theorem bound applies to 2A-odd only");
    const long n = spec.rank();
    if (d % 2 != 0 || d < 2 || d > n) throw BadParameters("even-d theorem bound needs even 2 <= d <= n");
    const QBase b(spec.hahn_b());
    const Rational q(spec.q());
    const Rational c = spec.hahn_c();
    const Rational lead = scheme_size(spec) * qpochhammer(q, b, d - 1) / qpochhammer(q * c * b.pow(n), b, d - 1);
    const Rational a = b.pow(n - d + 2) - 1;
    const Rational top = b.pow(n + d - 2) - 1;
    const Rational tail = b.pow(n - d + 1) - 1;
    const Rational num = a + q * top / (q * b.pow(d - 2) - 1) * tail;
    const Rational den = a + q * top / (b.pow(n + d - 1) - 1) * tail;
    return lead * num / den;
}

BoundResult corollary_bound(const SchemeSpec& spec, long d, BoundFormula which)
{
    const long n = spec.rank();
    const long q = spec.q();
    if (!is_base_kind(spec.kind())) throw WrongFamily("corollary bounds apply to the six base families");
    if (d < 1 || d > n) throw BadParameters("code bound needs 1 <= d <= n, got d=" + std::to_string(d));
    const long delta = (d + 1) / 2;

    auto applies = [&]() {
        switch (which) {
        case BoundFormula::CorA: return spec.kind() == PolarKind::HermitianOdd;
        case BoundFormula::CorB: return spec.kind() == PolarKind::HermitianEven;
        case BoundFormula::CorC: return spec.kind() == PolarKind::Parabolic || spec.kind() == PolarKind::Symplectic;
        case BoundFormula::CorD: return spec.kind() == PolarKind::Hyperbolic && d % 2 != 0;
        case BoundFormula::CorE: return spec.kind() == PolarKind::Hyperbolic && d % 2 == 0;
        case BoundFormula::CorF: return spec.kind() == PolarKind::Elliptic;
        default: return false;
        }
    };
    if (!applies())
        throw BadParameters(std::string(formula_name(which)) + " does not apply to " + spec.label() + " with d=" +
                            std::to_string(d));

    Rational value;
    switch (which) {
    case BoundFormula::CorA: value = alpha(n, d, q); break;
    case BoundFormula::CorB: value = alpha(n + 1, d, q); break;
    case BoundFormula::CorC: value = beta(n + 1, delta, q); break;
    case BoundFormula::CorD: value = 2 * beta(n, delta, q); break;
    case BoundFormula::CorE: value = beta(n, delta, q); break;
    case BoundFormula::CorF: value = beta(n + 2, delta, q); break;
    default: break;
    }
    if (value < 1) throw InvariantViolation("code bound below 1 for " + spec.label());
    return BoundResult{value, which, spec, d};
}

BoundResult code_bound(const SchemeSpec& spec, long d)
{
    switch (spec.kind()) {
    case PolarKind::HermitianOdd: return corollary_bound(spec, d, BoundFormula::CorA);
    case PolarKind::HermitianEven: return corollary_bound(spec, d, BoundFormula::CorB);
    case PolarKind::Symplectic:
    case PolarKind::Parabolic: return corollary_bound(spec, d, BoundFormula::CorC);
    case PolarKind::Hyperbolic:
        return corollary_bound(spec, d, d % 2 != 0 ? BoundFormula::CorD : BoundFormula::CorE);
    case PolarKind::Elliptic: return corollary_bound(spec, d, BoundFormula::CorF);
    case PolarKind::HalfHyperbolic: return BoundResult{theorem_bound(spec, d), BoundFormula::ThmOddD, spec, d};
    case PolarKind::FusedBC: {
        const SchemeSpec half(PolarKind::HalfHyperbolic, spec.rank() + 1, spec.q());
        return BoundResult{theorem_bound(half, d), BoundFormula::ThmOddD, spec, d};
    }
    }
    throw WrongFamily("unknown family");
}

bool product_inequalities_hold(long n, long q)
{
    if (n < 1 || q < 2) throw BadParameters("product inequalities need n >= 1, q >= 2");
    Rational a = 1;
    Rational b = 1;
    Rational c = 1;
    const Rational qq(q);
    for (long i = 1; i <= n; ++i) {
        a *= 1 + pow(qq, -i);
        b *= 1 + pow(qq, -2 * i);
        c *= 1 + pow(qq, -(2 * i - 1));
    }
    return a < Rational(5, 2) && b < Rational(7, 5) && c < 2;
}

bool simplified_bounds_check(long n, long d, long q)
{
    require_q(q);
    if (n < 1 || d < 1 || d > n) throw BadParameters("simplified bounds need 1 <= d <= n");
    const Rational qq(q);
    const Rational alpha_cap = Rational(14, 5) * pow(qq, d % 2 != 0 ? n * (n - d + 1) : n * (n - d + 2));
    // Both exponents are integers: n - 2d + 2 is even for even n, n - 2d + 1 is even for odd n.
    const Rational beta_cap =
        Rational(5, 2) * pow(qq, n % 2 == 0 ? (n - 1) * (n - 2 * d + 2) / 2 : n * (n - 2 * d + 1) / 2);
    return alpha(n, d, q) < alpha_cap && beta(n, d, q) < beta_cap && product_inequalities_hold(n, q);
}

}  // namespace polar
