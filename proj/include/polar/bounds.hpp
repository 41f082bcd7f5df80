#pragma once

// Upper bounds on d-codes of generators.

#include <string_view>

#include "polar/distributions.hpp"
#include "polar/rational.hpp"
#include "polar/schemes.hpp"

namespace polar {

enum class BoundFormula { ThmOddD, ThmEvenD, CorA, CorB, CorC, CorD, CorE, CorF };

std::string_view formula_name(BoundFormula f);

struct BoundResult {
    Rational value;
    BoundFormula formula_used;
    SchemeSpec spec;
    long d;

    Integer floor_value() const { return polar::floor(value); }
};

// alpha(n, d) = prod_{i=1}^n (1 + q^{2i-1}) prod_{i=1}^{d-1} (1 + (-q)^i) / (1 - (-q)^{n+i}) eps(n, d)
Rational alpha(long n, long d, long q);
Rational epsilon(long n, long d, long q);

// Product form of the bound for 1/2 D_m. Accepts 1 <= d <= m.
Rational beta(long m, long d, long q);

// |X| (q; b)_{d-1} / (q c b^n; b)_{d-1} on 2A-odd (odd d) and half-D.
Rational theorem_bound(const SchemeSpec& spec, long d);

// The even-d bound on 2A-odd, evaluated from its two-factor form with (b, c) = (-q, -1).
Rational theorem_bound_even_d(const SchemeSpec& spec, long d);

// One named case of the corollary; rejects a case that does not apply to (spec, d).
BoundResult corollary_bound(const SchemeSpec& spec, long d, BoundFormula which);

// Dispatches to the applicable case for the base families; half-D and
// fused-BC use the theorem bound of the matching half-D scheme.
BoundResult code_bound(const SchemeSpec& spec, long d);

// The three product inequalities at (n, q).
bool product_inequalities_hold(long n, long q);

// Strict exponential bounds on alpha(n, d) and beta(n, d), plus the product inequalities.
bool simplified_bounds_check(long n, long d, long q);

}  // namespace polar
