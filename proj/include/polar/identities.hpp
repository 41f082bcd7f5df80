#pragma once

// Two Q-number identities used to derive the Steiner inner distributions and
// the even-d bound, evaluated exactly at concrete parameters.

#include "polar/rational.hpp"
#include "polar/schemes.hpp"

namespace polar {

struct IdentityValue {
    Rational lhs;
    Rational rhs;

    bool holds() const { return lhs == rhs; }
};

// sum_k p^{k(n-j)} [n-k, n-j]_p prod_{l=1}^{n-j} (1 + p^{l-k+e}) Q_k(i) = |X| [n-i, j]_p
// for the six base families.
IdentityValue polar_q_identity(const SchemeSpec& spec, long i, long j);

// sum_k b^{k(n-j)} [n-k, n-j]_b (q c b^{n-k}; b)_{n-j} / (q; b)_{n-j} Q'_k(i) = |X| [n-i, j]_b
// with the q-Hahn Q-numbers of 2A-odd and half-D.
IdentityValue hahn_q_identity(const SchemeSpec& spec, long i, long j);

}  // namespace polar
