#pragma once

// Delsarte linear programming bound for d-codes, solved exactly.

#include <vector>

#include "polar/bounds.hpp"
#include "polar/rational.hpp"
#include "polar/schemes.hpp"

namespace polar {

enum class LPStatus { Optimal, Infeasible, Unbounded };

// max c.x subject to A x <= b, x >= 0, with b >= 0.
struct LPProblem {
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    std::vector<Rational> c;
};

struct LPSolution {
    LPStatus status = LPStatus::Infeasible;
    Rational value;
    std::vector<Rational> x;
    std::vector<Rational> y;  // dual multipliers, one per row of A
    long pivots = 0;
};

// Dense tableau simplex with Bland's rule. Requires b >= 0, so the origin is a
// starting vertex; otherwise reports Infeasible without pivoting.
LPSolution solve(const LPProblem& lp);

// A x <= b, x >= 0, A^T y >= c, y >= 0 and b.y == c.x.
bool certificate_holds(const LPProblem& lp, const LPSolution& sol);

struct LPResult {
    LPStatus status = LPStatus::Infeasible;
    Rational optimum;
    std::vector<Rational> primal;  // a_0..a_n
    std::vector<Rational> dual;    // multipliers of sum_i Q_k(i) a_i >= 0, k = 1..n
    bool certified = false;
    long pivots = 0;
};

// maximize sum_i a_i subject to a_0 = 1, a_1 = ... = a_{d-1} = 0, a_i >= 0 and
// sum_i Q_k(i) a_i >= 0 for every k.
LPResult lp_bound(const SchemeSpec& spec, long d);
LPResult lp_bound(const EigTable& table, long d);

struct LPComparison {
    Rational lp;
    Rational closed_form;
    bool lp_at_most_closed_form;
};

LPComparison lp_vs_closed_form(const SchemeSpec& spec, long d);

}  // namespace polar
