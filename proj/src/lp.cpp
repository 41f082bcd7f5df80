#include "polar/lp.hpp"

#include <string>

#include "polar/distributions.hpp"

namespace polar {

LPSolution solve(const LPProblem& lp)
{
    const std::size_t m = lp.A.size();
    const std::size_t n = lp.c.size();
    LPSolution sol;
    for (const Rational& bi : lp.b)
        if (bi < 0) return sol;

    // Columns 0..n-1 are structural, n..n+m-1 are slacks; column n+m is the rhs.
    const std::size_t cols = n + m;
    std::vector<std::vector<Rational>> T(m, std::vector<Rational>(cols + 1, Rational(0)));
    std::vector<std::size_t> basis(m);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t j = 0; j < n; ++j) T[r][j] = lp.A[r][j];
        T[r][n + r] = 1;
        T[r][cols] = lp.b[r];
        basis[r] = n + r;
    }
    // Reduced costs c_j - z_j; the last entry holds -objective.
    std::vector<Rational> red(cols + 1, Rational(0));
    for (std::size_t j = 0; j < n; ++j) red[j] = lp.c[j];

    for (;;) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j)
            if (red[j] > 0) {
                enter = j;
                break;
            }
        if (enter == cols) break;

        std::size_t leave = m;
        Rational best;
        for (std::size_t r = 0; r < m; ++r) {
            if (T[r][enter] <= 0) continue;
            Rational ratio = T[r][cols] / T[r][enter];
            if (leave == m || ratio < best || (ratio == best && basis[r] < basis[leave])) {
                leave = r;
                best = ratio;
            }
        }
        if (leave == m) {
            sol.status = LPStatus::Unbounded;
            return sol;
        }

        const Rational pivot = T[leave][enter];
        for (Rational& v : T[leave]) v /= pivot;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == leave || T[r][enter] == 0) continue;
            const Rational f = T[r][enter];
            for (std::size_t j = 0; j <= cols; ++j) T[r][j] -= f * T[leave][j];
        }
        const Rational f = red[enter];
        for (std::size_t j = 0; j <= cols; ++j) red[j] -= f * T[leave][j];
        basis[leave] = enter;
        ++sol.pivots;
    }

    sol.status = LPStatus::Optimal;
    sol.x.assign(n, Rational(0));
    for (std::size_t r = 0; r < m; ++r)
        if (basis[r] < n) sol.x[basis[r]] = T[r][cols];
    sol.y.assign(m, Rational(0));
    for (std::size_t r = 0; r < m; ++r) sol.y[r] = -red[n + r];
    sol.value = 0;
    for (std::size_t j = 0; j < n; ++j) sol.value += lp.c[j] * sol.x[j];
    return sol;
}

bool certificate_holds(const LPProblem& lp, const LPSolution& sol)
{
    if (sol.status != LPStatus::Optimal) return false;
    const std::size_t m = lp.A.size();
    const std::size_t n = lp.c.size();
    if (sol.x.size() != n || sol.y.size() != m) return false;
    for (const Rational& v : sol.x)
        if (v < 0) return false;
    for (const Rational& v : sol.y)
        if (v < 0) return false;
    for (std::size_t r = 0; r < m; ++r) {
        Rational s = 0;
        for (std::size_t j = 0; j < n; ++j) s += lp.A[r][j] * sol.x[j];
        if (s > lp.b[r]) return false;
    }
    for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (std::size_t r = 0; r < m; ++r) s += lp.A[r][j] * sol.y[r];
        if (s < lp.c[j]) return false;
    }
    Rational primal = 0;
    Rational dual = 0;
    for (std::size_t j = 0; j < n; ++j) primal += lp.c[j] * sol.x[j];
    for (std::size_t r = 0; r < m; ++r) dual += lp.b[r] * sol.y[r];
    return primal == dual;
}

LPResult lp_bound(const EigTable& table, long d)
{
    const long n = table.classes;
    if (d < 1 || d > n + 1) throw BadParameters("d must lie in 1..n+1, got " + std::to_string(d));

    // Variables a_d..a_n; row k reads -sum_i Q_k(i) a_i <= Q_k(0) = mu_k.
    LPProblem lp;
    for (long k = 1; k <= n; ++k) {
        std::vector<Rational> row;
        for (long i = d; i <= n; ++i) row.push_back(-table.Q[k][i]);
        lp.A.push_back(std::move(row));
        lp.b.push_back(table.Q[k][0]);
    }
    lp.c.assign(static_cast<std::size_t>(n - d + 1), Rational(1));

    const LPSolution sol = solve(lp);
    LPResult res;
    res.status = sol.status;
    res.pivots = sol.pivots;
    if (sol.status != LPStatus::Optimal) return res;

    res.primal.assign(static_cast<std::size_t>(n + 1), Rational(0));
    res.primal[0] = 1;
    for (long i = d; i <= n; ++i) res.primal[static_cast<std::size_t>(i)] = sol.x[static_cast<std::size_t>(i - d)];
    res.optimum = 1 + sol.value;
    res.dual = sol.y;
    res.certified = certificate_holds(lp, sol);
    if (!res.certified) throw InvariantViolation("LP optimum failed its exact certificate");
    return res;
}

LPResult lp_bound(const SchemeSpec& spec, long d)
{
    if (d < 1 || d > spec.classes() + 1) throw BadParameters("d must lie in 1..n+1, got " + std::to_string(d));
    return lp_bound(eig_table(spec), d);
}

LPComparison lp_vs_closed_form(const SchemeSpec& spec, long d)
{
    const LPResult lp = lp_bound(spec, d);
    const Rational closed = code_bound(spec, d).value;
    return LPComparison{lp.optimum, closed, lp.optimum <= closed};
}

}  // namespace polar
