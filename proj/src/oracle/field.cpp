#include "polar/oracle/field.hpp"

#include <stdexcept>
#include <string>

namespace polar::oracle {

namespace {

// Smallest prime p and exponent m with p^m = n, or p = 0.
void factor_prime_power(int n, int& p, int& m)
{
    p = 0;
    m = 0;
    for (int d = 2; d <= n; ++d) {
        if (n % d != 0) continue;
        int x = n;
        int k = 0;
        while (x % d == 0) {
            x /= d;
            ++k;
        }
        if (x == 1) {
            p = d;
            m = k;
        }
        return;
    }
}

}  // namespace

Field::Field(int order) : order_(order)
{
    factor_prime_power(order, p_, m_);
    if (p_ == 0 || order > kMaxOrder) throw std::invalid_argument("field order must be a prime power <= 256, got " + std::to_string(order));
    for (int r = 2; r * r <= order; ++r)
        if (r * r == order) sqrt_order_ = r;

    const std::size_t sz = static_cast<std::size_t>(order) * order;
    add_.resize(sz);
    mul_.resize(sz);
    neg_.resize(order);
    inv_.assign(order, 0);
    conj_.assign(order, 0);

    auto digits = [&](int x) {
        std::vector<int> d(m_);
        for (int i = 0; i < m_; ++i, x /= p_) d[i] = x % p_;
        return d;
    };
    auto pack = [&](const std::vector<int>& d) {
        int x = 0;
        for (int i = m_ - 1; i >= 0; --i) x = x * p_ + d[i];
        return x;
    };

    for (int a = 0; a < order; ++a) {
        const auto da = digits(a);
        std::vector<int> dn(m_);
        for (int i = 0; i < m_; ++i) dn[i] = (p_ - da[i]) % p_;
        neg_[a] = static_cast<Elem>(pack(dn));
        for (int b = 0; b < order; ++b) {
            const auto db = digits(b);
            std::vector<int> ds(m_);
            for (int i = 0; i < m_; ++i) ds[i] = (da[i] + db[i]) % p_;
            add_[a * order + b] = static_cast<Elem>(pack(ds));
        }
    }

    // Try monic moduli x^m + c_{m-1} x^{m-1} + ... + c_0 in increasing order of
    // the packed coefficients until every nonzero element is invertible.
    const int candidates = (m_ == 1) ? 1 : order;
    for (int code = 0; code < candidates; ++code) {
        std::vector<int> mod = (m_ == 1) ? std::vector<int>{0} : digits(code);
        mod.push_back(1);
        for (int a = 0; a < order; ++a) {
            const auto da = digits(a);
            for (int b = 0; b < order; ++b) {
                const auto db = digits(b);
                std::vector<int> prod(2 * m_, 0);
                for (int i = 0; i < m_; ++i)
                    for (int j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
                for (int k = 2 * m_ - 1; k >= m_; --k) {
                    const int c = prod[k];
                    if (c == 0) continue;
                    for (int i = 0; i <= m_; ++i) prod[k - m_ + i] = ((prod[k - m_ + i] - c * mod[i]) % p_ + p_) % p_;
                }
                prod.resize(m_);
                mul_[a * order + b] = static_cast<Elem>(pack(prod));
            }
        }
        bool field = true;
        for (int a = 1; a < order && field; ++a) {
            inv_[a] = 0;
            for (int b = 1; b < order; ++b)
                if (mul_[a * order + b] == 1) inv_[a] = static_cast<Elem>(b);
            field = inv_[a] != 0;
        }
        if (field) {
            modulus_ = mod;
            break;
        }
    }
    if (modulus_.empty()) throw std::logic_error("no irreducible polynomial found");

    if (sqrt_order_ > 0)
        for (int a = 0; a < order; ++a) conj_[a] = pow(static_cast<Elem>(a), sqrt_order_);
}

Elem Field::inv(Elem a) const
{
    if (a == 0) throw std::domain_error("inverse of zero");
    return inv_[a];
}

Elem Field::pow(Elem a, long e) const
{
    if (e < 0) return pow(inv(a), -e);
    Elem r = 1;
    for (long i = 0; i < e; ++i) r = mul(r, a);
    return r;
}

Elem Field::conj(Elem a) const
{
    if (sqrt_order_ == 0) throw std::logic_error("field order is not a square");
    return conj_[a];
}

int rref(Matrix& rows, const Field& f)
{
    const std::size_t nrows = rows.size();
    if (nrows == 0) return 0;
    const std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < nrows; ++c) {
        std::size_t piv = r;
        while (piv < nrows && rows[piv][c] == 0) ++piv;
        if (piv == nrows) continue;
        std::swap(rows[r], rows[piv]);
        const Elem s = f.inv(rows[r][c]);
        for (Elem& x : rows[r]) x = f.mul(x, s);
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const Elem k = f.neg(rows[i][c]);
            for (std::size_t j = c; j < cols; ++j) rows[i][j] = f.add(rows[i][j], f.mul(k, rows[r][j]));
        }
        ++r;
    }
    rows.resize(r);
    return static_cast<int>(r);
}

int rank(Matrix rows, const Field& f) { return rref(rows, f); }

Matrix nullspace(Matrix rows, int cols, const Field& f)
{
    rref(rows, f);
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(cols, false);
    for (const Vec& row : rows) {
        int c = 0;
        while (row[c] == 0) ++c;
        pivot_col.push_back(c);
        is_pivot[c] = true;
    }
    Matrix basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v(cols, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < rows.size(); ++r) v[pivot_col[r]] = f.neg(rows[r][free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

int intersection_dim(const Matrix& u, const Matrix& w, const Field& f)
{
    Matrix both = u;
    both.insert(both.end(), w.begin(), w.end());
    return static_cast<int>(u.size() + w.size()) - rank(std::move(both), f);
}

bool normalize(Vec& v, const Field& f)
{
    for (Elem x : v)
        if (x != 0) {
            const Elem s = f.inv(x);
            for (Elem& y : v) y = f.mul(y, s);
            return true;
        }
    return false;
}

Elem dot(const Vec& a, const Vec& b, const Field& f)
{
    Elem s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
    return s;
}

}  // namespace polar::oracle
