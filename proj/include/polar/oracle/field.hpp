#pragma once

// Small finite fields as lookup tables, and row reduction over them.

#include <cstdint>
#include <vector>

namespace polar::oracle {

using Elem = std::uint8_t;
using Vec = std::vector<Elem>;
using Matrix = std::vector<Vec>;

class Field {
public:
    static constexpr int kMaxOrder = 256;

    // GF(order) built from the lexicographically first monic irreducible
    // polynomial of the right degree over the prime field.
    explicit Field(int order);

    int order() const noexcept { return order_; }
    int characteristic() const noexcept { return p_; }
    int degree() const noexcept { return m_; }
    const std::vector<int>& modulus() const noexcept { return modulus_; }

    Elem add(Elem a, Elem b) const { return add_[a * order_ + b]; }
    Elem mul(Elem a, Elem b) const { return mul_[a * order_ + b]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem inv(Elem a) const;
    Elem pow(Elem a, long e) const;

    // x -> x^r for order = r^2.
    bool has_conjugation() const noexcept { return sqrt_order_ > 0; }
    Elem conj(Elem a) const;

    // Elements of the prime field are 0..p-1; x is in the subfield of order
    // sqrt(order) iff conj(x) = x.
    bool in_subfield(Elem a) const { return conj(a) == a; }

private:
    int order_;
    int p_ = 0;
    int m_ = 0;
    int sqrt_order_ = 0;
    std::vector<int> modulus_;
    std::vector<Elem> add_, mul_, neg_, inv_, conj_;
};

// In-place reduced row echelon form; zero rows are dropped. Returns the rank.
int rref(Matrix& rows, const Field& f);
int rank(Matrix rows, const Field& f);

// Basis of { x : rows * x = 0 } for rows with `cols` columns.
Matrix nullspace(Matrix rows, int cols, const Field& f);

// dim(U cap W) for subspaces given by bases.
int intersection_dim(const Matrix& u, const Matrix& w, const Field& f);

// Scales so the first nonzero coordinate is 1; false for the zero vector.
bool normalize(Vec& v, const Field& f);

Elem dot(const Vec& a, const Vec& b, const Field& f);

}  // namespace polar::oracle
