#pragma once

// Association schemes on the generators of the finite classical polar
// spaces, the bipartite half of the hyperbolic scheme, and the fused
// parabolic/symplectic scheme, with exact eigenvalue tables.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polar/qarith.hpp"
#include "polar/rational.hpp"

namespace polar {

enum class PolarKind {
    HermitianOdd,    // 2A_{2n-1}, U(2n, q^2)
    HermitianEven,   // 2A_{2n},   U(2n+1, q^2)
    Symplectic,      // C_n,       Sp(2n, q)
    Hyperbolic,      // D_n,       O+(2n, q)
    Parabolic,       // B_n,       O(2n+1, q)
    Elliptic,        // 2D_{n+1},  O-(2n+2, q)
    HalfHyperbolic,  // 1/2 D_m
    FusedBC,         // B_n / C_n with classes R_0, R_1+R_2, R_3+R_4, ...
};

inline constexpr PolarKind kBaseKinds[] = {
    PolarKind::HermitianOdd, PolarKind::HermitianEven, PolarKind::Symplectic,
    PolarKind::Hyperbolic,   PolarKind::Parabolic,     PolarKind::Elliptic,
};

std::string_view kind_name(PolarKind kind);      // Carter-style label, e.g. "2A-odd"
std::optional<PolarKind> parse_kind(std::string_view name);
std::vector<std::string> kind_names();          // every accepted spelling

bool is_base_kind(PolarKind kind);
bool is_prime_power(long q);

class WrongFamily : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class IndexOutOfRange : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A scheme together with its defining parameters. For HalfHyperbolic the
// rank is m (the rank of the ambient D_m) and the scheme has floor(m/2)
// classes; every other kind has rank() classes.
class SchemeSpec {
public:
    static constexpr long kMaxRank = 16;

    SchemeSpec(PolarKind kind, long rank, long q);

    PolarKind kind() const noexcept { return kind_; }
    long rank() const noexcept { return rank_; }
    long q() const noexcept { return q_; }
    long classes() const noexcept;

    // p = q^s with s = 2 for the Hermitian families.
    long field_exponent() const noexcept;
    Rational p() const { return pow(Rational(q_), field_exponent()); }
    QBase p_base() const { return QBase(p()); }
    QBase q_base() const { return QBase(Rational(q_)); }

    // 2e for the six base families (FusedBC reports its B_n value).
    int two_e() const;

    // p^{half/2}, evaluated as an integer power of q.
    Rational p_half_pow(long half) const;

    bool has_hahn_parameters() const noexcept;
    Rational hahn_b() const;
    Rational hahn_c() const;

    // The base-family scheme this one is derived from (D_m or B_n).
    SchemeSpec underlying() const;

    std::string label() const;

    friend bool operator==(const SchemeSpec&, const SchemeSpec&) = default;

private:
    PolarKind kind_;
    long rank_;
    long q_;
};

Rational scheme_size(const SchemeSpec& spec);
Rational valency(const SchemeSpec& spec, long i);

// Sum form of the P-numbers in the standard ordering. For HalfHyperbolic the
// value is P_{2i}(k) of D_m, and for FusedBC the eigenvalue of the fused
// class on the k-th fused idempotent.
Rational p_number(const SchemeSpec& spec, long i, long k);

// 3phi2 form of the P-numbers; base families only.
Rational p_number_phi(const SchemeSpec& spec, long i, long k);

// q-Hahn form v'_i 3phi2(b^-i, b^-k, q^-1 c^-1 b^{-2n+k}; b^-n, c^-1 b^-n; b, b),
// defined for HermitianOdd and HalfHyperbolic.
Rational hahn_p_number(const SchemeSpec& spec, long i, long k);
Rational hahn_valency(const SchemeSpec& spec, long i);

// mu_k = |X| / sum_i P_i(k)^2 / v_i
std::vector<Rational> multiplicities(const SchemeSpec& spec);

// Position k in the ordering E_0, E_n, E_1, E_{n-1}, ... mapped to the
// standard index of the same idempotent.
std::vector<long> hermitian_alternate_order(long n);

enum class Ordering { Standard, HermAlternate, HalfD };

struct EigTable {
    long classes = 0;
    Rational x_size;
    std::vector<Rational> valencies;
    std::vector<Rational> multiplicities;
    std::vector<std::vector<Rational>> P;  // P[i][k]
    std::vector<std::vector<Rational>> Q;  // Q[k][i]
    Ordering ordering = Ordering::Standard;
};

// Problems found in a table; empty when every invariant holds exactly.
std::vector<std::string> check_table(const EigTable& table);

// Builds and self-checks the table. HermAlternate is only defined for
// HermitianOdd; HalfHyperbolic and FusedBC always use HalfD.
EigTable eig_table(const SchemeSpec& spec, std::optional<Ordering> ordering = std::nullopt);

// Multiplicities mu'_k of the q-Hahn ordering: the standard mu permuted by
// hermitian_alternate_order for HermitianOdd, the half scheme's own mu_k for
// HalfHyperbolic (mu_k of D_m except the middle one for even m, which halves).
std::vector<Rational> hahn_multiplicities(const SchemeSpec& spec);

// Q'_k(i) = mu'_k 3phi2(...) evaluated directly from the q-Hahn form.
Rational hahn_q_number(const SchemeSpec& spec, long k, long i);

}  // namespace polar
