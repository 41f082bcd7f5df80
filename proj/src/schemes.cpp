#include "polar/schemes.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <utility>

namespace polar {

namespace {

struct KindAlias {
    std::string_view name;
    PolarKind kind;
};

constexpr std::array<KindAlias, 18> kAliases{{
    {"2A-odd", PolarKind::HermitianOdd},
    {"hermitian-odd", PolarKind::HermitianOdd},
    {"2A-even", PolarKind::HermitianEven},
    {"hermitian-even", PolarKind::HermitianEven},
    {"C", PolarKind::Symplectic},
    {"symplectic", PolarKind::Symplectic},
    {"D", PolarKind::Hyperbolic},
    {"hyperbolic", PolarKind::Hyperbolic},
    {"B", PolarKind::Parabolic},
    {"parabolic", PolarKind::Parabolic},
    {"2D", PolarKind::Elliptic},
    {"elliptic", PolarKind::Elliptic},
    {"half-D", PolarKind::HalfHyperbolic},
    {"half-hyperbolic", PolarKind::HalfHyperbolic},
    {"1/2D", PolarKind::HalfHyperbolic},
    {"fused-BC", PolarKind::FusedBC},
    {"fused-B", PolarKind::FusedBC},
    {"fused-C", PolarKind::FusedBC},
}};

bool iequals(std::string_view a, std::string_view b)
{
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::tolower(static_cast<unsigned char>(a[i])) != std::tolower(static_cast<unsigned char>(b[i])))
            return false;
    return true;
}

void require_index(const SchemeSpec& spec, long i, long k)
{
    const long n = spec.classes();
    if (i < 0 || i > n || k < 0 || k > n)
        throw IndexOutOfRange("index (" + std::to_string(i) + ", " + std::to_string(k) + ") outside 0.." +
                              std::to_string(n) + " for " + spec.label());
}

Rational base_p_number(const SchemeSpec& spec, long i, long k)
{
    const long n = spec.rank();
    const int te = spec.two_e();
    const QBase p = spec.p_base();
    Rational sum = 0;
    for (long l = 0; l <= i; ++l) {
        Rational term = qbinomial(n - i, k - l, p) * qbinomial(i, l, p) *
                        spec.p_half_pow(2 * l * (l - i - 1) - l * te);
        if (l % 2 != 0) term = -term;
        sum += term;
    }
    return valency(spec, i) / qbinomial(n, k, p) * sum;
}

// Idempotents of B_n that coalesce once the classes R_{2j-1}, R_{2j} are
// fused. Groups are listed by their smallest standard index.
struct FusedStructure {
    std::vector<std::vector<long>> groups;
    std::vector<std::vector<Rational>> columns;  // columns[g][j]
};

FusedStructure fused_structure(const SchemeSpec& spec)
{
    const SchemeSpec base = spec.underlying();
    const long n = base.rank();
    const long fused = spec.classes();
    FusedStructure out;
    for (long k = 0; k <= n; ++k) {
        std::vector<Rational> column(fused + 1);
        column[0] = base_p_number(base, 0, k);
        for (long j = 1; j <= fused; ++j) {
            column[j] = base_p_number(base, 2 * j - 1, k);
            if (2 * j <= n) column[j] += base_p_number(base, 2 * j, k);
        }
        auto it = std::find(out.columns.begin(), out.columns.end(), column);
        if (it == out.columns.end()) {
            out.columns.push_back(std::move(column));
            out.groups.push_back({k});
        } else {
            out.groups[static_cast<std::size_t>(it - out.columns.begin())].push_back(k);
        }
    }
    if (static_cast<long>(out.groups.size()) != fused + 1)
        throw InvariantViolation("fused scheme of " + base.label() + " has " +
                                 std::to_string(out.groups.size()) + " idempotents, expected " +
                                 std::to_string(fused + 1));
    return out;
}

std::vector<Rational> multiplicities_from_p(const std::vector<std::vector<Rational>>& P,
                                            const std::vector<Rational>& v,
                                            const Rational& x_size)
{
    const std::size_t n = v.size();
    std::vector<Rational> mu(n);
    for (std::size_t k = 0; k < n; ++k) {
        Rational s = 0;
        for (std::size_t i = 0; i < n; ++i) s += P[i][k] * P[i][k] / v[i];
        mu[k] = x_size / s;
    }
    return mu;
}

}  // namespace

std::string_view kind_name(PolarKind kind)
{
    switch (kind) {
    case PolarKind::HermitianOdd: return "2A-odd";
    case PolarKind::HermitianEven: return "2A-even";
    case PolarKind::Symplectic: return "C";
    case PolarKind::Hyperbolic: return "D";
    case PolarKind::Parabolic: return "B";
    case PolarKind::Elliptic: return "2D";
    case PolarKind::HalfHyperbolic: return "half-D";
    case PolarKind::FusedBC: return "fused-BC";
    }
    return "?";
}

std::optional<PolarKind> parse_kind(std::string_view name)
{
    for (const auto& alias : kAliases)
        if (iequals(alias.name, name)) return alias.kind;
    return std::nullopt;
}

std::vector<std::string> kind_names()
{
    std::vector<std::string> out;
    for (const auto& alias : kAliases) out.emplace_back(alias.name);
    return out;
}

bool is_base_kind(PolarKind kind)
{
    return kind != PolarKind::HalfHyperbolic && kind != PolarKind::FusedBC;
}

bool is_prime_power(long q)
{
    if (q < 2) return false;
    long p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) return true;  // q itself is prime
    while (q % p == 0) q /= p;
    return q == 1;
}

SchemeSpec::SchemeSpec(PolarKind kind, long rank, long q) : kind_(kind), rank_(rank), q_(q)
{
    if (!is_prime_power(q)) throw std::invalid_argument("q must be a prime power, got " + std::to_string(q));
    if (rank < 0) throw std::invalid_argument("rank must be nonnegative");
    if (kind == PolarKind::HalfHyperbolic && rank < 2)
        throw std::invalid_argument("half-D_m needs m >= 2");
    if (kind == PolarKind::FusedBC && rank < 1) throw std::invalid_argument("fused-BC needs n >= 1");
}

long SchemeSpec::classes() const noexcept
{
    switch (kind_) {
    case PolarKind::HalfHyperbolic: return rank_ / 2;
    case PolarKind::FusedBC: return (rank_ + 1) / 2;
    default: return rank_;
    }
}

long SchemeSpec::field_exponent() const noexcept
{
    return (kind_ == PolarKind::HermitianOdd || kind_ == PolarKind::HermitianEven) ? 2 : 1;
}

int SchemeSpec::two_e() const
{
    switch (kind_) {
    case PolarKind::HermitianOdd: return -1;
    case PolarKind::HermitianEven: return 1;
    case PolarKind::Symplectic: return 0;
    case PolarKind::Hyperbolic: return -2;
    case PolarKind::Parabolic: return 0;
    case PolarKind::Elliptic: return 2;
    case PolarKind::FusedBC: return 0;
    case PolarKind::HalfHyperbolic: break;
    }
    throw WrongFamily("parameter e is not defined for " + label());
}

Rational SchemeSpec::p_half_pow(long half) const
{
    const long scaled = field_exponent() * half;
    if (scaled % 2 != 0) throw std::logic_error("p^(h/2) is not an integer power of q");
    return pow(Rational(q_), scaled / 2);
}

bool SchemeSpec::has_hahn_parameters() const noexcept
{
    return kind_ == PolarKind::HermitianOdd || kind_ == PolarKind::HalfHyperbolic;
}

Rational SchemeSpec::hahn_b() const
{
    if (kind_ == PolarKind::HermitianOdd) return -q_;
    if (kind_ == PolarKind::HalfHyperbolic) return Rational(q_ * q_);
    throw WrongFamily("no q-Hahn parameters for " + label());
}

Rational SchemeSpec::hahn_c() const
{
    if (kind_ == PolarKind::HermitianOdd) return -1;
    if (kind_ == PolarKind::HalfHyperbolic) return rank_ % 2 == 0 ? Rational(1, q_) : Rational(q_);
    throw WrongFamily("no q-Hahn parameters for " + label());
}

SchemeSpec SchemeSpec::underlying() const
{
    switch (kind_) {
    case PolarKind::HalfHyperbolic: return SchemeSpec(PolarKind::Hyperbolic, rank_, q_);
    case PolarKind::FusedBC: return SchemeSpec(PolarKind::Parabolic, rank_, q_);
    default: return *this;
    }
}

std::string SchemeSpec::label() const
{
    return std::string(kind_name(kind_)) + "(n=" + std::to_string(rank_) + ", q=" + std::to_string(q_) + ")";
}

Rational scheme_size(const SchemeSpec& spec)
{
    if (!is_base_kind(spec.kind())) {
        Rational base = scheme_size(spec.underlying());
        return spec.kind() == PolarKind::HalfHyperbolic ? Rational(base / 2) : base;
    }
    Rational size = 1;
    for (long i = 1; i <= spec.rank(); ++i) size *= 1 + spec.p_half_pow(2 * i + spec.two_e());
    return size;
}

Rational valency(const SchemeSpec& spec, long i)
{
    require_index(spec, i, 0);
    switch (spec.kind()) {
    case PolarKind::HalfHyperbolic: return valency(spec.underlying(), 2 * i);
    case PolarKind::FusedBC: {
        const SchemeSpec base = spec.underlying();
        if (i == 0) return 1;
        Rational v = valency(base, 2 * i - 1);
        if (2 * i <= base.rank()) v += valency(base, 2 * i);
        return v;
    }
    default:
        return spec.p_half_pow(i * (i + 1) + i * spec.two_e()) * qbinomial(spec.rank(), i, spec.p_base());
    }
}

Rational p_number(const SchemeSpec& spec, long i, long k)
{
    require_index(spec, i, k);
    switch (spec.kind()) {
    case PolarKind::HalfHyperbolic: return base_p_number(spec.underlying(), 2 * i, k);
    case PolarKind::FusedBC: return fused_structure(spec).columns[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
    default: return base_p_number(spec, i, k);
    }
}

Rational p_number_phi(const SchemeSpec& spec, long i, long k)
{
    if (!is_base_kind(spec.kind())) throw WrongFamily("3phi2 P-number form needs a base family, got " + spec.label());
    require_index(spec, i, k);
    const long n = spec.rank();
    const QBase p = spec.p_base();
    const std::array<Rational, 3> upper{
        spec.p_half_pow(-2 * k),
        spec.p_half_pow(-2 * i),
        -spec.p_half_pow(2 * (k - n - 1) - spec.two_e()),
    };
    const std::array<Rational, 2> lower{Rational(0), spec.p_half_pow(-2 * n)};
    return valency(spec, i) * qhypergeometric(upper, lower, p, p.value());
}

Rational hahn_valency(const SchemeSpec& spec, long i)
{
    require_index(spec, i, 0);
    const long q = spec.q();
    if (spec.kind() == PolarKind::HermitianOdd)
        return pow(Rational(q), i * i) * qbinomial(spec.rank(), i, QBase(Rational(q * q)));
    if (spec.kind() == PolarKind::HalfHyperbolic)
        return pow(Rational(q), binom2(2 * i)) * qbinomial(spec.rank(), 2 * i, QBase(Rational(q)));
    throw WrongFamily("q-Hahn valencies are defined for 2A-odd and half-D only, got " + spec.label());
}

namespace {

Rational hahn_phi(const SchemeSpec& spec, long i, long k)
{
    const long n = spec.classes();
    const QBase b(spec.hahn_b());
    const Rational c = spec.hahn_c();
    const Rational qq(spec.q());
    const std::array<Rational, 3> upper{b.pow(-i), b.pow(-k), b.pow(-2 * n + k) / (qq * c)};
    const std::array<Rational, 2> lower{b.pow(-n), b.pow(-n) / c};
    return qhypergeometric(upper, lower, b, b.value());
}

}  // namespace

Rational hahn_p_number(const SchemeSpec& spec, long i, long k)
{
    if (!spec.has_hahn_parameters())
        throw WrongFamily("q-Hahn P-numbers are defined for 2A-odd and half-D only, got " + spec.label());
    require_index(spec, i, k);
    return hahn_valency(spec, i) * hahn_phi(spec, i, k);
}

std::vector<Rational> multiplicities(const SchemeSpec& spec)
{
    const long n = spec.classes();
    std::vector<std::vector<Rational>> P(n + 1, std::vector<Rational>(n + 1));
    std::vector<Rational> v(n + 1);
    if (spec.kind() == PolarKind::FusedBC) {
        const FusedStructure fs = fused_structure(spec);
        for (long i = 0; i <= n; ++i)
            for (long k = 0; k <= n; ++k) P[i][k] = fs.columns[k][i];
    } else {
        for (long i = 0; i <= n; ++i)
            for (long k = 0; k <= n; ++k) P[i][k] = p_number(spec, i, k);
    }
    for (long i = 0; i <= n; ++i) v[i] = valency(spec, i);
    return multiplicities_from_p(P, v, scheme_size(spec));
}

std::vector<long> hermitian_alternate_order(long n)
{
    std::vector<long> order(static_cast<std::size_t>(n + 1));
    for (long k = 0; k <= n; ++k) order[k] = (k % 2 == 0) ? k / 2 : n - (k - 1) / 2;
    return order;
}

std::vector<Rational> hahn_multiplicities(const SchemeSpec& spec)
{
    if (spec.kind() == PolarKind::HermitianOdd) {
        const std::vector<Rational> mu = multiplicities(spec);
        std::vector<Rational> out;
        for (long k : hermitian_alternate_order(spec.rank())) out.push_back(mu[k]);
        return out;
    }
    if (spec.kind() == PolarKind::HalfHyperbolic) return multiplicities(spec);
    throw WrongFamily("q-Hahn multiplicities are defined for 2A-odd and half-D only, got " + spec.label());
}

Rational hahn_q_number(const SchemeSpec& spec, long k, long i)
{
    if (!spec.has_hahn_parameters())
        throw WrongFamily("q-Hahn Q-numbers are defined for 2A-odd and half-D only, got " + spec.label());
    require_index(spec, i, k);
    return hahn_multiplicities(spec)[k] * hahn_phi(spec, i, k);
}

std::vector<std::string> check_table(const EigTable& t)
{
    std::vector<std::string> problems;
    const long n = t.classes;
    auto fail = [&](std::string what) { problems.push_back(std::move(what)); };
    auto at = [](long a, long b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; };

    if (static_cast<long>(t.P.size()) != n + 1 || static_cast<long>(t.Q.size()) != n + 1 ||
        static_cast<long>(t.valencies.size()) != n + 1 || static_cast<long>(t.multiplicities.size()) != n + 1) {
        fail("table dimensions do not match the class count");
        return problems;
    }
    Rational vsum = 0;
    Rational msum = 0;
    for (long i = 0; i <= n; ++i) {
        if (t.valencies[i] <= 0 || !is_integer(t.valencies[i])) fail("valency v_" + std::to_string(i) + " is not a positive integer");
        if (t.multiplicities[i] <= 0 || !is_integer(t.multiplicities[i]))
            fail("multiplicity mu_" + std::to_string(i) + " is not a positive integer");
        vsum += t.valencies[i];
        msum += t.multiplicities[i];
    }
    if (vsum != t.x_size) fail("valencies do not sum to |X|");
    if (msum != t.x_size) fail("multiplicities do not sum to |X|");
    for (long a = 0; a <= n; ++a) {
        if (t.P[0][a] != 1) fail("P_0" + at(0, a) + " != 1");
        if (t.Q[0][a] != 1) fail("Q_0" + at(0, a) + " != 1");
        if (t.P[a][0] != t.valencies[a]) fail("P_i(0) != v_i at i=" + std::to_string(a));
        if (t.Q[a][0] != t.multiplicities[a]) fail("Q_k(0) != mu_k at k=" + std::to_string(a));
    }
    for (long i = 0; i <= n; ++i)
        for (long k = 0; k <= n; ++k)
            if (t.multiplicities[k] * t.P[i][k] != t.valencies[i] * t.Q[k][i]) fail("duality fails at " + at(i, k));
    for (long i = 0; i <= n; ++i)
        for (long j = 0; j <= n; ++j) {
            Rational s = 0;
            for (long k = 0; k <= n; ++k) s += t.P[i][k] * t.Q[k][j];
            if (s != (i == j ? t.x_size : Rational(0))) fail("orthogonality fails at " + at(i, j));
        }
    return problems;
}

EigTable eig_table(const SchemeSpec& spec, std::optional<Ordering> ordering)
{
    const long n = spec.classes();
    if (spec.rank() > SchemeSpec::kMaxRank)
        throw std::invalid_argument("rank " + std::to_string(spec.rank()) + " exceeds the configured maximum " +
                                    std::to_string(SchemeSpec::kMaxRank));

    Ordering order = ordering.value_or(is_base_kind(spec.kind()) ? Ordering::Standard : Ordering::HalfD);
    if (order == Ordering::HermAlternate && spec.kind() != PolarKind::HermitianOdd)
        throw WrongFamily("the alternate Q-polynomial ordering exists for 2A-odd only");
    if (order == Ordering::HalfD && is_base_kind(spec.kind()))
        throw WrongFamily("half-D ordering applies to half-D and fused-BC only");
    if (order == Ordering::Standard && !is_base_kind(spec.kind())) order = Ordering::HalfD;

    EigTable t;
    t.classes = n;
    t.ordering = order;
    t.x_size = scheme_size(spec);
    t.valencies.resize(n + 1);
    t.P.assign(n + 1, std::vector<Rational>(n + 1));
    for (long i = 0; i <= n; ++i) t.valencies[i] = valency(spec, i);

    if (spec.kind() == PolarKind::FusedBC) {
        const FusedStructure fs = fused_structure(spec);
        for (long i = 0; i <= n; ++i)
            for (long k = 0; k <= n; ++k) t.P[i][k] = fs.columns[k][i];
    } else {
        for (long i = 0; i <= n; ++i)
            for (long k = 0; k <= n; ++k) t.P[i][k] = p_number(spec, i, k);
    }
    t.multiplicities = multiplicities_from_p(t.P, t.valencies, t.x_size);

    if (order == Ordering::HermAlternate) {
        const std::vector<long> sigma = hermitian_alternate_order(n);
        EigTable alt = t;
        for (long k = 0; k <= n; ++k) {
            alt.multiplicities[k] = t.multiplicities[sigma[k]];
            for (long i = 0; i <= n; ++i) alt.P[i][k] = t.P[i][sigma[k]];
        }
        t = std::move(alt);
    }

    t.Q.assign(n + 1, std::vector<Rational>(n + 1));
    for (long k = 0; k <= n; ++k)
        for (long i = 0; i <= n; ++i) t.Q[k][i] = t.multiplicities[k] * t.P[i][k] / t.valencies[i];

    const std::vector<std::string> problems = check_table(t);
    if (!problems.empty()) throw InvariantViolation(spec.label() + ": " + problems.front());
    return t;
}

}  // namespace polar
