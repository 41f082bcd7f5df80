#include "polar/oracle/polar_space.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>

#include "polar/steiner.hpp"

namespace polar::oracle {

const char* form_name(FormKind kind)
{
    switch (kind) {
    case FormKind::Alternating: return "alternating";
    case FormKind::QuadraticPlus: return "quadratic-plus";
    case FormKind::QuadraticParabolic: return "quadratic-parabolic";
    case FormKind::QuadraticMinus: return "quadratic-minus";
    case FormKind::Hermitian: return "hermitian";
    }
    return "?";
}

FormSpec standard_form(const SchemeSpec& spec)
{
    const int n = static_cast<int>(spec.rank());
    const int q = static_cast<int>(spec.q());
    switch (spec.kind()) {
    case PolarKind::HermitianOdd: return FormSpec{FormKind::Hermitian, 2 * n, q * q};
    case PolarKind::HermitianEven: return FormSpec{FormKind::Hermitian, 2 * n + 1, q * q};
    case PolarKind::Symplectic: return FormSpec{FormKind::Alternating, 2 * n, q};
    case PolarKind::Hyperbolic: return FormSpec{FormKind::QuadraticPlus, 2 * n, q};
    case PolarKind::Parabolic: return FormSpec{FormKind::QuadraticParabolic, 2 * n + 1, q};
    case PolarKind::Elliptic: {
        const Field f(q);
        for (int delta = 0; delta < q; ++delta) {
            bool has_root = false;
            for (int x = 0; x < q && !has_root; ++x) {
                const Elem e = static_cast<Elem>(x);
                has_root = f.add(f.add(f.mul(e, e), e), static_cast<Elem>(delta)) == 0;
            }
            if (!has_root) return FormSpec{FormKind::QuadraticMinus, 2 * n + 2, q, static_cast<Elem>(delta)};
        }
        throw std::logic_error("no irreducible X^2 + X + delta");
    }
    default: break;
    }
    throw WrongFamily("no standard form for " + spec.label());
}

Form::Form(const FormSpec& spec, const Field& field) : spec_(spec), field_(field)
{
    if (field.order() != spec.field_order) throw std::invalid_argument("form and field disagree on the order");
    if (spec.kind == FormKind::Hermitian && !field.has_conjugation())
        throw std::invalid_argument("Hermitian forms need a field of square order");
}

// Coordinates: hyperbolic pairs (x_i, x_{h+i}) for i < h, then the extra
// coordinates of the parabolic and elliptic forms.
Elem Form::quad(const Vec& v) const
{
    const Field& f = field_;
    const int dim = spec_.dim;
    Elem s = 0;
    switch (spec_.kind) {
    case FormKind::QuadraticPlus: {
        const int h = dim / 2;
        for (int i = 0; i < h; ++i) s = f.add(s, f.mul(v[i], v[h + i]));
        return s;
    }
    case FormKind::QuadraticParabolic: {
        // x_0^2 + sum x_i x_{h+i}, pairs on coordinates 1..2h
        const int h = (dim - 1) / 2;
        s = f.mul(v[0], v[0]);
        for (int i = 1; i <= h; ++i) s = f.add(s, f.mul(v[i], v[h + i]));
        return s;
    }
    case FormKind::QuadraticMinus: {
        const int h = dim / 2 - 1;
        for (int i = 0; i < h; ++i) s = f.add(s, f.mul(v[i], v[h + i]));
        const Elem x = v[2 * h];
        const Elem y = v[2 * h + 1];
        s = f.add(s, f.add(f.add(f.mul(x, x), f.mul(x, y)), f.mul(spec_.delta, f.mul(y, y))));
        return s;
    }
    default: break;
    }
    throw std::logic_error("quad() needs a quadratic form");
}

Elem Form::pair(const Vec& u, const Vec& v) const
{
    const Field& f = field_;
    switch (spec_.kind) {
    case FormKind::Alternating: {
        const int h = spec_.dim / 2;
        Elem s = 0;
        for (int i = 0; i < h; ++i) s = f.add(s, f.sub(f.mul(u[i], v[h + i]), f.mul(u[h + i], v[i])));
        return s;
    }
    case FormKind::Hermitian: {
        Elem s = 0;
        for (int i = 0; i < spec_.dim; ++i) s = f.add(s, f.mul(u[i], f.conj(v[i])));
        return s;
    }
    default: {
        Vec w(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) w[i] = f.add(u[i], v[i]);
        return f.sub(f.sub(quad(w), quad(u)), quad(v));
    }
    }
}

bool Form::isotropic(const Vec& v) const
{
    switch (spec_.kind) {
    case FormKind::Alternating: return true;
    case FormKind::Hermitian: return pair(v, v) == 0;
    default: return quad(v) == 0;
    }
}

bool Form::totally_isotropic(const Matrix& basis) const
{
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!isotropic(basis[i])) return false;
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            if (pair(basis[i], basis[j]) != 0) return false;
    }
    return true;
}

namespace {

// Every vector of F^len in lexicographic order of its base-order digits,
// keeping those whose first nonzero coordinate is 1.
std::vector<Vec> normalized_vectors(int len, const Field& f, std::size_t cap)
{
    double total = 1;
    for (int i = 0; i < len; ++i) total *= f.order();
    if (total > static_cast<double>(cap)) throw TooLarge("too many vectors to scan");
    std::vector<Vec> out;
    Vec v(len, 0);
    for (;;) {
        int i = len - 1;
        while (i >= 0 && v[i] == f.order() - 1) v[i--] = 0;
        if (i < 0) break;
        ++v[i];
        int first = 0;
        while (v[first] == 0) ++first;
        if (v[first] == 1) out.push_back(v);
    }
    return out;
}

Matrix combine(const Matrix& coeffs, const Matrix& basis, const Field& f)
{
    Matrix out;
    for (const Vec& c : coeffs) {
        Vec row(basis[0].size(), 0);
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i] != 0)
                for (std::size_t j = 0; j < row.size(); ++j) row[j] = f.add(row[j], f.mul(c[i], basis[i][j]));
        out.push_back(std::move(row));
    }
    return out;
}

void fill_relations(PolarSpaceInstance& inst)
{
    const std::size_t N = inst.generators.size();
    const long n = inst.rank();
    inst.relations = RelationTable(N, n);
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = a + 1; b < N; ++b)
            inst.relations.set(a, b, static_cast<std::uint8_t>(n - intersection_dim(inst.generators[a], inst.generators[b], inst.field)));
}

void fill_hyperplane_counts(PolarSpaceInstance& inst)
{
    std::map<Matrix, long> through;
    for (const Matrix& g : inst.generators)
        for (Matrix& h : hyperplanes(g, inst.field)) ++through[std::move(h)];
    inst.min_generators_per_hyperplane = 0;
    inst.max_generators_per_hyperplane = 0;
    bool first = true;
    for (const auto& [h, c] : through) {
        if (first || c < inst.min_generators_per_hyperplane) inst.min_generators_per_hyperplane = c;
        if (first || c > inst.max_generators_per_hyperplane) inst.max_generators_per_hyperplane = c;
        first = false;
    }
    if (inst.isotropic_counts.size() >= 2) {
        const long expected = inst.isotropic_counts[inst.isotropic_counts.size() - 2];
        if (static_cast<long>(through.size()) != expected)
            throw InvariantViolation("generators cover " + std::to_string(through.size()) + " of " +
                                     std::to_string(expected) + " isotropic (n-1)-spaces");
    }
}

void check_closed_forms(const PolarSpaceInstance& inst)
{
    const SchemeSpec& spec = inst.spec;
    const long n = spec.rank();
    if (Rational(static_cast<long>(inst.size())) != scheme_size(spec))
        throw InvariantViolation(spec.label() + ": enumerated " + std::to_string(inst.size()) + " generators, expected " +
                                 to_string(scheme_size(spec)));
    for (long t = 0; t <= n && t < static_cast<long>(inst.isotropic_counts.size()); ++t)
        if (Rational(inst.isotropic_counts[t]) != isotropic_space_count(spec, t))
            throw InvariantViolation(spec.label() + ": isotropic " + std::to_string(t) + "-space count mismatch");
    const Rational through = spec.p_half_pow(2 + spec.two_e()) + 1;
    if (Rational(inst.min_generators_per_hyperplane) != through || Rational(inst.max_generators_per_hyperplane) != through)
        throw InvariantViolation(spec.label() + ": generators per (n-1)-space not constant " + to_string(through));
}

}  // namespace

std::vector<Matrix> hyperplanes(const Matrix& basis, const Field& f)
{
    const int n = static_cast<int>(basis.size());
    std::vector<Matrix> out;
    if (n == 0) return out;
    if (n == 1) {
        out.emplace_back();
        return out;
    }
    for (const Vec& a : normalized_vectors(n, f, 1u << 24)) {
        Matrix h = combine(nullspace(Matrix{a}, n, f), basis, f);
        rref(h, f);
        out.push_back(std::move(h));
    }
    return out;
}

PolarSpaceInstance assemble(const SchemeSpec& spec, const FormSpec& form, std::vector<Matrix> generators,
                            std::vector<long> isotropic_counts)
{
    if (static_cast<long>(isotropic_counts.size()) != spec.rank() + 1) throw InvariantViolation("need isotropic counts for t = 0..n");
    PolarSpaceInstance inst{spec, form, Field(form.field_order), {}, {}, std::move(isotropic_counts), 0, 0};
    const Form phi(form, inst.field);
    for (Matrix& g : generators) {
        if (static_cast<long>(rref(g, inst.field)) != spec.rank() || !phi.totally_isotropic(g))
            throw InvariantViolation("not a generator of " + spec.label());
    }
    std::sort(generators.begin(), generators.end());
    if (std::adjacent_find(generators.begin(), generators.end()) != generators.end())
        throw InvariantViolation("duplicate generators");
    inst.generators = std::move(generators);
    fill_relations(inst);
    fill_hyperplane_counts(inst);
    check_closed_forms(inst);
    return inst;
}

PolarSpaceInstance enumerate(const SchemeSpec& spec, const EnumerateOptions& options)
{
    if (!is_base_kind(spec.kind())) throw WrongFamily("enumeration covers the six base families");
    if (scheme_size(spec) > Rational(static_cast<long>(options.max_size)))
        throw TooLarge(spec.label() + " has " + to_string(scheme_size(spec)) + " generators, cap is " +
                       std::to_string(options.max_size));
    const long n = spec.rank();
    const FormSpec form = standard_form(spec);
    PolarSpaceInstance inst{spec, form, Field(form.field_order), {}, {}, {}, 0, 0};
    const Form phi(form, inst.field);
    const Field& f = inst.field;

    std::vector<Vec> points;
    for (Vec& v : normalized_vectors(form.dim, f, options.max_vectors))
        if (phi.isotropic(v)) points.push_back(std::move(v));

    inst.isotropic_counts.push_back(1);
    std::set<Matrix> level;
    for (const Vec& v : points) level.insert(Matrix{v});
    if (n >= 1) inst.isotropic_counts.push_back(static_cast<long>(level.size()));
    for (long k = 1; k < n; ++k) {
        std::set<Matrix> next;
        for (const Matrix& u : level) {
            for (const Vec& v : points) {
                bool perp = true;
                for (const Vec& row : u)
                    if (phi.pair(row, v) != 0) {
                        perp = false;
                        break;
                    }
                if (!perp) continue;
                Matrix w = u;
                w.push_back(v);
                if (rref(w, f) == static_cast<int>(k) + 1) next.insert(std::move(w));
            }
        }
        level = std::move(next);
        inst.isotropic_counts.push_back(static_cast<long>(level.size()));
    }
    if (n == 0) level.insert(Matrix{});
    inst.generators.assign(level.begin(), level.end());
    if (inst.generators.size() > options.max_size) throw TooLarge("enumeration exceeded the cap");

    fill_relations(inst);
    fill_hyperplane_counts(inst);
    check_closed_forms(inst);
    return inst;
}

long count_isotropic_spaces(const PolarSpaceInstance& instance, long t)
{
    if (t < 0 || t > instance.rank() || t >= static_cast<long>(instance.isotropic_counts.size()))
        throw BadParameters("t must lie in 0..n");
    return instance.isotropic_counts[static_cast<std::size_t>(t)];
}

AxiomReport verify_axioms(const RelationTable& rel)
{
    const std::size_t N = rel.size();
    const long cls = rel.classes();
    const std::size_t words = (N + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows(static_cast<std::size_t>(cls + 1) * N, std::vector<std::uint64_t>(words, 0));
    auto row = [&](long i, std::size_t x) -> std::vector<std::uint64_t>& { return rows[static_cast<std::size_t>(i) * N + x]; };

    std::vector<long> seen(static_cast<std::size_t>(cls + 1), 0);
    for (std::size_t x = 0; x < N; ++x) {
        if (rel(x, x) != 0) throw AxiomViolation("R_0 is not the diagonal");
        for (std::size_t y = 0; y < N; ++y) {
            const long r = rel(x, y);
            if (r > cls) throw AxiomViolation("relation index out of range");
            if (rel(y, x) != r) throw AxiomViolation("relations are not symmetric");
            if (x != y && r == 0) throw AxiomViolation("R_0 is not the diagonal");
            row(r, x)[y / 64] |= std::uint64_t{1} << (y % 64);
            ++seen[r];
        }
    }
    for (long r = 0; r <= cls; ++r)
        if (seen[r] == 0) throw AxiomViolation("relation R_" + std::to_string(r) + " is empty");

    AxiomReport rep;
    rep.classes = cls;
    rep.size = N;
    const std::size_t c1 = static_cast<std::size_t>(cls + 1);
    rep.p.assign(c1, std::vector<std::vector<long>>(c1, std::vector<long>(c1, -1)));
    for (std::size_t x = 0; x < N; ++x)
        for (std::size_t y = x; y < N; ++y) {
            const long k = rel(x, y);
            for (long i = 0; i <= cls; ++i)
                for (long j = 0; j <= cls; ++j) {
                    const auto& a = row(i, x);
                    const auto& b = row(j, y);
                    long c = 0;
                    for (std::size_t w = 0; w < words; ++w) c += std::popcount(a[w] & b[w]);
                    long& slot = rep.p[i][j][k];
                    if (slot < 0) slot = c;
                    else if (slot != c)
                        throw AxiomViolation("p_" + std::to_string(i) + std::to_string(j) + "^" + std::to_string(k) +
                                             " is not constant");
                }
        }
    for (long i = 0; i <= cls; ++i) rep.valencies.push_back(rep.p[i][i][0]);
    return rep;
}

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e)
{
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = mulmod(a, a))
        if (e & 1) r = mulmod(r, a);
    return r;
}

std::uint64_t reduce(const Rational& x)
{
    const mpz_class P(std::to_string(kPrime));
    mpz_class num = x.get_num() % P;
    if (num < 0) num += P;
    mpz_class den = x.get_den() % P;
    const std::uint64_t n = std::stoull(num.get_str());
    const std::uint64_t d = std::stoull(den.get_str());
    return mulmod(n, powmod(d, kPrime - 2));
}

long modular_rank(std::vector<std::vector<std::uint64_t>> m)
{
    const std::size_t N = m.size();
    long r = 0;
    for (std::size_t c = 0; c < N && static_cast<std::size_t>(r) < N; ++c) {
        std::size_t piv = r;
        while (piv < N && m[piv][c] == 0) ++piv;
        if (piv == N) continue;
        std::swap(m[r], m[piv]);
        const std::uint64_t s = powmod(m[r][c], kPrime - 2);
        for (std::size_t j = c; j < N; ++j) m[r][j] = mulmod(m[r][j], s);
        for (std::size_t i = r + 1; i < N; ++i) {
            if (m[i][c] == 0) continue;
            const std::uint64_t k = kPrime - m[i][c];
            for (std::size_t j = c; j < N; ++j) m[i][j] = (m[i][j] + mulmod(k, m[r][j])) % kPrime;
        }
        ++r;
    }
    return r;
}

}  // namespace

IdempotentReport verify_idempotents(const RelationTable& rel, const EigTable& table, std::size_t rank_cap)
{
    if (rel.classes() != table.classes) throw IdempotentMismatch("class counts differ");
    const AxiomReport ax = verify_axioms(rel);
    const long cls = table.classes;
    const Rational X(static_cast<long>(rel.size()));
    if (X != table.x_size) throw IdempotentMismatch("|X| differs from the table");
    for (long i = 0; i <= cls; ++i)
        if (Rational(ax.valencies[i]) != table.valencies[i])
            throw IdempotentMismatch("valency v_" + std::to_string(i) + " differs from the table");

    // (E_k E_l)(x, y) = (1/|X|^2) sum_{i,j} Q_k(i) Q_l(j) p_ij^r with r = rel(x, y).
    for (long k = 0; k <= cls; ++k)
        for (long l = k; l <= cls; ++l)
            for (long r = 0; r <= cls; ++r) {
                Rational lhs = 0;
                for (long i = 0; i <= cls; ++i)
                    for (long j = 0; j <= cls; ++j) lhs += table.Q[k][i] * table.Q[l][j] * ax.p[i][j][r];
                lhs /= X * X;
                const Rational rhs = (k == l) ? table.Q[k][r] / X : Rational(0);
                if (lhs != rhs)
                    throw IdempotentMismatch("E_" + std::to_string(k) + " E_" + std::to_string(l) + " fails on R_" +
                                             std::to_string(r));
            }
    for (long i = 0; i <= cls; ++i)
        for (long r = 0; r <= cls; ++r) {
            Rational s = 0;
            for (long k = 0; k <= cls; ++k) s += table.P[i][k] * table.Q[k][r];
            if (s / X != Rational(i == r ? 1 : 0))
                throw IdempotentMismatch("D_" + std::to_string(i) + " is not sum_k P_i(k) E_k");
        }

    IdempotentReport rep;
    for (long k = 0; k <= cls; ++k) {
        // trace E_k = |X| Q_k(0) / |X|
        rep.traces.push_back(table.Q[k][0]);
        if (table.Q[k][0] != table.multiplicities[k]) throw IdempotentMismatch("trace of E_k is not mu_k");
    }
    if (rel.size() <= rank_cap) {
        const std::size_t N = rel.size();
        for (long k = 0; k <= cls; ++k) {
            std::vector<std::uint64_t> val;
            for (long r = 0; r <= cls; ++r) val.push_back(reduce(table.Q[k][r]));
            std::vector<std::vector<std::uint64_t>> m(N, std::vector<std::uint64_t>(N));
            for (std::size_t x = 0; x < N; ++x)
                for (std::size_t y = 0; y < N; ++y) m[x][y] = val[rel(x, y)];
            const long rk = modular_rank(std::move(m));
            rep.modular_ranks.push_back(rk);
            if (Rational(rk) != table.multiplicities[k])
                throw IdempotentMismatch("rank of E_" + std::to_string(k) + " is " + std::to_string(rk));
        }
    }
    return rep;
}

}  // namespace polar::oracle
