#include "polar/steiner.hpp"

#include <array>
#include <string>

namespace polar {

namespace {

enum class QCondition { Any, Odd, Even, Two };

struct LiteratureEntry {
    PolarKind kind;
    long rank;  // 0 matches every rank
    long t;
    QCondition when;
    const char* fact;
};

constexpr std::array kNonexistence{
    LiteratureEntry{PolarKind::Parabolic, 2, 1, QCondition::Odd, "no spreads in B_2 for odd q"},
    LiteratureEntry{PolarKind::HermitianEven, 2, 1, QCondition::Two, "no spreads in 2A_4 for q = 2"},
    LiteratureEntry{PolarKind::HermitianOdd, 2, 1, QCondition::Any, "no spreads in 2A_3"},
    LiteratureEntry{PolarKind::HermitianOdd, 3, 1, QCondition::Any, "no spreads in 2A_5"},
    LiteratureEntry{PolarKind::Elliptic, 3, 2, QCondition::Two, "no 2-Steiner systems in 2D_4 for q = 2"},
    LiteratureEntry{PolarKind::Symplectic, 3, 2, QCondition::Any, "no 2-Steiner systems in C_3"},
    LiteratureEntry{PolarKind::Parabolic, 3, 2, QCondition::Even, "no 2-Steiner systems in B_3 for even q (B_3 = C_3)"},
};

constexpr std::array kExistence{
    LiteratureEntry{PolarKind::Symplectic, 0, 1, QCondition::Any, "symplectic spreads exist for all q"},
    LiteratureEntry{PolarKind::Parabolic, 0, 1, QCondition::Even, "spreads of B_n exist for even q (B_n = C_n)"},
};

bool matches(QCondition c, long q)
{
    switch (c) {
    case QCondition::Any: return true;
    case QCondition::Odd: return q % 2 != 0;
    case QCondition::Even: return q % 2 == 0;
    case QCondition::Two: return q == 2;
    }
    return false;
}

template <std::size_t N>
std::optional<LiteratureRef> lookup(const std::array<LiteratureEntry, N>& table, PolarKind kind, long rank, long t, long q)
{
    for (const LiteratureEntry& e : table)
        if (e.kind == kind && (e.rank == 0 || e.rank == rank) && e.t == t && matches(e.when, q))
            return LiteratureRef{e.fact, kind, rank, t};
    return std::nullopt;
}

void require_base(const SchemeSpec& spec)
{
    if (!is_base_kind(spec.kind())) throw BadParameters("Steiner systems are defined for the six base families");
}

}  // namespace

std::string_view outcome_name(Outcome o)
{
    switch (o) {
    case Outcome::NonexistentByRatio: return "NonexistentByRatio";
    case Outcome::NonexistentByDualNegativity: return "NonexistentByDualNegativity";
    case Outcome::NonexistentKnownLiterature: return "NonexistentKnownLiterature";
    case Outcome::ExistsKnown: return "ExistsKnown";
    case Outcome::Open: return "Open";
    }
    return "?";
}

std::string_view case_name(CaseTag c)
{
    static constexpr std::array<std::string_view, 10> names{"C1", "C2", "C3", "C4", "C5",
                                                            "C6", "C7", "C8", "C9", "InScopeRemaining"};
    return names[static_cast<std::size_t>(c)];
}

Rational steiner_size(const SchemeSpec& spec, long t)
{
    require_base(spec);
    const long n = spec.rank();
    if (t < 0 || t > n) throw BadParameters("t must lie in 0..n, got " + std::to_string(t));
    Rational s = 1;
    for (long i = 0; i < t; ++i) s *= 1 + spec.p_half_pow(2 * (n - i) + spec.two_e());
    return s;
}

Rational isotropic_space_count(const SchemeSpec& spec, long t)
{
    return qbinomial(spec.rank(), t, spec.p_base()) * steiner_size(spec, t);
}

bool steiner_size_lower_bound_holds(const SchemeSpec& spec, long t)
{
    const long n = spec.rank();
    return steiner_size(spec, t) >= spec.p_half_pow(t * (2 * n - t + 1 + spec.two_e()));
}

CaseTag classify(const SchemeSpec& spec, long t)
{
    require_base(spec);
    const long n = spec.rank();
    if (t <= 1 || t >= n)
        throw OutOfTheoremRange("classification needs 1 < t < n, got t=" + std::to_string(t) + ", n=" + std::to_string(n));
    const long q = spec.q();
    const bool even_n = n % 2 == 0;

    switch (spec.kind()) {
    case PolarKind::HermitianOdd:
        return t == n - 1 ? CaseTag::C1 : CaseTag::C5;
    case PolarKind::Symplectic:
    case PolarKind::Parabolic:
        if (t == n - 1) return CaseTag::C1;
        if (t == 2) return even_n ? CaseTag::C3 : CaseTag::C7;
        return CaseTag::C3;
    case PolarKind::Hyperbolic:
        return t == n - 1 ? CaseTag::InScopeRemaining : CaseTag::C2;
    case PolarKind::HermitianEven:
        if (t == n - 1) return q == 2 ? CaseTag::C1 : CaseTag::InScopeRemaining;
        if (n == 6 && t == 3) return CaseTag::C9;
        if (t == 2) return even_n ? CaseTag::C6 : CaseTag::InScopeRemaining;
        return CaseTag::C6;
    case PolarKind::Elliptic:
        if (t == n - 1) return q == 2 ? CaseTag::C1 : CaseTag::InScopeRemaining;
        if ((n == 7 && t == 4) || (n == 8 && t == 5)) return CaseTag::C9;
        if (t == 2) return even_n ? CaseTag::C7 : CaseTag::InScopeRemaining;
        if (t == 3) return even_n ? CaseTag::C8 : CaseTag::C4;
        return CaseTag::C4;
    default: break;
    }
    throw BadParameters("not a base family");
}

bool is_surviving_case(const SchemeSpec& spec, long t)
{
    require_base(spec);
    const long n = spec.rank();
    const bool hermeven_or_elliptic =
        spec.kind() == PolarKind::HermitianEven || spec.kind() == PolarKind::Elliptic;
    if (t == 2 && hermeven_or_elliptic && n % 2 != 0) return true;
    if (t == n - 1 && hermeven_or_elliptic && spec.q() >= 3) return true;
    return t == n - 1 && spec.kind() == PolarKind::Hyperbolic;
}

RatioCertificate ratio_certificate(const SchemeSpec& spec, long t)
{
    const CaseTag tag = classify(spec, t);
    if (tag < CaseTag::C2 || tag > CaseTag::C6)
        throw BadParameters(std::string(case_name(tag)) + " is not settled by a size ratio");
    const long d = spec.rank() - t + 1;
    const BoundResult bound = code_bound(spec, d);
    const Rational S = steiner_size(spec, t);
    RatioCertificate cert{bound.value, S, bound.value / S, bound.formula_used};
    if (cert.R >= 1)
        throw RatioNotLessThanOne("R = " + to_string(cert.R) + " for " + spec.label() + ", t=" + std::to_string(t));
    return cert;
}

long witness_index(const SchemeSpec& spec, long t)
{
    const long n = spec.rank();
    switch (classify(spec, t)) {
    case CaseTag::C7: return spec.kind() == PolarKind::Elliptic ? n : n - 1;
    case CaseTag::C8: return n - 1;
    case CaseTag::C9:
        if (spec.kind() == PolarKind::HermitianEven) return 5;
        return n == 7 ? 6 : 7;
    default: break;
    }
    throw BadParameters("no dual witness for this case");
}

DualCertificate dual_certificate(const SchemeSpec& spec, long t)
{
    const long k = witness_index(spec, t);
    const EigTable table = eig_table(spec);
    DualCertificate cert;
    cert.dual = steiner_dual_distribution(spec, t);
    cert.k = k;
    cert.value = cert.dual[k];
    cert.normalized = cert.value / table.multiplicities[static_cast<std::size_t>(k)];
    for (long i = 0; i <= cert.dual.classes(); ++i)
        if (cert.dual[i] < 0) cert.negative_indices.push_back(i);
    if (cert.value >= 0)
        throw WitnessNotNegative("A'_" + std::to_string(k) + " = " + to_string(cert.value) + " for " + spec.label() +
                                 ", t=" + std::to_string(t));
    return cert;
}

std::optional<LiteratureRef> literature_nonexistence(PolarKind kind, long rank, long t, long q)
{
    return lookup(kNonexistence, kind, rank, t, q);
}

std::optional<LiteratureRef> literature_existence(PolarKind kind, long rank, long t, long q)
{
    return lookup(kExistence, kind, rank, t, q);
}

std::optional<LiteratureRef> rank_reduction(const SchemeSpec& spec)
{
    require_base(spec);
    for (long r = spec.rank(); r >= 2; --r)
        if (auto ref = literature_nonexistence(spec.kind(), r, r - 1, spec.q())) return ref;
    return std::nullopt;
}

Verdict full_verdict(const SchemeSpec& spec, long t)
{
    require_base(spec);
    const long n = spec.rank();
    if (t < 1 || t > n) throw BadParameters("t must lie in 1..n, got " + std::to_string(t));

    if (t == n) return Verdict{Outcome::ExistsKnown, std::monostate{}, std::nullopt};
    if (spec.kind() == PolarKind::Hyperbolic && t == n - 1) {
        std::optional<CaseTag> tag;
        if (t > 1) tag = CaseTag::InScopeRemaining;
        return Verdict{Outcome::ExistsKnown, HalfHyperbolicConstruction{}, tag};
    }
    if (t == 1) {
        if (auto ref = literature_nonexistence(spec.kind(), n, 1, spec.q()))
            return Verdict{Outcome::NonexistentKnownLiterature, *ref, std::nullopt};
        if (auto ref = literature_existence(spec.kind(), n, 1, spec.q()))
            return Verdict{Outcome::ExistsKnown, *ref, std::nullopt};
        return Verdict{Outcome::Open, std::monostate{}, std::nullopt};
    }

    const CaseTag tag = classify(spec, t);
    switch (tag) {
    case CaseTag::C1: {
        auto ref = rank_reduction(spec);
        if (!ref) throw InvariantViolation("no literature entry reached for " + spec.label());
        return Verdict{Outcome::NonexistentKnownLiterature, *ref, tag};
    }
    case CaseTag::C2:
    case CaseTag::C3:
    case CaseTag::C4:
    case CaseTag::C5:
    case CaseTag::C6: return Verdict{Outcome::NonexistentByRatio, ratio_certificate(spec, t), tag};
    case CaseTag::C7:
    case CaseTag::C8:
    case CaseTag::C9: return Verdict{Outcome::NonexistentByDualNegativity, dual_certificate(spec, t), tag};
    case CaseTag::InScopeRemaining: break;
    }
    return Verdict{Outcome::Open, std::monostate{}, tag};
}

}  // namespace polar
