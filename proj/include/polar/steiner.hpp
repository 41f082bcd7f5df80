#pragma once

// Existence verdicts for t-Steiner systems in the six polar spaces.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "polar/bounds.hpp"
#include "polar/distributions.hpp"
#include "polar/rational.hpp"
#include "polar/schemes.hpp"

namespace polar {

enum class Outcome {
    NonexistentByRatio,
    NonexistentByDualNegativity,
    NonexistentKnownLiterature,
    ExistsKnown,
    Open,
};

enum class CaseTag { C1, C2, C3, C4, C5, C6, C7, C8, C9, InScopeRemaining };

std::string_view outcome_name(Outcome o);
std::string_view case_name(CaseTag c);

struct RatioCertificate {
    Rational B;
    Rational S;
    Rational R;
    BoundFormula formula;
};

struct DualCertificate {
    long k = 0;
    Rational value;       // A'_k
    Rational normalized;  // A'_k / mu_k
    std::vector<long> negative_indices;
    Distribution dual;
};

// A cited nonexistence or existence fact, and the (kind, rank, t) it was
// stated for. For rank reduction the entry can have smaller rank than the
// query.
struct LiteratureRef {
    std::string fact;
    PolarKind kind;
    long rank;
    long t;
};

struct HalfHyperbolicConstruction {};

using Certificate =
    std::variant<std::monostate, RatioCertificate, DualCertificate, LiteratureRef, HalfHyperbolicConstruction>;

struct Verdict {
    Outcome outcome;
    Certificate certificate;
    std::optional<CaseTag> tag;
};

class OutOfTheoremRange : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class RatioNotLessThanOne : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class WitnessNotNegative : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// prod_{i=0}^{t-1} (1 + p^{n-i+e}), for 0 <= t <= n.
Rational steiner_size(const SchemeSpec& spec, long t);

// [n, t]_p prod_{i=0}^{t-1} (1 + p^{n-i+e})
Rational isotropic_space_count(const SchemeSpec& spec, long t);

// S >= p^{t(2n - t + 1 + 2e)/2}
bool steiner_size_lower_bound_holds(const SchemeSpec& spec, long t);

// Requires a base family and 1 < t < n.
CaseTag classify(const SchemeSpec& spec, long t);

RatioCertificate ratio_certificate(const SchemeSpec& spec, long t);
DualCertificate dual_certificate(const SchemeSpec& spec, long t);

// Index of the entry of the dual distribution shown negative for a C7..C9 case.
long witness_index(const SchemeSpec& spec, long t);

// Literature entries for spreads (t = 1) and 2-Steiner systems in rank 3.
// Returns the entry that settles (kind, rank, t, q), if any.
std::optional<LiteratureRef> literature_nonexistence(PolarKind kind, long rank, long t, long q);
std::optional<LiteratureRef> literature_existence(PolarKind kind, long rank, long t, long q);

// The entry reached by quotienting an (n-1)-Steiner system down in rank.
std::optional<LiteratureRef> rank_reduction(const SchemeSpec& spec);

Verdict full_verdict(const SchemeSpec& spec, long t);

// True for the parameters left open by the classification (1 < t < n).
bool is_surviving_case(const SchemeSpec& spec, long t);

}  // namespace polar
