#pragma once

// Brute-force polar spaces: explicit forms, generator enumeration and the
// scheme checks run against them.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "polar/distributions.hpp"
#include "polar/oracle/field.hpp"
#include "polar/rational.hpp"
#include "polar/schemes.hpp"

namespace polar::oracle {

enum class FormKind { Alternating, QuadraticPlus, QuadraticParabolic, QuadraticMinus, Hermitian };

const char* form_name(FormKind kind);

struct FormSpec {
    FormKind kind;
    int dim;
    int field_order;
    Elem delta = 0;  // X^2 + X + delta irreducible, for QuadraticMinus
};

// The standard form for a base family, following the dim(V) column of the
// classification table.
FormSpec standard_form(const SchemeSpec& spec);

class Form {
public:
    Form(const FormSpec& spec, const Field& field);

    const FormSpec& spec() const noexcept { return spec_; }
    const Field& field() const noexcept { return field_; }

    // Q(v) for the quadratic kinds.
    Elem quad(const Vec& v) const;
    // The bilinear form, the polarization of Q, or the Hermitian form.
    Elem pair(const Vec& u, const Vec& v) const;

    bool isotropic(const Vec& v) const;
    bool totally_isotropic(const Matrix& basis) const;

private:
    FormSpec spec_;
    const Field& field_;
};

class TooLarge : public std::length_error {
public:
    using std::length_error::length_error;
};

class AxiomViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class IdempotentMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct EnumerateOptions {
    std::size_t max_size = 20000;  // cap on |X|
    std::size_t max_vectors = 1u << 24;
};

struct PolarSpaceInstance {
    SchemeSpec spec;
    FormSpec form;
    Field field;
    std::vector<Matrix> generators;          // RREF bases, sorted
    RelationTable relations;                 // n - dim(U cap W)
    std::vector<long> isotropic_counts;      // index t = 0..n
    long min_generators_per_hyperplane = 0;  // over isotropic (n-1)-spaces
    long max_generators_per_hyperplane = 0;

    std::size_t size() const noexcept { return generators.size(); }
    long rank() const noexcept { return spec.rank(); }
};

// Enumerates all generators and checks them against the closed forms for
// |X|, isotropic t-space counts and generators per (n-1)-space.
PolarSpaceInstance enumerate(const SchemeSpec& spec, const EnumerateOptions& options = {});

// Rebuilds an instance from a stored generator list and isotropic counts, and
// runs the same closed-form checks as enumerate.
PolarSpaceInstance assemble(const SchemeSpec& spec, const FormSpec& form, std::vector<Matrix> generators,
                            std::vector<long> isotropic_counts);

// The (n-1)-subspaces of an n-space, as RREF bases.
std::vector<Matrix> hyperplanes(const Matrix& basis, const Field& f);

struct AxiomReport {
    long classes = 0;
    std::size_t size = 0;
    std::vector<long> valencies;
    // p[i][j][k]
    std::vector<std::vector<std::vector<long>>> p;
};

// Partition, symmetry, identity and constancy of every p_ij^k.
AxiomReport verify_axioms(const RelationTable& relations);

struct IdempotentReport {
    std::vector<Rational> traces;      // rank(E_k) for the idempotent E_k
    std::vector<long> modular_ranks;   // independent ranks mod a 61-bit prime, or empty
};

// E_k = (1/|X|) sum_i Q_k(i) D_i: checks E_k E_l = delta_kl E_k and
// D_i = sum_k P_i(k) E_k exactly, using the measured intersection numbers.
IdempotentReport verify_idempotents(const RelationTable& relations, const EigTable& table,
                                    std::size_t rank_cap = 800);

// Number of totally isotropic t-spaces found during enumeration.
long count_isotropic_spaces(const PolarSpaceInstance& instance, long t);

}  // namespace polar::oracle
