#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "polar/rational.hpp"
#include "polar/schemes.hpp"

namespace polar {

enum class Flavor { Inner, Dual };

struct Distribution {
    std::vector<Rational> entries;
    Flavor flavor = Flavor::Inner;

    long classes() const { return static_cast<long>(entries.size()) - 1; }
    const Rational& operator[](long i) const { return entries[static_cast<std::size_t>(i)]; }
    Rational total() const;
};

// Symmetric relation lookup on an enumerated point set: rel(x, y) in 0..classes.
class RelationTable {
public:
    RelationTable() = default;
    RelationTable(std::size_t size, long classes);

    std::size_t size() const noexcept { return size_; }
    long classes() const noexcept { return classes_; }
    std::uint8_t operator()(std::size_t x, std::size_t y) const { return rel_[x * size_ + y]; }
    void set(std::size_t x, std::size_t y, std::uint8_t r)
    {
        rel_[x * size_ + y] = r;
        rel_[y * size_ + x] = r;
    }

private:
    std::size_t size_ = 0;
    long classes_ = 0;
    std::vector<std::uint8_t> rel_;
};

class EmptySubset : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class LengthMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class BadParameters : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A_i = |(Y x Y) cap R_i| / |Y|
Distribution inner_distribution(std::span<const std::size_t> subset, const RelationTable& relations);

// A'_k = sum_i Q_k(i) A_i
Distribution dual_distribution(const Distribution& inner, const EigTable& table);

// Recovers the inner distribution from a dual one: A_i = (1/|X|) sum_k P_i(k) A'_k.
Distribution inverse_dual_distribution(const Distribution& dual, const EigTable& table);

// A_1 = ... = A_{d-1} = 0
bool is_d_code(const Distribution& inner, long d);

// The inner distribution forced on any t-Steiner system (base families, 1 <= t <= n).
Distribution steiner_inner_distribution(const SchemeSpec& spec, long t);

// Its dual distribution; A'_1 = ... = A'_t = 0 is checked before returning.
Distribution steiner_dual_distribution(const SchemeSpec& spec, long t);

}  // namespace polar
