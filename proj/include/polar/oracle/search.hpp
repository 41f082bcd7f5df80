#pragma once

// Codes, spreads and bipartite halves inside enumerated polar spaces, and the
// rank-metric embedding of matrix spaces.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "polar/distributions.hpp"
#include "polar/oracle/polar_space.hpp"

namespace polar::oracle {

enum class SearchMode { MaxExhaustive, FirstOfSize };

struct SearchOptions {
    SearchMode mode = SearchMode::MaxExhaustive;
    std::size_t target = 0;             // FirstOfSize
    std::size_t exhaustive_cap = 500;   // largest |X| for MaxExhaustive
    std::uint64_t node_limit = 0;       // 0 means unlimited
    // Generators of a polar space form one orbit of its isometry group, so
    // some maximum code contains generator 0; searching only those is exact.
    bool vertex_transitive = true;
    // A proven upper bound (e.g. the LP optimum). Reaching it ends the search.
    std::size_t upper_bound = 0;
};

struct CodeSearchResult {
    bool found = false;     // false: no code of the target size, or node limit hit
    bool complete = true;   // search space fully explored (or target reached)
    std::vector<std::size_t> members;
    std::uint64_t nodes = 0;
};

// Largest (or first of a given size) set of generators at pairwise distance
// n - dim(U cap W) >= d, by branch and bound with colouring bounds.
CodeSearchResult find_code(const RelationTable& relations, long d, const SearchOptions& options = {});

struct HalfSplit {
    std::array<std::vector<std::size_t>, 2> halves;  // halves[0] contains generator 0
    std::array<bool, 2> steiner{false, false};       // each isotropic (n-1)-space in exactly one member
};

// Splits the generators of D_n by parity of dim(U cap U_0).
HalfSplit bipartite_half(const PolarSpaceInstance& instance);

// Relations of the half scheme on the given members: distance / 2.
RelationTable half_relations(const PolarSpaceInstance& instance, const std::vector<std::size_t>& half);

// Relations restricted to a subset, keeping the ambient class count.
RelationTable restrict_relations(const RelationTable& relations, const std::vector<std::size_t>& subset);

// Moves every member of an even-d code of D_n into the half containing
// generator 0 through a chosen (n-1)-subspace. Returns indices into the
// instance's generator list.
std::vector<std::size_t> lift_to_half(const PolarSpaceInstance& instance, const std::vector<std::size_t>& code);

enum class MatrixClass { Hermitian, Symmetric, Alternating };

struct RankMapReport {
    std::size_t matrices = 0;
    std::size_t pairs = 0;
    std::size_t distance_failures = 0;
    std::size_t isotropy_failures = 0;
    std::size_t injectivity_failures = 0;
    bool exhaustive = false;

    bool ok() const { return distance_failures == 0 && isotropy_failures == 0 && injectivity_failures == 0; }
};

// All matrices of the class over GF(field_order) (Hermitian needs a square
// order), or `trials` random pairs when trials > 0.
std::vector<Matrix> matrices_of_class(MatrixClass kind, int n, const Field& f);

// v(A) = rowspace [I | A^T]: checks n - dim(v(A) cap v(B)) = rank(A - B) and that
// v(A) is totally isotropic for the matching form on GF(field_order)^{2n}.
RankMapReport rank_map_check(MatrixClass kind, int n, int field_order, std::size_t trials = 0,
                             std::uint64_t seed = 1);

}  // namespace polar::oracle
