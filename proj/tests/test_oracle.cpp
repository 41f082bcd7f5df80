#include "doctest.h"

#include <algorithm>
#include <filesystem>
#include <set>
#include <sstream>

#include "polar/oracle/field.hpp"
#include "polar/oracle/instance_io.hpp"
#include "polar/oracle/polar_space.hpp"
#include "polar/oracle/search.hpp"
#include "polar/steiner.hpp"

using namespace polar;
using namespace polar::oracle;

TEST_SUITE("oracle") {

TEST_CASE("field axioms")
{
    for (int order : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27}) {
        const Field f(order);
        INFO(order);
        for (int a = 0; a < order; ++a) {
            const Elem x = static_cast<Elem>(a);
            CHECK(f.add(x, f.neg(x)) == 0);
            CHECK(f.mul(x, 1) == x);
            if (a != 0) CHECK(f.mul(x, f.inv(x)) == 1);
            for (int b = 0; b < order; ++b) {
                const Elem y = static_cast<Elem>(b);
                CHECK(f.add(x, y) == f.add(y, x));
                CHECK(f.mul(x, y) == f.mul(y, x));
                for (int c = 0; c < order; c += 3)
                    CHECK(f.mul(x, f.add(y, static_cast<Elem>(c))) == f.add(f.mul(x, y), f.mul(x, static_cast<Elem>(c))));
            }
            if (f.has_conjugation()) {
                CHECK(f.conj(f.conj(x)) == x);
                CHECK(f.pow(x, order - 1) == (a == 0 ? 0 : 1));
            }
        }
    }
}

TEST_CASE("row reduction")
{
    const Field f(3);
    Matrix m{{1, 2, 0}, {2, 1, 0}, {0, 0, 1}};
    CHECK(rank(m, f) == 2);
    CHECK(nullspace(m, 3, f).size() == 1);
    CHECK(intersection_dim({{1, 0, 0}, {0, 1, 0}}, {{0, 1, 0}, {0, 0, 1}}, f) == 1);
}

TEST_CASE("enumerated counts")
{
    const auto c2 = enumerate(SchemeSpec(PolarKind::Symplectic, 2, 2));
    CHECK(c2.size() == 15);
    CHECK(count_isotropic_spaces(c2, 1) == 15);
    CHECK(c2.min_generators_per_hyperplane == 3);
    CHECK(c2.max_generators_per_hyperplane == 3);

    const auto d2 = enumerate(SchemeSpec(PolarKind::Hyperbolic, 2, 2));
    CHECK(d2.size() == 6);
    CHECK(count_isotropic_spaces(d2, 1) == 9);
    const auto halves = bipartite_half(d2);
    CHECK(halves.halves[0].size() == 3);
    CHECK(halves.halves[1].size() == 3);

    CHECK(enumerate(SchemeSpec(PolarKind::HermitianOdd, 2, 2)).size() == 27);
    CHECK(enumerate(SchemeSpec(PolarKind::Elliptic, 2, 2)).size() == 45);
    CHECK(enumerate(SchemeSpec(PolarKind::Parabolic, 2, 3)).size() == 40);
    CHECK(enumerate(SchemeSpec(PolarKind::Symplectic, 3, 2)).size() == 135);

    EnumerateOptions small;
    small.max_size = 100;
    CHECK_THROWS_AS(enumerate(SchemeSpec(PolarKind::Symplectic, 3, 2), small), TooLarge);
}

TEST_CASE("generators are totally isotropic and distinct")
{
    const auto inst = enumerate(SchemeSpec(PolarKind::HermitianEven, 2, 2));
    const Form form(inst.form, inst.field);
    std::set<Matrix> seen;
    for (const Matrix& g : inst.generators) {
        CHECK(form.totally_isotropic(g));
        CHECK(static_cast<long>(g.size()) == 2);
        seen.insert(g);
    }
    CHECK(seen.size() == inst.size());
    CHECK(Rational(static_cast<long>(inst.size())) == scheme_size(inst.spec));
}

TEST_CASE("association scheme axioms and idempotents")
{
    for (const SchemeSpec& spec : {SchemeSpec(PolarKind::Symplectic, 2, 2), SchemeSpec(PolarKind::Hyperbolic, 3, 2),
                                   SchemeSpec(PolarKind::HermitianOdd, 2, 2), SchemeSpec(PolarKind::Elliptic, 2, 2)}) {
        const auto inst = enumerate(spec);
        const AxiomReport ax = verify_axioms(inst.relations);
        const EigTable t = eig_table(spec);
        for (long i = 0; i <= spec.rank(); ++i) CHECK(Rational(ax.valencies[i]) == t.valencies[i]);
        const IdempotentReport id = verify_idempotents(inst.relations, t);
        for (long k = 0; k <= spec.rank(); ++k) {
            CHECK(id.traces[k] == t.multiplicities[k]);
            CHECK(Rational(id.modular_ranks[k]) == t.multiplicities[k]);
        }
    }
}

TEST_CASE("maximum codes against the brute-force reference")
{
    auto best = [](PolarKind k, long n, long q, long d) {
        const auto inst = enumerate(SchemeSpec(k, n, q));
        const CodeSearchResult r = find_code(inst.relations, d);
        CHECK(r.complete);
        return r.members.size();
    };
    CHECK(best(PolarKind::Symplectic, 2, 2, 2) == 5);
    CHECK(best(PolarKind::Hyperbolic, 2, 2, 2) == 3);
    CHECK(best(PolarKind::Hyperbolic, 3, 2, 2) == 15);
    CHECK(best(PolarKind::Hyperbolic, 3, 2, 3) == 2);
    CHECK(best(PolarKind::Parabolic, 2, 3, 2) == 7);
    CHECK(best(PolarKind::HermitianOdd, 2, 2, 2) == 6);
    CHECK(best(PolarKind::Elliptic, 2, 2, 2) == 9);
}

TEST_CASE("first code of a given size")
{
    const auto inst = enumerate(SchemeSpec(PolarKind::Symplectic, 2, 2));
    SearchOptions o;
    o.mode = SearchMode::FirstOfSize;
    o.target = 5;
    const CodeSearchResult spread = find_code(inst.relations, 2, o);
    REQUIRE(spread.found);
    CHECK(spread.members.size() == 5);
    CHECK(inner_distribution(spread.members, inst.relations).entries == std::vector<Rational>{1, 0, 4});
    o.target = 6;
    CHECK_FALSE(find_code(inst.relations, 2, o).found);
    CHECK_THROWS(find_code(inst.relations, 3, o));
}

TEST_CASE("halves of D_3 over GF(2) are 2-Steiner systems")
{
    const auto inst = enumerate(SchemeSpec(PolarKind::Hyperbolic, 3, 2));
    const HalfSplit split = bipartite_half(inst);
    CHECK(split.steiner[0]);
    CHECK(split.steiner[1]);
    CHECK(split.halves[0].size() == 15);
    const RelationTable h = half_relations(inst, split.halves[0]);
    CHECK(h.classes() == 1);
    verify_idempotents(h, eig_table(SchemeSpec(PolarKind::HalfHyperbolic, 3, 2)));
}

TEST_CASE("lifting an even-d code into a half")
{
    const auto inst = enumerate(SchemeSpec(PolarKind::Hyperbolic, 4, 2));
    const HalfSplit split = bipartite_half(inst);
    // Members of different halves are at odd distance; take one at distance 3.
    const std::size_t a = split.halves[0][5];
    const auto far = std::ranges::find_if(split.halves[1], [&](std::size_t x) { return inst.relations(a, x) == 3; });
    REQUIRE(far != split.halves[1].end());
    const std::vector<std::size_t> code{*far, a};
    const auto lifted = lift_to_half(inst, code);
    CHECK(lifted.size() == 2);
    for (std::size_t x : lifted) CHECK(std::ranges::binary_search(split.halves[0], x));
    CHECK(inst.relations(lifted[0], lifted[1]) >= 2);
}

TEST_CASE("rank-metric map")
{
    const RankMapReport h = rank_map_check(MatrixClass::Hermitian, 2, 4);
    CHECK(h.exhaustive);
    CHECK(h.matrices == 16);
    CHECK(h.ok());
    CHECK(rank_map_check(MatrixClass::Alternating, 4, 2).ok());
    CHECK(rank_map_check(MatrixClass::Symmetric, 3, 2).ok());
    CHECK(rank_map_check(MatrixClass::Symmetric, 2, 3, 200, 7).ok());

    const Field f(2);
    // A = B: the images coincide.
    CHECK(intersection_dim({{1, 0, 0, 1}, {0, 1, 1, 0}}, {{1, 0, 0, 1}, {0, 1, 1, 0}}, f) == 2);
    // Alternating 4x4 difference of rank 2: images meet in dimension 2.
    const Matrix a{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}};
    Matrix va, v0;
    for (int i = 0; i < 4; ++i) {
        Vec row(8, 0), zero(8, 0);
        row[i] = zero[i] = 1;
        for (int j = 0; j < 4; ++j) row[4 + j] = a[j][i];
        va.push_back(row);
        v0.push_back(zero);
    }
    CHECK(intersection_dim(va, v0, f) == 2);
}

TEST_CASE("instance files")
{
    const auto inst = enumerate(SchemeSpec(PolarKind::HermitianOdd, 2, 2));
    std::stringstream buffer;
    write_instance(buffer, inst);
    const auto back = read_instance(buffer);
    CHECK(back.spec == inst.spec);
    CHECK(back.generators == inst.generators);
    CHECK(back.isotropic_counts == inst.isotropic_counts);
    for (std::size_t x = 0; x < inst.size(); ++x)
        for (std::size_t y = 0; y < inst.size(); ++y) CHECK(back.relations(x, y) == inst.relations(x, y));

    std::stringstream garbage("polar-instance 7\n");
    CHECK_THROWS_AS(read_instance(garbage), FormatError);

    std::stringstream text;
    write_instance(text, inst);
    std::string s = text.str();
    s.erase(s.rfind('\n', s.size() - 2) + 1);  // drop the last generator
    std::stringstream broken(s);
    CHECK_THROWS(read_instance(broken));

    const auto dir = std::filesystem::temp_directory_path() / "polar-instance-test";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    const auto first = load_or_enumerate(inst.spec, dir);
    const auto cached = load_or_enumerate(inst.spec, dir);
    CHECK(cached.generators == first.generators);
    std::filesystem::remove_all(dir);
}

}
