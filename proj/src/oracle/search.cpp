#include "polar/oracle/search.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <set>

namespace polar::oracle {

namespace {

using Bits = std::vector<std::uint64_t>;

bool any(const Bits& b)
{
    for (std::uint64_t w : b)
        if (w) return true;
    return false;
}

class CliqueSearch {
public:
    CliqueSearch(std::vector<Bits> adj, std::size_t n, const SearchOptions& opt)
        : adj_(std::move(adj)), n_(n), opt_(opt)
    {
    }

    void run()
    {
        Bits all((n_ + 63) / 64, 0);
        for (std::size_t v = 0; v < n_; ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
        if (opt_.vertex_transitive && n_ > 0) {
            current_.push_back(0);
            best = current_;
            Bits next = adj_[0];
            if (any(next)) expand(std::move(next));
            return;
        }
        expand(all);
    }

    std::vector<std::size_t> best;
    std::uint64_t nodes = 0;
    bool stopped = false;

private:
    bool done() const
    {
        return (opt_.mode == SearchMode::FirstOfSize && best.size() >= opt_.target) ||
               (opt_.upper_bound && best.size() >= opt_.upper_bound) || (opt_.node_limit && nodes >= opt_.node_limit);
    }

    void expand(Bits P)
    {
        if (opt_.node_limit && nodes >= opt_.node_limit) stopped = true;
        if (done()) return;
        ++nodes;
        // Greedy colouring of P; colour[i] bounds the clique within order[0..i].
        std::vector<std::size_t> order;
        std::vector<std::size_t> colour;
        Bits uncoloured = P;
        std::size_t c = 0;
        while (any(uncoloured)) {
            ++c;
            Bits avail = uncoloured;
            for (std::size_t w = 0; w < avail.size(); ++w)
                while (avail[w]) {
                    const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(avail[w]));
                    avail[w] &= avail[w] - 1;
                    uncoloured[v / 64] &= ~(std::uint64_t{1} << (v % 64));
                    for (std::size_t u = 0; u < avail.size(); ++u) avail[u] &= ~adj_[v][u];
                    order.push_back(v);
                    colour.push_back(c);
                }
        }
        for (std::size_t i = order.size(); i-- > 0;) {
            if (current_.size() + colour[i] <= best.size()) return;
            const std::size_t v = order[i];
            current_.push_back(v);
            Bits next(P.size());
            for (std::size_t w = 0; w < P.size(); ++w) next[w] = P[w] & adj_[v][w];
            if (!any(next)) {
                if (current_.size() > best.size()) best = current_;
            } else {
                expand(std::move(next));
            }
            current_.pop_back();
            if (done()) return;
            P[v / 64] &= ~(std::uint64_t{1} << (v % 64));
        }
    }

    std::vector<Bits> adj_;
    std::size_t n_;
    SearchOptions opt_;
    std::vector<std::size_t> current_;
};

}  // namespace

CodeSearchResult find_code(const RelationTable& rel, long d, const SearchOptions& options)
{
    const std::size_t N = rel.size();
    if (d < 1 || d > rel.classes()) throw BadParameters("d must lie in 1..n, got " + std::to_string(d));
    if (options.mode == SearchMode::MaxExhaustive && N > options.exhaustive_cap)
        throw TooLarge("exhaustive search limited to " + std::to_string(options.exhaustive_cap) + " generators");
    if (options.mode == SearchMode::FirstOfSize && options.target == 0) throw BadParameters("target size must be positive");

    std::vector<Bits> adj(N, Bits((N + 63) / 64, 0));
    for (std::size_t x = 0; x < N; ++x)
        for (std::size_t y = 0; y < N; ++y)
            if (x != y && rel(x, y) >= d) adj[x][y / 64] |= std::uint64_t{1} << (y % 64);

    CliqueSearch search(std::move(adj), N, options);
    search.run();
    CodeSearchResult res;
    res.nodes = search.nodes;
    res.members = search.best;
    std::sort(res.members.begin(), res.members.end());
    res.complete = !search.stopped;
    if (options.mode == SearchMode::FirstOfSize) {
        res.found = res.members.size() >= options.target;
        if (res.found) res.members.resize(options.target);
        res.complete = res.found || !search.stopped;
    } else {
        res.found = res.complete;
    }
    return res;
}

HalfSplit bipartite_half(const PolarSpaceInstance& inst)
{
    if (inst.spec.kind() != PolarKind::Hyperbolic) throw WrongFamily("bipartite halves exist in D_n only");
    HalfSplit split;
    for (std::size_t x = 0; x < inst.size(); ++x) split.halves[inst.relations(0, x) % 2].push_back(x);

    const long n = inst.rank();
    for (int h = 0; h < 2; ++h) {
        std::map<Matrix, long> through;
        for (std::size_t x : split.halves[h])
            for (Matrix& m : hyperplanes(inst.generators[x], inst.field)) ++through[std::move(m)];
        bool ok = static_cast<long>(through.size()) == inst.isotropic_counts[static_cast<std::size_t>(n - 1)];
        for (const auto& [m, c] : through) ok = ok && c == 1;
        split.steiner[h] = ok;
    }
    return split;
}

RelationTable half_relations(const PolarSpaceInstance& inst, const std::vector<std::size_t>& half)
{
    RelationTable out(half.size(), inst.rank() / 2);
    for (std::size_t a = 0; a < half.size(); ++a)
        for (std::size_t b = a + 1; b < half.size(); ++b) {
            const long r = inst.relations(half[a], half[b]);
            if (r % 2 != 0) throw InvariantViolation("odd distance inside a bipartite half");
            out.set(a, b, static_cast<std::uint8_t>(r / 2));
        }
    return out;
}

RelationTable restrict_relations(const RelationTable& rel, const std::vector<std::size_t>& subset)
{
    RelationTable out(subset.size(), rel.classes());
    for (std::size_t a = 0; a < subset.size(); ++a)
        for (std::size_t b = a + 1; b < subset.size(); ++b) out.set(a, b, rel(subset[a], subset[b]));
    return out;
}

std::vector<std::size_t> lift_to_half(const PolarSpaceInstance& inst, const std::vector<std::size_t>& code)
{
    if (inst.spec.kind() != PolarKind::Hyperbolic) throw WrongFamily("lifting needs D_n");
    const long n = inst.rank();
    std::vector<std::size_t> out;
    for (std::size_t x : code) {
        if (inst.relations(0, x) % 2 == 0) {
            out.push_back(x);
            continue;
        }
        const Matrix h = hyperplanes(inst.generators[x], inst.field).front();
        std::optional<std::size_t> other;
        for (std::size_t y = 0; y < inst.size() && !other; ++y)
            if (y != x && intersection_dim(h, inst.generators[y], inst.field) == n - 1) other = y;
        if (!other || inst.relations(0, *other) % 2 != 0) throw InvariantViolation("no partner generator in the other half");
        out.push_back(*other);
    }
    return out;
}

std::vector<Matrix> matrices_of_class(MatrixClass kind, int n, const Field& f)
{
    // Free entries: the upper triangle, plus the diagonal unless alternating;
    // Hermitian diagonals range over the subfield.
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            if (i != j || kind != MatrixClass::Alternating) slots.emplace_back(i, j);
    std::vector<Elem> diag_values;
    for (int a = 0; a < f.order(); ++a)
        if (kind != MatrixClass::Hermitian || f.in_subfield(static_cast<Elem>(a))) diag_values.push_back(static_cast<Elem>(a));

    std::vector<Matrix> out;
    std::vector<std::size_t> idx(slots.size(), 0);
    for (;;) {
        Matrix A(n, Vec(n, 0));
        for (std::size_t s = 0; s < slots.size(); ++s) {
            const auto [i, j] = slots[s];
            if (i == j) {
                A[i][i] = diag_values[idx[s]];
            } else {
                const Elem a = static_cast<Elem>(idx[s]);
                A[i][j] = a;
                switch (kind) {
                case MatrixClass::Hermitian: A[j][i] = f.conj(a); break;
                case MatrixClass::Symmetric: A[j][i] = a; break;
                case MatrixClass::Alternating: A[j][i] = f.neg(a); break;
                }
            }
        }
        out.push_back(std::move(A));
        std::size_t s = 0;
        for (; s < slots.size(); ++s) {
            const std::size_t limit = slots[s].first == slots[s].second ? diag_values.size() : static_cast<std::size_t>(f.order());
            if (++idx[s] < limit) break;
            idx[s] = 0;
        }
        if (s == slots.size()) break;
    }
    return out;
}

namespace {

// The form on GF^{2n} = {(x, y)} making v(A) isotropic for the class.
bool isotropic_image(MatrixClass kind, const Matrix& basis, const Field& f, int n)
{
    auto x = [&](const Vec& v, int i) { return v[i]; };
    auto y = [&](const Vec& v, int i) { return v[n + i]; };
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a; b < basis.size(); ++b) {
            const Vec& u = basis[a];
            const Vec& w = basis[b];
            Elem s = 0;
            switch (kind) {
            case MatrixClass::Symmetric:  // x.y' - y.x'
                for (int i = 0; i < n; ++i) s = f.add(s, f.sub(f.mul(x(u, i), y(w, i)), f.mul(y(u, i), x(w, i))));
                break;
            case MatrixClass::Alternating:  // Q = x.y, checked with its polarization off the diagonal
                if (a == b) {
                    for (int i = 0; i < n; ++i) s = f.add(s, f.mul(x(u, i), y(u, i)));
                } else {
                    for (int i = 0; i < n; ++i) s = f.add(s, f.add(f.mul(x(u, i), y(w, i)), f.mul(y(u, i), x(w, i))));
                }
                break;
            case MatrixClass::Hermitian:  // x.conj(y') - y.conj(x')
                for (int i = 0; i < n; ++i)
                    s = f.add(s, f.sub(f.mul(x(u, i), f.conj(y(w, i))), f.mul(y(u, i), f.conj(x(w, i)))));
                break;
            }
            if (s != 0) return false;
        }
    return true;
}

Matrix image(const Matrix& A, const Field& f)
{
    const int n = static_cast<int>(A.size());
    Matrix rows(n, Vec(2 * n, 0));
    for (int i = 0; i < n; ++i) {
        rows[i][i] = 1;
        for (int j = 0; j < n; ++j) rows[i][n + j] = A[j][i];
    }
    rref(rows, f);
    return rows;
}

Matrix difference(const Matrix& A, const Matrix& B, const Field& f)
{
    Matrix D = A;
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = 0; j < A.size(); ++j) D[i][j] = f.sub(A[i][j], B[i][j]);
    return D;
}

}  // namespace

RankMapReport rank_map_check(MatrixClass kind, int n, int field_order, std::size_t trials, std::uint64_t seed)
{
    if (n < 1 || n > 4) throw BadParameters("rank map check needs 1 <= n <= 4");
    const Field f(field_order);
    if (kind == MatrixClass::Hermitian && !f.has_conjugation()) throw BadParameters("Hermitian matrices need a square field order");
    if (field_order > 16) throw BadParameters("field order too large for the rank map check");

    const std::vector<Matrix> all = matrices_of_class(kind, n, f);
    std::vector<Matrix> images;
    images.reserve(all.size());
    RankMapReport rep;
    rep.matrices = all.size();
    for (const Matrix& A : all) {
        images.push_back(image(A, f));
        if (!isotropic_image(kind, images.back(), f, n)) ++rep.isotropy_failures;
    }
    auto check = [&](std::size_t a, std::size_t b) {
        ++rep.pairs;
        const int r = rank(difference(all[a], all[b], f), f);
        if (n - intersection_dim(images[a], images[b], f) != r) ++rep.distance_failures;
        if (a != b && images[a] == images[b]) ++rep.injectivity_failures;
    };
    if (trials == 0) {
        rep.exhaustive = true;
        for (std::size_t a = 0; a < all.size(); ++a)
            for (std::size_t b = a; b < all.size(); ++b) check(a, b);
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        for (std::size_t t = 0; t < trials; ++t) check(pick(rng), pick(rng));
    }
    return rep;
}

}  // namespace polar::oracle
