#include <doctest.h>

#include <random>

#include "qmat/subspace.hpp"

using namespace qmat;

namespace {

Subspace from_strings(uint32_t q, uint32_t n, const std::vector<std::string>& rows) {
    RowOps ops(q, n);
    std::vector<uint64_t> packed;
    for (const auto& s : rows) packed.push_back(ops.from_string(s));
    return canonicalize(q, n, packed);
}

// Zassenhaus intersection, used only as an oracle against the perp-based
// implementation.
Subspace zassenhaus_intersect(const Subspace& a, const Subspace& b) {
    uint32_t q = a.q(), n = a.n();
    RowOps wide(q, 2 * n);
    RowOps narrow(q, n);
    std::vector<uint64_t> rows;
    auto splice = [&](uint64_t left, uint64_t right) {
        uint64_t r = 0;
        for (uint32_t i = 0; i < n; ++i) {
            r = wide.set(r, i, narrow.get(left, i));
            r = wide.set(r, n + i, narrow.get(right, i));
        }
        return r;
    };
    for (uint64_t r : a.rows()) rows.push_back(splice(r, r));
    for (uint64_t r : b.rows()) rows.push_back(splice(r, 0));
    Subspace big = canonicalize(q, 2 * n, rows);
    // Rows whose left half is zero carry the intersection in the right half.
    std::vector<uint64_t> inter;
    for (uint64_t r : big.rows()) {
        bool left_zero = true;
        for (uint32_t i = 0; i < n && left_zero; ++i)
            if (wide.get(r, i)) left_zero = false;
        if (!left_zero) continue;
        uint64_t v = 0;
        for (uint32_t i = 0; i < n; ++i) v = narrow.set(v, i, wide.get(r, n + i));
        inter.push_back(v);
    }
    return canonicalize(q, n, inter);
}

} // namespace

TEST_CASE("canonicalize") {
    auto s = from_strings(2, 6, {"110000", "011110"});
    CHECK(s.dim() == 2);
    CHECK(canonicalize(2, 6, s.rows()) == s); // idempotent
    // Reduced by hand: the pivot-0 row clears its coordinate 1.
    CHECK(s.row_strings() == std::vector<std::string>{"101110", "011110"});

    CHECK(canonicalize(2, 6, {}).dim() == 0);
    CHECK(from_strings(2, 6, {"000000"}).dim() == 0);
    CHECK_THROWS_AS(from_strings(2, 6, {"11000"}), Error);
}

TEST_CASE("canonical form is generator-invariant") {
    std::mt19937_64 rng(2024);
    RowOps ops(2, 5);
    for (int t = 0; t < 10000; ++t) {
        std::vector<uint64_t> gens;
        for (int g = 0; g < 3; ++g) gens.push_back(rng() & 0x1f);
        Subspace s = canonicalize(2, 5, gens);
        // Shuffle and recombine the generators; the span is unchanged.
        std::vector<uint64_t> mixed = gens;
        std::shuffle(mixed.begin(), mixed.end(), rng);
        if (mixed.size() >= 2) mixed[0] = ops.add(mixed[0], mixed[1]);
        mixed.push_back(ops.add(mixed[0], mixed[mixed.size() >= 2 ? 1 : 0]));
        CHECK(canonicalize(2, 5, mixed) == s);
    }
}

TEST_CASE("sum and intersection") {
    auto a = from_strings(2, 4, {"1000", "0100"});
    CHECK(sum(a, a) == a);
    CHECK(intersect(a, a) == a);

    // Distinct spread elements: G_1 + G_2 = E and G_1 cap G_2 = {0}.
    auto g1 = from_strings(2, 6, {"010000", "000011", "011110"});
    auto g2 = from_strings(2, 6, {"001000", "110001", "001111"});
    CHECK(sum(g1, g2) == Subspace::full(2, 6));
    CHECK(intersect(g1, g2).dim() == 0);

    // Modular law, exhaustive on F_2^4.
    const auto& L = SubspaceLattice::get(2, 4);
    for (uint32_t i = 0; i < L.size(); ++i)
        for (uint32_t j = 0; j < L.size(); ++j) {
            CHECK(L.dim(L.sum(i, j)) + L.dim(L.intersect(i, j)) == L.dim(i) + L.dim(j));
            // De Morgan under perp.
            CHECK(L.perp(L.sum(i, j)) == L.intersect(L.perp(i), L.perp(j)));
            CHECK(L.perp(L.intersect(i, j)) == L.sum(L.perp(i), L.perp(j)));
        }

    // Zassenhaus cross-check on random pairs over F_2^6 and F_3^3.
    std::mt19937_64 rng(99);
    for (int t = 0; t < 300; ++t) {
        std::vector<uint64_t> ga, gb;
        for (int g = 0; g < 3; ++g) {
            ga.push_back(rng() & 0x3f);
            gb.push_back(rng() & 0x3f);
        }
        Subspace A = canonicalize(2, 6, ga), B = canonicalize(2, 6, gb);
        CHECK(intersect(A, B) == zassenhaus_intersect(A, B));
    }
    RowOps ops3(3, 3);
    std::uniform_int_distribution<uint32_t> digit(0, 2);
    for (int t = 0; t < 200; ++t) {
        std::vector<uint64_t> ga, gb;
        for (int g = 0; g < 2; ++g) {
            uint64_t ra = 0, rb = 0;
            for (uint32_t i = 0; i < 3; ++i) {
                ra = ops3.set(ra, i, digit(rng));
                rb = ops3.set(rb, i, digit(rng));
            }
            ga.push_back(ra);
            gb.push_back(rb);
        }
        Subspace A = canonicalize(3, 3, ga), B = canonicalize(3, 3, gb);
        CHECK(intersect(A, B) == zassenhaus_intersect(A, B));
    }
}

TEST_CASE("orthogonal complement") {
    auto e1 = from_strings(2, 6, {"100000"});
    auto p = orthogonal_complement(e1);
    CHECK(p == from_strings(2, 6, {"010000", "001000", "000100", "000010", "000001"}));
    CHECK(orthogonal_complement(Subspace::zero(2, 6)) == Subspace::full(2, 6));
    CHECK(orthogonal_complement(Subspace::full(2, 6)).dim() == 0);

    const auto& L = SubspaceLattice::get(2, 4);
    for (uint32_t i = 0; i < L.size(); ++i) {
        CHECK(L.dim(L.perp(i)) == 4 - L.dim(i));
        CHECK(L.perp(L.perp(i)) == i);
    }
}

TEST_CASE("lattice enumeration counts match Gaussian binomials") {
    CHECK(gaussian_binomial(6, 1, 2) == 63);
    CHECK(gaussian_binomial(6, 3, 2) == 1395);
    const auto& L6 = SubspaceLattice::get(2, 6);
    CHECK(L6.of_dim(1).size() == 63);
    CHECK(L6.of_dim(3).size() == 1395);
    uint64_t total = 0;
    for (uint32_t k = 0; k <= 6; ++k) total += gaussian_binomial(6, k, 2);
    CHECK(L6.size() == total);
    CHECK(L6.size() == 2825);

    for (auto [q, n] : std::vector<std::pair<uint32_t, uint32_t>>{{2, 5}, {3, 3}, {3, 4}, {5, 2}}) {
        const auto& L = SubspaceLattice::get(q, n);
        for (uint32_t k = 0; k <= n; ++k) CHECK(L.of_dim(k).size() == gaussian_binomial(n, k, q));
        // Canonical order is strictly increasing.
        for (uint32_t i = 1; i < L.size(); ++i) CHECK(L.at(i - 1) < L.at(i));
    }

    CHECK_THROWS_AS(SubspaceLattice(2, 8), Error); // over the default cap
}

TEST_CASE("family operators") {
    const auto& L = SubspaceLattice::get(2, 4);
    std::vector<uint32_t> some;
    for (uint32_t i = 0; i < L.size(); i += 7) some.push_back(i);
    SubspaceFamily f(L, some);

    CHECK(family_opp(family_opp(f)) == f);
    CHECK(family_perp(family_perp(f)) == f);

    // max({A}) = min({A}) = {A}
    SubspaceFamily single(L, {L.of_dim(2)[0]});
    CHECK(family_max(single) == single);
    CHECK(family_min(single) == single);

    // upp/low sanity on a principal family.
    auto up = family_upp(single);
    for (uint32_t m : up.members()) CHECK(L.leq(single.members()[0], m));
    auto lo = family_low(single);
    CHECK(lo.size() == 1 + 3 + 1); // {0}, three lines, the plane itself

    // covers in a one-member family
    CHECK(covers_in_family(single, L.at(single.members()[0])).empty());
    CHECK_THROWS_AS(covers_in_family(single, L.at(L.zero_index())), Error);

    // max_in: {0} belongs to any family containing it
    SubspaceFamily withzero(L, {L.zero_index()});
    auto mz = max_in(L.at(L.zero_index()), withzero);
    CHECK(mz.size() == 1);
    CHECK(mz.members()[0] == L.zero_index());

    // For a downward-closed family: max(F) is inside F and F regenerates
    // from its maximal members.
    auto closed = family_low(f);
    auto mx = family_max(closed);
    for (uint32_t m : mx.members()) CHECK(closed.contains_index(m));
    CHECK(family_low(mx) == closed);
}

TEST_CASE("family operators match their defining scans") {
    // The operators run on lattice passes; compare against the literal
    // definitions on random families.
    std::mt19937_64 rng(314);
    for (auto [q, n] : std::vector<std::pair<uint32_t, uint32_t>>{{2, 4}, {2, 5}, {3, 3}}) {
        const auto& L = SubspaceLattice::get(q, n);
        for (int t = 0; t < 8; ++t) {
            std::vector<uint32_t> members;
            for (uint32_t i = 0; i < L.size(); ++i)
                if (rng() % 5 == 0) members.push_back(i);
            SubspaceFamily f(L, members);

            std::vector<uint32_t> upp, low, mx, mn;
            for (uint32_t x = 0; x < L.size(); ++x) {
                bool above = false, below = false;
                for (uint32_t a : f.members()) {
                    if (L.leq(a, x)) above = true;
                    if (L.leq(x, a)) below = true;
                }
                if (above) upp.push_back(x);
                if (below) low.push_back(x);
            }
            for (uint32_t x : f.members()) {
                bool maximal = true, minimal = true;
                for (uint32_t a : f.members()) {
                    if (a == x) continue;
                    if (L.leq(x, a)) maximal = false;
                    if (L.leq(a, x)) minimal = false;
                }
                if (maximal) mx.push_back(x);
                if (minimal) mn.push_back(x);
            }
            CHECK(family_upp(f) == SubspaceFamily(L, upp));
            CHECK(family_low(f) == SubspaceFamily(L, low));
            CHECK(family_max(f) == SubspaceFamily(L, mx));
            CHECK(family_min(f) == SubspaceFamily(L, mn));

            auto md = family_max_dim_inside(f);
            auto sd = family_min_dim_above(f);
            for (uint32_t x = 0; x < L.size(); ++x) {
                int best_in = -1, best_up = int(n) + 1;
                for (uint32_t a : f.members()) {
                    if (L.leq(a, x)) best_in = std::max(best_in, int(L.dim(a)));
                    if (L.leq(x, a)) best_up = std::min(best_up, int(L.dim(a)));
                }
                CHECK(md[x] == best_in);
                CHECK(sd[x] == best_up);
            }
        }
    }
}

TEST_CASE("interval") {
    const auto& L = SubspaceLattice::get(2, 4);
    Interval whole(L.at(L.zero_index()), L.at(L.full_index()));
    CHECK(whole.contains(L.at(L.lines()[0])));
    Interval up(L.at(L.lines()[0]), L.at(L.full_index()));
    CHECK(!up.contains(L.at(L.zero_index())));
    CHECK_THROWS_AS(Interval(L.at(L.full_index()), L.at(L.lines()[0])), Error);
}
