#include <doctest.h>

#include <algorithm>

#include "qmat/axioms.hpp"
#include "qmat/cryptomorphism.hpp"
#include "qmat/representable.hpp"
#include "support.hpp"

using namespace qmat;

namespace {

bool crypt_roundtrip_smoke(const QMatroid& m) {
    return crypt::roundtrip_verify(m, {"rank", "closure", "rank"}).ok &&
           crypt::roundtrip_verify(m, {"rank", "flat", "rank"}).ok &&
           crypt::roundtrip_verify(m, {"independent", "dependent", "independent"}).ok;
}

} // namespace

TEST_CASE("from_rank_table accepts the free matroid and rejects bad tables") {
    const auto& L = SubspaceLattice::get(2, 3);
    std::vector<int> free_table(L.size());
    for (uint32_t i = 0; i < L.size(); ++i) free_table[i] = int(L.dim(i));
    QMatroid free = QMatroid::from_rank_table(L, free_table);
    CHECK(free.derive(FamilyKind::Independent).size() == L.size());
    CHECK(free.derive(FamilyKind::Circuit).empty());

    // Monotonicity violation: rank-3 hyperplanes above a rank-2 ground space.
    const auto& L4 = SubspaceLattice::get(2, 4);
    std::vector<int> bad(L4.size());
    for (uint32_t i = 0; i < L4.size(); ++i) bad[i] = int(L4.dim(i));
    bad[L4.full_index()] = 2;
    CHECK_THROWS_AS(QMatroid::from_rank_table(L4, bad), Error);

    std::vector<int> short_table(L.size() - 1, 0);
    CHECK_THROWS_AS(QMatroid::from_rank_table(L, short_table), Error);
}

TEST_CASE("uniform matroids") {
    CHECK_THROWS_AS(QMatroid::uniform(6, 5, 2), Error);

    // U_{4,5}: all 3-subspaces are hyperplanes.
    const auto& m = testsupport::u45();
    auto hyps = m.derive(FamilyKind::Hyperplane);
    const auto& L = m.lattice();
    CHECK(hyps.size() == L.of_dim(3).size());
    for (uint32_t h : hyps.members()) CHECK(L.dim(h) == 3);

    // U_{n,n} is free.
    QMatroid freem = QMatroid::uniform(3, 3, 2);
    CHECK(freem.derive(FamilyKind::Independent).size() == freem.lattice().size());

    // U_{0,n}: circuits are exactly the 1-dimensional spaces.
    QMatroid zerom = QMatroid::uniform(0, 3, 2);
    auto circ = zerom.derive(FamilyKind::Circuit);
    CHECK(circ.size() == zerom.lattice().lines().size());
    auto dep = zerom.derive(FamilyKind::Dependent);
    CHECK(dep.size() == zerom.lattice().size() - 1);
}

TEST_CASE("m6 rank values match the worked example") {
    const auto& m = testsupport::m6();
    const auto& L = m.lattice();
    Spread spr = build_spread(2, 3, 6);

    CHECK(m.rank(L.zero_index()) == 0);
    CHECK(m.rank_of_ground() == 2);

    // All 2-dim subspaces of spread elements have rank 1; the rest rank 2.
    size_t d_count = 0;
    for (uint32_t i : L.of_dim(2)) {
        bool in_spread = false;
        for (const auto& g : spr.elements)
            if (contains(g, L.at(i))) in_spread = true;
        if (in_spread) {
            ++d_count;
            CHECK(m.rank(i) == 1);
        } else {
            CHECK(m.rank(i) == 2);
        }
    }
    CHECK(d_count == 63);

    for (uint32_t i : L.of_dim(4)) CHECK(m.rank(i) == 2);
    for (const auto& g : spr.elements) CHECK(m.rank(g) == 1);
}

TEST_CASE("m6 closure matches the worked example") {
    const auto& m = testsupport::m6();
    const auto& L = m.lattice();
    Spread spr = build_spread(2, 3, 6);

    // cl(x) = the spread element containing x, for 1-dim x.
    for (uint32_t x : L.lines()) {
        uint32_t gi = spread_index_of(spr, L.at(x));
        CHECK(m.closure(x) == L.index_of(spr.elements[gi - 1]));
    }
    // 2-dim T: cl(T) = G_i if T inside G_i, else E.
    for (uint32_t t : L.of_dim(2)) {
        if (m.rank(t) == 1) {
            uint32_t gi = spread_index_of(spr, L.at(t));
            CHECK(m.closure(t) == L.index_of(spr.elements[gi - 1]));
        } else {
            CHECK(m.closure(t) == L.full_index());
        }
    }
    // Free matroid: every space closed.
    QMatroid freem = QMatroid::uniform(3, 3, 2);
    for (uint32_t i = 0; i < freem.lattice().size(); ++i) CHECK(freem.closure(i) == i);
}

TEST_CASE("m6 derived families match the worked example") {
    const auto& m = testsupport::m6();
    const auto& L = m.lattice();
    Spread spr = build_spread(2, 3, 6);
    std::vector<uint32_t> spread_idx;
    for (const auto& g : spr.elements) spread_idx.push_back(L.index_of(g));
    std::sort(spread_idx.begin(), spread_idx.end());

    auto flats = m.derive(FamilyKind::Flat);
    std::vector<uint32_t> expect_flats = spread_idx;
    expect_flats.push_back(L.zero_index());
    expect_flats.push_back(L.full_index());
    CHECK(flats == SubspaceFamily(L, expect_flats));

    auto hyps = m.derive(FamilyKind::Hyperplane);
    CHECK(hyps == SubspaceFamily(L, spread_idx));

    // Bases: all 2-dim spaces except the 63 D's.
    auto bases = m.derive(FamilyKind::Basis);
    CHECK(bases.size() == 651 - 63);
    for (uint32_t b : bases.members()) {
        CHECK(L.dim(b) == 2);
        CHECK(m.rank(b) == 2);
    }

    // Open spaces: cross-check the sums-of-circuits fixpoint against the
    // dual route perp(flats(M*)).
    auto opens = m.derive(FamilyKind::Open);
    auto via_dual = family_perp(testsupport::m6_dual().derive(FamilyKind::Flat));
    CHECK(opens == via_dual);
    size_t open4 = 0, open5 = 0;
    for (uint32_t o : opens.members()) {
        if (L.dim(o) == 4) ++open4;
        if (L.dim(o) == 5) ++open5;
    }
    CHECK(open5 == 63);       // every 5-dim space is open
    CHECK(open4 == 651 - 63); // the 63 spaces containing a spread element are not

    // Spanning / non-spanning rows.
    auto span = m.derive(FamilyKind::Spanning);
    auto nonspan = m.derive(FamilyKind::Nonspanning);
    CHECK(span.size() + nonspan.size() == L.size());
    CHECK(nonspan.size() == 1 + 63 + 63 + 9);
}

TEST_CASE("duality") {
    const auto& m = testsupport::m6();
    const auto& md = testsupport::m6_dual();
    const auto& L = m.lattice();

    CHECK(md.rank_of_ground() == 4); // 6 - 2 + 0

    // r** = r pointwise.
    QMatroid mdd = md.dual();
    for (uint32_t i = 0; i < L.size(); ++i) CHECK(mdd.rank(i) == m.rank(i));

    // bases(M*) = perp(bases(M)).
    CHECK(md.derive(FamilyKind::Basis) == family_perp(m.derive(FamilyKind::Basis)));

    // circuits(M) = cocircuits(M*), opens(M*) = perp(flats(M)).
    CHECK(m.derive(FamilyKind::Circuit) == md.derive(FamilyKind::Cocircuit));
    CHECK(md.derive(FamilyKind::Open) == family_perp(m.derive(FamilyKind::Flat)));

    // U_{k,n}* = U_{n-k,n}, pointwise, for n <= 5.
    for (uint32_t n = 1; n <= 5; ++n)
        for (uint32_t k = 0; k <= n; ++k) {
            QMatroid u = QMatroid::uniform(k, n, 2);
            QMatroid expect = QMatroid::uniform(n - k, n, 2);
            CHECK(u.dual() == expect);
        }
}

TEST_CASE("figure-2 arrows agree with direct derivation") {
    std::vector<QMatroid> ms{testsupport::m6(), QMatroid::uniform(2, 4, 2),
                             QMatroid::uniform(3, 4, 2), testsupport::seeded_representable(4, 42)};
    for (const auto& m : ms) {
        auto ind = m.derive(FamilyKind::Independent);
        auto dep = m.derive(FamilyKind::Dependent);
        auto bas = m.derive(FamilyKind::Basis);
        auto cir = m.derive(FamilyKind::Circuit);
        auto spn = m.derive(FamilyKind::Spanning);
        auto nsp = m.derive(FamilyKind::Nonspanning);
        auto hyp = m.derive(FamilyKind::Hyperplane);

        CHECK(dep == family_opp(ind));
        CHECK(ind == family_opp(dep));
        CHECK(cir == family_min(dep));
        CHECK(dep == family_upp(cir));
        CHECK(bas == family_max(ind));
        CHECK(ind == family_low(bas));
        CHECK(spn == family_upp(bas));
        CHECK(bas == family_min(spn));
        CHECK(nsp == family_opp(spn));
        CHECK(hyp == family_max(nsp));
        CHECK(nsp == family_low(hyp));
    }
}

TEST_CASE("covers in the flat family of m6") {
    const auto& m = testsupport::m6();
    const auto& L = m.lattice();
    auto flats = m.derive(FamilyKind::Flat);

    // Covers of {0} in the flats are exactly the nine spread elements.
    auto cov0 = covers_in_family(flats, L.at(L.zero_index()));
    CHECK(cov0.size() == 9);
    for (uint32_t c : cov0.members()) CHECK(L.dim(c) == 3);

    // The cover of a spread element is E.
    Spread spr = build_spread(2, 3, 6);
    auto covg = covers_in_family(flats, spr.elements[0]);
    CHECK(covg.size() == 1);
    CHECK(covg.members()[0] == L.full_index());
    CHECK(is_cover(flats, spr.elements[0], L.at(L.full_index())));
    CHECK(!is_cover(flats, L.at(L.zero_index()), L.at(L.full_index())));

    // max_in examples: inside a D, the maximal independents are its lines.
    auto ind = m.derive(FamilyKind::Independent);
    uint32_t some_d = 0;
    for (uint32_t i : L.of_dim(2))
        if (m.rank(i) == 1) { some_d = i; break; }
    auto mi = max_in(L.at(some_d), ind);
    CHECK(mi.size() == 3);
    for (uint32_t x : mi.members()) CHECK(L.dim(x) == 1);

    // max_in(E, independents) = the 588 bases.
    auto me = max_in(L.at(L.full_index()), ind);
    CHECK(me.size() == 588);
}

TEST_CASE("closure map of a matroid satisfies the closure axioms") {
    auto rep = axioms::check_closure(QMatroid::uniform(2, 4, 2).closure_map());
    CHECK(rep.all_pass());
    auto rep6 = axioms::check_closure(testsupport::m6().closure_map());
    CHECK(rep6.all_pass());
}

TEST_CASE("q = 3 matroids work end to end") {
    // Uniform over F_3^3: full axiom suite plus duality.
    for (uint32_t k = 0; k <= 3; ++k) {
        QMatroid u = QMatroid::uniform(k, 3, 3);
        CHECK(axioms::check_independence(u.derive(FamilyKind::Independent),
                                         axioms::I4Variant::I4)
                  .all_pass());
        CHECK(axioms::check_flats(u.derive(FamilyKind::Flat)).all_pass());
        CHECK(axioms::check_circuits(u.derive(FamilyKind::Circuit), axioms::C3Variant::C3)
                  .all_pass());
        CHECK(axioms::check_closure(u.closure_map()).all_pass());
        CHECK(u.dual() == QMatroid::uniform(3 - k, 3, 3));
    }

    // A representable matroid over GF(9) on F_3^3.
    gf::ExtField F9 = gf::ext_field_build(3, 2);
    std::vector<std::vector<uint32_t>> rows{{1, 0, F9.alpha()}, {0, 1, F9.alpha_pow(3)}};
    QMatroid m = matroid_from_matrix(GeneratorMatrix(F9, rows));
    CHECK(m.rank_of_ground() == 2);
    CHECK(axioms::check_dependence(m.derive(FamilyKind::Dependent)).all_pass());
    CHECK(axioms::check_spanning(m.derive(FamilyKind::Spanning), axioms::S4Variant::S4)
              .all_pass());
    CHECK(crypt_roundtrip_smoke(m));
}
