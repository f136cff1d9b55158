#include "qmat/fixtures.hpp"

#include "qmat/representable.hpp"

namespace qmat::fixtures {

const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names{
        "m6", "m6-dual", "u45", "jp18-example10", "jp18-example10-circuits", "lo-prime"};
    return names;
}

QMatroid m6() { return matroid_from_matrix(theorem_matrix(2, 3, 2)); }

namespace {

/// The family of all subspaces of I = <1001, 0110> in F_2^4. Satisfies
/// (I1)-(I3) but not (I4).
SubspaceFamily jp18_family() {
    const auto& L = SubspaceLattice::get(2, 4);
    RowOps ops(2, 4);
    Subspace I = canonicalize(2, 4, {ops.from_string("1001"), ops.from_string("0110")});
    uint32_t Ii = L.index_of(I);
    std::vector<uint32_t> members;
    for (uint32_t i = 0; i < L.size(); ++i)
        if (L.leq(i, Ii)) members.push_back(i);
    return SubspaceFamily(L, std::move(members));
}

/// Its induced circuit family min(opp(.)): the twelve loops. Satisfies
/// (C1)(C2) and the weak third axiom but not (C3).
SubspaceFamily jp18_circuits() { return family_min(family_opp(jp18_family())); }

/// The open spaces of the dual of the spread example, minus the last one:
/// {0}, G_1^perp..G_8^perp, F_2^6. Satisfies (O1)(O2)(O3bar) but not (O3).
SubspaceFamily lo_prime() {
    Spread sp = build_spread(2, 3, 6);
    const auto& L = SubspaceLattice::get(2, 6);
    std::vector<uint32_t> members{L.zero_index(), L.full_index()};
    for (uint32_t i = 0; i < 8; ++i) members.push_back(L.perp(L.index_of(sp.elements[i])));
    return SubspaceFamily(L, std::move(members));
}

} // namespace

io::json fixture_json(const std::string& name) {
    if (name == "m6") return io::matroid_to_json(m6());
    if (name == "m6-dual") return io::matroid_to_json(m6().dual());
    if (name == "u45") return io::matroid_to_json(QMatroid::uniform(4, 5, 2));
    if (name == "jp18-example10") return io::family_to_json(jp18_family(), "independent");
    if (name == "jp18-example10-circuits") return io::family_to_json(jp18_circuits(), "circuit");
    if (name == "lo-prime") return io::family_to_json(lo_prime(), "open");
    throw Error(ErrorKind::UnknownFixture, name);
}

} // namespace qmat::fixtures
