#pragma once

// Shared, lazily built test objects. The heavier matroids get constructed
// (and axiom-validated) once per test binary.

#include <random>

#include "qmat/fixtures.hpp"
#include "qmat/representable.hpp"

namespace testsupport {

inline const qmat::QMatroid& m6() {
    static const qmat::QMatroid m = qmat::fixtures::m6();
    return m;
}

inline const qmat::QMatroid& m6_dual() {
    static const qmat::QMatroid m = m6().dual();
    return m;
}

inline const qmat::QMatroid& u45() {
    static const qmat::QMatroid m = qmat::QMatroid::uniform(4, 5, 2);
    return m;
}

inline const qmat::SpreadRankInput& spread23() {
    static const qmat::SpreadRankInput in = qmat::make_spread_rank_input(2, 3, 2);
    return in;
}

inline const qmat::SpreadRankInput& spread32() {
    static const qmat::SpreadRankInput in = qmat::make_spread_rank_input(3, 2, 2);
    return in;
}

/// Deterministic representable matroids over F_2^n: G = [I_k | R] over
/// GF(2^3) with mt19937_64-seeded entries, so rank k is guaranteed.
inline qmat::QMatroid seeded_representable(uint32_t n, uint64_t seed) {
    std::mt19937_64 rng(seed);
    qmat::gf::ExtField F = qmat::gf::ext_field_build(2, 3);
    uint32_t k = 1 + uint32_t(rng() % n);
    std::vector<std::vector<uint32_t>> rows(k, std::vector<uint32_t>(n, 0));
    for (uint32_t j = 0; j < k; ++j) {
        rows[j][j] = 1;
        for (uint32_t i = k; i < n; ++i) rows[j][i] = uint32_t(rng() % F.size());
    }
    return qmat::matroid_from_matrix(qmat::GeneratorMatrix(std::move(F), std::move(rows)));
}

} // namespace testsupport
