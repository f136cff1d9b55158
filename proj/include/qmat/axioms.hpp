#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qmat/qmatroid.hpp"
#include "qmat/subspace.hpp"

namespace qmat::axioms {

enum class CheckMode { Exhaustive, Sampled };

struct CheckOptions {
    CheckMode mode = CheckMode::Exhaustive;
    uint64_t seed = 1;
    uint64_t samples = 200000;
    int threads = 1;
};

/// Named subspaces of a violating tuple, in quantifier order. Re-evaluating
/// the axiom predicate on these spaces reproduces the failure.
struct Witness {
    std::vector<std::pair<std::string, uint32_t>> parts;
};

struct Verdict {
    std::string axiom;
    bool pass = true;
    std::optional<Witness> witness;
};

struct AxiomReport {
    std::string system;
    std::string variant;
    CheckMode mode = CheckMode::Exhaustive;
    uint64_t seed = 0;
    uint64_t samples = 0;

    std::vector<Verdict> verdicts;

    bool all_pass() const {
        for (const auto& v : verdicts)
            if (!v.pass) return false;
        return true;
    }
    const Verdict* first_failure() const {
        for (const auto& v : verdicts)
            if (!v.pass) return &v;
        return nullptr;
    }
    const Verdict* find(const std::string& axiom) const {
        for (const auto& v : verdicts)
            if (v.axiom == axiom) return &v;
        return nullptr;
    }
};

enum class RankVariant { Global, Local };
enum class I4Variant { I4, I4p, I4pp };
enum class B4Variant { B4, B4pp };
enum class H3Variant { H3, H3p };
enum class C3Variant { C3, C3p, C3bar };
enum class O3Variant { O3, O3bar };
enum class S4Variant { S4, S4pp };

std::string witness_to_string(const SubspaceLattice& L, const Witness& w);

/// (R1)(R2)(R3) or the local (R1')(R2')(R3') on an arbitrary integer table.
AxiomReport check_rank(const SubspaceLattice& L, const std::vector<int>& table,
                       RankVariant variant, const CheckOptions& opts = {});

/// Construction-time validation: full global axioms on small lattices, full
/// local axioms plus a fixed-seed sampled global (R3) sweep on large ones.
AxiomReport validate_rank_table(const SubspaceLattice& L, const std::vector<int>& table);

AxiomReport check_independence(const SubspaceFamily& f, I4Variant variant,
                               const CheckOptions& opts = {});
AxiomReport check_bases(const SubspaceFamily& f, B4Variant variant = B4Variant::B4,
                        const CheckOptions& opts = {});
AxiomReport check_flats(const SubspaceFamily& f, const CheckOptions& opts = {});
AxiomReport check_hyperplanes(const SubspaceFamily& f, H3Variant variant,
                              const CheckOptions& opts = {});
AxiomReport check_circuits(const SubspaceFamily& f, C3Variant variant,
                           const CheckOptions& opts = {});
AxiomReport check_dependence(const SubspaceFamily& f, const CheckOptions& opts = {});
AxiomReport check_nonspanning(const SubspaceFamily& f, const CheckOptions& opts = {});
AxiomReport check_closure(const ClosureMap& cl, const CheckOptions& opts = {});
AxiomReport check_open(const SubspaceFamily& f, O3Variant variant, const CheckOptions& opts = {});
AxiomReport check_spanning(const SubspaceFamily& f, S4Variant variant = S4Variant::S4,
                           const CheckOptions& opts = {});

} // namespace qmat::axioms
