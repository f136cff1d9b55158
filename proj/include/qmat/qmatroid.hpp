#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "qmat/subspace.hpp"

namespace qmat {

/// The derived defining families of a q-matroid.
enum class FamilyKind {
    Independent,
    Dependent,
    Basis,
    Circuit,
    Spanning,
    Nonspanning,
    Flat,
    Hyperplane,
    Open,
    Cocircuit,
    Coopen,
};

constexpr std::array<FamilyKind, 11> all_family_kinds{
    FamilyKind::Independent, FamilyKind::Dependent,   FamilyKind::Basis,
    FamilyKind::Circuit,     FamilyKind::Spanning,    FamilyKind::Nonspanning,
    FamilyKind::Flat,        FamilyKind::Hyperplane,  FamilyKind::Open,
    FamilyKind::Cocircuit,   FamilyKind::Coopen,
};

const char* family_kind_name(FamilyKind k);
std::optional<FamilyKind> family_kind_from_name(const std::string& name);

/// A total map L(E) -> L(E), indexed by lattice position. Carries no
/// invariants of its own; validity is the axiom checker's business.
struct ClosureMap {
    const SubspaceLattice* L = nullptr;
    std::vector<uint32_t> to;

    const SubspaceLattice& lattice() const { return *L; }
    uint32_t apply(uint32_t idx) const { return to[idx]; }
    bool operator==(const ClosureMap& o) const { return to == o.to; }
};

/// A q-matroid as a total rank table over L(F_q^n). Construction verifies
/// the rank axioms: the global (R1)-(R3) for small lattices, the equivalent
/// local (R1')-(R3') plus a fixed-seed sampled (R3) sweep for large ones.
class QMatroid {
public:
    static QMatroid from_rank_table(const SubspaceLattice& L, std::vector<int> table,
                                    std::string provenance = "rank_table");
    static QMatroid uniform(uint32_t k, uint32_t n, uint32_t q);
    /// Trusted constructor: skips axiom validation (internal derivations only).
    static QMatroid from_validated(const SubspaceLattice& L, std::vector<uint8_t> table,
                                   std::string provenance);

    const SubspaceLattice& lattice() const { return *L_; }
    uint32_t q() const { return L_->q(); }
    uint32_t n() const { return L_->n(); }
    const std::string& provenance() const { return provenance_; }

    int rank(uint32_t idx) const { return rank_[idx]; }
    int rank(const Subspace& a) const { return rank_[L_->index_of(a)]; }
    int rank_of_ground() const { return rank_[L_->full_index()]; }
    const std::vector<uint8_t>& rank_table() const { return rank_; }

    /// cl(A) = sum of all 1-dim x with r(A + x) = r(A).
    uint32_t closure(uint32_t idx) const;
    Subspace closure(const Subspace& a) const;
    ClosureMap closure_map() const;

    SubspaceFamily derive(FamilyKind kind) const;

    /// Dual q-matroid: r*(A) = dim(A) - r(E) + r(A^perp).
    QMatroid dual() const;

    bool operator==(const QMatroid& o) const { return rank_ == o.rank_; }

private:
    QMatroid(const SubspaceLattice& L, std::vector<uint8_t> table, std::string provenance)
        : L_(&L), rank_(std::move(table)), provenance_(std::move(provenance)),
          memo_(std::make_shared<Memo>()) {}

    // Derived families and the closure map are memoized write-once; copies of
    // a matroid share the cache.
    struct Memo {
        std::mutex mu;
        std::map<FamilyKind, SubspaceFamily> families;
        std::optional<ClosureMap> closure;
    };

    SubspaceFamily derive_uncached(FamilyKind kind) const;

    const SubspaceLattice* L_;
    std::vector<uint8_t> rank_;
    std::string provenance_;
    std::shared_ptr<Memo> memo_;
};

} // namespace qmat
