#include "qmat/qmatroid.hpp"

#include <algorithm>

#include "qmat/axioms.hpp"

namespace qmat {

const char* family_kind_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::Independent: return "independent";
        case FamilyKind::Dependent: return "dependent";
        case FamilyKind::Basis: return "basis";
        case FamilyKind::Circuit: return "circuit";
        case FamilyKind::Spanning: return "spanning";
        case FamilyKind::Nonspanning: return "nonspanning";
        case FamilyKind::Flat: return "flat";
        case FamilyKind::Hyperplane: return "hyperplane";
        case FamilyKind::Open: return "open";
        case FamilyKind::Cocircuit: return "cocircuit";
        case FamilyKind::Coopen: return "coopen";
    }
    return "?";
}

std::optional<FamilyKind> family_kind_from_name(const std::string& name) {
    for (FamilyKind k : all_family_kinds)
        if (name == family_kind_name(k)) return k;
    return std::nullopt;
}

QMatroid QMatroid::from_validated(const SubspaceLattice& L, std::vector<uint8_t> table,
                                  std::string provenance) {
    return QMatroid(L, std::move(table), std::move(provenance));
}

QMatroid QMatroid::from_rank_table(const SubspaceLattice& L, std::vector<int> table,
                                   std::string provenance) {
    if (table.size() != L.size())
        throw Error(ErrorKind::NotTotal,
                    "rank table has " + std::to_string(table.size()) + " entries, lattice has " +
                        std::to_string(L.size()));
    auto report = axioms::validate_rank_table(L, table);
    if (!report.all_pass()) {
        const auto* v = report.first_failure();
        std::string msg = "rank axioms fail at (" + v->axiom + ")";
        if (v->witness) msg += " with witness " + axioms::witness_to_string(L, *v->witness);
        throw Error(ErrorKind::AxiomViolation, msg);
    }
    std::vector<uint8_t> r(table.size());
    for (size_t i = 0; i < table.size(); ++i) r[i] = uint8_t(table[i]);
    return QMatroid(L, std::move(r), std::move(provenance));
}

QMatroid QMatroid::uniform(uint32_t k, uint32_t n, uint32_t q) {
    if (k > n) throw Error(ErrorKind::BadRank, "uniform rank k exceeds ambient dimension");
    const auto& L = SubspaceLattice::get(q, n);
    std::vector<uint8_t> r(L.size());
    for (uint32_t i = 0; i < L.size(); ++i) r[i] = uint8_t(std::min(L.dim(i), k));
    return QMatroid(L, std::move(r),
                    "uniform(k=" + std::to_string(k) + ",n=" + std::to_string(n) + ",q=" + std::to_string(q) + ")");
}

uint32_t QMatroid::closure(uint32_t idx) const {
    const auto& L = *L_;
    std::vector<uint64_t> rows = L.at(idx).rows();
    const auto& lines = L.lines();
    for (uint32_t j = 0; j < lines.size(); ++j)
        if (rank_[L.sum_line(idx, j)] == rank_[idx]) rows.push_back(L.at(lines[j]).rows()[0]);
    return L.index_of(canonicalize(L.q(), L.n(), rows));
}

Subspace QMatroid::closure(const Subspace& a) const { return L_->at(closure(L_->index_of(a))); }

ClosureMap QMatroid::closure_map() const {
    std::lock_guard<std::mutex> lock(memo_->mu);
    if (!memo_->closure) {
        ClosureMap cm;
        cm.L = L_;
        cm.to.resize(L_->size());
        for (uint32_t i = 0; i < L_->size(); ++i) cm.to[i] = closure(i);
        memo_->closure = std::move(cm);
    }
    return *memo_->closure;
}

SubspaceFamily QMatroid::derive(FamilyKind kind) const {
    {
        std::lock_guard<std::mutex> lock(memo_->mu);
        auto it = memo_->families.find(kind);
        if (it != memo_->families.end()) return it->second;
    }
    SubspaceFamily fam = derive_uncached(kind);
    std::lock_guard<std::mutex> lock(memo_->mu);
    return memo_->families.emplace(kind, std::move(fam)).first->second;
}

SubspaceFamily QMatroid::derive_uncached(FamilyKind kind) const {
    const auto& L = *L_;
    std::vector<uint32_t> out;
    switch (kind) {
        case FamilyKind::Independent: {
            for (uint32_t i = 0; i < L.size(); ++i)
                if (rank_[i] == L.dim(i)) out.push_back(i);
            break;
        }
        case FamilyKind::Dependent: {
            for (uint32_t i = 0; i < L.size(); ++i)
                if (rank_[i] != L.dim(i)) out.push_back(i);
            break;
        }
        case FamilyKind::Basis:
            return family_max(derive(FamilyKind::Independent));
        case FamilyKind::Circuit:
            return family_min(derive(FamilyKind::Dependent));
        case FamilyKind::Spanning: {
            uint8_t rk = rank_[L.full_index()];
            for (uint32_t i = 0; i < L.size(); ++i)
                if (rank_[i] == rk) out.push_back(i);
            break;
        }
        case FamilyKind::Nonspanning: {
            uint8_t rk = rank_[L.full_index()];
            for (uint32_t i = 0; i < L.size(); ++i)
                if (rank_[i] != rk) out.push_back(i);
            break;
        }
        case FamilyKind::Flat: {
            for (uint32_t i = 0; i < L.size(); ++i) {
                bool flat = true;
                for (uint32_t j = 0; j < L.lines().size() && flat; ++j) {
                    uint32_t s = L.sum_line(i, j);
                    if (s != i && rank_[s] == rank_[i]) flat = false;
                }
                if (flat) out.push_back(i);
            }
            break;
        }
        case FamilyKind::Hyperplane: {
            auto flats = derive(FamilyKind::Flat);
            std::vector<uint32_t> proper;
            for (uint32_t f : flats.members())
                if (f != L.full_index()) proper.push_back(f);
            return family_max(SubspaceFamily(L, std::move(proper)));
        }
        case FamilyKind::Open: {
            // Sums of circuits, seeded with {0} (the empty sum).
            auto circuits = derive(FamilyKind::Circuit);
            std::vector<uint32_t> members = circuits.members();
            members.push_back(L.zero_index());
            std::sort(members.begin(), members.end());
            members.erase(std::unique(members.begin(), members.end()), members.end());
            std::vector<bool> in(L.size(), false);
            for (uint32_t m : members) in[m] = true;
            std::vector<uint32_t> work = members;
            while (!work.empty()) {
                std::vector<uint32_t> fresh;
                for (uint32_t a : work) {
                    for (uint32_t b : members) {
                        uint32_t s = L.sum(a, b);
                        if (!in[s]) {
                            in[s] = true;
                            fresh.push_back(s);
                        }
                    }
                }
                for (uint32_t f : fresh) members.push_back(f);
                work = std::move(fresh);
            }
            return SubspaceFamily(L, std::move(members));
        }
        case FamilyKind::Cocircuit:
            return family_perp(derive(FamilyKind::Hyperplane));
        case FamilyKind::Coopen:
            return family_perp(derive(FamilyKind::Flat));
    }
    return SubspaceFamily(L, std::move(out));
}

QMatroid QMatroid::dual() const {
    const auto& L = *L_;
    uint8_t rk = rank_[L.full_index()];
    std::vector<uint8_t> r(L.size());
    for (uint32_t i = 0; i < L.size(); ++i)
        r[i] = uint8_t(int(L.dim(i)) - int(rk) + int(rank_[L.perp(i)]));
    return QMatroid(L, std::move(r), "dual(" + provenance_ + ")");
}

} // namespace qmat
