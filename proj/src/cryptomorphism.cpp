#include "qmat/cryptomorphism.hpp"

#include <algorithm>
#include <map>

namespace qmat::crypt {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::AxiomViolation, what);
}

void require_report(const axioms::AxiomReport& rep, const std::string& what) {
    if (!rep.all_pass()) {
        const auto* v = rep.first_failure();
        throw Error(ErrorKind::AxiomViolation, what + ": (" + v->axiom + ") fails");
    }
}

} // namespace

QMatroid independents_to_rank(const SubspaceFamily& indep, bool validate) {
    const auto& L = indep.lattice();
    if (validate)
        require_report(axioms::check_independence(indep, axioms::I4Variant::I4),
                       "independents_to_rank input");
    require(!indep.empty(), "independents_to_rank: empty family");
    std::vector<int> table = family_max_dim_inside(indep);
    return QMatroid::from_rank_table(L, std::move(table), "derived(independent->rank)");
}

SubspaceFamily closure_to_independents(const ClosureMap& cl, bool validate) {
    const auto& L = cl.lattice();
    if (validate) require_report(axioms::check_closure(cl), "closure_to_independents input");
    const auto& lines = L.lines();
    std::vector<uint32_t> out;
    for (uint32_t i = 0; i < L.size(); ++i) {
        uint32_t d = L.dim(i);
        bool indep = true;
        if (d > 0) {
            // Codimension-1 subspaces of i: meets with lattice hyperplanes.
            uint32_t pi = L.perp(i);
            for (uint32_t lx = 0; lx < lines.size() && indep; ++lx) {
                uint32_t a = L.perp(L.sum_line(pi, lx));
                if (L.dim(a) + 1 == d && cl.to[a] == cl.to[i]) indep = false;
            }
        }
        if (indep) out.push_back(i);
    }
    return SubspaceFamily(L, std::move(out));
}

QMatroid closure_to_rank(const ClosureMap& cl, bool validate) {
    const auto& L = cl.lattice();
    if (validate) require_report(axioms::check_closure(cl), "closure_to_rank input");
    std::vector<int> table(L.size(), 0);
    for (uint32_t a = 0; a < L.size(); ++a) {
        int r = -1;
        for (uint32_t d = 0; d <= L.dim(a) && r < 0; ++d) {
            for (uint32_t i : L.of_dim(d))
                if (L.leq(i, a) && cl.to[i] == cl.to[a]) { r = int(d); break; }
        }
        table[a] = r; // always found at d = dim(a)
    }
    return QMatroid::from_rank_table(L, std::move(table), "derived(closure->rank)");
}

SubspaceFamily closure_to_flats(const ClosureMap& cl, bool validate) {
    const auto& L = cl.lattice();
    if (validate) require_report(axioms::check_closure(cl), "closure_to_flats input");
    std::vector<uint32_t> out;
    for (uint32_t i = 0; i < L.size(); ++i)
        if (cl.to[i] == i) out.push_back(i);
    return SubspaceFamily(L, std::move(out));
}

ClosureMap flats_to_closure(const SubspaceFamily& flats, bool validate) {
    const auto& L = flats.lattice();
    if (validate) require_report(axioms::check_flats(flats), "flats_to_closure input");
    require(flats.contains_index(L.full_index()), "flats_to_closure: family does not contain E");
    // The flats above A (other than A itself) are exactly the flats above
    // the one-step extensions of A, so the intersection map folds downward
    // over the dimensions.
    ClosureMap cm;
    cm.L = &L;
    cm.to.assign(L.size(), L.full_index());
    const uint32_t nl = uint32_t(L.lines().size());
    for (int d = int(L.n()); d >= 0; --d) {
        for (uint32_t a : L.of_dim(uint32_t(d))) {
            if (flats.contains_index(a)) {
                cm.to[a] = a;
                continue;
            }
            uint32_t acc = L.full_index();
            for (uint32_t j = 0; j < nl && acc != a; ++j) {
                uint32_t s = L.sum_line(a, j);
                if (s != a) acc = L.intersect(acc, cm.to[s]);
            }
            cm.to[a] = acc;
        }
    }
    return cm;
}

QMatroid flats_to_rank(const SubspaceFamily& flats, bool validate) {
    const auto& L = flats.lattice();
    if (validate) require_report(axioms::check_flats(flats), "flats_to_rank input");
    ClosureMap cl = flats_to_closure(flats, false);
    // Chain length from cl({0}) to cl(A) by repeated cover steps; any maximal
    // chain has the same length (Jordan-Dedekind), the canonical-least
    // minimal-dimension step keeps runs deterministic.
    std::vector<int> table(L.size(), 0);
    std::map<std::pair<uint32_t, uint32_t>, int> chain_memo;
    auto chain_len = [&](uint32_t from, uint32_t to) {
        auto key = std::make_pair(from, to);
        auto it = chain_memo.find(key);
        if (it != chain_memo.end()) return it->second;
        int steps = 0;
        uint32_t cur = from;
        while (cur != to) {
            uint32_t best = UINT32_MAX;
            uint32_t best_dim = UINT32_MAX;
            for (uint32_t f : flats.members()) {
                if (f == cur || !L.leq(cur, f) || !L.leq(f, to)) continue;
                if (L.dim(f) < best_dim) { best_dim = L.dim(f); best = f; }
            }
            require(best != UINT32_MAX, "flats_to_rank: no cover step available");
            cur = best;
            ++steps;
        }
        chain_memo.emplace(key, steps);
        return steps;
    };
    uint32_t bottom = cl.to[L.zero_index()];
    for (uint32_t a = 0; a < L.size(); ++a) table[a] = chain_len(bottom, cl.to[a]);
    return QMatroid::from_rank_table(L, std::move(table), "derived(flat->rank)");
}

SubspaceFamily flats_to_hyperplanes(const SubspaceFamily& flats, bool validate) {
    const auto& L = flats.lattice();
    if (validate) require_report(axioms::check_flats(flats), "flats_to_hyperplanes input");
    std::vector<uint32_t> proper;
    for (uint32_t f : flats.members())
        if (f != L.full_index()) proper.push_back(f);
    return family_max(SubspaceFamily(L, std::move(proper)));
}

SubspaceFamily hyperplanes_to_flats(const SubspaceFamily& hyps, bool validate) {
    const auto& L = hyps.lattice();
    if (validate)
        require_report(axioms::check_hyperplanes(hyps, axioms::H3Variant::H3),
                       "hyperplanes_to_flats input");
    // Iterated meets from {E}; reaches every intersection of a subcollection
    // without walking the power set.
    std::vector<char> in(L.size(), 0);
    std::vector<uint32_t> members{L.full_index()};
    in[L.full_index()] = 1;
    std::vector<uint32_t> work = members;
    while (!work.empty()) {
        std::vector<uint32_t> fresh;
        for (uint32_t f : work) {
            for (uint32_t h : hyps.members()) {
                uint32_t meet = L.intersect(f, h);
                if (!in[meet]) {
                    in[meet] = 1;
                    fresh.push_back(meet);
                }
            }
        }
        for (uint32_t f : fresh) members.push_back(f);
        work = std::move(fresh);
    }
    return SubspaceFamily(L, std::move(members));
}

SubspaceFamily cocircuits_from_hyperplanes(const SubspaceFamily& hyps) { return family_perp(hyps); }
SubspaceFamily hyperplanes_from_cocircuits(const SubspaceFamily& cocircuits) {
    return family_perp(cocircuits);
}
SubspaceFamily coopens_from_flats(const SubspaceFamily& flats) { return family_perp(flats); }
SubspaceFamily flats_from_coopens(const SubspaceFamily& coopens) { return family_perp(coopens); }

SubspaceFamily spanning_via_dual(const QMatroid& m) {
    return family_perp(m.dual().derive(FamilyKind::Independent));
}

SubspaceFamily nonspanning_via_dual(const QMatroid& m) {
    return family_perp(m.dual().derive(FamilyKind::Dependent));
}

SubspaceFamily dependents_from_independents(const SubspaceFamily& f) { return family_opp(f); }
SubspaceFamily independents_from_dependents(const SubspaceFamily& f) { return family_opp(f); }
SubspaceFamily circuits_from_dependents(const SubspaceFamily& f) { return family_min(f); }
SubspaceFamily dependents_from_circuits(const SubspaceFamily& f) { return family_upp(f); }
SubspaceFamily bases_from_independents(const SubspaceFamily& f) { return family_max(f); }
SubspaceFamily independents_from_bases(const SubspaceFamily& f) { return family_low(f); }
SubspaceFamily spanning_from_bases(const SubspaceFamily& f) { return family_upp(f); }
SubspaceFamily bases_from_spanning(const SubspaceFamily& f) { return family_min(f); }
SubspaceFamily nonspanning_from_spanning(const SubspaceFamily& f) { return family_opp(f); }
SubspaceFamily spanning_from_nonspanning(const SubspaceFamily& f) { return family_opp(f); }
SubspaceFamily hyperplanes_from_nonspanning(const SubspaceFamily& f) { return family_max(f); }
SubspaceFamily nonspanning_from_hyperplanes(const SubspaceFamily& f) { return family_low(f); }

bool is_system_name(const std::string& name) {
    if (name == "rank" || name == "closure") return true;
    return family_kind_from_name(name).has_value();
}

std::string normalize_system_name(const std::string& name) {
    static const std::map<std::string, std::string> aliases{
        {"independents", "independent"}, {"independence", "independent"},
        {"dependents", "dependent"},     {"dependence", "dependent"},
        {"bases", "basis"},              {"circuits", "circuit"},
        {"flats", "flat"},               {"hyperplanes", "hyperplane"},
        {"opens", "open"},               {"cocircuits", "cocircuit"},
        {"coopens", "coopen"},           {"non-spanning", "nonspanning"},
    };
    auto it = aliases.find(name);
    return it == aliases.end() ? name : it->second;
}

const std::vector<std::pair<std::string, std::string>>& converter_edges() {
    static const std::vector<std::pair<std::string, std::string>> edges = [] {
        std::vector<std::pair<std::string, std::string>> e;
        e.emplace_back("rank", "closure");
        for (FamilyKind k : all_family_kinds) e.emplace_back("rank", family_kind_name(k));
        e.emplace_back("closure", "rank");
        e.emplace_back("closure", "independent");
        e.emplace_back("closure", "flat");
        e.emplace_back("independent", "rank");
        e.emplace_back("independent", "dependent");
        e.emplace_back("independent", "basis");
        e.emplace_back("dependent", "independent");
        e.emplace_back("dependent", "circuit");
        e.emplace_back("circuit", "dependent");
        e.emplace_back("basis", "independent");
        e.emplace_back("basis", "spanning");
        e.emplace_back("spanning", "basis");
        e.emplace_back("spanning", "nonspanning");
        e.emplace_back("nonspanning", "spanning");
        e.emplace_back("nonspanning", "hyperplane");
        e.emplace_back("hyperplane", "nonspanning");
        e.emplace_back("hyperplane", "flat");
        e.emplace_back("hyperplane", "cocircuit");
        e.emplace_back("cocircuit", "hyperplane");
        e.emplace_back("flat", "closure");
        e.emplace_back("flat", "rank");
        e.emplace_back("flat", "hyperplane");
        e.emplace_back("flat", "coopen");
        e.emplace_back("coopen", "flat");
        return e;
    }();
    return edges;
}

bool has_edge(const std::string& from, const std::string& to) {
    for (const auto& [f, t] : converter_edges())
        if (f == from && t == to) return true;
    return false;
}

SystemObject native_object(const QMatroid& m, const std::string& system) {
    if (system == "rank") return m;
    if (system == "closure") return m.closure_map();
    auto kind = family_kind_from_name(system);
    if (!kind) throw Error(ErrorKind::PathEdgeMissing, "unknown system name: " + system);
    return m.derive(*kind);
}

SystemObject apply_edge(const SystemObject& obj, const std::string& from, const std::string& to) {
    if (!has_edge(from, to))
        throw Error(ErrorKind::PathEdgeMissing, "no converter " + from + " -> " + to);
    if (from == "rank") {
        const auto& m = std::get<QMatroid>(obj);
        if (to == "closure") return m.closure_map();
        return m.derive(*family_kind_from_name(to));
    }
    if (from == "closure") {
        const auto& cl = std::get<ClosureMap>(obj);
        if (to == "rank") return closure_to_rank(cl);
        if (to == "independent") return closure_to_independents(cl);
        return closure_to_flats(cl);
    }
    const auto& f = std::get<SubspaceFamily>(obj);
    if (from == "independent") {
        if (to == "rank") return independents_to_rank(f);
        if (to == "dependent") return dependents_from_independents(f);
        return bases_from_independents(f);
    }
    if (from == "dependent")
        return to == "independent" ? independents_from_dependents(f) : circuits_from_dependents(f);
    if (from == "circuit") return dependents_from_circuits(f);
    if (from == "basis")
        return to == "independent" ? independents_from_bases(f) : spanning_from_bases(f);
    if (from == "spanning")
        return to == "basis" ? bases_from_spanning(f) : nonspanning_from_spanning(f);
    if (from == "nonspanning")
        return to == "spanning" ? spanning_from_nonspanning(f) : hyperplanes_from_nonspanning(f);
    if (from == "hyperplane") {
        if (to == "nonspanning") return nonspanning_from_hyperplanes(f);
        if (to == "flat") return hyperplanes_to_flats(f);
        return cocircuits_from_hyperplanes(f);
    }
    if (from == "cocircuit") return hyperplanes_from_cocircuits(f);
    if (from == "flat") {
        if (to == "closure") return flats_to_closure(f);
        if (to == "rank") return flats_to_rank(f);
        if (to == "hyperplane") return flats_to_hyperplanes(f);
        return coopens_from_flats(f);
    }
    if (from == "coopen") return flats_from_coopens(f);
    throw Error(ErrorKind::PathEdgeMissing, "no converter " + from + " -> " + to);
}

namespace {

bool objects_equal(const SystemObject& a, const SystemObject& b) {
    if (a.index() != b.index()) return false;
    if (std::holds_alternative<QMatroid>(a))
        return std::get<QMatroid>(a) == std::get<QMatroid>(b);
    if (std::holds_alternative<ClosureMap>(a))
        return std::get<ClosureMap>(a) == std::get<ClosureMap>(b);
    return std::get<SubspaceFamily>(a) == std::get<SubspaceFamily>(b);
}

std::vector<uint32_t> object_key(const SystemObject& o) {
    if (std::holds_alternative<QMatroid>(o)) {
        const auto& t = std::get<QMatroid>(o).rank_table();
        return std::vector<uint32_t>(t.begin(), t.end());
    }
    if (std::holds_alternative<ClosureMap>(o)) return std::get<ClosureMap>(o).to;
    return std::get<SubspaceFamily>(o).members();
}

void check_path(const std::vector<std::string>& path) {
    for (const auto& name : path)
        if (!is_system_name(name))
            throw Error(ErrorKind::PathEdgeMissing, "unknown system name: " + name);
    for (size_t i = 0; i + 1 < path.size(); ++i)
        if (!has_edge(path[i], path[i + 1]))
            throw Error(ErrorKind::PathEdgeMissing, "no converter " + path[i] + " -> " + path[i + 1]);
    if (path.size() > 1 && path.front() != path.back())
        throw Error(ErrorKind::PathEdgeMissing, "path does not return to its start");
}

} // namespace

RoundtripResult roundtrip_verify(const QMatroid& m, const std::vector<std::string>& path) {
    RoundtripResult res;
    if (path.empty()) return res;
    check_path(path);
    SystemObject start = native_object(m, path[0]);
    SystemObject cur = start;
    for (size_t i = 0; i + 1 < path.size(); ++i) cur = apply_edge(cur, path[i], path[i + 1]);
    if (!objects_equal(start, cur)) {
        res.ok = false;
        res.divergence = "object of system '" + path[0] + "' differs after the cycle";
    }
    return res;
}

std::vector<RoundtripResult> roundtrip_verify_all(
    const QMatroid& m, const std::vector<std::vector<std::string>>& paths) {
    std::map<std::tuple<std::string, std::string, std::vector<uint32_t>>, SystemObject> memo;
    auto apply_cached = [&](const SystemObject& obj, const std::string& from,
                            const std::string& to) -> const SystemObject& {
        auto key = std::make_tuple(from, to, object_key(obj));
        auto it = memo.find(key);
        if (it == memo.end()) it = memo.emplace(std::move(key), apply_edge(obj, from, to)).first;
        return it->second;
    };

    std::vector<RoundtripResult> out;
    out.reserve(paths.size());
    for (const auto& path : paths) {
        RoundtripResult res;
        if (!path.empty()) {
            check_path(path);
            SystemObject start = native_object(m, path[0]);
            SystemObject cur = start;
            for (size_t i = 0; i + 1 < path.size(); ++i) cur = apply_cached(cur, path[i], path[i + 1]);
            if (!objects_equal(start, cur)) {
                res.ok = false;
                res.divergence = "object of system '" + path[0] + "' differs after the cycle";
            }
        }
        out.push_back(std::move(res));
    }
    return out;
}

} // namespace qmat::crypt
