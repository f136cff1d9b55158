#include "qmat/io.hpp"

#include <fstream>

namespace qmat::io {

json subspace_to_json(const Subspace& s) {
    json rows = json::array();
    for (const auto& r : s.row_strings()) rows.push_back(r);
    return rows;
}

Subspace subspace_from_json(uint32_t q, uint32_t n, const json& j) {
    if (!j.is_array()) throw Error(ErrorKind::ParseError, "subspace must be an array of row strings");
    RowOps ops(q, n);
    std::vector<uint64_t> rows;
    for (const auto& r : j) {
        if (!r.is_string()) throw Error(ErrorKind::ParseError, "subspace row must be a string");
        rows.push_back(ops.from_string(r.get<std::string>()));
    }
    return canonicalize(q, n, rows);
}

json family_to_json(const SubspaceFamily& f, const std::string& kind) {
    json j;
    j["q"] = f.q();
    j["n"] = f.n();
    j["kind"] = kind;
    json members = json::array();
    for (size_t i = 0; i < f.size(); ++i) members.push_back(subspace_to_json(f.subspace(i)));
    j["members"] = members;
    return j;
}

std::pair<SubspaceFamily, std::string> family_from_json(const json& j) {
    uint32_t q = j.at("q").get<uint32_t>();
    uint32_t n = j.at("n").get<uint32_t>();
    std::string kind = j.at("kind").get<std::string>();
    const auto& L = SubspaceLattice::get(q, n);
    std::vector<uint32_t> members;
    for (const auto& m : j.at("members")) members.push_back(L.index_of(subspace_from_json(q, n, m)));
    return {SubspaceFamily(L, std::move(members)), kind};
}

json matroid_to_json(const QMatroid& m) {
    const auto& L = m.lattice();
    json j;
    j["q"] = m.q();
    j["n"] = m.n();
    j["kind"] = "rank_table";
    j["provenance"] = m.provenance();
    json entries = json::array();
    for (uint32_t i = 0; i < L.size(); ++i) {
        json e;
        e["space"] = subspace_to_json(L.at(i));
        e["rank"] = m.rank(i);
        entries.push_back(std::move(e));
    }
    j["entries"] = entries;
    return j;
}

QMatroid matroid_from_json(const json& j) {
    uint32_t q = j.at("q").get<uint32_t>();
    uint32_t n = j.at("n").get<uint32_t>();
    if (j.at("kind").get<std::string>() != "rank_table")
        throw Error(ErrorKind::ParseError, "matroid file must have kind rank_table");
    const auto& L = SubspaceLattice::get(q, n);
    std::vector<int> table(L.size(), -1);
    std::vector<char> seen(L.size(), 0);
    for (const auto& e : j.at("entries")) {
        uint32_t idx = L.index_of(subspace_from_json(q, n, e.at("space")));
        table[idx] = e.at("rank").get<int>();
        seen[idx] = 1;
    }
    for (uint32_t i = 0; i < L.size(); ++i)
        if (!seen[i])
            throw Error(ErrorKind::NotTotal,
                        "rank table misses subspace [" + (L.at(i).dim() ? L.at(i).row_strings()[0] : std::string("0")) + " ...]");
    std::string prov = j.contains("provenance") ? j["provenance"].get<std::string>() : "rank_table";
    return QMatroid::from_rank_table(L, std::move(table), prov);
}

json closure_to_json(const ClosureMap& cl) {
    const auto& L = cl.lattice();
    json j;
    j["q"] = L.q();
    j["n"] = L.n();
    j["kind"] = "closure";
    json entries = json::array();
    for (uint32_t i = 0; i < L.size(); ++i) {
        json e;
        e["space"] = subspace_to_json(L.at(i));
        e["closure"] = subspace_to_json(L.at(cl.to[i]));
        entries.push_back(std::move(e));
    }
    j["entries"] = entries;
    return j;
}

ClosureMap closure_from_json(const json& j) {
    uint32_t q = j.at("q").get<uint32_t>();
    uint32_t n = j.at("n").get<uint32_t>();
    const auto& L = SubspaceLattice::get(q, n);
    ClosureMap cm;
    cm.L = &L;
    cm.to.assign(L.size(), UINT32_MAX);
    for (const auto& e : j.at("entries")) {
        uint32_t idx = L.index_of(subspace_from_json(q, n, e.at("space")));
        cm.to[idx] = L.index_of(subspace_from_json(q, n, e.at("closure")));
    }
    for (uint32_t i = 0; i < L.size(); ++i)
        if (cm.to[i] == UINT32_MAX) throw Error(ErrorKind::NotTotal, "closure map is not total");
    return cm;
}

json field_to_json(const gf::ExtField& f) {
    json j;
    j["q"] = f.q();
    j["m"] = f.m();
    j["modulus"] = f.modulus();
    return j;
}

gf::ExtField field_from_json(const json& j) {
    return gf::ExtField(j.at("q").get<uint32_t>(), j.at("m").get<uint32_t>(),
                        j.at("modulus").get<std::vector<uint32_t>>());
}

json report_to_json(const axioms::AxiomReport& rep, const SubspaceLattice& L) {
    json j;
    j["system"] = rep.system;
    if (!rep.variant.empty()) j["variant"] = rep.variant;
    if (rep.mode == axioms::CheckMode::Exhaustive) {
        j["mode"] = "exhaustive";
    } else {
        j["mode"] = "sampled";
        j["seed"] = rep.seed;
        j["count"] = rep.samples;
    }
    json verdicts = json::array();
    for (const auto& v : rep.verdicts) {
        json e;
        e["axiom"] = v.axiom;
        e["pass"] = v.pass;
        if (v.witness) {
            json w;
            for (const auto& [role, idx] : v.witness->parts) w[role] = subspace_to_json(L.at(idx));
            e["witness"] = w;
        }
        verdicts.push_back(std::move(e));
    }
    j["verdicts"] = verdicts;
    return j;
}

ObjectKind object_kind(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "rank_table") return ObjectKind::Matroid;
    if (kind == "closure") return ObjectKind::Closure;
    if (family_kind_from_name(kind)) return ObjectKind::Family;
    throw Error(ErrorKind::ParseError, "unknown object kind: " + kind);
}

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw Error(ErrorKind::ParseError, "bad JSON in " + path + ": " + e.what());
    }
    return j;
}

void save_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
    out << j.dump(2) << "\n";
}

} // namespace qmat::io
