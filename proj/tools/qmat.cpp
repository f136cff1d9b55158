#include <CLI11.hpp>

#include <iostream>

#include "qmat/axioms.hpp"
#include "qmat/classify.hpp"
#include "qmat/cryptomorphism.hpp"
#include "qmat/fixtures.hpp"
#include "qmat/io.hpp"
#include "qmat/representable.hpp"

using namespace qmat;
using io::json;

namespace {

struct CommonFlags {
    std::string mode = "exhaustive";
    uint64_t seed = 1;
    uint64_t samples = 200000;
    int threads = 1;
    bool exhaustive = false;

    axioms::CheckOptions options() const {
        axioms::CheckOptions o;
        o.mode = mode == "sampled" ? axioms::CheckMode::Sampled : axioms::CheckMode::Exhaustive;
        o.seed = seed;
        o.samples = samples;
        o.threads = threads;
        return o;
    }
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--mode", flags.mode, "exhaustive or sampled")
        ->check(CLI::IsMember({"exhaustive", "sampled"}));
    cmd->add_option("--seed", flags.seed, "seed for sampled mode");
    cmd->add_option("--samples", flags.samples, "tuple count for sampled mode");
    cmd->add_option("--threads", flags.threads, "worker cap for quantifier sweeps");
    cmd->add_flag("--exhaustive", flags.exhaustive,
                  "force the quartic fourth axioms instead of their equivalents");
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty())
        std::cout << j.dump(2) << "\n";
    else
        io::save_file(out_path, j);
}

uint32_t parse_ext_elem(const gf::ExtField& F, const std::string& s) {
    if (s == "0") return 0;
    if (s[0] == 'a') {
        std::string e = s.substr(1);
        if (!e.empty() && e[0] == '^') e = e.substr(1);
        uint64_t exp = e.empty() ? 1 : std::stoull(e);
        return F.alpha_pow(exp);
    }
    bool digits = !s.empty();
    for (char c : s)
        if (c < '0' || c > '9') digits = false;
    if (digits && s.size() == F.m() && F.m() > 1) {
        // coefficient string, coordinate i = coefficient of alpha^i
        std::vector<uint32_t> coeffs(F.m());
        for (uint32_t i = 0; i < F.m(); ++i) coeffs[i] = uint32_t(s[i] - '0');
        return F.from_coeffs(coeffs);
    }
    if (digits) {
        uint64_t v = std::stoull(s);
        if (v < F.q()) return uint32_t(v);
    }
    throw Error(ErrorKind::ParseError, "cannot parse field element \"" + s + "\"");
}

QMatroid build_matroid(const std::string& construction, const std::string& input, uint32_t q,
                       uint32_t n, uint32_t k, uint32_t p, uint32_t s) {
    if (construction == "uniform") return QMatroid::uniform(k, n, q);
    if (construction == "representable") return matroid_from_matrix(theorem_matrix(p, s, q));
    if (construction == "matrix") {
        json j = io::load_file(input);
        if (j.contains("construction")) {
            std::string c = j["construction"].get<std::string>();
            if (c == "representable")
                return matroid_from_matrix(theorem_matrix(j.at("p").get<uint32_t>(),
                                                          j.at("s").get<uint32_t>(),
                                                          j.at("q").get<uint32_t>()));
            if (c != "matrix") throw Error(ErrorKind::ParseError, "unsupported construction " + c);
        }
        gf::ExtField F = io::field_from_json(j.at("field"));
        std::vector<std::vector<uint32_t>> rows;
        for (const auto& row : j.at("rows")) {
            std::vector<uint32_t> r;
            for (const auto& cell : row) r.push_back(parse_ext_elem(F, cell.get<std::string>()));
            rows.push_back(std::move(r));
        }
        return matroid_from_matrix(GeneratorMatrix(std::move(F), std::move(rows)));
    }
    if (construction == "rank_table") return io::matroid_from_json(io::load_file(input));
    throw Error(ErrorKind::ParseError, "unknown construction " + construction);
}

struct SystemRun {
    std::string system;
    axioms::AxiomReport report;
};

axioms::I4Variant i4_policy(uint32_t n, bool exhaustive) {
    return (n <= 4 || exhaustive) ? axioms::I4Variant::I4 : axioms::I4Variant::I4pp;
}
axioms::B4Variant b4_policy(uint32_t n, bool exhaustive) {
    return (n <= 4 || exhaustive) ? axioms::B4Variant::B4 : axioms::B4Variant::B4pp;
}
axioms::S4Variant s4_policy(uint32_t n, bool exhaustive) {
    return (n <= 4 || exhaustive) ? axioms::S4Variant::S4 : axioms::S4Variant::S4pp;
}

axioms::AxiomReport check_family_as(const SubspaceFamily& fam, const std::string& system,
                                    const std::string& variant, const CommonFlags& flags) {
    auto opts = flags.options();
    uint32_t n = fam.n();
    if (system == "independence" || system == "independent") {
        auto v = i4_policy(n, flags.exhaustive);
        if (variant == "I4") v = axioms::I4Variant::I4;
        else if (variant == "I4p") v = axioms::I4Variant::I4p;
        else if (variant == "I4pp") v = axioms::I4Variant::I4pp;
        return axioms::check_independence(fam, v, opts);
    }
    if (system == "bases" || system == "basis") {
        auto v = b4_policy(n, flags.exhaustive);
        if (variant == "B4") v = axioms::B4Variant::B4;
        else if (variant == "B4pp") v = axioms::B4Variant::B4pp;
        return axioms::check_bases(fam, v, opts);
    }
    if (system == "flats" || system == "flat") return axioms::check_flats(fam, opts);
    if (system == "hyperplanes" || system == "hyperplane")
        return axioms::check_hyperplanes(
            fam, variant == "H3p" ? axioms::H3Variant::H3p : axioms::H3Variant::H3, opts);
    if (system == "circuits" || system == "circuit" || system == "cocircuit") {
        auto v = axioms::C3Variant::C3;
        if (variant == "C3p") v = axioms::C3Variant::C3p;
        else if (variant == "C3bar") v = axioms::C3Variant::C3bar;
        return axioms::check_circuits(fam, v, opts);
    }
    if (system == "dependence" || system == "dependent") return axioms::check_dependence(fam, opts);
    if (system == "nonspanning") return axioms::check_nonspanning(fam, opts);
    if (system == "open" || system == "coopen")
        return axioms::check_open(
            fam, variant == "O3bar" ? axioms::O3Variant::O3bar : axioms::O3Variant::O3, opts);
    if (system == "spanning") {
        auto v = s4_policy(n, flags.exhaustive);
        if (variant == "S4") v = axioms::S4Variant::S4;
        else if (variant == "S4pp") v = axioms::S4Variant::S4pp;
        return axioms::check_spanning(fam, v, opts);
    }
    throw Error(ErrorKind::ParseError, "unknown system " + system);
}

std::vector<SystemRun> check_matroid_all(const QMatroid& m, const std::vector<std::string>& systems,
                                         const std::string& variant, const CommonFlags& flags) {
    std::vector<SystemRun> runs;
    auto opts = flags.options();
    auto want = [&](const std::string& s) {
        if (systems.empty()) return true;
        for (const auto& x : systems)
            if (x == s || x == "all") return true;
        return false;
    };
    uint32_t n = m.n();
    const auto& L = m.lattice();
    if (want("rank")) {
        std::vector<int> table(L.size());
        for (uint32_t i = 0; i < L.size(); ++i) table[i] = m.rank(i);
        auto gopts = opts;
        if (n >= 6 && !flags.exhaustive && gopts.mode == axioms::CheckMode::Exhaustive) {
            gopts.mode = axioms::CheckMode::Sampled;
            gopts.samples = 1000000;
        }
        runs.push_back({"rank", axioms::check_rank(L, table, axioms::RankVariant::Global, gopts)});
        runs.push_back({"rank", axioms::check_rank(L, table, axioms::RankVariant::Local, opts)});
    }
    struct Entry {
        const char* system;
        FamilyKind kind;
    };
    const Entry entries[] = {
        {"independence", FamilyKind::Independent}, {"bases", FamilyKind::Basis},
        {"flats", FamilyKind::Flat},               {"hyperplanes", FamilyKind::Hyperplane},
        {"circuits", FamilyKind::Circuit},         {"dependence", FamilyKind::Dependent},
        {"nonspanning", FamilyKind::Nonspanning},  {"open", FamilyKind::Open},
        {"spanning", FamilyKind::Spanning},        {"cocircuit", FamilyKind::Cocircuit},
        {"coopen", FamilyKind::Coopen},
    };
    for (const auto& e : entries) {
        if (!want(e.system)) continue;
        auto rep = check_family_as(m.derive(e.kind), e.system, variant, flags);
        rep.system = e.system; // e.g. cocircuits run under the circuit axioms
        runs.push_back({e.system, std::move(rep)});
    }
    if (want("closure"))
        runs.push_back({"closure", axioms::check_closure(m.closure_map(), opts)});
    return runs;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::vector<std::string> parse_path(const std::string& s) {
    auto names = split_csv(s);
    for (auto& n : names) n = crypt::normalize_system_name(n);
    return names;
}

int run_selftest() {
    int failures = 0;
    auto expect = [&](bool ok, const std::string& what) {
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << what << "\n";
        if (!ok) ++failures;
    };

    gf::ExtField F = gf::ext_field_build(2, 6);
    expect(F.alpha_order_checked() && F.mult_order(F.alpha()) == 63, "GF(64): alpha has order 63");

    Spread sp = build_spread(2, 3, 6);
    expect(sp.e == 9, "spread (2,3,6) has 9 elements");

    QMatroid m6 = fixtures::m6();
    auto flats = m6.derive(FamilyKind::Flat);
    expect(flats.size() == 11, "m6 has 11 flats");
    auto circ = m6.derive(FamilyKind::Circuit);
    size_t c2 = 0;
    for (uint32_t idx : circ.members())
        if (m6.lattice().dim(idx) == 2) ++c2;
    expect(c2 == 63, "m6 has 63 two-dimensional circuits");

    auto [jp, kind] = io::family_from_json(fixtures::fixture_json("jp18-example10"));
    auto rep = axioms::check_independence(jp, axioms::I4Variant::I4);
    expect(rep.find("I1")->pass && rep.find("I2")->pass && rep.find("I3")->pass &&
               !rep.find("I4")->pass,
           "jp18-example10 passes (I1)-(I3), fails (I4)");

    auto rt = crypt::roundtrip_verify(m6, {"rank", "closure", "rank"});
    expect(rt.ok, "m6 rank->closure->rank roundtrip");
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-matroid construction, verification and cryptomorphism engine"};
    app.require_subcommand(1);

    // ---- build
    auto* build = app.add_subcommand("build", "construct a matroid and write its rank table");
    std::string construction, build_input, build_out;
    uint32_t bq = 2, bn = 0, bk = 0, bp = 0, bs = 0;
    build->add_option("--construction", construction, "uniform | representable | matrix | rank_table")
        ->required();
    build->add_option("input", build_input, "input JSON for matrix/rank_table constructions");
    build->add_option("--q", bq, "base field size");
    build->add_option("--n", bn, "ambient dimension (uniform)");
    build->add_option("--k", bk, "uniform rank");
    build->add_option("--p", bp, "row count parameter of the spread construction");
    build->add_option("--s", bs, "spread element dimension");
    build->add_option("-o,--output", build_out, "output file");

    // ---- classify
    auto* classify_cmd = app.add_subcommand("classify", "per-dimension family table of a matroid");
    std::string cl_input, cl_out;
    classify_cmd->add_option("input", cl_input, "matroid JSON file")->required();
    classify_cmd->add_option("-o,--output", cl_out, "write the JSON report here");

    // ---- check
    auto* check = app.add_subcommand("check", "run axiom systems against a matroid or family");
    std::string ck_input, ck_fixture, ck_systems = "all", ck_variant, ck_out;
    CommonFlags ck_flags;
    check->add_option("input", ck_input, "matroid/family/closure JSON file");
    check->add_option("--fixture", ck_fixture, "builtin fixture name instead of a file");
    check->add_option("--systems", ck_systems, "comma-separated systems, or all");
    check->add_option("--variant", ck_variant, "axiom variant (I4,I4p,I4pp,H3,H3p,C3,C3p,C3bar,O3,O3bar,B4,B4pp,S4,S4pp,global,local)");
    check->add_option("-o,--output", ck_out, "write the JSON report array here");
    add_common(check, ck_flags);

    // ---- convert
    auto* convert = app.add_subcommand("convert", "apply a cryptomorphism conversion path");
    std::string cv_input, cv_path, cv_out;
    convert->add_option("input", cv_input, "matroid/family/closure JSON file")->required();
    convert->add_option("--path", cv_path, "comma-separated system names")->required();
    convert->add_option("-o,--output", cv_out, "output file");

    // ---- roundtrip
    auto* rt = app.add_subcommand("roundtrip", "verify a conversion cycle returns its start");
    std::string rt_input, rt_path;
    rt->add_option("input", rt_input, "matroid JSON file")->required();
    rt->add_option("--path", rt_path, "comma-separated cycle, first == last")->required();

    // ---- dual
    auto* dual = app.add_subcommand("dual", "write the dual matroid");
    std::string du_input, du_out;
    dual->add_option("input", du_input, "matroid JSON file")->required();
    dual->add_option("-o,--output", du_out, "output file");

    // ---- fixture
    auto* fixture = app.add_subcommand("fixture", "write a builtin fixture");
    std::string fx_name, fx_out;
    fixture->add_option("name", fx_name, "fixture name")->required();
    fixture->add_option("-o,--output", fx_out, "output file");

    // ---- selftest
    auto* selftest = app.add_subcommand("selftest", "quick built-in sanity suite");

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) {
            QMatroid m = build_matroid(construction, build_input, bq, bn, bk, bp, bs);
            emit(io::matroid_to_json(m), build_out);
            return 0;
        }
        if (classify_cmd->parsed()) {
            QMatroid m = io::matroid_from_json(io::load_file(cl_input));
            auto rep = classify(m);
            std::cout << classify_to_text(rep);
            if (!cl_out.empty()) io::save_file(cl_out, classify_to_json(rep));
            return 0;
        }
        if (check->parsed()) {
            json obj;
            if (!ck_fixture.empty())
                obj = fixtures::fixture_json(ck_fixture);
            else if (!ck_input.empty())
                obj = io::load_file(ck_input);
            else
                throw Error(ErrorKind::ParseError, "check needs a file or --fixture");

            std::vector<SystemRun> runs;
            auto kind = io::object_kind(obj);
            if (kind == io::ObjectKind::Matroid) {
                QMatroid m = io::matroid_from_json(obj);
                runs = check_matroid_all(m, split_csv(ck_systems), ck_variant, ck_flags);
            } else if (kind == io::ObjectKind::Closure) {
                ClosureMap cl = io::closure_from_json(obj);
                runs.push_back({"closure", axioms::check_closure(cl, ck_flags.options())});
            } else {
                auto [fam, fkind] = io::family_from_json(obj);
                std::vector<std::string> systems = split_csv(ck_systems);
                if (systems.empty() || (systems.size() == 1 && systems[0] == "all"))
                    systems = {fkind};
                for (const auto& s : systems)
                    runs.push_back({s, check_family_as(fam, s, ck_variant, ck_flags)});
            }

            json out = json::array();
            bool all_ok = true;
            const axioms::Verdict* first_fail = nullptr;
            const SubspaceLattice* lat = nullptr;
            for (const auto& r : runs) {
                uint32_t q = obj.at("q").get<uint32_t>(), n = obj.at("n").get<uint32_t>();
                lat = &SubspaceLattice::get(q, n);
                out.push_back(io::report_to_json(r.report, *lat));
                if (!r.report.all_pass()) {
                    all_ok = false;
                    if (!first_fail) first_fail = r.report.first_failure();
                }
            }
            if (ck_out.empty())
                std::cout << out.dump(2) << "\n";
            else
                io::save_file(ck_out, out);
            if (!all_ok && first_fail && lat) {
                std::cerr << "FAIL (" << first_fail->axiom << ")";
                if (first_fail->witness)
                    std::cerr << " witness " << axioms::witness_to_string(*lat, *first_fail->witness);
                std::cerr << "\n";
                return 1;
            }
            return 0;
        }
        if (convert->parsed()) {
            json obj = io::load_file(cv_input);
            auto path = parse_path(cv_path);
            if (path.empty()) throw Error(ErrorKind::ParseError, "empty conversion path");
            // Matroid files are validated on load; family and closure inputs
            // get their axiom system checked before any conversion runs.
            auto make_start = [&]() -> crypt::SystemObject {
                auto kind = io::object_kind(obj);
                if (kind == io::ObjectKind::Matroid)
                    return crypt::native_object(io::matroid_from_json(obj), path[0]);
                CommonFlags flags;
                if (kind == io::ObjectKind::Closure) {
                    if (path[0] != "closure")
                        throw Error(ErrorKind::PathEdgeMissing,
                                    "closure file must start a closure path");
                    ClosureMap cl = io::closure_from_json(obj);
                    auto rep = axioms::check_closure(cl, flags.options());
                    if (!rep.all_pass())
                        throw Error(ErrorKind::AxiomViolation,
                                    "input closure map fails (" + rep.first_failure()->axiom + ")");
                    return cl;
                }
                auto [fam, fkind] = io::family_from_json(obj);
                if (path[0] != fkind)
                    throw Error(ErrorKind::PathEdgeMissing,
                                "family of kind " + fkind + " cannot start a " + path[0] + " path");
                auto rep = check_family_as(fam, fkind, "", flags);
                if (!rep.all_pass())
                    throw Error(ErrorKind::AxiomViolation, "input family fails (" +
                                                               rep.first_failure()->axiom + ")");
                return fam;
            };
            crypt::SystemObject cur = make_start();
            for (size_t i = 0; i + 1 < path.size(); ++i)
                cur = crypt::apply_edge(cur, path[i], path[i + 1]);
            json out;
            if (std::holds_alternative<QMatroid>(cur))
                out = io::matroid_to_json(std::get<QMatroid>(cur));
            else if (std::holds_alternative<ClosureMap>(cur))
                out = io::closure_to_json(std::get<ClosureMap>(cur));
            else
                out = io::family_to_json(std::get<SubspaceFamily>(cur), path.back());
            emit(out, cv_out);
            return 0;
        }
        if (rt->parsed()) {
            QMatroid m = io::matroid_from_json(io::load_file(rt_input));
            auto res = crypt::roundtrip_verify(m, parse_path(rt_path));
            if (res.ok) {
                std::cout << "roundtrip ok\n";
                return 0;
            }
            std::cerr << "roundtrip FAILED: " << res.divergence << "\n";
            return 1;
        }
        if (dual->parsed()) {
            QMatroid m = io::matroid_from_json(io::load_file(du_input));
            emit(io::matroid_to_json(m.dual()), du_out);
            return 0;
        }
        if (fixture->parsed()) {
            emit(fixtures::fixture_json(fx_name), fx_out);
            return 0;
        }
        if (selftest->parsed()) return run_selftest();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::AxiomViolation ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
