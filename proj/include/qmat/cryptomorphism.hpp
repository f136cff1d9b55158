#pragma once

#include <string>
#include <variant>
#include <vector>

#include "qmat/axioms.hpp"
#include "qmat/qmatroid.hpp"

namespace qmat::crypt {

/// Rank from independents: r(A) = max dim of a member inside A.
QMatroid independents_to_rank(const SubspaceFamily& indep, bool validate = false);

/// Independents from a closure function: I is independent iff every
/// codimension-1 subspace A of I has cl(A) != cl(I).
SubspaceFamily closure_to_independents(const ClosureMap& cl, bool validate = false);

/// Rank from a closure function: r(A) = min dim of I <= A with cl(I) = cl(A).
QMatroid closure_to_rank(const ClosureMap& cl, bool validate = false);

/// Flats of a closure function: its fixed points.
SubspaceFamily closure_to_flats(const ClosureMap& cl, bool validate = false);

/// Closure from flats: cl(A) = intersection of the flats containing A.
ClosureMap flats_to_closure(const SubspaceFamily& flats, bool validate = false);

/// Rank from flats: length minus one of a maximal chain in the flat lattice
/// from cl({0}) to cl(A); well defined by the Jordan-Dedekind property.
QMatroid flats_to_rank(const SubspaceFamily& flats, bool validate = false);

/// Hyperplanes from flats: the maximal proper members.
SubspaceFamily flats_to_hyperplanes(const SubspaceFamily& flats, bool validate = false);

/// Flats from hyperplanes: all intersections of subcollections (the empty
/// intersection is E), computed by iterated pairwise meets.
SubspaceFamily hyperplanes_to_flats(const SubspaceFamily& hyps, bool validate = false);

// Perp transfers.
SubspaceFamily cocircuits_from_hyperplanes(const SubspaceFamily& hyps);
SubspaceFamily hyperplanes_from_cocircuits(const SubspaceFamily& cocircuits);
SubspaceFamily coopens_from_flats(const SubspaceFamily& flats);
SubspaceFamily flats_from_coopens(const SubspaceFamily& coopens);
/// Spanning spaces of M as perps of the independents of the dual matroid.
SubspaceFamily spanning_via_dual(const QMatroid& m);
/// Non-spanning spaces of M as perps of the dependents of the dual matroid.
SubspaceFamily nonspanning_via_dual(const QMatroid& m);

// Opposite / extremal transfers (Figure-2-style arrows).
SubspaceFamily dependents_from_independents(const SubspaceFamily& f);
SubspaceFamily independents_from_dependents(const SubspaceFamily& f);
SubspaceFamily circuits_from_dependents(const SubspaceFamily& f);
SubspaceFamily dependents_from_circuits(const SubspaceFamily& f);
SubspaceFamily bases_from_independents(const SubspaceFamily& f);
SubspaceFamily independents_from_bases(const SubspaceFamily& f);
SubspaceFamily spanning_from_bases(const SubspaceFamily& f);
SubspaceFamily bases_from_spanning(const SubspaceFamily& f);
SubspaceFamily nonspanning_from_spanning(const SubspaceFamily& f);
SubspaceFamily spanning_from_nonspanning(const SubspaceFamily& f);
SubspaceFamily hyperplanes_from_nonspanning(const SubspaceFamily& f);
SubspaceFamily nonspanning_from_hyperplanes(const SubspaceFamily& f);

/// A conversion-system object: a rank table, a closure map, or a family of
/// one of the eleven kinds.
using SystemObject = std::variant<QMatroid, ClosureMap, SubspaceFamily>;

/// System names accepted in paths: rank, closure, plus the family kinds.
bool is_system_name(const std::string& name);

/// Canonical spelling of a system name; accepts plurals and common aliases
/// ("flats", "bases", "independence", ...). Unknown names pass through.
std::string normalize_system_name(const std::string& name);

/// The implemented directed converter edges between system names.
const std::vector<std::pair<std::string, std::string>>& converter_edges();
bool has_edge(const std::string& from, const std::string& to);

/// The native object of a matroid for a given system name.
SystemObject native_object(const QMatroid& m, const std::string& system);

/// One converter application.
SystemObject apply_edge(const SystemObject& obj, const std::string& from, const std::string& to);

struct RoundtripResult {
    bool ok = true;
    std::string divergence; // human-readable first-divergence note
};

/// Walks the path starting from M's native object for path[0]; the path must
/// return to path[0]'s system, where the result is compared for equality.
RoundtripResult roundtrip_verify(const QMatroid& m, const std::vector<std::string>& path);

/// Batch form for cycle sweeps: converter applications are memoized on
/// (edge, input object), so overlapping cycles share evaluations.
std::vector<RoundtripResult> roundtrip_verify_all(const QMatroid& m,
                                                  const std::vector<std::vector<std::string>>& paths);

} // namespace qmat::crypt
