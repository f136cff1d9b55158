#pragma once

#include <string>

#include <json.hpp>

#include "qmat/axioms.hpp"
#include "qmat/gf.hpp"
#include "qmat/qmatroid.hpp"
#include "qmat/subspace.hpp"

namespace qmat::io {

using json = nlohmann::ordered_json;

json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(uint32_t q, uint32_t n, const json& j);

json family_to_json(const SubspaceFamily& f, const std::string& kind);
/// Returns the family together with its declared kind.
std::pair<SubspaceFamily, std::string> family_from_json(const json& j);

json matroid_to_json(const QMatroid& m);
QMatroid matroid_from_json(const json& j);

json closure_to_json(const ClosureMap& cl);
ClosureMap closure_from_json(const json& j);

json field_to_json(const gf::ExtField& f);
gf::ExtField field_from_json(const json& j);

json report_to_json(const axioms::AxiomReport& rep, const SubspaceLattice& L);

/// Any of the object files above, dispatched on "kind".
enum class ObjectKind { Matroid, Family, Closure };
ObjectKind object_kind(const json& j);

json load_file(const std::string& path);
void save_file(const std::string& path, const json& j);

} // namespace qmat::io
