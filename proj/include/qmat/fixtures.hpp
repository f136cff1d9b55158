#pragma once

#include <string>
#include <vector>

#include "qmat/io.hpp"

namespace qmat::fixtures {

/// Builtin fixture names: m6, m6-dual, u45, jp18-example10,
/// jp18-example10-circuits, lo-prime.
const std::vector<std::string>& fixture_names();

/// The fixture as its canonical JSON object (matroid or family file).
io::json fixture_json(const std::string& name);

/// The worked spread example on F_2^6 (q=2, p=2, s=3).
QMatroid m6();

} // namespace qmat::fixtures
