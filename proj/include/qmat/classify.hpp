#pragma once

#include <map>
#include <string>
#include <vector>

#include "qmat/io.hpp"
#include "qmat/qmatroid.hpp"

namespace qmat {

/// Table-style summary of a q-matroid: per-dimension counts of every derived
/// family, the rank distribution, a closure summary, and a paper-delta
/// section for the worked spread example where the literature figures and
/// the enumeration disagree.
struct ClassifyReport {
    uint32_t q = 0, n = 0;
    std::string provenance;
    std::vector<uint64_t> dim_counts;                            // per dim
    std::map<uint32_t, std::map<int, uint64_t>> rank_dist;       // dim -> rank -> count
    std::map<std::string, std::map<uint32_t, uint64_t>> family_counts; // kind -> dim -> count
    std::map<uint32_t, std::map<uint32_t, uint64_t>> closure_dims;     // dim A -> dim cl(A) -> count
    std::vector<std::string> paper_delta;
};

ClassifyReport classify(const QMatroid& m);

io::json classify_to_json(const ClassifyReport& r);
std::string classify_to_text(const ClassifyReport& r);

} // namespace qmat
