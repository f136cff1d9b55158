#pragma once

#include <cstdint>
#include <vector>

#include "qmat/gf.hpp"
#include "qmat/qmatroid.hpp"
#include "qmat/subspace.hpp"

namespace qmat {

/// A full-row-rank k x n matrix over GF(q^m), the representable-matroid
/// generator. Entries are ExtField codes.
struct GeneratorMatrix {
    gf::ExtField field;
    uint32_t k = 0, n = 0;
    std::vector<std::vector<uint32_t>> entries;

    GeneratorMatrix(gf::ExtField f, std::vector<std::vector<uint32_t>> rows);
};

/// A Desarguesian spread of s-dimensional subspaces of F_q^m built from a
/// primitive element: G_i = <alpha^i, alpha^(i+e), ..., alpha^(i+(s-1)e)>
/// for i = 1..e, e = (q^m-1)/(q^s-1).
struct Spread {
    uint32_t q = 0, s = 0, m = 0, e = 0;
    gf::ExtField field;
    std::vector<Subspace> elements;          // 1-based labels G_1..G_e at [0..e-1]
    std::vector<uint32_t> vector_to_element; // packed nonzero vector code -> 1-based index
};

Spread build_spread(uint32_t q, uint32_t s, uint32_t m);

/// The unique 1-based i with x a subspace of G_i; x must be a nonzero space.
uint32_t spread_index_of(const Spread& spread, const Subspace& x);

/// The p x m matrix of the closed-form rank theorem: row j has entries
/// alpha^(i * q^((j-1)s)) for i = 0..m-1.
GeneratorMatrix theorem_matrix(uint32_t p, uint32_t s, uint32_t q);

/// Representable q-matroid M[G]: r(A) is the GF(q^m)-rank of G*Y for Y a
/// basis matrix of A.
QMatroid matroid_from_matrix(const GeneratorMatrix& G);

/// The closed-form rank input: coprime (p, s), m = p*s, the theorem matrix
/// and its spread.
struct SpreadRankInput {
    uint32_t p = 0, s = 0, q = 0, m = 0;
    GeneratorMatrix G;
    Spread spread;
};

SpreadRankInput make_spread_rank_input(uint32_t p, uint32_t s, uint32_t q);

/// Closed-form rank min(p, mu): collect the spread indices of the RREF basis
/// vectors of A, then mu is the GF(q^s)-dimension of the span of the
/// corresponding alpha powers, measured by Moore-determinant ranks with
/// step q^s.
int rank_via_spread_formula(const SpreadRankInput& input, const Subspace& a);

/// Conversion between packed F_q^m row vectors and field element codes
/// (coordinates w.r.t. 1, alpha, ..., alpha^(m-1)).
uint32_t field_code_from_row(const gf::ExtField& F, const RowOps& ops, uint64_t row);
uint64_t row_from_field_code(const gf::ExtField& F, const RowOps& ops, uint32_t code);

} // namespace qmat
