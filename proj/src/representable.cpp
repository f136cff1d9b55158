#include "qmat/representable.hpp"

#include <algorithm>
#include <numeric>

namespace qmat {

uint32_t field_code_from_row(const gf::ExtField& F, const RowOps& ops, uint64_t row) {
    std::vector<uint32_t> coeffs(F.m());
    for (uint32_t i = 0; i < F.m(); ++i) coeffs[i] = ops.get(row, i);
    return F.from_coeffs(coeffs);
}

uint64_t row_from_field_code(const gf::ExtField& F, const RowOps& ops, uint32_t code) {
    auto coeffs = F.gamma(code);
    uint64_t row = 0;
    for (uint32_t i = 0; i < F.m(); ++i) row = ops.set(row, i, coeffs[i]);
    return row;
}

GeneratorMatrix::GeneratorMatrix(gf::ExtField f, std::vector<std::vector<uint32_t>> rows)
    : field(std::move(f)), entries(std::move(rows)) {
    if (entries.empty() || entries[0].empty())
        throw Error(ErrorKind::RankDeficientG, "generator matrix is empty");
    k = uint32_t(entries.size());
    n = uint32_t(entries[0].size());
    for (const auto& r : entries)
        if (r.size() != n) throw Error(ErrorKind::DimensionMismatch, "ragged generator matrix");
    if (gf::matrix_rank_ext(field, entries) != int(k))
        throw Error(ErrorKind::RankDeficientG, "generator matrix has deficient row rank");
}

Spread build_spread(uint32_t q, uint32_t s, uint32_t m) {
    if (s == 0 || m == 0 || m % s != 0)
        throw Error(ErrorKind::BadDivisibility,
                    "spread needs s | m, got s = " + std::to_string(s) + ", m = " + std::to_string(m));
    gf::ExtField F = gf::ext_field_build(q, m);
    uint64_t qs = 1, qm = F.size();
    for (uint32_t i = 0; i < s; ++i) qs *= q;
    uint32_t e = uint32_t((qm - 1) / (qs - 1));

    Spread sp{q, s, m, e, F, {}, {}};
    RowOps ops(q, m);
    // Indexed by field element code, which is dense in [0, q^m).
    sp.vector_to_element.assign(qm, 0);
    sp.elements.reserve(e);
    for (uint32_t i = 1; i <= e; ++i) {
        std::vector<uint64_t> gens;
        gens.reserve(s);
        for (uint32_t j = 0; j < s; ++j)
            gens.push_back(row_from_field_code(F, ops, F.alpha_pow(i + uint64_t(j) * e)));
        Subspace g = canonicalize(q, m, gens);
        if (g.dim() != s)
            throw Error(ErrorKind::BadDivisibility, "spread element G_" + std::to_string(i) +
                                                        " has wrong dimension");
        // Record every nonzero vector of G_i; the spread property makes the
        // assignment unique.
        std::vector<uint64_t> vecs{0};
        for (uint64_t r : g.rows()) {
            size_t cur = vecs.size();
            for (size_t t = 0; t < cur; ++t)
                for (uint32_t c = 1; c < q; ++c) vecs.push_back(ops.add(vecs[t], ops.scale(r, c)));
        }
        for (uint64_t v : vecs) {
            if (v == 0) continue;
            uint32_t code = field_code_from_row(F, ops, v);
            if (sp.vector_to_element[code] != 0)
                throw Error(ErrorKind::BadDivisibility, "spread elements overlap");
            sp.vector_to_element[code] = i;
        }
        sp.elements.push_back(std::move(g));
    }
    for (size_t code = 1; code < sp.vector_to_element.size(); ++code)
        if (sp.vector_to_element[code] == 0)
            throw Error(ErrorKind::BadDivisibility, "spread does not cover all lines");
    return sp;
}

uint32_t spread_index_of(const Spread& spread, const Subspace& x) {
    if (x.dim() == 0) throw Error(ErrorKind::ZeroSpace, "the zero space lies in every spread element");
    RowOps ops(spread.q, spread.m);
    return spread.vector_to_element[field_code_from_row(spread.field, ops, x.rows()[0])];
}

GeneratorMatrix theorem_matrix(uint32_t p, uint32_t s, uint32_t q) {
    if (p == 0 || s == 0 || std::gcd(p, s) != 1)
        throw Error(ErrorKind::NotCoprime,
                    "p = " + std::to_string(p) + " and s = " + std::to_string(s) + " must be coprime");
    uint32_t m = p * s;
    gf::ExtField F = gf::ext_field_build(q, m);
    uint64_t qs = 1;
    for (uint32_t i = 0; i < s; ++i) qs *= q;
    std::vector<std::vector<uint32_t>> rows(p, std::vector<uint32_t>(m));
    for (uint32_t j = 0; j < p; ++j) {
        // row j: alpha^(i * q^(j*s)) for i = 0..m-1
        uint64_t stepexp = 1;
        for (uint32_t t = 0; t < j; ++t) stepexp = stepexp * qs % (F.size() - 1);
        for (uint32_t i = 0; i < m; ++i) rows[j][i] = F.alpha_pow(uint64_t(i) * stepexp);
    }
    return GeneratorMatrix(std::move(F), std::move(rows));
}

QMatroid matroid_from_matrix(const GeneratorMatrix& G) {
    const auto& lattice = SubspaceLattice::get(G.field.q(), G.n);
    const auto& F = G.field;
    std::vector<int> table(lattice.size());
    for (uint32_t idx = 0; idx < lattice.size(); ++idx) {
        const Subspace& A = lattice.at(idx);
        if (A.dim() == 0) {
            table[idx] = 0;
            continue;
        }
        // Columns of Y are the RREF basis vectors of A with GF(q) entries
        // read as field scalars; (GY)[j][h] = sum_i G[j][i] * y_i.
        std::vector<std::vector<uint32_t>> GY(G.k, std::vector<uint32_t>(A.dim(), 0));
        for (uint32_t h = 0; h < A.dim(); ++h) {
            uint64_t row = A.rows()[h];
            for (uint32_t j = 0; j < G.k; ++j) {
                uint32_t acc = 0;
                for (uint32_t i = 0; i < G.n; ++i) {
                    uint32_t c = lattice.ops().get(row, i);
                    if (c == 0) continue;
                    acc = F.add(acc, c == 1 ? G.entries[j][i] : F.mul(G.entries[j][i], c));
                }
                GY[j][h] = acc;
            }
        }
        table[idx] = gf::matrix_rank_ext(F, GY);
    }
    std::string prov = "representable(q=" + std::to_string(F.q()) + ",m=" + std::to_string(F.m()) +
                       ",k=" + std::to_string(G.k) + ",n=" + std::to_string(G.n) + ")";
    return QMatroid::from_rank_table(lattice, std::move(table), std::move(prov));
}

SpreadRankInput make_spread_rank_input(uint32_t p, uint32_t s, uint32_t q) {
    GeneratorMatrix G = theorem_matrix(p, s, q);
    Spread sp = build_spread(q, s, p * s);
    return SpreadRankInput{p, s, q, p * s, std::move(G), std::move(sp)};
}

int rank_via_spread_formula(const SpreadRankInput& input, const Subspace& a) {
    if (a.dim() == 0) return 0;
    const auto& F = input.G.field;
    RowOps ops(input.q, input.m);
    // Spread indices met by the canonical RREF basis of A.
    std::vector<uint32_t> indices;
    for (uint64_t row : a.rows()) {
        uint32_t i = input.spread.vector_to_element[field_code_from_row(F, ops, row)];
        if (std::find(indices.begin(), indices.end(), i) == indices.end()) indices.push_back(i);
    }
    std::sort(indices.begin(), indices.end());
    // mu = dim over GF(q^s) of <alpha^i : i in S>, by greedy extension with
    // Moore-determinant independence tests at step q^s.
    uint64_t qs = 1;
    for (uint32_t i = 0; i < input.s; ++i) qs *= input.q;
    std::vector<uint32_t> chosen;
    for (uint32_t i : indices) {
        std::vector<uint32_t> trial = chosen;
        trial.push_back(F.alpha_pow(i));
        if (gf::moore_determinant(F, trial, qs) != 0) chosen = std::move(trial);
    }
    uint32_t mu = uint32_t(chosen.size());
    return int(std::min(input.p, mu));
}

} // namespace qmat
