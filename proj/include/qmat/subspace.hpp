#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "qmat/error.hpp"

namespace qmat {

/// Packed row vectors over GF(q), q in {2, 3, 5, 7}. Digit i (coordinate i)
/// sits at bit offset (n-1-i)*bits, so unsigned comparison of packed rows is
/// exactly lexicographic comparison of the coordinate strings.
struct RowOps {
    uint32_t q = 2, n = 0, bits = 1;
    uint64_t digit_mask = 1;

    RowOps() = default;
    RowOps(uint32_t q_, uint32_t n_);

    uint32_t get(uint64_t row, uint32_t i) const {
        return uint32_t((row >> (bits * (n - 1 - i))) & digit_mask);
    }
    uint64_t set(uint64_t row, uint32_t i, uint32_t d) const {
        uint32_t sh = bits * (n - 1 - i);
        return (row & ~(digit_mask << sh)) | (uint64_t(d) << sh);
    }
    uint64_t add(uint64_t a, uint64_t b) const;
    uint64_t scale(uint64_t a, uint32_t c) const;
    uint64_t negate(uint64_t a) const { return scale(a, q - 1); }
    /// Index of the leftmost nonzero coordinate, or -1 for the zero row.
    int leading(uint64_t row) const;
    uint32_t dot(uint64_t a, uint64_t b) const;

    std::string to_string(uint64_t row) const;
    uint64_t from_string(const std::string& s) const;
    uint64_t from_digits(std::span<const uint32_t> digits) const;
    std::vector<uint32_t> to_digits(uint64_t row) const;
};

/// A subspace of F_q^n in reduced row echelon form. Rows are ordered by pivot
/// position, so equal subspaces have identical representations and the
/// canonical order below is a total order.
class Subspace {
public:
    Subspace(uint32_t q, uint32_t n) : q_(q), n_(n) {}
    Subspace(uint32_t q, uint32_t n, std::vector<uint64_t> rref_rows)
        : q_(q), n_(n), rows_(std::move(rref_rows)) {}

    static Subspace zero(uint32_t q, uint32_t n) { return Subspace(q, n); }
    static Subspace full(uint32_t q, uint32_t n);

    uint32_t q() const { return q_; }
    uint32_t n() const { return n_; }
    uint32_t dim() const { return uint32_t(rows_.size()); }
    const std::vector<uint64_t>& rows() const { return rows_; }

    bool operator==(const Subspace& o) const {
        return q_ == o.q_ && n_ == o.n_ && rows_ == o.rows_;
    }
    /// Canonical order: lexicographic on the packed RREF row list.
    std::strong_ordering operator<=>(const Subspace& o) const;

    std::vector<std::string> row_strings() const;

private:
    uint32_t q_, n_;
    std::vector<uint64_t> rows_;
};

/// A lattice interval [lo, hi]; construction enforces lo <= hi.
struct Interval {
    Subspace lo, hi;
    Interval(Subspace lo_, Subspace hi_);
    bool contains(const Subspace& x) const;
};

/// RREF span of arbitrary generator rows; idempotent, span-invariant.
Subspace canonicalize(uint32_t q, uint32_t n, const std::vector<uint64_t>& generators);
Subspace canonicalize_vectors(uint32_t q, uint32_t n, const std::vector<std::vector<uint32_t>>& generators);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
/// True iff b is a subspace of a.
bool contains(const Subspace& a, const Subspace& b);
Subspace orthogonal_complement(const Subspace& a);

/// Gaussian binomial [n choose k]_q; saturates at UINT64_MAX on overflow.
uint64_t gaussian_binomial(uint32_t n, uint32_t k, uint32_t q);
/// Total number of subspaces of F_q^n, saturating.
uint64_t lattice_size(uint32_t n, uint32_t q);

uint64_t default_lattice_cap();

/// The fully materialized lattice L(F_q^n): every subspace in canonical
/// order, with index-based operations. Immutable once built; instances are
/// shared process-wide and safe for concurrent reads.
class SubspaceLattice {
public:
    SubspaceLattice(uint32_t q, uint32_t n, uint64_t cap = default_lattice_cap());

    static const SubspaceLattice& get(uint32_t q, uint32_t n);

    uint32_t q() const { return q_; }
    uint32_t n() const { return n_; }
    uint32_t size() const { return uint32_t(subs_.size()); }
    const RowOps& ops() const { return ops_; }

    const Subspace& at(uint32_t idx) const { return subs_[idx]; }
    uint32_t dim(uint32_t idx) const { return dims_[idx]; }
    uint32_t index_of(const Subspace& s) const;
    std::optional<uint32_t> try_index_of(const Subspace& s) const;

    uint32_t zero_index() const { return zero_idx_; }
    uint32_t full_index() const { return full_idx_; }
    const std::vector<uint32_t>& of_dim(uint32_t k) const { return by_dim_[k]; }
    /// Indices of the 1-dimensional subspaces, in canonical order.
    const std::vector<uint32_t>& lines() const { return by_dim_[1]; }
    /// Indices of the codimension-1 subspaces, in canonical order.
    const std::vector<uint32_t>& hyperplanes() const { return by_dim_[n_ >= 1 ? n_ - 1 : 0]; }

    uint32_t sum(uint32_t a, uint32_t b) const;
    uint32_t intersect(uint32_t a, uint32_t b) const;
    bool leq(uint32_t a, uint32_t b) const; // a subseteq b
    uint32_t perp(uint32_t a) const { return perp_[a]; }

    /// A + x_j where x_j = lines()[j]; memoized table.
    uint32_t sum_line(uint32_t a, uint32_t line_pos) const { return succ_[size_t(a) * nlines_ + line_pos]; }
    bool line_in(uint32_t a, uint32_t line_pos) const { return sum_line(a, line_pos) == a; }

private:
    uint32_t q_, n_;
    RowOps ops_;
    std::vector<Subspace> subs_;
    std::vector<uint8_t> dims_;
    std::vector<std::vector<uint32_t>> by_dim_;
    std::unordered_map<std::string, uint32_t> index_;
    std::vector<uint32_t> perp_;
    std::vector<uint32_t> succ_;
    uint32_t nlines_ = 0;
    uint32_t zero_idx_ = 0, full_idx_ = 0;

    std::string key_of(const Subspace& s) const;
};

/// Deduplicated, canonically sorted set of subspaces of one ambient space.
class SubspaceFamily {
public:
    SubspaceFamily(const SubspaceLattice& L) : L_(&L) {}
    SubspaceFamily(const SubspaceLattice& L, std::vector<uint32_t> members);

    const SubspaceLattice& lattice() const { return *L_; }
    uint32_t q() const { return L_->q(); }
    uint32_t n() const { return L_->n(); }
    size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const std::vector<uint32_t>& members() const { return members_; }
    bool contains_index(uint32_t idx) const;
    const Subspace& subspace(size_t i) const { return L_->at(members_[i]); }

    bool operator==(const SubspaceFamily& o) const { return members_ == o.members_; }

private:
    const SubspaceLattice* L_;
    std::vector<uint32_t> members_;
};

// The six family operators plus the derived cover/max queries.
SubspaceFamily family_upp(const SubspaceFamily& f);
SubspaceFamily family_low(const SubspaceFamily& f);
SubspaceFamily family_max(const SubspaceFamily& f);
SubspaceFamily family_min(const SubspaceFamily& f);
SubspaceFamily family_opp(const SubspaceFamily& f);
SubspaceFamily family_perp(const SubspaceFamily& f);

/// Per lattice index: does some member contain it / lie inside it?
std::vector<char> family_upp_bitmap(const SubspaceFamily& f);
std::vector<char> family_low_bitmap(const SubspaceFamily& f);
/// Per lattice index: max dimension of a member inside it (-1 if none) and
/// min dimension of a member containing it (n+1 if none).
std::vector<int> family_max_dim_inside(const SubspaceFamily& f);
std::vector<int> family_min_dim_above(const SubspaceFamily& f);

/// Members of f covering a in f: b > a with no member strictly between.
SubspaceFamily covers_in_family(const SubspaceFamily& f, const Subspace& a);
bool is_cover(const SubspaceFamily& f, const Subspace& a, const Subspace& b);

/// Members of a inside x of maximal dimension among such members.
SubspaceFamily max_in(const Subspace& x, const SubspaceFamily& a);

} // namespace qmat
