#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "qmat/error.hpp"

namespace qmat::gf {

bool is_prime(uint32_t q);

/// Arithmetic in the prime field GF(q). Elements are residues in [0, q).
struct PrimeField {
    uint32_t q;

    explicit PrimeField(uint32_t q_);

    uint32_t add(uint32_t a, uint32_t b) const { return (a + b) % q; }
    uint32_t sub(uint32_t a, uint32_t b) const { return (a + q - b % q) % q; }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : q - a; }
    uint32_t mul(uint32_t a, uint32_t b) const { return uint32_t((uint64_t(a) * b) % q); }
    uint32_t inv(uint32_t a) const;
    uint32_t pow(uint32_t a, uint64_t e) const;
    /// Least primitive root mod q (1 for q = 2).
    uint32_t primitive_root() const;
};

/// GF(q^m) as GF(q)[x]/(f) for a monic irreducible f of degree m.
///
/// Elements are encoded as integers in [0, q^m): code = sum coeffs[i] * q^i,
/// i.e. base-q digits are the coordinates w.r.t. the basis 1, x, ..., x^(m-1).
/// Scalars embed as the codes 0..q-1. The class of x is alpha when m > 1;
/// the m = 1 convention degenerates to the prime field with alpha the least
/// primitive root.
class ExtField {
public:
    ExtField(uint32_t q, uint32_t m, std::vector<uint32_t> modulus);

    uint32_t q() const { return q_; }
    uint32_t m() const { return m_; }
    uint32_t size() const { return size_; }
    /// Modulus coefficients, low degree first, length m+1, top coefficient 1.
    const std::vector<uint32_t>& modulus() const { return modulus_; }
    /// True once the class of x has been verified to generate the multiplicative group.
    bool alpha_order_checked() const { return alpha_primitive_; }

    uint32_t zero() const { return 0; }
    uint32_t one() const { return 1; }
    uint32_t alpha() const { return alpha_; }

    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;
    uint32_t pow(uint32_t a, uint64_t e) const;
    /// alpha^e for any exponent, reduced mod q^m - 1.
    uint32_t alpha_pow(uint64_t e) const;
    uint64_t mult_order(uint32_t a) const;

    /// Coordinates of theta w.r.t. the basis 1, alpha, ..., alpha^(m-1).
    std::vector<uint32_t> gamma(uint32_t theta) const;
    uint32_t from_coeffs(const std::vector<uint32_t>& coeffs) const;

    bool operator==(const ExtField& o) const {
        return q_ == o.q_ && m_ == o.m_ && modulus_ == o.modulus_;
    }

private:
    uint32_t mul_poly(uint32_t a, uint32_t b) const;
    void ensure_log_tables() const;

    uint32_t q_, m_, size_;
    std::vector<uint32_t> modulus_;
    uint32_t alpha_ = 0;
    bool alpha_primitive_ = false;
    // x^m reduced mod f, as a code; used by the q=2 shift-multiply fast path.
    uint32_t top_reduction_ = 0;

    // Discrete-log tables, built once on demand for q^m <= 2^16. Copies of a
    // field share the holder, keeping the type copyable and the build
    // race-free.
    struct LogTables {
        std::once_flag once;
        std::pair<std::vector<uint32_t>, std::vector<int32_t>> data;
        bool ready = false;
    };
    std::shared_ptr<LogTables> logs_ = std::make_shared<LogTables>();
};

/// Canonical field: the monic irreducible degree-m polynomial over GF(q) with
/// the smallest base-q integer encoding whose root x is primitive.
/// Deterministic across runs; for (q, m) = (2, 6) this is x^6 + x + 1.
ExtField ext_field_build(uint32_t q, uint32_t m);

/// Row rank of a matrix over GF(q^m) by Gaussian elimination.
int matrix_rank_ext(const ExtField& F, std::vector<std::vector<uint32_t>> M);

/// Determinant of a square matrix over GF(q^m).
uint32_t det_ext(const ExtField& F, std::vector<std::vector<uint32_t>> M);

/// Determinant of the Moore-style matrix whose i-th row is elems raised to
/// step^i, for i = 0..len-1. step is q (plain Frobenius) or a power q^s.
/// Nonzero iff the elements are linearly independent over the fixed subfield
/// of the step-Frobenius.
uint32_t moore_determinant(const ExtField& F, const std::vector<uint32_t>& elems, uint64_t step);

std::vector<uint64_t> prime_factors(uint64_t v);

} // namespace qmat::gf
