#include "qmat/gf.hpp"

#include <algorithm>
#include <numeric>

namespace qmat::gf {

bool is_prime(uint32_t q) {
    if (q < 2) return false;
    for (uint32_t d = 2; uint64_t(d) * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

std::vector<uint64_t> prime_factors(uint64_t v) {
    std::vector<uint64_t> ps;
    for (uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            ps.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) ps.push_back(v);
    return ps;
}

PrimeField::PrimeField(uint32_t q_) : q(q_) {
    if (!is_prime(q)) throw Error(ErrorKind::NonPrimeModulus, "q = " + std::to_string(q) + " is not prime");
}

uint32_t PrimeField::pow(uint32_t a, uint64_t e) const {
    uint32_t r = 1;
    a %= q;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

uint32_t PrimeField::inv(uint32_t a) const {
    if (a % q == 0) throw Error(ErrorKind::BadRank, "division by zero in GF(q)");
    return pow(a, q - 2);
}

uint32_t PrimeField::primitive_root() const {
    if (q == 2) return 1;
    auto ps = prime_factors(q - 1);
    for (uint32_t g = 2; g < q; ++g) {
        bool ok = true;
        for (uint64_t p : ps)
            if (pow(g, (q - 1) / p) == 1) { ok = false; break; }
        if (ok) return g;
    }
    return 1; // unreachable for prime q
}

namespace {

// Polynomials over GF(q) as coefficient vectors, low degree first, no
// trailing zeros.
using Poly = std::vector<uint32_t>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mod(Poly a, const Poly& b, const PrimeField& Fq) {
    trim(a);
    while (a.size() >= b.size()) {
        uint32_t lead = Fq.mul(a.back(), Fq.inv(b.back()));
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] = Fq.sub(a[shift + i], Fq.mul(lead, b[i]));
        trim(a);
    }
    return a;
}

bool poly_is_irreducible(const Poly& f, const PrimeField& Fq) {
    // Trial division by every monic polynomial of degree 1..deg/2.
    size_t deg = f.size() - 1;
    for (size_t d = 1; 2 * d <= deg; ++d) {
        uint64_t count = 1;
        for (size_t i = 0; i < d; ++i) count *= Fq.q;
        for (uint64_t code = 0; code < count; ++code) {
            Poly g(d + 1, 0);
            uint64_t c = code;
            for (size_t i = 0; i < d; ++i) { g[i] = uint32_t(c % Fq.q); c /= Fq.q; }
            g[d] = 1;
            if (poly_mod(f, g, Fq).empty()) return false;
        }
    }
    return true;
}

} // namespace

ExtField::ExtField(uint32_t q, uint32_t m, std::vector<uint32_t> modulus)
    : q_(q), m_(m), modulus_(std::move(modulus)) {
    if (!is_prime(q_)) throw Error(ErrorKind::NonPrimeModulus, "q = " + std::to_string(q_) + " is not prime");
    if (m_ == 0) throw Error(ErrorKind::DegreeTooLarge, "extension degree must be positive");
    uint64_t size = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        size *= q_;
        if (size > (1u << 20)) throw Error(ErrorKind::DegreeTooLarge, "q^m exceeds 2^20");
    }
    size_ = uint32_t(size);
    if (modulus_.size() != m_ + 1 || modulus_.back() != 1)
        throw Error(ErrorKind::ParseError, "modulus must be monic of degree m");
    for (uint32_t c : modulus_)
        if (c >= q_) throw Error(ErrorKind::ParseError, "modulus coefficient out of range");

    PrimeField Fq(q_);
    if (m_ == 1) {
        // Degenerate case: GF(q) itself, serialized with modulus x.
        alpha_ = Fq.primitive_root();
        alpha_primitive_ = true;
        top_reduction_ = Fq.neg(modulus_[0]);
        return;
    }
    Poly f(modulus_.begin(), modulus_.end());
    if (!poly_is_irreducible(f, Fq))
        throw Error(ErrorKind::ParseError, "modulus is reducible over GF(q)");

    // x^m = -(c_0 + c_1 x + ... + c_{m-1} x^{m-1})
    uint32_t top = 0, pw = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        top += Fq.neg(modulus_[i]) * pw;
        pw = uint32_t(uint64_t(pw) * q_);
    }
    top_reduction_ = top;
    alpha_ = q_; // code of x
    alpha_primitive_ = (mult_order(alpha_) == uint64_t(size_) - 1);
}

uint32_t ExtField::add(uint32_t a, uint32_t b) const {
    if (q_ == 2) return a ^ b;
    uint32_t r = 0, pw = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        r += ((a + b) % q_) * pw;
        a /= q_;
        b /= q_;
        pw *= q_;
    }
    return r;
}

uint32_t ExtField::neg(uint32_t a) const {
    if (q_ == 2) return a;
    uint32_t r = 0, pw = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        r += ((q_ - a % q_) % q_) * pw;
        a /= q_;
        pw *= q_;
    }
    return r;
}

uint32_t ExtField::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t ExtField::mul_poly(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (q_ == 2) {
        // Carry-less multiply with on-the-fly reduction by x^m = top_reduction_.
        uint32_t r = 0;
        while (b) {
            if (b & 1) r ^= a;
            b >>= 1;
            a <<= 1;
            if (a & size_) a = (a ^ size_) ^ top_reduction_;
        }
        return r;
    }
    // Generic schoolbook product of digit vectors, reduced by the modulus.
    PrimeField Fq(q_);
    std::vector<uint32_t> da(m_), db(m_), prod(2 * m_, 0);
    uint32_t t = a;
    for (uint32_t i = 0; i < m_; ++i) { da[i] = t % q_; t /= q_; }
    t = b;
    for (uint32_t i = 0; i < m_; ++i) { db[i] = t % q_; t /= q_; }
    for (uint32_t i = 0; i < m_; ++i) {
        if (!da[i]) continue;
        for (uint32_t j = 0; j < m_; ++j)
            prod[i + j] = Fq.add(prod[i + j], Fq.mul(da[i], db[j]));
    }
    for (int d = int(2 * m_) - 2; d >= int(m_); --d) {
        uint32_t c = prod[d];
        if (!c) continue;
        prod[d] = 0;
        for (uint32_t i = 0; i < m_; ++i)
            prod[d - m_ + i] = Fq.sub(prod[d - m_ + i], Fq.mul(c, modulus_[i]));
    }
    uint32_t r = 0, pw = 1;
    for (uint32_t i = 0; i < m_; ++i) { r += prod[i] * pw; pw *= q_; }
    return r;
}

void ExtField::ensure_log_tables() const {
    std::call_once(logs_->once, [this] {
        if (size_ > (1u << 16)) return;
        // Everything here must stay on the mul_poly path: mul() would
        // re-enter this call_once while the tables are being built.
        auto pow_poly = [this](uint32_t a, uint64_t e) {
            uint32_t r = 1;
            while (e) {
                if (e & 1) r = mul_poly(r, a);
                a = mul_poly(a, a);
                e >>= 1;
            }
            return r;
        };
        uint64_t n = uint64_t(size_) - 1;
        auto ps = prime_factors(n);
        auto order_poly = [&](uint32_t a) {
            uint64_t o = n;
            for (uint64_t p : ps)
                while (o % p == 0 && pow_poly(a, o / p) == 1) o /= p;
            return o;
        };
        // Base: a primitive element (prefer alpha when it generates).
        uint32_t g = 0;
        if (m_ > 1 && order_poly(alpha_) == n) {
            g = alpha_;
        } else {
            for (uint32_t c = 1; c < size_; ++c)
                if (order_poly(c) == n) { g = c; break; }
        }
        if (!g) return;
        auto& [exp, lg] = logs_->data;
        exp.resize(2 * (size_ - 1));
        lg.assign(size_, -1);
        uint32_t e = 1;
        for (uint32_t i = 0; i < size_ - 1; ++i) {
            exp[i] = e;
            exp[i + size_ - 1] = e;
            lg[e] = int32_t(i);
            e = mul_poly(e, g);
        }
        logs_->ready = true;
    });
}

uint32_t ExtField::mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (size_ <= (1u << 16)) {
        ensure_log_tables();
        if (logs_->ready) {
            const auto& [exp, lg] = logs_->data;
            return exp[uint32_t(lg[a]) + uint32_t(lg[b])];
        }
    }
    return mul_poly(a, b);
}

uint32_t ExtField::pow(uint32_t a, uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    uint32_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

uint32_t ExtField::inv(uint32_t a) const {
    if (a == 0) throw Error(ErrorKind::BadRank, "division by zero in GF(q^m)");
    return pow(a, uint64_t(size_) - 2);
}

uint32_t ExtField::alpha_pow(uint64_t e) const {
    return pow(alpha_, e % (uint64_t(size_) - 1));
}

uint64_t ExtField::mult_order(uint32_t a) const {
    if (a == 0) throw Error(ErrorKind::BadRank, "zero has no multiplicative order");
    uint64_t n = uint64_t(size_) - 1;
    uint64_t o = n;
    for (uint64_t p : prime_factors(n))
        while (o % p == 0 && pow(a, o / p) == 1) o /= p;
    return o;
}

std::vector<uint32_t> ExtField::gamma(uint32_t theta) const {
    std::vector<uint32_t> c(m_);
    for (uint32_t i = 0; i < m_; ++i) { c[i] = theta % q_; theta /= q_; }
    return c;
}

uint32_t ExtField::from_coeffs(const std::vector<uint32_t>& coeffs) const {
    if (coeffs.size() != m_) throw Error(ErrorKind::DimensionMismatch, "coefficient vector length != m");
    uint32_t r = 0, pw = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        if (coeffs[i] >= q_) throw Error(ErrorKind::ParseError, "coefficient out of range");
        r += coeffs[i] * pw;
        pw *= q_;
    }
    return r;
}

ExtField ext_field_build(uint32_t q, uint32_t m) {
    if (!is_prime(q)) throw Error(ErrorKind::NonPrimeModulus, "q = " + std::to_string(q) + " is not prime");
    if (m == 0) throw Error(ErrorKind::DegreeTooLarge, "extension degree must be positive");
    uint64_t size = 1;
    for (uint32_t i = 0; i < m; ++i) {
        size *= q;
        if (size > (1u << 20)) throw Error(ErrorKind::DegreeTooLarge, "q^m exceeds 2^20");
    }
    if (m == 1) return ExtField(q, 1, {0, 1});

    PrimeField Fq(q);
    uint64_t count = size; // q^m choices for the low coefficients
    for (uint64_t code = 1; code < count; ++code) {
        if (code % q == 0) continue; // x divides f
        std::vector<uint32_t> coeffs(m + 1, 0);
        uint64_t c = code;
        for (uint32_t i = 0; i < m; ++i) { coeffs[i] = uint32_t(c % q); c /= q; }
        coeffs[m] = 1;
        Poly f(coeffs.begin(), coeffs.end());
        if (!poly_is_irreducible(f, Fq)) continue;
        ExtField F(q, m, coeffs);
        if (F.alpha_order_checked()) return F;
    }
    throw Error(ErrorKind::DegreeTooLarge, "no primitive irreducible polynomial found");
}

int matrix_rank_ext(const ExtField& F, std::vector<std::vector<uint32_t>> M) {
    if (M.empty() || M[0].empty()) return 0;
    size_t rows = M.size(), cols = M[0].size();
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t piv = rank;
        while (piv < rows && M[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(M[rank], M[piv]);
        uint32_t inv = F.inv(M[rank][c]);
        for (size_t j = c; j < cols; ++j) M[rank][j] = F.mul(M[rank][j], inv);
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || M[r][c] == 0) continue;
            uint32_t f = M[r][c];
            for (size_t j = c; j < cols; ++j)
                M[r][j] = F.sub(M[r][j], F.mul(f, M[rank][j]));
        }
        ++rank;
    }
    return int(rank);
}

uint32_t det_ext(const ExtField& F, std::vector<std::vector<uint32_t>> M) {
    size_t n = M.size();
    uint32_t det = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && M[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(M[piv], M[c]);
            det = F.neg(det);
        }
        det = F.mul(det, M[c][c]);
        uint32_t inv = F.inv(M[c][c]);
        for (size_t r = c + 1; r < n; ++r) {
            if (M[r][c] == 0) continue;
            uint32_t f = F.mul(M[r][c], inv);
            for (size_t j = c; j < n; ++j)
                M[r][j] = F.sub(M[r][j], F.mul(f, M[c][j]));
        }
    }
    return det;
}

uint32_t moore_determinant(const ExtField& F, const std::vector<uint32_t>& elems, uint64_t step) {
    if (elems.empty()) throw Error(ErrorKind::EmptyList, "Moore determinant of an empty list");
    size_t l = elems.size();
    std::vector<std::vector<uint32_t>> M(l, std::vector<uint32_t>(l));
    M[0] = elems;
    for (size_t i = 1; i < l; ++i)
        for (size_t j = 0; j < l; ++j)
            M[i][j] = F.pow(M[i - 1][j], step);
    return det_ext(F, M);
}

} // namespace qmat::gf
