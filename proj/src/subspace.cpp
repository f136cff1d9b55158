#include "qmat/subspace.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>

namespace qmat {

namespace {

uint32_t bits_for(uint32_t q) {
    if (q == 2) return 1;
    if (q == 3) return 2;
    if (q <= 7) return 3;
    throw Error(ErrorKind::ParseError, "unsupported field size q = " + std::to_string(q));
}

} // namespace

RowOps::RowOps(uint32_t q_, uint32_t n_) : q(q_), n(n_), bits(bits_for(q_)) {
    digit_mask = (uint64_t(1) << bits) - 1;
    if (uint64_t(bits) * n > 63)
        throw Error(ErrorKind::DimensionMismatch, "ambient dimension too large for packed rows");
}

uint64_t RowOps::add(uint64_t a, uint64_t b) const {
    if (q == 2) return a ^ b;
    uint64_t r = 0;
    for (uint32_t i = 0; i < n; ++i)
        r = set(r, i, (get(a, i) + get(b, i)) % q);
    return r;
}

uint64_t RowOps::scale(uint64_t a, uint32_t c) const {
    if (q == 2) return c ? a : 0;
    uint64_t r = 0;
    for (uint32_t i = 0; i < n; ++i)
        r = set(r, i, (get(a, i) * c) % q);
    return r;
}

int RowOps::leading(uint64_t row) const {
    if (row == 0) return -1;
    if (q == 2) {
        // Coordinate 0 is the most significant bit of the n-bit window.
        int bit = 63 - __builtin_clzll(row);
        return int(n) - 1 - bit;
    }
    for (uint32_t i = 0; i < n; ++i)
        if (get(row, i)) return int(i);
    return -1;
}

uint32_t RowOps::dot(uint64_t a, uint64_t b) const {
    if (q == 2) return uint32_t(__builtin_popcountll(a & b) & 1);
    uint32_t acc = 0;
    for (uint32_t i = 0; i < n; ++i)
        acc = (acc + get(a, i) * get(b, i)) % q;
    return acc;
}

std::string RowOps::to_string(uint64_t row) const {
    std::string s(n, '0');
    for (uint32_t i = 0; i < n; ++i) s[i] = char('0' + get(row, i));
    return s;
}

uint64_t RowOps::from_string(const std::string& s) const {
    if (s.size() != n)
        throw Error(ErrorKind::DimensionMismatch,
                    "row string \"" + s + "\" has length " + std::to_string(s.size()) +
                        ", expected " + std::to_string(n));
    uint64_t r = 0;
    for (uint32_t i = 0; i < n; ++i) {
        if (s[i] < '0' || uint32_t(s[i] - '0') >= q)
            throw Error(ErrorKind::ParseError, "bad digit in row string \"" + s + "\"");
        r = set(r, i, uint32_t(s[i] - '0'));
    }
    return r;
}

uint64_t RowOps::from_digits(std::span<const uint32_t> digits) const {
    if (digits.size() != n) throw Error(ErrorKind::DimensionMismatch, "vector length != n");
    uint64_t r = 0;
    for (uint32_t i = 0; i < n; ++i) {
        if (digits[i] >= q) throw Error(ErrorKind::ParseError, "vector entry out of range");
        r = set(r, i, digits[i]);
    }
    return r;
}

std::vector<uint32_t> RowOps::to_digits(uint64_t row) const {
    std::vector<uint32_t> d(n);
    for (uint32_t i = 0; i < n; ++i) d[i] = get(row, i);
    return d;
}

Subspace Subspace::full(uint32_t q, uint32_t n) {
    RowOps ops(q, n);
    std::vector<uint64_t> rows(n);
    for (uint32_t i = 0; i < n; ++i) rows[i] = ops.set(0, i, 1);
    return Subspace(q, n, std::move(rows));
}

std::strong_ordering Subspace::operator<=>(const Subspace& o) const {
    size_t k = std::min(rows_.size(), o.rows_.size());
    for (size_t i = 0; i < k; ++i) {
        if (rows_[i] != o.rows_[i]) return rows_[i] <=> o.rows_[i];
    }
    return rows_.size() <=> o.rows_.size();
}

std::vector<std::string> Subspace::row_strings() const {
    RowOps ops(q_, n_);
    std::vector<std::string> out;
    out.reserve(rows_.size());
    for (uint64_t r : rows_) out.push_back(ops.to_string(r));
    return out;
}

Interval::Interval(Subspace lo_, Subspace hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (!qmat::contains(hi, lo))
        throw Error(ErrorKind::DimensionMismatch, "interval bounds are not nested");
}

bool Interval::contains(const Subspace& x) const {
    return qmat::contains(x, lo) && qmat::contains(hi, x);
}

namespace {

// In-place RREF on packed rows; returns rows sorted by pivot.
std::vector<uint64_t> rref(const RowOps& ops, std::vector<uint64_t> rows) {
    std::vector<uint64_t> result;
    for (uint64_t cand : rows) {
        // Reduce against existing pivot rows.
        for (uint64_t r : result) {
            int p = ops.leading(r);
            uint32_t c = ops.get(cand, uint32_t(p));
            if (c) cand = ops.add(cand, ops.scale(r, (ops.q - c) % ops.q));
        }
        int p = ops.leading(cand);
        if (p < 0) continue;
        uint32_t lead = ops.get(cand, uint32_t(p));
        if (lead != 1) {
            // Normalize the pivot to 1 (lead^{-1} in GF(q) by scan; q <= 7).
            for (uint32_t inv = 1; inv < ops.q; ++inv)
                if ((inv * lead) % ops.q == 1) { cand = ops.scale(cand, inv); break; }
        }
        // Clear this pivot column from earlier rows.
        for (uint64_t& r : result) {
            uint32_t c = ops.get(r, uint32_t(p));
            if (c) r = ops.add(r, ops.scale(cand, (ops.q - c) % ops.q));
        }
        result.push_back(cand);
    }
    std::sort(result.begin(), result.end(),
              [&](uint64_t a, uint64_t b) { return ops.leading(a) < ops.leading(b); });
    return result;
}

} // namespace

Subspace canonicalize(uint32_t q, uint32_t n, const std::vector<uint64_t>& generators) {
    RowOps ops(q, n);
    return Subspace(q, n, rref(ops, generators));
}

Subspace canonicalize_vectors(uint32_t q, uint32_t n,
                              const std::vector<std::vector<uint32_t>>& generators) {
    RowOps ops(q, n);
    std::vector<uint64_t> rows;
    rows.reserve(generators.size());
    for (const auto& g : generators) rows.push_back(ops.from_digits(g));
    return Subspace(q, n, rref(ops, rows));
}

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b) {
    if (a.q() != b.q() || a.n() != b.n())
        throw Error(ErrorKind::DimensionMismatch, "subspaces live in different ambient spaces");
}

} // namespace

Subspace sum(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b);
    std::vector<uint64_t> rows = a.rows();
    rows.insert(rows.end(), b.rows().begin(), b.rows().end());
    return canonicalize(a.q(), a.n(), rows);
}

bool contains(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b);
    if (b.dim() > a.dim()) return false;
    RowOps ops(a.q(), a.n());
    for (uint64_t row : b.rows()) {
        uint64_t cand = row;
        for (uint64_t r : a.rows()) {
            int p = ops.leading(r);
            uint32_t c = ops.get(cand, uint32_t(p));
            if (c) cand = ops.add(cand, ops.scale(r, (ops.q - c) % ops.q));
        }
        if (cand != 0) return false;
    }
    return true;
}

Subspace orthogonal_complement(const Subspace& a) {
    RowOps ops(a.q(), a.n());
    uint32_t n = a.n();
    const auto& rows = a.rows();
    // Kernel of the dim x n RREF matrix: one generator per non-pivot column.
    std::vector<int> pivot_of_col(n, -1);
    for (size_t r = 0; r < rows.size(); ++r) pivot_of_col[ops.leading(rows[r])] = int(r);
    std::vector<uint64_t> gens;
    for (uint32_t c = 0; c < n; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        uint64_t v = ops.set(0, c, 1);
        for (uint32_t p = 0; p < n; ++p) {
            int r = pivot_of_col[p];
            if (r < 0) continue;
            uint32_t coeff = ops.get(rows[size_t(r)], c);
            if (coeff) v = ops.set(v, p, (a.q() - coeff) % a.q());
        }
        gens.push_back(v);
    }
    return canonicalize(a.q(), a.n(), gens);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b);
    // (A^perp + B^perp)^perp; valid for the nondegenerate standard dot product.
    return orthogonal_complement(sum(orthogonal_complement(a), orthogonal_complement(b)));
}

uint64_t gaussian_binomial(uint32_t n, uint32_t k, uint32_t q) {
    if (k > n) return 0;
    // [n k]_q via the q-Pascal recurrence, saturating on overflow.
    std::vector<std::vector<uint64_t>> g(n + 1, std::vector<uint64_t>(k + 1, 0));
    for (uint32_t i = 0; i <= n; ++i) g[i][0] = 1;
    for (uint32_t i = 1; i <= n; ++i) {
        for (uint32_t j = 1; j <= std::min(i, k); ++j) {
            uint64_t a = j <= i - 1 ? g[i - 1][j] : 0;
            uint64_t b = g[i - 1][j - 1];
            uint64_t qp = 1;
            for (uint32_t t = 0; t < j; ++t) {
                if (qp > UINT64_MAX / q) { qp = UINT64_MAX; break; }
                qp *= q;
            }
            if (a != 0 && qp != 0 && a > UINT64_MAX / qp) g[i][j] = UINT64_MAX;
            else {
                uint64_t prod = a * qp;
                g[i][j] = (prod > UINT64_MAX - b) ? UINT64_MAX : prod + b;
            }
        }
    }
    return g[n][k];
}

uint64_t lattice_size(uint32_t n, uint32_t q) {
    uint64_t total = 0;
    for (uint32_t k = 0; k <= n; ++k) {
        uint64_t c = gaussian_binomial(n, k, q);
        if (c > UINT64_MAX - total) return UINT64_MAX;
        total += c;
    }
    return total;
}

uint64_t default_lattice_cap() {
    if (const char* env = std::getenv("QMAT_LATTICE_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 131072; // covers q=2 up to n=7 and q=3 up to n=5
}

SubspaceLattice::SubspaceLattice(uint32_t q, uint32_t n, uint64_t cap)
    : q_(q), n_(n), ops_(q, n) {
    uint64_t total = lattice_size(n, q);
    if (total > cap)
        throw Error(ErrorKind::LatticeTooLarge,
                    "L(F_" + std::to_string(q) + "^" + std::to_string(n) + ") has " +
                        std::to_string(total) + " subspaces, cap is " + std::to_string(cap));

    // Enumerate RREF matrices: pivot-column sets, then all free fills.
    subs_.reserve(total);
    for (uint32_t k = 0; k <= n; ++k) {
        std::vector<uint32_t> pivots(k);
        for (uint32_t i = 0; i < k; ++i) pivots[i] = i;
        bool more = (k <= n);
        while (more) {
            // Free positions: (row i, col j) with j > pivots[i], j not a pivot.
            std::vector<std::pair<uint32_t, uint32_t>> free_pos;
            std::vector<bool> is_pivot(n, false);
            for (uint32_t p : pivots) is_pivot[p] = true;
            for (uint32_t i = 0; i < k; ++i)
                for (uint32_t j = pivots[i] + 1; j < n; ++j)
                    if (!is_pivot[j]) free_pos.emplace_back(i, j);

            std::vector<uint32_t> fill(free_pos.size(), 0);
            while (true) {
                std::vector<uint64_t> rows(k);
                for (uint32_t i = 0; i < k; ++i) rows[i] = ops_.set(0, pivots[i], 1);
                for (size_t t = 0; t < free_pos.size(); ++t)
                    rows[free_pos[t].first] = ops_.set(rows[free_pos[t].first], free_pos[t].second, fill[t]);
                subs_.emplace_back(q_, n_, std::move(rows));
                // Next fill in base q.
                size_t t = 0;
                while (t < fill.size() && ++fill[t] == q_) fill[t++] = 0;
                if (t == fill.size() && !fill.empty()) break;
                if (fill.empty()) break;
            }
            // Next pivot combination.
            if (k == 0) break;
            int i = int(k) - 1;
            while (i >= 0 && pivots[size_t(i)] == n - k + uint32_t(i)) --i;
            if (i < 0) more = false;
            else {
                ++pivots[size_t(i)];
                for (uint32_t j = uint32_t(i) + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
            }
        }
    }

    std::sort(subs_.begin(), subs_.end());
    dims_.resize(subs_.size());
    by_dim_.assign(std::max(n_ + 1, 2u), {}); // lines() stays valid for n = 0
    index_.reserve(subs_.size() * 2);
    for (uint32_t i = 0; i < subs_.size(); ++i) {
        dims_[i] = uint8_t(subs_[i].dim());
        by_dim_[dims_[i]].push_back(i);
        index_.emplace(key_of(subs_[i]), i);
    }
    zero_idx_ = index_of(Subspace::zero(q_, n_));
    full_idx_ = index_of(Subspace::full(q_, n_));

    perp_.resize(subs_.size());
    for (uint32_t i = 0; i < subs_.size(); ++i)
        perp_[i] = index_of(orthogonal_complement(subs_[i]));

    nlines_ = uint32_t(by_dim_[1].size());
    succ_.resize(size_t(subs_.size()) * nlines_);
    for (uint32_t a = 0; a < subs_.size(); ++a) {
        for (uint32_t j = 0; j < nlines_; ++j) {
            std::vector<uint64_t> rows = subs_[a].rows();
            rows.push_back(subs_[by_dim_[1][j]].rows()[0]);
            succ_[size_t(a) * nlines_ + j] = index_of(canonicalize(q_, n_, rows));
        }
    }
}

std::string SubspaceLattice::key_of(const Subspace& s) const {
    std::string key(s.rows().size() * sizeof(uint64_t), '\0');
    std::memcpy(key.data(), s.rows().data(), key.size());
    return key;
}

uint32_t SubspaceLattice::index_of(const Subspace& s) const {
    auto it = index_.find(key_of(s));
    if (it == index_.end())
        throw Error(ErrorKind::DimensionMismatch, "subspace does not belong to this lattice");
    return it->second;
}

std::optional<uint32_t> SubspaceLattice::try_index_of(const Subspace& s) const {
    auto it = index_.find(key_of(s));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

uint32_t SubspaceLattice::sum(uint32_t a, uint32_t b) const {
    if (dims_[a] == 0) return b;
    if (dims_[b] == 0) return a;
    std::vector<uint64_t> rows = subs_[a].rows();
    const auto& rb = subs_[b].rows();
    rows.insert(rows.end(), rb.begin(), rb.end());
    return index_of(canonicalize(q_, n_, rows));
}

uint32_t SubspaceLattice::intersect(uint32_t a, uint32_t b) const {
    return perp_[sum(perp_[a], perp_[b])];
}

bool SubspaceLattice::leq(uint32_t a, uint32_t b) const {
    if (dims_[a] > dims_[b]) return false;
    if (a == b) return true;
    const auto& rb = subs_[b].rows();
    for (uint64_t row : subs_[a].rows()) {
        uint64_t cand = row;
        for (uint64_t r : rb) {
            uint32_t c = ops_.get(cand, uint32_t(ops_.leading(r)));
            if (c) cand = ops_.add(cand, ops_.scale(r, (q_ - c) % q_));
        }
        if (cand) return false;
    }
    return true;
}

const SubspaceLattice& SubspaceLattice::get(uint32_t q, uint32_t n) {
    static std::mutex mu;
    static std::map<std::pair<uint32_t, uint32_t>, std::unique_ptr<SubspaceLattice>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(q, n);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<SubspaceLattice>(q, n)).first;
    return *it->second;
}

SubspaceFamily::SubspaceFamily(const SubspaceLattice& L, std::vector<uint32_t> members)
    : L_(&L), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SubspaceFamily::contains_index(uint32_t idx) const {
    return std::binary_search(members_.begin(), members_.end(), idx);
}

std::vector<char> family_upp_bitmap(const SubspaceFamily& f) {
    // X contains a member iff X is one or some codimension-1 subspace of X
    // does; one upward pass over the dimensions suffices.
    const auto& L = f.lattice();
    std::vector<char> up(L.size(), 0);
    for (uint32_t m : f.members()) up[m] = 1;
    const uint32_t nl = uint32_t(L.lines().size());
    for (uint32_t d = 1; d <= L.n(); ++d) {
        for (uint32_t x : L.of_dim(d)) {
            if (up[x]) continue;
            uint32_t px = L.perp(x);
            for (uint32_t j = 0; j < nl; ++j) {
                uint32_t y = L.perp(L.sum_line(px, j));
                if (L.dim(y) + 1 == d && up[y]) {
                    up[x] = 1;
                    break;
                }
            }
        }
    }
    return up;
}

std::vector<char> family_low_bitmap(const SubspaceFamily& f) {
    // Mirror: X lies below a member iff X is one or some one-step extension
    // of X does; downward pass over the dimensions.
    const auto& L = f.lattice();
    std::vector<char> lo(L.size(), 0);
    for (uint32_t m : f.members()) lo[m] = 1;
    const uint32_t nl = uint32_t(L.lines().size());
    for (int d = int(L.n()) - 1; d >= 0; --d) {
        for (uint32_t x : L.of_dim(uint32_t(d))) {
            if (lo[x]) continue;
            for (uint32_t j = 0; j < nl; ++j) {
                uint32_t s = L.sum_line(x, j);
                if (L.dim(s) == uint32_t(d) + 1 && lo[s]) {
                    lo[x] = 1;
                    break;
                }
            }
        }
    }
    return lo;
}

std::vector<int> family_max_dim_inside(const SubspaceFamily& f) {
    const auto& L = f.lattice();
    std::vector<int> md(L.size(), -1);
    for (uint32_t m : f.members()) md[m] = int(L.dim(m));
    const uint32_t nl = uint32_t(L.lines().size());
    for (uint32_t d = 1; d <= L.n(); ++d) {
        for (uint32_t u : L.of_dim(d)) {
            if (md[u] == int(d)) continue;
            uint32_t pu = L.perp(u);
            for (uint32_t j = 0; j < nl; ++j) {
                uint32_t y = L.perp(L.sum_line(pu, j));
                if (L.dim(y) + 1 == d && md[y] > md[u]) md[u] = md[y];
            }
        }
    }
    return md;
}

std::vector<int> family_min_dim_above(const SubspaceFamily& f) {
    const auto& L = f.lattice();
    std::vector<int> md(L.size(), int(L.n()) + 1);
    for (uint32_t m : f.members()) md[m] = int(L.dim(m));
    const uint32_t nl = uint32_t(L.lines().size());
    for (int d = int(L.n()) - 1; d >= 0; --d) {
        for (uint32_t u : L.of_dim(uint32_t(d))) {
            if (md[u] == d) continue;
            for (uint32_t j = 0; j < nl; ++j) {
                uint32_t s = L.sum_line(u, j);
                if (L.dim(s) == uint32_t(d) + 1 && md[s] < md[u]) md[u] = md[s];
            }
        }
    }
    return md;
}

SubspaceFamily family_upp(const SubspaceFamily& f) {
    const auto& L = f.lattice();
    auto up = family_upp_bitmap(f);
    std::vector<uint32_t> out;
    for (uint32_t x = 0; x < L.size(); ++x)
        if (up[x]) out.push_back(x);
    return SubspaceFamily(L, std::move(out));
}

SubspaceFamily family_low(const SubspaceFamily& f) {
    const auto& L = f.lattice();
    auto lo = family_low_bitmap(f);
    std::vector<uint32_t> out;
    for (uint32_t x = 0; x < L.size(); ++x)
        if (lo[x]) out.push_back(x);
    return SubspaceFamily(L, std::move(out));
}

SubspaceFamily family_max(const SubspaceFamily& f) {
    // A member properly contains x iff it contains some one-step extension
    // of x, so x is maximal iff no extension lies inside a member.
    const auto& L = f.lattice();
    auto lo = family_low_bitmap(f);
    const uint32_t nl = uint32_t(L.lines().size());
    std::vector<uint32_t> out;
    for (uint32_t x : f.members()) {
        bool maximal = true;
        for (uint32_t j = 0; j < nl && maximal; ++j) {
            uint32_t s = L.sum_line(x, j);
            if (s != x && lo[s]) maximal = false;
        }
        if (maximal) out.push_back(x);
    }
    return SubspaceFamily(L, std::move(out));
}

SubspaceFamily family_min(const SubspaceFamily& f) {
    // Mirror: x is minimal iff no codimension-1 subspace of x contains a
    // member.
    const auto& L = f.lattice();
    auto up = family_upp_bitmap(f);
    const uint32_t nl = uint32_t(L.lines().size());
    std::vector<uint32_t> out;
    for (uint32_t x : f.members()) {
        bool minimal = true;
        uint32_t px = L.perp(x);
        for (uint32_t j = 0; j < nl && minimal; ++j) {
            uint32_t y = L.perp(L.sum_line(px, j));
            if (L.dim(y) + 1 == L.dim(x) && up[y]) minimal = false;
        }
        if (minimal) out.push_back(x);
    }
    return SubspaceFamily(L, std::move(out));
}

SubspaceFamily family_opp(const SubspaceFamily& f) {
    const auto& L = f.lattice();
    std::vector<uint32_t> out;
    out.reserve(L.size() - f.size());
    for (uint32_t x = 0; x < L.size(); ++x)
        if (!f.contains_index(x)) out.push_back(x);
    return SubspaceFamily(L, std::move(out));
}

SubspaceFamily family_perp(const SubspaceFamily& f) {
    const auto& L = f.lattice();
    std::vector<uint32_t> out;
    out.reserve(f.size());
    for (uint32_t x : f.members()) out.push_back(L.perp(x));
    return SubspaceFamily(L, std::move(out));
}

SubspaceFamily covers_in_family(const SubspaceFamily& f, const Subspace& a) {
    const auto& L = f.lattice();
    uint32_t ai = L.index_of(a);
    if (!f.contains_index(ai)) throw Error(ErrorKind::NotAMember, "base subspace is not in the family");
    std::vector<uint32_t> above;
    for (uint32_t b : f.members())
        if (b != ai && L.leq(ai, b)) above.push_back(b);
    std::vector<uint32_t> out;
    for (uint32_t b : above) {
        bool cover = true;
        for (uint32_t c : above)
            if (c != b && L.leq(c, b)) { cover = false; break; }
        if (cover) out.push_back(b);
    }
    return SubspaceFamily(L, std::move(out));
}

bool is_cover(const SubspaceFamily& f, const Subspace& a, const Subspace& b) {
    const auto& L = f.lattice();
    uint32_t ai = L.index_of(a), bi = L.index_of(b);
    if (!f.contains_index(ai) || !f.contains_index(bi)) return false;
    if (ai == bi || !L.leq(ai, bi)) return false;
    for (uint32_t c : f.members())
        if (c != ai && c != bi && L.leq(ai, c) && L.leq(c, bi)) return false;
    return true;
}

SubspaceFamily max_in(const Subspace& x, const SubspaceFamily& a) {
    const auto& L = a.lattice();
    uint32_t xi = L.index_of(x);
    int best = -1;
    for (uint32_t m : a.members())
        if (L.leq(m, xi)) best = std::max(best, int(L.dim(m)));
    std::vector<uint32_t> out;
    if (best >= 0)
        for (uint32_t m : a.members())
            if (int(L.dim(m)) == best && L.leq(m, xi)) out.push_back(m);
    return SubspaceFamily(L, std::move(out));
}

} // namespace qmat
